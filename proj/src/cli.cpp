#include "cubedet/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubedet/determinant.hpp"
#include "cubedet/error.hpp"
#include "cubedet/io.hpp"
#include "cubedet/laplace.hpp"
#include "cubedet/verify.hpp"

namespace cubedet::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Scalar& x) {
  if (x.is_integer()) {
    return x.num();
  }
  return x.to_string();
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error("cannot read '" + path + "'");
  }
  buf << file.rdbuf();
  return buf.str();
}

CubicMatrix load(const std::string& path, std::istream& in) {
  return parse_any(read_input(path, in));
}

void print_trace(std::ostream& out, const ExpansionTrace& trace) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"position", "entry", "sign", "minor", "contribution"});
  for (const TraceTerm& t : trace.terms) {
    rows.push_back({t.at.to_string(), t.entry.to_string(), t.sign > 0 ? "+" : "-",
                    t.minor_value.to_string(), t.contribution.to_string()});
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  out << "expansion along " << axis_name(trace.axis) << " " << trace.index << "\n";
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) {
        line += std::string(width[c] - row[c].size() + 2, ' ');
      }
    }
    out << line << "\n";
  }
  out << "total " << trace.total << "\n";
}

ordered_json trace_json(const ExpansionTrace& trace) {
  ordered_json doc;
  doc["axis"] = axis_code(trace.axis);
  doc["index"] = trace.index;
  ordered_json terms = ordered_json::array();
  for (const TraceTerm& t : trace.terms) {
    ordered_json term;
    term["at"] = {t.at.i, t.at.j, t.at.k};
    term["entry"] = to_json(t.entry);
    term["sign"] = t.sign;
    term["minor"] = to_json(t.minor_value);
    term["contribution"] = to_json(t.contribution);
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  doc["total"] = to_json(trace.total);
  return doc;
}

void emit_trace(std::ostream& out, const ExpansionTrace& trace, bool json) {
  if (json) {
    out << trace_json(trace).dump() << "\n";
  } else {
    print_trace(out, trace);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Determinants of cubic (3-index) matrices of order 1 to 3", "cubedet"};
  app.require_subcommand(1, 1);

  std::string file;
  bool json = false;
  std::string axis_flag = "h";
  int index = 1;

  auto* det = app.add_subcommand("det", "Print the determinant");
  std::string method = "closed";
  bool trace = false;
  det->add_option("file", file, "Matrix file (text or JSON), '-' for stdin")->required();
  det->add_option("--method", method, "closed, perm or laplace")
      ->check(CLI::IsMember({"closed", "perm", "laplace"}));
  auto* det_axis = det->add_option("--axis", axis_flag, "Expansion axis: h, p or l")
                       ->check(CLI::IsMember({"h", "p", "l"}));
  auto* det_index = det->add_option("--index", index, "1-based layer to expand along");
  det->add_flag("--trace", trace, "Print the expansion trace");
  det->add_flag("--json", json, "Machine-readable output");

  int pi = 0, pj = 0, pk = 0;
  auto* minor_cmd = app.add_subcommand("minor", "Print the minor of entry (I, J, K)");
  minor_cmd->add_option("file", file)->required();
  minor_cmd->add_option("I", pi)->required();
  minor_cmd->add_option("J", pj)->required();
  minor_cmd->add_option("K", pk)->required();
  minor_cmd->add_flag("--json", json);

  std::string convention = "expansion";
  auto* cofactor_cmd = app.add_subcommand("cofactor", "Print the cofactor of entry (I, J, K)");
  cofactor_cmd->add_option("file", file)->required();
  cofactor_cmd->add_option("I", pi)->required();
  cofactor_cmd->add_option("J", pj)->required();
  cofactor_cmd->add_option("K", pk)->required();
  cofactor_cmd->add_option("--convention", convention, "expansion or paper-def")
      ->check(CLI::IsMember({"expansion", "paper-def"}));
  cofactor_cmd->add_flag("--json", json);

  auto* expand_cmd = app.add_subcommand("expand", "Print a full Laplace expansion trace");
  expand_cmd->add_option("file", file)->required();
  expand_cmd->add_option("--axis", axis_flag)->required()->check(CLI::IsMember({"h", "p", "l"}));
  expand_cmd->add_option("--index", index)->required();
  expand_cmd->add_flag("--json", json);

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check every determinant path");
  bool random = false;
  std::vector<int> orders = {2, 3};
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::int64_t range = 9;
  auto* verify_file = verify_cmd->add_option("file", file);
  auto* random_flag = verify_cmd->add_flag("--random", random, "Check seeded random matrices");
  verify_cmd->add_option("--orders", orders)->delimiter(',')->check(CLI::Range(2, 3));
  verify_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--range", range)->check(CLI::Range(std::int64_t{1}, kMaxRange));
  verify_cmd->add_flag("--json", json);
  verify_file->excludes(random_flag);

  auto* gen_cmd = app.add_subcommand("gen", "Print a seeded random matrix");
  int gen_order = 2;
  gen_cmd->add_option("--order", gen_order)->required()->check(CLI::Range(1, 3));
  gen_cmd->add_option("--seed", seed)->required();
  gen_cmd->add_option("--range", range)->check(CLI::Range(std::int64_t{1}, kMaxRange));
  gen_cmd->add_flag("--json", json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*det) {
      const CubicMatrix a = load(file, in);
      const bool wants_layer = trace || *det_axis || *det_index || method == "laplace";
      const Axis axis = parse_axis(axis_flag);
      if (wants_layer) {
        check_layer_index(a.order(), index, axis_name(axis));
      }
      if (trace) {
        emit_trace(out, expand(a, axis, index), json);
        return kExitOk;
      }
      DetValue d;
      if (method == "perm") {
        d = det_permutation(a);
      } else if (method == "laplace") {
        d = det_laplace(a, axis, index);
      } else {
        d = det_closed(a);
      }
      if (json) {
        ordered_json doc;
        doc["method"] = method;
        doc["determinant"] = to_json(d.value);
        out << doc.dump() << "\n";
      } else {
        out << d.value << "\n";
      }
      return kExitOk;
    }

    if (*minor_cmd || *cofactor_cmd) {
      const CubicMatrix a = load(file, in);
      const Index3 at{pi, pj, pk};
      a.get(at);
      Scalar value;
      if (*minor_cmd) {
        value = minor(a, at).value;
      } else {
        const auto conv =
            convention == "paper-def" ? SignConvention::PaperDef : SignConvention::Expansion;
        value = cofactor(a, at, conv).value;
        if (conv == SignConvention::PaperDef) {
          err << "note: paper-def sign (-1)^(i+j+k); Laplace expansions use (-1)^(j+k)\n";
        }
      }
      if (json) {
        ordered_json doc;
        doc["at"] = {pi, pj, pk};
        if (*cofactor_cmd) {
          doc["convention"] = convention;
        }
        doc[*minor_cmd ? "minor" : "cofactor"] = to_json(value);
        out << doc.dump() << "\n";
      } else {
        out << value << "\n";
      }
      return kExitOk;
    }

    if (*expand_cmd) {
      const CubicMatrix a = load(file, in);
      emit_trace(out, expand(a, parse_axis(axis_flag), index), json);
      return kExitOk;
    }

    if (*verify_cmd) {
      if (random) {
        return print_summary(out, batch_verify(orders, trials, seed, range), json);
      }
      if (file.empty()) {
        err << "verify: give a matrix file or --random\n";
        return kExitUsage;
      }
      return print_report(out, cross_check(load(file, in)), json);
    }

    if (*gen_cmd) {
      const CubicMatrix a = random_cubic({gen_order, seed, range});
      out << (json ? serialize_json(a) + "\n" : serialize_text(a));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int print_report(std::ostream& out, const VerifyReport& report, bool json) {
  if (json) {
    ordered_json doc;
    doc["subject"] = report.subject;
    doc["determinant"] = to_json(report.det_value);
    ordered_json paths = ordered_json::array();
    for (const PathResult& p : report.paths) {
      paths.push_back({{"path", p.name}, {"value", to_json(p.value)}, {"agrees", p.agrees}});
    }
    doc["paths"] = std::move(paths);
    ordered_json laws = ordered_json::array();
    for (const LawResult& law : report.derived_laws) {
      laws.push_back({{"law", law.name}, {"passed", law.passed}});
    }
    doc["laws"] = std::move(laws);
    doc["overall"] = report.overall;
    out << doc.dump() << "\n";
  } else {
    out << "subject " << report.subject << "\n";
    out << "determinant " << report.det_value << "\n";
    for (const PathResult& p : report.paths) {
      out << "path " << p.name << " " << p.value << " " << (p.agrees ? "ok" : "MISMATCH") << "\n";
    }
    for (const LawResult& law : report.derived_laws) {
      out << "law " << law.name << " " << (law.passed ? "ok" : "FAILED") << "\n";
    }
    out << "overall " << (report.overall ? "pass" : "fail") << "\n";
  }
  return report.overall ? kExitOk : kExitFailed;
}

int print_summary(std::ostream& out, const BatchSummary& summary, bool json) {
  if (json) {
    ordered_json doc;
    doc["trials"] = summary.trials_run;
    doc["failures"] = summary.failures;
    ordered_json failing = ordered_json::array();
    for (const GenSpec& spec : summary.failing) {
      failing.push_back({{"order", spec.order}, {"seed", spec.seed}, {"range", spec.range}});
    }
    doc["failing"] = std::move(failing);
    doc["path_failures"] = summary.path_failures;
    doc["law_failures"] = summary.law_failures;
    doc["result"] = summary.failures == 0 ? "pass" : "fail";
    out << doc.dump() << "\n";
  } else {
    out << "trials " << summary.trials_run << "\n";
    out << "failures " << summary.failures << "\n";
    if (auto first = summary.first_failure()) {
      out << "first failure " << first->to_string() << "\n";
      for (const auto& [name, count] : summary.path_failures) {
        out << "path " << name << " failed " << count << "\n";
      }
      for (const auto& [name, count] : summary.law_failures) {
        out << "law " << name << " failed " << count << "\n";
      }
    }
    out << "result " << (summary.failures == 0 ? "pass" : "fail") << "\n";
  }
  return summary.failures == 0 ? kExitOk : kExitFailed;
}

}  // namespace cubedet::cli
