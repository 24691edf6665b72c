#include "cubedet/io.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "cubedet/error.hpp"

namespace cubedet {
namespace {

using ordered_json = nlohmann::ordered_json;

struct Token {
  std::string_view text;
  int column = 1;
};

struct Line {
  int number = 1;
  std::vector<Token> tokens;
};

std::string line_loc(int line) { return "line " + std::to_string(line); }

std::string token_loc(int line, int column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) {
      ++pos;
    }
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) {
      ++pos;
    }
    if (pos > start) {
      out.push_back({line.substr(start, pos - start), static_cast<int>(start) + 1});
    }
  }
  return out;
}

Scalar parse_literal(std::string_view text, const std::string& location) {
  try {
    return Scalar::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(location, "malformed literal '" + std::string(text) + "': " + e.what());
  } catch (const DomainError&) {
    throw ParseError(location, "zero denominator in '" + std::string(text) + "'");
  } catch (const OverflowError& e) {
    throw ParseError(location, e.what());
  }
}

int parse_order(std::string_view text, const std::string& location) {
  int order = 0;
  for (char c : text) {
    if (c < '0' || c > '9' || order > 1000) {
      throw ParseError(location, "invalid order token '" + std::string(text) + "'");
    }
    order = order * 10 + (c - '0');
  }
  if (order > CubicMatrix::kMaxOrder) {
    throw ParseError(location, kOrderTooHighMessage);
  }
  if (order < 1) {
    throw ParseError(location, "order must be 1, 2 or 3, got " + std::string(text));
  }
  return order;
}

[[noreturn]] void shape_error(const std::string& location, const std::string& detail) {
  throw ParseError(location, std::string(kNotCubicMessage) + ": " + detail);
}

}  // namespace

CubicMatrix parse_text(std::string_view input) {
  std::vector<Line> lines;
  int number = 0;
  while (!input.empty() || number == 0) {
    ++number;
    const auto eol = input.find('\n');
    std::string_view raw = input.substr(0, eol);
    input = eol == std::string_view::npos ? std::string_view{} : input.substr(eol + 1);
    if (!raw.empty() && raw.back() == '\r') {
      raw.remove_suffix(1);
    }
    lines.push_back({number, tokenize(raw)});
    if (input.empty()) {
      break;
    }
  }

  std::size_t cursor = 0;
  while (cursor < lines.size() && lines[cursor].tokens.empty()) {
    ++cursor;
  }
  if (cursor == lines.size()) {
    throw ParseError(line_loc(1), "empty input, expected the order");
  }
  const Line& header = lines[cursor++];
  if (header.tokens.size() != 1) {
    throw ParseError(token_loc(header.number, header.tokens[1].column),
                     "expected the order alone on its line");
  }
  const int order = parse_order(header.tokens[0].text, token_loc(header.number, 1));

  // Group the remaining non-blank lines into blocks.
  std::vector<std::vector<const Line*>> blocks;
  bool in_block = false;
  for (; cursor < lines.size(); ++cursor) {
    const Line& line = lines[cursor];
    if (line.tokens.empty()) {
      in_block = false;
      continue;
    }
    if (!in_block) {
      blocks.emplace_back();
      in_block = true;
    }
    blocks.back().push_back(&line);
  }

  std::vector<Block> layers;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& rows = blocks[b];
    const std::string name = "block " + std::to_string(b + 1);
    if (static_cast<int>(b) >= order) {
      shape_error(line_loc(rows.front()->number),
                  name + " exceeds the " + std::to_string(order) + " vertical layers of order " +
                      std::to_string(order));
    }
    if (static_cast<int>(rows.size()) != order) {
      shape_error(line_loc(rows.front()->number), name + " has " + std::to_string(rows.size()) +
                                                      " rows, expected " + std::to_string(order));
    }
    Block block;
    for (const Line* row : rows) {
      if (static_cast<int>(row->tokens.size()) != order) {
        shape_error(line_loc(row->number),
                    name + " row has " + std::to_string(row->tokens.size()) +
                        " entries, expected " + std::to_string(order));
      }
      std::vector<Scalar> values;
      for (const Token& tok : row->tokens) {
        values.push_back(parse_literal(tok.text, token_loc(row->number, tok.column)));
      }
      block.push_back(std::move(values));
    }
    layers.push_back(std::move(block));
  }
  if (static_cast<int>(layers.size()) != order) {
    shape_error(line_loc(lines.back().number), "expected " + std::to_string(order) +
                                                   " blocks, found " +
                                                   std::to_string(layers.size()));
  }
  return CubicMatrix::from_layers(order, layers);
}

std::string serialize_text(const CubicMatrix& a) {
  std::string out = std::to_string(a.order()) + "\n";
  for (int k = 1; k <= a.order(); ++k) {
    if (k > 1) {
      out += "\n";
    }
    for (const auto& row : a.layer_block(k)) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j > 0) {
          out += " ";
        }
        out += row[j].to_string();
      }
      out += "\n";
    }
  }
  return out;
}

CubicMatrix parse_json(std::string_view input) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(input);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "invalid JSON");
  }
  if (!doc.is_object()) {
    throw ParseError("document", "expected a JSON object with \"order\" and \"layers\"");
  }
  if (!doc.contains("order")) {
    throw ParseError("document", "missing \"order\"");
  }
  if (!doc.contains("layers")) {
    throw ParseError("document", "missing \"layers\"");
  }
  const auto& order_node = doc["order"];
  if (!order_node.is_number_integer()) {
    throw ParseError("order", "order must be an integer");
  }
  if (order_node.get<std::int64_t>() > CubicMatrix::kMaxOrder) {
    throw ParseError("order", kOrderTooHighMessage);
  }
  const auto order = static_cast<int>(order_node.get<std::int64_t>());
  if (order < 1) {
    throw ParseError("order", "order must be 1, 2 or 3, got " + std::to_string(order));
  }

  const auto& layers_node = doc["layers"];
  if (!layers_node.is_array()) {
    throw ParseError("layers", "expected an array of blocks");
  }
  if (static_cast<int>(layers_node.size()) != order) {
    shape_error("layers", "expected " + std::to_string(order) + " blocks, found " +
                              std::to_string(layers_node.size()));
  }
  std::vector<Block> layers;
  for (std::size_t k = 0; k < layers_node.size(); ++k) {
    const auto& block_node = layers_node[k];
    const std::string bname = "block " + std::to_string(k + 1);
    if (!block_node.is_array() || static_cast<int>(block_node.size()) != order) {
      shape_error(bname, "expected " + std::to_string(order) + " rows");
    }
    Block block;
    for (std::size_t i = 0; i < block_node.size(); ++i) {
      const auto& row_node = block_node[i];
      const std::string rname = bname + ", row " + std::to_string(i + 1);
      if (!row_node.is_array() || static_cast<int>(row_node.size()) != order) {
        shape_error(rname, "expected " + std::to_string(order) + " entries");
      }
      std::vector<Scalar> row;
      for (std::size_t j = 0; j < row_node.size(); ++j) {
        const auto& v = row_node[j];
        const std::string loc = rname + ", column " + std::to_string(j + 1);
        if (v.is_number_float()) {
          throw ParseError(loc, "float literal not permitted");
        }
        if (v.is_number_unsigned()) {
          if (v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
            throw ParseError(loc, "integer does not fit in 64 bits");
          }
          row.emplace_back(static_cast<std::int64_t>(v.get<std::uint64_t>()));
        } else if (v.is_number_integer()) {
          row.emplace_back(v.get<std::int64_t>());
        } else if (v.is_string()) {
          row.push_back(parse_literal(v.get<std::string>(), loc));
        } else {
          throw ParseError(loc, "expected an integer or a \"p/q\" string");
        }
      }
      block.push_back(std::move(row));
    }
    layers.push_back(std::move(block));
  }
  return CubicMatrix::from_layers(order, layers);
}

std::string serialize_json(const CubicMatrix& a) {
  ordered_json layers = ordered_json::array();
  for (int k = 1; k <= a.order(); ++k) {
    ordered_json block = ordered_json::array();
    for (const auto& row : a.layer_block(k)) {
      ordered_json r = ordered_json::array();
      for (const Scalar& x : row) {
        if (x.is_integer()) {
          r.push_back(x.num());
        } else {
          r.push_back(x.to_string());
        }
      }
      block.push_back(std::move(r));
    }
    layers.push_back(std::move(block));
  }
  ordered_json doc;
  doc["order"] = a.order();
  doc["layers"] = std::move(layers);
  return doc.dump();
}

CubicMatrix parse_any(std::string_view input) {
  for (char c : input) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      continue;
    }
    return c == '{' ? parse_json(input) : parse_text(input);
  }
  return parse_text(input);
}

}  // namespace cubedet
