#pragma once

#include <string>
#include <vector>

namespace kg {

/// Round-trip decimal text of a double ("%.17g", C locale).
std::string format_double(double x);
double parse_double(const std::string& text);

/// Comma-separated table with a header row, optionally preceded by "# "
/// preamble lines. Cells must not contain commas, quotes or newlines.
struct Table {
  std::vector<std::string> preamble;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

std::string emit_csv(const Table& t);
Table parse_csv(const std::string& text);

/// Nested "key: value" report, children indented by two spaces. A node with
/// children is written as "key:" (its value is empty).
struct Node {
  std::string key;
  std::string value;
  std::vector<Node> children;

  Node() = default;
  Node(std::string k, std::string v = {}) : key(std::move(k)), value(std::move(v)) {}

  Node& add(std::string k, std::string v = {});
  Node& add(Node child);
  /// First child with the given key; throws std::out_of_range if missing.
  const Node& at(const std::string& k) const;

  friend bool operator==(const Node&, const Node&) = default;
};

/// Emits the children of `root` at indentation 0.
std::string emit_structured(const Node& root);
Node parse_structured(const std::string& text);

}  // namespace kg
