#include <cstdio>
#include <limits>
#include <locale>
#include <sstream>
#include <stdexcept>

#include "kg/lattice.hpp"
#include "kg/report.hpp"

namespace kg {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::string& text) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  double x = 0.0;
  in >> x;
  if (in.fail()) {
    // iostreams reject inf/nan spellings produced by printf.
    if (text == "inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    if (text == "nan" || text == "-nan") return std::numeric_limits<double>::quiet_NaN();
    throw InvalidInput("not a number: '" + text + "'");
  }
  in >> std::ws;
  if (!in.eof()) throw InvalidInput("trailing characters in number '" + text + "'");
  return x;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

void emit_row(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].find_first_of(",\"\n") != std::string::npos)
      throw InvalidInput("CSV cell contains a reserved character: '" + cells[i] + "'");
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
}

}  // namespace

std::string emit_csv(const Table& t) {
  std::string out;
  for (const auto& line : t.preamble) {
    if (line.find('\n') != std::string::npos) throw InvalidInput("preamble line contains a newline");
    out += "# " + line + "\n";
  }
  emit_row(out, t.header);
  for (const auto& r : t.rows) {
    if (r.size() != t.header.size()) throw InvalidInput("CSV row width differs from header");
    emit_row(out, r);
  }
  return out;
}

Table parse_csv(const std::string& text) {
  Table t;
  auto lines = split_lines(text);
  std::size_t first = 0;
  for (; first < lines.size() && lines[first].rfind("# ", 0) == 0; ++first)
    t.preamble.push_back(lines[first].substr(2));
  lines.erase(lines.begin(), lines.begin() + static_cast<long>(first));
  if (lines.empty()) throw InvalidInput("empty CSV");
  t.header = split_cells(lines[0]);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty() || lines[i][0] == '#') continue;
    t.rows.push_back(split_cells(lines[i]));
    if (t.rows.back().size() != t.header.size())
      throw InvalidInput("CSV line " + std::to_string(i + 1) + " has the wrong number of cells");
  }
  return t;
}

Node& Node::add(std::string k, std::string v) {
  children.emplace_back(std::move(k), std::move(v));
  return children.back();
}

Node& Node::add(Node child) {
  children.push_back(std::move(child));
  return children.back();
}

const Node& Node::at(const std::string& k) const {
  for (const auto& c : children)
    if (c.key == k) return c;
  throw std::out_of_range("no key '" + k + "' under '" + key + "'");
}

namespace {

void emit_node(std::string& out, const Node& n, int depth) {
  if (n.key.find(':') != std::string::npos || n.key.find('\n') != std::string::npos ||
      n.value.find('\n') != std::string::npos)
    throw InvalidInput("structured key or value contains a reserved character");
  out.append(static_cast<std::size_t>(2 * depth), ' ');
  out += n.key;
  out += ':';
  if (!n.value.empty()) out += ' ' + n.value;
  out += '\n';
  for (const auto& c : n.children) emit_node(out, c, depth + 1);
}

}  // namespace

std::string emit_structured(const Node& root) {
  std::string out;
  for (const auto& c : root.children) emit_node(out, c, 0);
  return out;
}

Node parse_structured(const std::string& text) {
  Node root;
  std::vector<Node*> stack{&root};
  int line_no = 0;
  for (const auto& line : split_lines(text)) {
    ++line_no;
    if (line.empty()) continue;
    std::size_t indent = 0;
    while (indent < line.size() && line[indent] == ' ') ++indent;
    if (indent % 2 != 0) throw InvalidInput("odd indentation on line " + std::to_string(line_no));
    const std::size_t depth = indent / 2;
    if (depth + 1 > stack.size()) throw InvalidInput("unexpected indentation on line " + std::to_string(line_no));
    const std::size_t colon = line.find(':', indent);
    if (colon == std::string::npos) throw InvalidInput("missing ':' on line " + std::to_string(line_no));
    std::string value = line.substr(colon + 1);
    if (!value.empty() && value[0] == ' ') value.erase(0, 1);
    stack.resize(depth + 1);
    Node& child = stack.back()->add(line.substr(indent, colon - indent), value);
    stack.push_back(&child);
  }
  return root;
}

}  // namespace kg
