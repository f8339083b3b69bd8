#include "spectrajoin/reference.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spectrajoin/graph_spec.hpp"
#include "spectrajoin/spectra.hpp"

namespace spectrajoin {

extern const char* const kReferenceSpectraText;

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    const auto caret = token.find('^');
    const double value = std::stod(token.substr(0, caret));
    const int mult = caret == std::string::npos ? 1 : std::stoi(token.substr(caret + 1));
    if (mult < 1) throw std::invalid_argument("reference table: bad multiplicity in '" + token + "'");
    out.insert(out.end(), static_cast<std::size_t>(mult), value);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<ReferenceEntry> parse_reference_table(std::string_view text) {
  std::vector<ReferenceEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::istringstream fields(line);
    std::string col;
    while (std::getline(fields, col, '|')) cols.push_back(trim(col));
    if (cols.size() != 6) {
      throw std::invalid_argument("reference table line " + std::to_string(line_no) + ": expected 6 columns");
    }
    ReferenceEntry e;
    e.name = cols[0];
    e.join = parse_join_kind(cols[1]);
    e.left = cols[2];
    e.right = cols[3];
    e.kind = parse_matrix_kind(cols[4]);
    e.values = parse_values(cols[5]);
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<ReferenceEntry>& reference_table() {
  static const std::vector<ReferenceEntry> table = parse_reference_table(kReferenceSpectraText);
  return table;
}

const ReferenceEntry& reference_entry(std::string_view name) {
  for (const auto& e : reference_table()) {
    if (e.name == name) return e;
  }
  throw std::invalid_argument("no reference entry named '" + std::string(name) + "'");
}

ReferenceCheck check_reference(const ReferenceEntry& entry, double tol) {
  const Graph g = join(entry.join, parse_graph_spec(entry.left), parse_graph_spec(entry.right));
  ReferenceCheck out;
  out.expected = entry.values;
  out.actual = numeric_spectrum(g, entry.kind).values();
  if (out.actual.size() != out.expected.size()) {
    out.max_deviation = INFINITY;
    return out;
  }
  for (std::size_t i = 0; i < out.actual.size(); ++i) {
    out.deviation.push_back(std::abs(out.actual[i] - out.expected[i]));
    out.max_deviation = std::max(out.max_deviation, out.deviation.back());
  }
  out.passed = out.max_deviation <= tol;
  return out;
}

}  // namespace spectrajoin
