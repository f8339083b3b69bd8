#include "spectrajoin/graph_spec.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace spectrajoin {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_count(std::string_view digits, std::string_view term) {
  if (digits.empty() || digits.size() > 6) throw std::invalid_argument("bad number in graph term '" + std::string(term) + "'");
  int v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("bad number in graph term '" + std::string(term) + "'");
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

Graph parse_term(std::string_view term) {
  term = trim(term);
  if (term.empty()) throw std::invalid_argument("empty graph term");
  if (term.substr(0, 3) == "g6:") return from_graph6(term.substr(3));

  std::size_t pos = 0;
  while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
  const int copies = pos == 0 ? 1 : parse_count(term.substr(0, pos), term);
  if (copies < 1) throw std::invalid_argument("copy count must be positive in '" + std::string(term) + "'");

  std::string_view body = term.substr(pos);
  std::size_t name_end = 0;
  while (name_end < body.size() && std::isalpha(static_cast<unsigned char>(body[name_end]))) ++name_end;
  const std::string_view family = body.substr(0, name_end);
  if (family.empty()) throw std::invalid_argument("missing family name in '" + std::string(term) + "'");

  std::vector<int> params;
  std::string_view rest = body.substr(name_end);
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    params.push_back(parse_count(rest.substr(0, comma), term));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
    if (rest.empty()) throw std::invalid_argument("trailing comma in '" + std::string(term) + "'");
  }

  const Graph one = make_family(family, params);
  Graph out = one;
  for (int i = 1; i < copies; ++i) out = disjoint_union(out, one);
  return out;
}

}  // namespace

Graph parse_graph_spec(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty graph spec");
  // graph6 payloads may contain '+', so a literal must be the whole spec or the last term.
  Graph out;
  bool first = true;
  while (!text.empty()) {
    std::size_t cut = text.find('+');
    if (trim(text).substr(0, 3) == "g6:") cut = std::string_view::npos;
    const Graph part = parse_term(text.substr(0, cut));
    out = first ? part : disjoint_union(out, part);
    first = false;
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
    if (trim(text).empty()) throw std::invalid_argument("dangling '+' in graph spec");
  }
  return out;
}

}  // namespace spectrajoin
