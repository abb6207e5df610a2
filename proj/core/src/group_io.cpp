#include "permlab/group_io.hpp"

#include <cctype>
#include <sstream>

namespace permlab {

Perm parse_cycles(int degree, const std::string& text, int line_no) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> current;
  bool in_cycle = false;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      if (in_cycle) throw ParseError(line_no, "nested '(' in cycle text");
      in_cycle = true;
      current.clear();
      ++i;
    } else if (c == ')') {
      if (!in_cycle) throw ParseError(line_no, "unmatched ')' in cycle text");
      in_cycle = false;
      if (!current.empty()) cycles.push_back(current);
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!in_cycle) throw ParseError(line_no, "point outside a cycle");
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      if (value < 1 || value > degree)
        throw ParseError(line_no, "point " + std::to_string(value) + " out of range 1.." +
                                      std::to_string(degree));
      current.push_back(value - 1);
    } else {
      throw ParseError(line_no, std::string("unexpected character '") + c + "' in cycle text");
    }
  }
  if (in_cycle) throw ParseError(line_no, "unterminated cycle");
  try {
    return Perm::from_cycles(degree, cycles);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

FiniteGroup parse_group_file(const std::string& text, const Limits& limits) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int degree = -1;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string body = line.substr(start, end - start + 1);
    if (body.rfind("degree", 0) == 0) {
      if (degree >= 0) throw ParseError(line_no, "duplicate degree line");
      std::istringstream ds(body.substr(6));
      if (!(ds >> degree) || degree < 1) throw ParseError(line_no, "bad degree");
      std::string rest;
      if (ds >> rest) throw ParseError(line_no, "trailing text after degree");
    } else if (body.rfind("gen", 0) == 0) {
      if (degree < 0) throw ParseError(line_no, "gen before degree");
      gens.push_back(parse_cycles(degree, body.substr(3), line_no));
    } else {
      throw ParseError(line_no, "unknown directive: " + body);
    }
  }
  if (degree < 0) throw ParseError(0, "missing degree line");
  return FiniteGroup::closure(degree, std::move(gens), limits);
}

std::string write_group_file(const FiniteGroup& g) {
  std::string out = "degree " + std::to_string(g.degree()) + "\n";
  for (const Perm& p : g.generators()) {
    if (p.is_identity()) continue;
    out += "gen " + format_cycles(p) + "\n";
  }
  return out;
}

} // namespace permlab
