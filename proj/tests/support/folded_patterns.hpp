#pragma once

#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pseudospline/real_roots.hpp"

// Folded matrices written in terms of the symbols b_0 .. b_p, keyed by (m, p).
using SymbolicRows = std::vector<std::vector<std::string>>;

inline const std::map<std::pair<int, int>, SymbolicRows>& folded_patterns() {
  static const std::map<std::pair<int, int>, SymbolicRows> table{
      {{2, 1}, {{"b0"}}},
      {{3, 1}, {{"b0"}}},
      {{4, 1}, {{"b0"}}},
      {{2, 2}, {{"b0", "2b2"}, {"b1", "b1"}}},
      {{3, 2}, {{"b0"}}},
      {{4, 2}, {{"b0"}}},
      {{2, 3}, {{"b0", "2b2", "0"}, {"b1", "b1 + b3", "b3"}, {"b2", "b0", "b2"}}},
      {{3, 3}, {{"b0", "2b3"}, {"b1", "b2"}}},
      {{4, 3}, {{"b0"}}},
      {{2, 4},
       {{"b0", "2b2", "2b4", "0"}, {"b1", "b1 + b3", "b3", "0"}, {"b2", "b0 + b4", "b2", "b4"}, {"b3", "b1", "b1", "b3"}}},
      {{3, 4}, {{"b0", "2b3"}, {"b1", "b2 + b4"}}},
      {{4, 4}, {{"b0", "2b4"}, {"b1", "b3"}}},
      {{2, 5},
       {{"b0", "2b2", "2b4", "0", "0"},
        {"b1", "b1 + b3", "b3 + b5", "b5", "0"},
        {"b2", "b0 + b4", "b2", "b4", "0"},
        {"b3", "b1 + b5", "b1", "b3", "b5"},
        {"b4", "b2", "b0", "b2", "b4"}}},
      {{3, 5}, {{"b0", "2b3", "0"}, {"b1", "b2 + b4", "b5"}, {"b2", "b1 + b5", "b4"}}},
      {{4, 5}, {{"b0", "2b4"}, {"b1", "b3 + b5"}}},
  };
  return table;
}

// With b_j = 1000^j every entry is a distinct number, so equality of the
// numeric matrices is equality of the symbolic ones.
inline pseudospline::LaurentPoly symbolic_b(int p) {
  using pseudospline::Rational;
  std::vector<Rational> c;
  for (int j = -p; j <= p; ++j) {
    c.push_back(pow(Rational(1000), static_cast<unsigned>(std::abs(j))));
  }
  return pseudospline::LaurentPoly(-p, c);
}

// "b0 + 2b2" -> 1 + 2 * 1000^2
inline pseudospline::Rational symbolic_entry(const std::string& text) {
  using pseudospline::Rational;
  Rational out(0);
  std::istringstream in(text);
  std::string term;
  while (in >> term) {
    if (term == "+" || term == "0") {
      continue;
    }
    const auto b = term.find('b');
    const long coeff = b == 0 ? 1 : std::stol(term.substr(0, b));
    out += Rational(coeff) * pow(Rational(1000), static_cast<unsigned>(std::stoi(term.substr(b + 1))));
  }
  return out;
}

inline pseudospline::Matrix symbolic_matrix(const SymbolicRows& rows) {
  pseudospline::Matrix M;
  for (const auto& row : rows) {
    std::vector<pseudospline::Rational> r;
    for (const auto& e : row) {
      r.push_back(symbolic_entry(e));
    }
    M.push_back(r);
  }
  return M;
}
