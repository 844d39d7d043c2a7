#pragma once

// Helpers shared by the unit tests and the acceptance binary. Nothing here
// calls into the code under test except to load fixtures and to build
// complexes from small literal descriptions.

#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "opetope/complex.hpp"
#include "opetope/io.hpp"
#include "opetope/network.hpp"

#ifndef OPETOPE_FIXTURE_DIR
#error "OPETOPE_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace support {

using namespace opetope;
using IdSetPlain = std::set<std::string>;

inline std::string fixture_path(const std::string& name) {
  return std::string(OPETOPE_FIXTURE_DIR) + "/" + name;
}

inline const Complex& table1() {
  static const Complex k = parse_complex(read_file(fixture_path("table1.odc"))).complex;
  return k;
}

inline const OpetopicSequence& figure1() {
  static const OpetopicSequence s = parse_sequence(read_file(fixture_path("figure1.ops"))).sequence;
  return s;
}

// "a16 + a15 - 2 b3" as a chain of the given dimension; "0" is the zero chain.
inline Chain chain(int dim, const std::string& text) {
  Chain c(dim);
  std::istringstream in(text);
  std::string tok;
  Coefficient sign = 1;
  Coefficient coeff = 1;
  while (in >> tok) {
    if (tok == "0" && c.is_zero()) continue;
    if (tok == "+") {
      sign = 1;
    } else if (tok == "-") {
      sign = -1;
    } else if (std::isdigit(static_cast<unsigned char>(tok[0])) &&
               tok.find_first_not_of("0123456789") == std::string::npos) {
      coeff = Coefficient(tok);
    } else {
      c.add(tok, sign * coeff);
      sign = 1;
      coeff = 1;
    }
  }
  return c;
}

struct Spec {
  std::string id;
  int dim;
  std::string minus;  // chain text, ignored for dim 0
  std::string plus;
  bool thin = false;
  int epsilon = 1;
};

inline Complex make(const std::vector<Spec>& specs) {
  std::vector<Cell> cells;
  for (const auto& s : specs) {
    Cell c;
    c.id = s.id;
    c.dim = s.dim;
    c.thin = s.thin;
    c.epsilon = s.epsilon;
    const int fd = s.dim > 0 ? s.dim - 1 : 0;
    c.d_minus = s.dim > 0 ? chain(fd, s.minus) : Chain(0);
    c.d_plus = s.dim > 0 ? chain(fd, s.plus) : Chain(0);
    cells.push_back(std::move(c));
  }
  return Complex(std::move(cells));
}

// Copy of `k` with `edit` applied to every cell; cells for which `keep`
// returns false are dropped.
inline Complex edited(const Complex& k, const std::function<void(Cell&)>& edit,
                      const std::function<bool(const Cell&)>& keep = nullptr) {
  std::vector<Cell> cells;
  for (const Cell* c : k.cells()) {
    if (keep && !keep(*c)) continue;
    Cell copy = *c;
    edit(copy);
    cells.push_back(std::move(copy));
  }
  return Complex(std::move(cells));
}

inline IdSetPlain ids(const Complex& k) {
  IdSetPlain out;
  for (const Cell* c : k.cells()) out.insert(c->id);
  return out;
}

inline IdSetPlain words(const std::string& text) {
  IdSetPlain out;
  std::istringstream in(text);
  std::string w;
  while (in >> w) out.insert(w);
  return out;
}

// Downward closure of {h} under "is a term of a face". Deliberately naive:
// this is the oracle for subcomplex bases.
inline IdSetPlain downward_closure(const Complex& k, const std::string& h) {
  IdSetPlain seen{h};
  std::vector<std::string> todo{h};
  while (!todo.empty()) {
    const std::string id = todo.back();
    todo.pop_back();
    const Cell& c = k.cell(id);
    for (const Chain* f : {&c.d_minus, &c.d_plus}) {
      for (const auto& [t, coeff] : f->terms()) {
        if (seen.insert(t).second) todo.push_back(t);
      }
    }
  }
  return seen;
}

// Transitive closure of a digraph on n nodes by Floyd-Warshall; true when
// some node reaches itself through at least one arc.
inline bool has_cycle(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (auto [a, b] : arcs) r[a][b] = 1;
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      if (r[i][m])
        for (int j = 0; j < n; ++j)
          if (r[m][j]) r[i][j] = 1;
  for (int i = 0; i < n; ++i)
    if (r[i][i]) return true;
  return false;
}

// Edge-to-edge reachability in a network through vertices, again by
// Floyd-Warshall over an index of the edges.
inline std::vector<std::vector<char>> edge_reach(const Network& n) {
  std::vector<std::string> es(n.edges().begin(), n.edges().end());
  const int m = static_cast<int>(es.size());
  std::vector<std::vector<char>> r(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i) {
    r[i][i] = 1;
    auto t = n.target(es[i]);
    if (!t) continue;
    for (int j = 0; j < m; ++j) {
      auto s = n.source(es[j]);
      if (s && *s == *t) r[i][j] = 1;
    }
  }
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      if (r[i][k])
        for (int j = 0; j < m; ++j)
          if (r[k][j]) r[i][j] = 1;
  return r;
}

}  // namespace support
