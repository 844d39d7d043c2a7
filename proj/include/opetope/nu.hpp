#pragma once

#include <string>
#include <utility>
#include <vector>

#include "opetope/complex.hpp"

namespace opetope {

/// A double sequence (x_q^-, x_q^+) of q-chains; levels past the stored ones
/// are zero.
struct NuElement {
  struct Level {
    Chain minus;
    Chain plus;
    friend bool operator==(const Level&, const Level&) = default;
  };
  std::vector<Level> levels;

  // Level q, or the zero pair when q is past the stored levels.
  Level at(int q) const;
  int size() const { return static_cast<int>(levels.size()); }

  friend bool operator==(const NuElement&, const NuElement&) = default;
};

bool is_member(const Complex& k, const NuElement& x);

// ( (d-)^q g, (d+)^q g ) for the top element g of an atomic unital complex,
// indexed by dimension so that levels[n] == (g, g).
NuElement canonical_atom(const Complex& k);

// x_q^- + sum of d+ a_i over the terms a_i of x_{q+1}^sign, counted with
// multiplicity; cross-checked against the d- formula.
Chain g_chain(const Complex& k, const NuElement& x, int q, Sign sign);

// Violations of the distinct-terms property; empty when it holds.
std::vector<std::string> distinctness_check(const Complex& k, const NuElement& x);

}  // namespace opetope
