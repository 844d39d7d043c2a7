#pragma once

#include <optional>
#include <vector>

#include "opetope/complex.hpp"
#include "opetope/network.hpp"
#include "opetope/nu.hpp"

namespace opetope {

// Network whose edges are the terms of g_q^sign(x) and whose vertices are the
// terms of x_{q+1}^sign. Throws MultiplicityViolation when x has repeated terms.
Network build_network(const Complex& k, const NuElement& x, int q, Sign sign);

// The level networks of the canonical atom of an opetopic complex, with the
// identity correspondence between vertices and next-level inputs.
OpetopicSequence networks_of(const Complex& k);

// The opetopic complex of a valid sequence. The basis element for edge e of
// N_q is named "<q>_<e>".
Complex complex_of(const OpetopicSequence& seq);

using BasisMap = std::map<BasisId, BasisId, NaturalLess>;

std::optional<BasisMap> iso_complexes(const Complex& a, const Complex& b);

struct SequenceIsomorphism {
  std::vector<IdMap> edges;     // per level
  std::vector<IdMap> vertices;  // per level
};

std::optional<SequenceIsomorphism> iso_sequences(const OpetopicSequence& a,
                                                 const OpetopicSequence& b);

}  // namespace opetope
