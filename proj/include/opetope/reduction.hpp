#pragma once

#include <vector>

#include "opetope/complex.hpp"

namespace opetope {

// The atomic subcomplex generated by `h`, with faces, thinness and
// augmentation restricted from `k`. `k` is assumed opetopic and not checked
// here, since callers loop over every element.
Complex atomic_subcomplex(const Complex& k, const BasisId& h);

// Turns an opetopic complex into a reduced one. First merges chains of thin
// elements that together form a d- into one thin element named
// "thin_<b>"; then deletes thin elements that are nobody's d-, identifying
// their d+ with their d-. Both stages run to a fixpoint.
Complex reduce(const Complex& k);

// Source opetopes of a reduced complex of positive dimension, in the natural
// order of the terms of d- of the top element. Empty when that d- is thin.
std::vector<Complex> sources(const Complex& k);

Complex target(const Complex& k);

}  // namespace opetope
