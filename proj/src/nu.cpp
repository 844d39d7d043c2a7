#include "opetope/nu.hpp"

#include "opetope/predicates.hpp"

namespace opetope {

NuElement::Level NuElement::at(int q) const {
  if (q >= 0 && q < size()) return levels[q];
  return {Chain(q), Chain(q)};
}

bool is_member(const Complex& k, const NuElement& x) {
  for (int q = 0; q < x.size(); ++q) {
    for (const Chain* c : {&x.levels[q].minus, &x.levels[q].plus}) {
      if (c->dim() != q) return false;
      check_chain(k, *c);
      if (!c->all_positive()) return false;
    }
  }
  const auto bottom = x.at(0);
  if (augment(k, bottom.minus) != 1 || augment(k, bottom.plus) != 1) return false;
  // One level past the stored ones is zero, which forces the last stored
  // level to have equal halves.
  for (int q = 1; q <= x.size(); ++q) {
    const auto level = x.at(q);
    const auto below = x.at(q - 1);
    const Chain expected = below.plus - below.minus;
    if (boundary(k, level.minus) != expected || boundary(k, level.plus) != expected) return false;
  }
  return true;
}

NuElement canonical_atom(const Complex& k) {
  const Classification flags = classify(k);
  if (!flags.atomic) throw Error(ErrorCode::not_atomic, "canonical atom needs an atomic complex");
  if (!flags.unital) throw Error(ErrorCode::not_unital, "canonical atom needs a unital complex");
  const int n = *flags.dim;
  const Chain top = Chain::basis(top_element(k), n);
  NuElement x;
  x.levels.resize(n + 1);
  for (int q = 0; q <= n; ++q) {
    x.levels[q] = {face_iter(k, top, n - q, Sign::minus), face_iter(k, top, n - q, Sign::plus)};
  }
  return x;
}

Chain g_chain(const Complex& k, const NuElement& x, int q, Sign sign) {
  if (q < 0) throw Error(ErrorCode::invalid_argument, "negative level");
  const auto level = x.at(q);
  const auto above = x.at(q + 1);
  const Chain& cells = sign == Sign::minus ? above.minus : above.plus;
  check_chain(k, cells);
  Chain via_plus = level.minus;
  Chain via_minus = level.plus;
  for (const auto& [id, coeff] : cells.terms()) {
    const Cell& cell = k.cell(id);
    via_plus += coeff * cell.d_plus;
    via_minus += coeff * cell.d_minus;
  }
  if (via_plus != via_minus) {
    throw Error(ErrorCode::formula_mismatch,
                "g_" + std::to_string(q) + to_string(sign) + ": " + via_plus.to_string() +
                    " != " + via_minus.to_string());
  }
  return via_plus;
}

std::vector<std::string> distinctness_check(const Complex& k, const NuElement& x) {
  std::vector<std::string> out;
  const auto bottom = x.at(0);
  if (!bottom.minus.single_basis()) out.push_back("x_0^- is not a basis element");
  if (!bottom.plus.single_basis()) out.push_back("x_0^+ is not a basis element");
  for (int q = 0; q < x.size(); ++q) {
    const std::string lq = std::to_string(q);
    if (!x.levels[q].minus.all_unit()) out.push_back("x_" + lq + "^- has a repeated term");
    if (!x.levels[q].plus.all_unit()) out.push_back("x_" + lq + "^+ has a repeated term");
    for (Sign s : {Sign::minus, Sign::plus}) {
      if (!g_chain(k, x, q, s).all_unit()) {
        out.push_back("g_" + lq + "^" + to_string(s) + " has a repeated term");
      }
    }
  }
  return out;
}

}  // namespace opetope
