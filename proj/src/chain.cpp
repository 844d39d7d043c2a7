#include "opetope/chain.hpp"

#include <sstream>

namespace opetope {

Chain::Chain(int dim) : dim_(dim) {
  if (dim < 0) throw Error(ErrorCode::wrong_dimension, "chain dimension must be nonnegative");
}

Chain::Chain(int dim, std::initializer_list<std::pair<BasisId, Coefficient>> terms) : Chain(dim) {
  for (const auto& [id, coeff] : terms) add(id, coeff);
}

Chain Chain::basis(BasisId id, int dim) {
  Chain c(dim);
  c.add(id, 1);
  return c;
}

Coefficient Chain::coefficient(const BasisId& id) const {
  auto it = terms_.find(id);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

void Chain::add(const BasisId& id, const Coefficient& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(id, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void Chain::require_same_dim(const Chain& other) const {
  if (dim_ != other.dim_) {
    throw Error(ErrorCode::wrong_dimension,
                "cannot combine chains of dimensions " + std::to_string(dim_) + " and " +
                    std::to_string(other.dim_));
  }
}

Chain& Chain::operator+=(const Chain& other) {
  require_same_dim(other);
  for (const auto& [id, coeff] : other.terms_) add(id, coeff);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  require_same_dim(other);
  for (const auto& [id, coeff] : other.terms_) add(id, -coeff);
  return *this;
}

Chain& Chain::operator*=(const Coefficient& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [id, coeff] : terms_) coeff *= factor;
  return *this;
}

bool Chain::all_positive() const {
  for (const auto& [id, coeff] : terms_) {
    if (coeff <= 0) return false;
  }
  return true;
}

bool Chain::all_unit() const {
  for (const auto& [id, coeff] : terms_) {
    if (coeff != 1) return false;
  }
  return true;
}

std::optional<BasisId> Chain::single_basis() const {
  if (terms_.size() != 1 || terms_.begin()->second != 1) return std::nullopt;
  return terms_.begin()->first;
}

std::vector<BasisId> Chain::support() const {
  std::vector<BasisId> ids;
  ids.reserve(terms_.size());
  for (const auto& [id, coeff] : terms_) ids.push_back(id);
  return ids;
}

std::string Chain::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [id, coeff] : terms_) {
    Coefficient magnitude = coeff < 0 ? Coefficient(-coeff) : coeff;
    if (first) {
      if (coeff < 0) out << "-";
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    if (magnitude != 1) out << magnitude << " ";
    out << id;
    first = false;
  }
  return out.str();
}

std::pair<Chain, Chain> split(const Chain& c) {
  Chain neg(c.dim());
  Chain pos(c.dim());
  for (const auto& [id, coeff] : c.terms()) {
    if (coeff > 0) {
      pos.add(id, coeff);
    } else {
      neg.add(id, -coeff);
    }
  }
  return {std::move(neg), std::move(pos)};
}

}  // namespace opetope
