#include "opetope/complex.hpp"

#include <algorithm>

namespace opetope {

namespace {

const std::vector<BasisId> kNoIds;

void require_refs(const std::map<BasisId, Cell, NaturalLess>& cells, const Cell& cell,
                  const Chain& face, const char* which) {
  for (const auto& [id, coeff] : face.terms()) {
    if (cells.count(id) == 0) {
      throw Error(ErrorCode::reference_error,
                  "cell " + cell.id + ": " + which + " names unknown basis element " + id);
    }
  }
}

}  // namespace

Complex::Complex(std::vector<Cell> cells) {
  for (auto& cell : cells) {
    if (!is_valid_identifier(cell.id)) {
      throw Error(ErrorCode::invalid_argument, "invalid basis id '" + cell.id + "'");
    }
    if (cell.dim < 0) {
      throw Error(ErrorCode::wrong_dimension, "cell " + cell.id + " has negative dimension");
    }
    const int face_dim = std::max(cell.dim - 1, 0);
    for (Chain* face : {&cell.d_minus, &cell.d_plus}) {
      if (face->is_zero() && face->dim() != face_dim) *face = Chain(face_dim);
      if (face->dim() != face_dim) {
        throw Error(ErrorCode::wrong_dimension,
                    "cell " + cell.id + " has a face chain of dimension " +
                        std::to_string(face->dim()));
      }
    }
    if (cell.dim == 0 && (!cell.d_minus.is_zero() || !cell.d_plus.is_zero())) {
      throw Error(ErrorCode::wrong_dimension, "0-dimensional cell " + cell.id + " has faces");
    }
    const BasisId id = cell.id;
    if (!cells_.emplace(id, std::move(cell)).second) {
      throw Error(ErrorCode::invalid_argument, "duplicate basis id '" + id + "'");
    }
  }
  for (const auto& [id, cell] : cells_) {
    require_refs(cells_, cell, cell.d_minus, "d_minus");
    require_refs(cells_, cell, cell.d_plus, "d_plus");
    if (static_cast<int>(by_dim_.size()) <= cell.dim) by_dim_.resize(cell.dim + 1);
    by_dim_[cell.dim].push_back(id);
  }
}

const Cell& Complex::cell(const BasisId& id) const {
  auto it = cells_.find(id);
  if (it == cells_.end()) throw Error(ErrorCode::unknown_basis_id, "unknown basis element " + id);
  return it->second;
}

const std::vector<BasisId>& Complex::ids_of_dim(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return kNoIds;
  return by_dim_[dim];
}

std::vector<const Cell*> Complex::cells() const {
  std::vector<const Cell*> out;
  out.reserve(cells_.size());
  for (const auto& ids : by_dim_) {
    for (const auto& id : ids) out.push_back(&cells_.at(id));
  }
  return out;
}

void check_chain(const Complex& k, const Chain& c) {
  for (const auto& [id, coeff] : c.terms()) {
    const Cell& cell = k.cell(id);
    if (cell.dim != c.dim()) {
      throw Error(ErrorCode::wrong_dimension, "basis element " + id + " has dimension " +
                                                  std::to_string(cell.dim) + ", chain has " +
                                                  std::to_string(c.dim()));
    }
  }
}

Chain boundary(const Complex& k, const Chain& c) {
  if (c.dim() == 0) {
    throw Error(ErrorCode::dimension_zero, "boundary of a 0-chain is undefined; use augment");
  }
  check_chain(k, c);
  Chain result(c.dim() - 1);
  for (const auto& [id, coeff] : c.terms()) {
    const Cell& cell = k.cell(id);
    result += coeff * cell.d_plus;
    result -= coeff * cell.d_minus;
  }
  return result;
}

Chain face(const Complex& k, const Chain& c, Sign sign) {
  auto [neg, pos] = split(boundary(k, c));
  return sign == Sign::minus ? neg : pos;
}

Chain face_iter(const Complex& k, const Chain& c, int r, Sign sign) {
  if (r < 0) throw Error(ErrorCode::invalid_argument, "negative iteration count");
  if (r > c.dim()) {
    throw Error(ErrorCode::rank_too_large, "cannot take " + std::to_string(r) +
                                               " faces of a chain of dimension " +
                                               std::to_string(c.dim()));
  }
  check_chain(k, c);
  Chain result = c;
  for (int i = 0; i < r; ++i) result = face(k, result, sign);
  return result;
}

Coefficient augment(const Complex& k, const Chain& c) {
  if (c.dim() != 0) {
    throw Error(ErrorCode::wrong_dimension, "augmentation is defined on 0-chains only");
  }
  check_chain(k, c);
  Coefficient total = 0;
  for (const auto& [id, coeff] : c.terms()) total += coeff * k.cell(id).epsilon;
  return total;
}

FadcReport validate_fadc(const Complex& k) {
  FadcReport report;
  auto& out = report.violations;
  bool dims_ok = true;
  for (const Cell* cell : k.cells()) {
    if (cell->thin && cell->dim == 0) out.push_back(cell->id + ": thin element of dimension 0");
    if (cell->dim == 0) continue;
    for (Sign s : {Sign::minus, Sign::plus}) {
      const Chain& f = s == Sign::minus ? cell->d_minus : cell->d_plus;
      const std::string name = cell->id + ": d" + to_string(s);
      for (const auto& [id, coeff] : f.terms()) {
        if (k.cell(id).dim != cell->dim - 1) {
          out.push_back(name + " term " + id + " has dimension " +
                        std::to_string(k.cell(id).dim));
          dims_ok = false;
        }
        if (coeff <= 0) out.push_back(name + " has non-positive coefficient on " + id);
      }
    }
    for (const auto& [id, coeff] : cell->d_minus.terms()) {
      if (cell->d_plus.contains(id)) {
        out.push_back(cell->id + ": d- and d+ share the term " + id);
      }
    }
  }
  // The algebraic checks need well-dimensioned faces.
  if (!dims_ok) return report;
  for (const Cell* cell : k.cells()) {
    if (cell->dim == 1) {
      Coefficient e = augment(k, cell->d_plus) - augment(k, cell->d_minus);
      if (e != 0) out.push_back(cell->id + ": augmentation of boundary is " + e.str());
    } else if (cell->dim >= 2) {
      Chain dd = boundary(k, boundary(k, Chain::basis(cell->id, cell->dim)));
      if (!dd.is_zero()) out.push_back(cell->id + ": boundary of boundary is " + dd.to_string());
    }
  }
  return report;
}

}  // namespace opetope
