#pragma once

#include <map>
#include <string>
#include <vector>

#include "opetope/chain.hpp"

namespace opetope {

/// One distinguished basis element together with its faces.
struct Cell {
  BasisId id;
  int dim = 0;
  bool thin = false;
  Chain d_minus;  // dimension dim - 1; empty for 0-cells
  Chain d_plus;
  Coefficient epsilon = 1;  // meaningful for 0-cells only
};

/// A free augmented directed complex with a thin marking.
///
/// Construction only checks referential integrity (well-formed unique ids,
/// faces naming existing elements). Algebraic conditions such as
/// boundary-of-boundary vanishing are reported by validate_fadc.
class Complex {
 public:
  Complex() = default;
  explicit Complex(std::vector<Cell> cells);

  bool contains(const BasisId& id) const { return cells_.count(id) != 0; }
  const Cell& cell(const BasisId& id) const;
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  // Highest dimension present, or -1 for the empty complex.
  int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }

  // Ids of the given dimension in natural order.
  const std::vector<BasisId>& ids_of_dim(int dim) const;

  // All cells, dimension ascending then natural id order.
  std::vector<const Cell*> cells() const;

  const Chain& face_of(const BasisId& id, Sign sign) const {
    const Cell& c = cell(id);
    return sign == Sign::minus ? c.d_minus : c.d_plus;
  }

 private:
  std::map<BasisId, Cell, NaturalLess> cells_;
  std::vector<std::vector<BasisId>> by_dim_;
};

// Chain arithmetic relative to a complex.

Chain boundary(const Complex& k, const Chain& c);
Chain face(const Complex& k, const Chain& c, Sign sign);
Chain face_iter(const Complex& k, const Chain& c, int r, Sign sign);
Coefficient augment(const Complex& k, const Chain& c);

// Throws UnknownBasisId or WrongDimension if `c` does not live in `k`.
void check_chain(const Complex& k, const Chain& c);

struct FadcReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

FadcReport validate_fadc(const Complex& k);

}  // namespace opetope
