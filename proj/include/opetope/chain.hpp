#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opetope/error.hpp"
#include "opetope/natural_order.hpp"

namespace opetope {

using Coefficient = boost::multiprecision::cpp_int;
using BasisId = std::string;

enum class Sign { minus, plus };

inline Sign opposite(Sign s) { return s == Sign::minus ? Sign::plus : Sign::minus; }
inline const char* to_string(Sign s) { return s == Sign::minus ? "-" : "+"; }

/// Integer linear combination of basis elements of a single dimension.
///
/// Terms are kept in natural id order and never hold a zero coefficient. A
/// zero chain still knows its dimension so that dimension errors surface.
class Chain {
 public:
  using Terms = std::map<BasisId, Coefficient, NaturalLess>;

  Chain() = default;
  explicit Chain(int dim);
  Chain(int dim, std::initializer_list<std::pair<BasisId, Coefficient>> terms);

  static Chain basis(BasisId id, int dim);

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coefficient coefficient(const BasisId& id) const;
  bool contains(const BasisId& id) const { return terms_.count(id) != 0; }

  // Adds `coeff * id`; coefficients that cancel to zero are dropped.
  void add(const BasisId& id, const Coefficient& coeff);

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain& operator*=(const Coefficient& factor);

  friend Chain operator+(Chain lhs, const Chain& rhs) { return lhs += rhs; }
  friend Chain operator-(Chain lhs, const Chain& rhs) { return lhs -= rhs; }
  friend Chain operator*(const Coefficient& factor, Chain c) { return c *= factor; }

  friend bool operator==(const Chain& a, const Chain& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  bool all_positive() const;
  bool all_unit() const;

  // The id of the chain when it is exactly one basis element with coefficient 1.
  std::optional<BasisId> single_basis() const;

  std::vector<BasisId> support() const;

  // "a13 + a14 - 2 b17", or "0" for the zero chain.
  std::string to_string() const;

 private:
  void require_same_dim(const Chain& other) const;

  int dim_ = 0;
  Terms terms_;
};

/// Splits a chain into its negative and positive parts: `pos - neg == c`,
/// both with positive coefficients and disjoint supports.
std::pair<Chain, Chain> split(const Chain& c);

}  // namespace opetope
