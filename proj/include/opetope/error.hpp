#pragma once

#include <stdexcept>
#include <string>

namespace opetope {

enum class ErrorCode {
  unknown_basis_id,
  dimension_zero,
  rank_too_large,
  wrong_dimension,
  empty_basis,
  fast_path_inapplicable,
  not_atomic,
  not_unital,
  formula_mismatch,
  unknown_edge,
  not_total,
  multiplicity_violation,
  not_opetopic,
  not_reduced,
  invalid_sequence,
  parse_error,
  reference_error,
  invalid_argument,
  internal,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace opetope
