#pragma once

#include <string_view>

namespace opetope {

// Compares identifiers with digit runs taken numerically, so that
// a9 < a9.5 < a17. Ties on the numeric reading fall back to plain
// lexicographic order, which keeps this a strict total order on strings.
int natural_compare(std::string_view lhs, std::string_view rhs);

struct NaturalLess {
  using is_transparent = void;
  bool operator()(std::string_view lhs, std::string_view rhs) const {
    return natural_compare(lhs, rhs) < 0;
  }
};

bool is_valid_identifier(std::string_view id);

}  // namespace opetope
