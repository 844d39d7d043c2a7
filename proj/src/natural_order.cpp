#include "opetope/natural_order.hpp"

#include <cctype>

namespace opetope {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Compares two digit runs by numeric value without converting them.
int compare_digit_runs(std::string_view a, std::string_view b) {
  auto strip = [](std::string_view s) {
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] == '0') ++i;
    return s.substr(i);
  };
  auto sa = strip(a);
  auto sb = strip(b);
  if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
  int c = sa.compare(sb);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace

int natural_compare(std::string_view lhs, std::string_view rhs) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.size() && j < rhs.size()) {
    if (is_digit(lhs[i]) && is_digit(rhs[j])) {
      std::size_t i_end = i;
      while (i_end < lhs.size() && is_digit(lhs[i_end])) ++i_end;
      std::size_t j_end = j;
      while (j_end < rhs.size() && is_digit(rhs[j_end])) ++j_end;
      int c = compare_digit_runs(lhs.substr(i, i_end - i), rhs.substr(j, j_end - j));
      if (c != 0) return c;
      i = i_end;
      j = j_end;
      continue;
    }
    if (lhs[i] != rhs[j]) {
      // '.' separates numeric fields, so it sorts before every other character.
      if (lhs[i] == '.') return -1;
      if (rhs[j] == '.') return 1;
      return static_cast<unsigned char>(lhs[i]) < static_cast<unsigned char>(rhs[j]) ? -1 : 1;
    }
    ++i;
    ++j;
  }
  if (i < lhs.size()) return 1;
  if (j < rhs.size()) return -1;
  int c = lhs.compare(rhs);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

bool is_valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) return false;
  }
  return true;
}

}  // namespace opetope
