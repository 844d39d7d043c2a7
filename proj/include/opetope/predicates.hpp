#pragma once

#include <optional>
#include <vector>

#include "opetope/complex.hpp"

namespace opetope {

// `general` evaluates the definitions directly; `fast` uses the shortcuts
// available when every d+ is a single basis element (throws
// FastPathInapplicable otherwise).
enum class Mode { general, fast };

struct AtomicResult {
  bool atomic = false;
  std::optional<int> dim;
};

AtomicResult is_atomic(const Complex& k);
bool is_unital(const Complex& k, Mode mode);

// Loop-freeness is acyclicity of the precedence digraph. When `witness` is
// given and the complex is loop-free, it receives a topological order of all
// basis elements.
bool is_loop_free(const Complex& k, Mode mode, std::vector<BasisId>* witness = nullptr);

struct Classification {
  bool fadc = false;
  bool atomic = false;
  std::optional<int> dim;
  bool unital = false;
  bool loop_free = false;
  bool opetopic = false;
  bool reduced = false;
  std::vector<std::string> notes;  // reasons for failed flags
};

Classification classify(const Complex& k);

// The unique top-dimensional element of an atomic complex.
const BasisId& top_element(const Complex& k);

}  // namespace opetope
