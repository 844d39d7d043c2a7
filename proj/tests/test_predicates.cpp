#include <map>

#include "doctest.h"
#include "opetope/predicates.hpp"
#include "opetope/reduction.hpp"
#include "support.hpp"

using namespace opetope;
using support::table1;

namespace {

// Loop-freeness decided by transitive closure instead of a topological sort.
bool loop_free_oracle(const Complex& k, bool fast) {
  std::map<std::string, int> index;
  for (const Cell* c : k.cells()) index.emplace(c->id, static_cast<int>(index.size()));
  std::vector<std::pair<int, int>> arcs;
  for (const Cell* c : k.cells()) {
    const int top = fast ? std::min(c->dim, 1) : c->dim;
    for (int r = 1; r <= top; ++r) {
      const Chain a = Chain::basis(c->id, c->dim);
      const Chain lo = face_iter(k, a, r, Sign::minus);
      const Chain hi = face_iter(k, a, r, Sign::plus);
      for (const auto& [u, cu] : lo.terms())
        for (const auto& [v, cv] : hi.terms()) arcs.emplace_back(index[u], index[v]);
    }
  }
  return !support::has_cycle(static_cast<int>(index.size()), arcs);
}

// x -> y by e and y -> x by f, with a 2-cell from e to f.
Complex two_loop() {
  return support::make({{"x", 0, "", ""},
                        {"y", 0, "", ""},
                        {"e", 1, "x", "y"},
                        {"f", 1, "y", "x"},
                        {"g", 2, "e", "f"}});
}

}  // namespace

TEST_CASE("is_atomic") {
  const AtomicResult r = is_atomic(table1());
  CHECK(r.atomic);
  CHECK(r.dim == 5);
  const AtomicResult p = is_atomic(support::make({{"p", 0, "", ""}}));
  CHECK(p.atomic);
  CHECK(p.dim == 0);
  const Complex headless = support::edited(table1(), [](Cell&) {}, [](const Cell& c) { return c.id != "a17"; });
  CHECK_FALSE(is_atomic(headless).atomic);
  try {
    is_atomic(Complex{});
    FAIL("expected EmptyBasis");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::empty_basis);
  }
}

TEST_CASE("is_unital") {
  CHECK(is_unital(table1(), Mode::fast));
  CHECK(is_unital(table1(), Mode::general));
  CHECK(is_unital(support::make({{"p", 0, "", ""}}), Mode::general));
  const Complex skewed = support::edited(table1(), [](Cell& c) {
    if (c.id == "a1") c.epsilon = 2;
  });
  CHECK_FALSE(is_unital(skewed, Mode::fast));
  CHECK_FALSE(is_unital(skewed, Mode::general));

  // d+ of c is a sum, so the fast path does not apply.
  const Complex wide = support::make({{"x", 0, "", ""},
                                      {"y", 0, "", ""},
                                      {"z", 0, "", ""},
                                      {"f", 1, "x", "y"},
                                      {"g", 1, "y", "z"},
                                      {"h", 1, "x", "z"},
                                      {"c", 2, "h", "f + g"}});
  try {
    is_unital(wide, Mode::fast);
    FAIL("expected FastPathInapplicable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::fast_path_inapplicable);
  }
  CHECK(is_unital(wide, Mode::general));
  CHECK_THROWS_AS(is_loop_free(wide, Mode::fast), Error);
}

TEST_CASE("is_loop_free") {
  std::vector<BasisId> witness;
  CHECK(is_loop_free(table1(), Mode::fast, &witness));
  CHECK(witness.size() == table1().size());
  CHECK(is_loop_free(table1(), Mode::general));
  CHECK(is_loop_free(support::make({{"p", 0, "", ""}}), Mode::general));
  CHECK_FALSE(is_loop_free(two_loop(), Mode::general));
  CHECK_FALSE(is_loop_free(two_loop(), Mode::fast));

  // The witness is a linear extension of the precedences.
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < witness.size(); ++i) pos[witness[i]] = i;
  const Complex& k = table1();
  for (const Cell* c : k.cells()) {
    if (c->dim == 0) continue;
    for (const auto& [u, cu] : c->d_minus.terms())
      for (const auto& [v, cv] : c->d_plus.terms()) CHECK(pos[u] < pos[v]);
  }
}

TEST_CASE("loop-freeness agrees with the closure oracle") {
  for (bool fast : {false, true}) {
    CHECK(is_loop_free(table1(), fast ? Mode::fast : Mode::general) == loop_free_oracle(table1(), fast));
    CHECK(is_loop_free(two_loop(), fast ? Mode::fast : Mode::general) == loop_free_oracle(two_loop(), fast));
  }
}

TEST_CASE("classify") {
  const Classification c = classify(table1());
  CHECK(c.fadc);
  CHECK(c.atomic);
  CHECK(c.dim == 5);
  CHECK(c.unital);
  CHECK(c.loop_free);
  CHECK(c.opetopic);
  CHECK(c.reduced);
  CHECK(c.notes.empty());

  const Classification sub = classify(atomic_subcomplex(table1(), "a13"));
  CHECK(sub.opetopic);
  CHECK_FALSE(sub.reduced);

  const Classification point = classify(support::make({{"p", 0, "", ""}}));
  CHECK(point.opetopic);
  CHECK(point.reduced);

  const Classification loop = classify(two_loop());
  CHECK_FALSE(loop.loop_free);
  CHECK_FALSE(loop.opetopic);
  CHECK_FALSE(loop.notes.empty());

  // A thin element whose d- is a sum breaks the opetopic conditions.
  const Complex fat_thin = support::make({{"x", 0, "", ""},
                                          {"y", 0, "", ""},
                                          {"z", 0, "", ""},
                                          {"f", 1, "x", "y"},
                                          {"g", 1, "y", "z"},
                                          {"h", 1, "x", "z"},
                                          {"c", 2, "f + g", "h", true}});
  const Classification ft = classify(fat_thin);
  CHECK(ft.fadc);
  CHECK(ft.loop_free);
  CHECK_FALSE(ft.opetopic);
}
