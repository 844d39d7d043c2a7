#include "doctest.h"
#include "opetope/complex.hpp"
#include "support.hpp"

using namespace opetope;
using support::chain;
using support::table1;

TEST_CASE("natural order puts fractional ids between their neighbours") {
  CHECK(natural_compare("a9", "a9.5") < 0);
  CHECK(natural_compare("a9.5", "a17") < 0);
  CHECK(natural_compare("a5.5", "a6") < 0);
  CHECK(natural_compare("b2", "b10") < 0);
  CHECK(natural_compare("a10", "a10") == 0);
  CHECK(is_valid_identifier("a9.5"));
  CHECK(is_valid_identifier("thin_b13_2"));
  CHECK_FALSE(is_valid_identifier("3/e7"));
  CHECK_FALSE(is_valid_identifier(""));
}

TEST_CASE("chains keep exact coefficients and drop zeros") {
  Chain c = chain(1, "a + 2 b - c");
  CHECK(c.coefficient("b") == 2);
  CHECK(c.to_string() == "a + 2 b - c");
  c.add("a", -1);
  CHECK_FALSE(c.contains("a"));
  Coefficient big = Coefficient(1) << 200;
  Chain d(1);
  d.add("x", big);
  d += d;
  CHECK(d.coefficient("x") == big * 2);
  CHECK_THROWS_AS(chain(1, "a") + chain(2, "a"), Error);
  CHECK(Chain(3).to_string() == "0");
}

TEST_CASE("boundary") {
  const Complex& k = table1();
  CHECK(boundary(k, Chain::basis("a17", 5)) == chain(4, "b17 - a16 - a15 - a14 - a13"));
  CHECK(boundary(k, Chain(3)) == Chain(2));
  // The b16, b15, b14 contributions cancel.
  CHECK(boundary(k, chain(4, "a16 + a15 + a14 + a13")) ==
        chain(3, "b13 - a12 - a11 - a10 - a9.5 - a9 - a8"));
  try {
    boundary(k, Chain::basis("a1", 0));
    FAIL("expected DimensionZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::dimension_zero);
  }
  try {
    boundary(k, Chain::basis("nope", 2));
    FAIL("expected UnknownBasisId");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_basis_id);
  }
}

TEST_CASE("split") {
  auto [neg, pos] = split(chain(4, "b17 - a16 - a15 - a14 - a13"));
  CHECK(neg == chain(4, "a16 + a15 + a14 + a13"));
  CHECK(pos == chain(4, "b17"));
  auto [zn, zp] = split(Chain(2));
  CHECK(zn.is_zero());
  CHECK(zp.is_zero());
  auto [n2, p2] = split(chain(3, "b13 - a12 - a11 - a10 - a9.5 - a9 - a8"));
  CHECK(n2 == chain(3, "a12 + a11 + a10 + a9.5 + a9 + a8"));
  CHECK(p2 == chain(3, "b13"));
  const Chain mixed = chain(1, "3 x - 5 y + z");
  auto [n3, p3] = split(mixed);
  CHECK(p3 - n3 == mixed);
  CHECK(n3.all_positive());
  CHECK(p3.all_positive());
}

TEST_CASE("faces and iterated faces") {
  const Complex& k = table1();
  CHECK(face(k, Chain::basis("a17", 5), Sign::minus) == chain(4, "a16 + a15 + a14 + a13"));
  CHECK(face(k, chain(4, "a16 + a15 + a14 + a13"), Sign::plus) == chain(3, "b13"));
  CHECK(face(k, Chain::basis("a5", 2), Sign::plus) == k.cell("a5").d_plus);
  CHECK(face_iter(k, Chain::basis("a17", 5), 3, Sign::minus) == chain(2, "a7 + a6 + a5.5 + a5"));
  CHECK(face_iter(k, Chain::basis("a17", 5), 5, Sign::plus) == chain(0, "b2"));
  const Chain c = chain(3, "a12 + b16");
  CHECK(face_iter(k, c, 0, Sign::minus) == c);
  try {
    face_iter(k, Chain::basis("a5", 2), 3, Sign::minus);
    FAIL("expected RankTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::rank_too_large);
  }
}

TEST_CASE("augmentation") {
  const Complex& k = table1();
  CHECK(augment(k, Chain::basis("a1", 0)) == 1);
  CHECK(augment(k, Chain(0)) == 0);
  CHECK(augment(k, face_iter(k, Chain::basis("a17", 5), 5, Sign::minus)) == 1);
  try {
    augment(k, Chain::basis("a2", 1));
    FAIL("expected WrongDimension");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::wrong_dimension);
  }
}

TEST_CASE("validate_fadc") {
  CHECK(validate_fadc(table1()).ok());
  CHECK(validate_fadc(support::make({{"p", 0, "", ""}})).ok());

  // d+ b5 = b3 breaks dd b8 = 0.
  const Complex broken = support::edited(table1(), [](Cell& c) {
    if (c.id == "b5") c.d_plus = chain(0, "b3");
  });
  const FadcReport r = validate_fadc(broken);
  REQUIRE_FALSE(r.ok());
  bool names_b8 = false;
  for (const auto& v : r.violations) names_b8 |= v.find("b8") != std::string::npos;
  CHECK(names_b8);

  // Overlapping supports and a thin point are both reported.
  const Complex bad = support::make({{"x", 0, "", ""},
                                     {"y", 0, "", "", true},
                                     {"f", 1, "x", "x + y"}});
  CHECK(validate_fadc(bad).violations.size() >= 2);
}

TEST_CASE("dd vanishes and d- / d+ share their faces on table1") {
  const Complex& k = table1();
  for (const Cell* c : k.cells()) {
    if (c->dim < 2) continue;
    const Chain a = Chain::basis(c->id, c->dim);
    CHECK(boundary(k, boundary(k, a)).is_zero());
    for (Sign s : {Sign::minus, Sign::plus}) {
      CHECK(face(k, c->d_minus, s) == face(k, c->d_plus, s));
    }
  }
}
