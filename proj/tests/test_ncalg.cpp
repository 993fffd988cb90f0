#include <doctest.h>

#include "test_util.hpp"

using namespace dext;
using namespace dext::testutil;

namespace {
const Field Q = Field::rationals();

Alphabet bh_alphabet() {
  Alphabet a;
  a.add("x1", 1);
  a.add("x2", 1);
  a.add("y1", 1);
  a.add("y2", 1);
  return a;
}
}  // namespace

TEST_CASE("alphabet validation") {
  Alphabet a;
  a.add("x", 2);
  CHECK_THROWS_AS(a.add("x", 1), std::invalid_argument);
  CHECK_THROWS_AS(a.add("z", 0), std::invalid_argument);
  CHECK(a.degree(0) == 2);
  CHECK(a.index_of("x").value() == 0);
  CHECK(!a.index_of("w").has_value());
}

TEST_CASE("monomial order: degree first, then left-to-right letters") {
  Alphabet a = bh_alphabet();
  // lower degree comes first
  CHECK(deglex_compare(word(a, {"x1"}), word(a, {"x1", "x2"})) ==
        std::strong_ordering::less);
  // the leads the construction needs
  CHECK(deglex_compare(word(a, {"y2", "y1"}), word(a, {"y1", "y2"})) ==
        std::strong_ordering::greater);
  CHECK(deglex_compare(word(a, {"x2", "x1"}), word(a, {"x1", "x2"})) ==
        std::strong_ordering::greater);
  CHECK(deglex_compare(word(a, {"y1", "x2"}), word(a, {"x2", "y2"})) ==
        std::strong_ordering::greater);
  CHECK(deglex_compare(word(a, {"x1"}), word(a, {"x1"})) ==
        std::strong_ordering::equal);
}

TEST_CASE("order handles mixed generator degrees") {
  Alphabet a;
  a.add("a", 1);
  a.add("b", 2);
  // same weighted degree, different lengths
  CHECK(deglex_compare(word(a, {"b"}), word(a, {"a", "a"})) ==
        std::strong_ordering::greater);
  CHECK(compare(a, word(a, {"a", "b"}), word(a, {"b", "a"})) ==
        std::strong_ordering::less);
  Alphabet other;
  other.add("z", 1);
  CHECK_THROWS_AS(compare(other, word(a, {"b"}), word(a, {"a"})),
                  AlphabetMismatch);
}

TEST_CASE("multiply: identity, distributivity, expansion") {
  Alphabet a = bh_alphabet();
  NcPoly one = NcPoly::constant(Scalar::one(Q));
  NcPoly x1 = mono(Q, a, {"x1"}), x2 = mono(Q, a, {"x2"});

  NcPoly p = x1 + x2;
  CHECK(one * p == p);

  CHECK((x1 + x2) * x1 == mono(Q, a, {"x1", "x1"}) + mono(Q, a, {"x2", "x1"}));

  NcPoly expanded = (x1 + x2) * (x1 - x2);
  NcPoly expect = mono(Q, a, {"x1", "x1"}) - mono(Q, a, {"x1", "x2"}) +
                  mono(Q, a, {"x2", "x1"}) - mono(Q, a, {"x2", "x2"});
  CHECK(expanded == expect);
}

TEST_CASE("polynomials drop zero coefficients and compare canonically") {
  Alphabet a = bh_alphabet();
  NcPoly p = mono(Q, a, {"x1"}) - mono(Q, a, {"x1"});
  CHECK(p.is_zero());
  NcPoly q(Q);
  q.add_term(Scalar::from_int(Q, 2), word(a, {"x1"}));
  q.add_term(Scalar::from_int(Q, -2), word(a, {"x1"}));
  CHECK(q == p);
}

TEST_CASE("homogeneous degree queries") {
  Alphabet a = bh_alphabet();
  NcPoly h = mono(Q, a, {"x1", "x2"}) + mono(Q, a, {"y1", "y2"});
  CHECK(h.homogeneous_degree() == 2);
  NcPoly nh = mono(Q, a, {"x1"}) + mono(Q, a, {"x1", "x2"});
  CHECK(!nh.homogeneous_degree().has_value());
  CHECK(nh.degree() == 2);
  CHECK(NcPoly(Q).degree() == -1);
}

TEST_CASE("canonical rendering: descending terms, '*' separators") {
  Alphabet a = bh_alphabet();
  NcPoly p = mono(Q, a, {"x1", "x2"}).scaled(Scalar::fraction(Q, -1, 2)) +
             mono(Q, a, {"y2", "y1"}).scaled(Scalar::from_int(Q, 3)) +
             NcPoly::constant(Scalar::one(Q));
  CHECK(p.to_string(a) == "3*y2*y1 - 1/2*x1*x2 + 1");
  CHECK(NcPoly(Q).to_string(a) == "0");
  CHECK(mono(Q, a, {"x1"}).to_string(a) == "x1");
}
