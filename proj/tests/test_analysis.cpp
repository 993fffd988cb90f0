#include <doctest.h>

#include "test_util.hpp"

using namespace dext;
using namespace dext::testutil;

namespace {
const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

Scalar q(long long n, long long d = 1) { return Scalar::fraction(Q, n, d); }

std::string datum(const CertReport& rep, const std::string& key) {
  for (const auto& [k, v] : rep.data)
    if (k == key) return v;
  return "<missing>";
}
}  // namespace

TEST_CASE("exact sequence: trimmed B(h) to degree 5") {
  ExtensionBuild b = build(bh_data(Q, 2));
  REQUIRE(certify_pbw(b, 5).passed());
  CHECK(exact_sequence_check(b, 5).passed());
}

TEST_CASE("exact sequence: the trivial quantum plane on y1, y2") {
  ExtensionBuild b =
      build(builtin("trivial", {{"p12", q(1)}}, Q).data);
  CHECK(exact_sequence_check(b, 5).passed());
}

TEST_CASE("exact sequence: f(g(1)) reduces to zero via the quadratic rule") {
  ExtensionBuild b = build(bh_data(Q, 2));
  const Field& f = Q;
  NcPoly gfirst(f);
  gfirst.add_term(b.data.p11(), b.y1());
  gfirst.add_term(-Scalar::one(f), b.y2());
  NcPoly gsecond(f);
  gsecond.add_term(b.data.p12(), b.y1());
  NcPoly fog = gfirst * NcPoly::monomial(f, b.y1()) +
               gsecond * NcPoly::monomial(f, b.y2());
  CHECK(b.presentation.normal_form(fog).is_zero());
}

TEST_CASE("exact sequence requires trimmed data") {
  DEData d =
      builtin("B1", {{"p", q(2)}, {"a", q(1)}, {"b", q(3)}, {"c", q(5)}}, Q)
          .data;
  ExtensionBuild b = build(d);
  CHECK_THROWS_AS(exact_sequence_check(b, 3), NotTrimmed);
  CHECK_THROWS_AS(g_twist_check(b, 3), NotTrimmed);
  CHECK(exact_sequence_check(build(trim(d)), 4).passed());
}

TEST_CASE("g twist: B(h) passes; the untwisted action fails") {
  ExtensionBuild b = build(bh_data(Q, 2));
  CHECK(g_twist_check(b, 5).passed());

  // negative control: replacing det(sigma) by the identity breaks the
  // first component identity already on x1
  const DEData& d = b.data;
  const Field& f = Q;
  NcPoly gfirst(f);
  gfirst.add_term(d.p11(), b.y1());
  gfirst.add_term(-Scalar::one(f), b.y2());
  NcPoly py1(f);
  py1.add_term(d.p12(), b.y1());
  const Mat2& s = d.sigma_gen(0);
  NcPoly x1 = mono(f, d.base().alphabet(), {"x1"});
  NcPoly lhs = gfirst * s.at(1, 1) + py1 * s.at(2, 1);
  NcPoly rhs_untwisted = x1 * gfirst;  // identity instead of det
  CHECK(!b.presentation.normal_form(lhs - rhs_untwisted).is_zero());
}

TEST_CASE("check_normal: the two degree-2 normal elements of B(h)") {
  ExtensionBuild b = build(bh_data(Q, 2));
  const Alphabet& a = b.alphabet();
  REQUIRE(certify_pbw(b, 4).passed());

  auto cert = check_normal(b, mono(Q, a, {"x1", "x2"}));
  REQUIRE(cert.has_value());
  // w z = z m_w with multipliers x1 -> -x1, x2 -> -x2, y_i -> -h^2 y_i
  CHECK(cert->multipliers[0] == -mono(Q, a, {"x1"}));
  CHECK(cert->multipliers[1] == -mono(Q, a, {"x2"}));
  CHECK(cert->multipliers[2] == mono(Q, a, {"y1"}).scaled(q(-4)));
  CHECK(cert->multipliers[3] == mono(Q, a, {"y2"}).scaled(q(-4)));

  NcPoly z2 = mono(Q, a, {"x1", "x1"}) + mono(Q, a, {"x2", "x2"});
  auto cert2 = check_normal(b, z2);
  REQUIRE(cert2.has_value());
  CHECK(cert2->multipliers[0] == mono(Q, a, {"x1"}));
  CHECK(cert2->multipliers[1] == mono(Q, a, {"x2"}));
  CHECK(cert2->multipliers[2] == mono(Q, a, {"y1"}).scaled(q(4)));
  CHECK(cert2->multipliers[3] == mono(Q, a, {"y2"}).scaled(q(4)));

  // x1 is not normal
  CHECK(!check_normal(b, mono(Q, a, {"x1"})).has_value());

  CHECK_THROWS_AS(
      check_normal(b, mono(Q, a, {"x1"}) + mono(Q, a, {"x1", "x2"})),
      NonHomogeneous);
}

TEST_CASE("enumerate_normal: exhaustive over F_5") {
  ExtensionBuild b = build(bh_data(F5, 2));
  REQUIRE(certify_pbw(b, 4).passed());

  // no degree-1 normal element: all 156 projective points scanned
  EnumerateNormalResult deg1 = enumerate_normal(b, 1);
  CHECK(deg1.supported);
  CHECK(deg1.points_checked == 156);
  CHECK(deg1.found.empty());

  // the four catalog degree-2 elements are normal over F_5
  const Alphabet& a = b.alphabet();
  NcPoly x1x2 = NcPoly::monomial(F5, word(a, {"x1", "x2"}));
  NcPoly sq = NcPoly::monomial(F5, word(a, {"x2", "x2"})) +
              NcPoly::monomial(F5, word(a, {"x1", "x1"}));
  NcPoly y1y2 = NcPoly::monomial(F5, word(a, {"y1", "y2"}));
  NcPoly ysq = NcPoly::monomial(F5, word(a, {"y2", "y2"})) +
               NcPoly::monomial(F5, word(a, {"y1", "y1"}));
  for (const NcPoly& z : {x1x2, sq, y1y2, ysq})
    CHECK(check_normal(b, z).has_value());

  // exhaustive degree-2 scan over the smaller field F_3: the list contains
  // the catalog elements, and every certificate re-verifies
  const Field F3 = Field::prime(3);
  ExtensionBuild b3 = build(bh_data(F3, 2));
  EnumerateNormalResult deg2 = enumerate_normal(b3, 2);
  CHECK(deg2.points_checked == 29524);  // (3^10 - 1) / 2
  const Alphabet& a3 = b3.alphabet();
  auto contains = [&](const NcPoly& z) {
    for (const NormalCert& c : deg2.found)
      if (c.element == z) return true;
    return false;
  };
  CHECK(contains(NcPoly::monomial(F3, word(a3, {"x1", "x2"}))));
  CHECK(contains(NcPoly::monomial(F3, word(a3, {"x2", "x2"})) +
                 NcPoly::monomial(F3, word(a3, {"x1", "x1"}))));
  CHECK(contains(NcPoly::monomial(F3, word(a3, {"y1", "y2"}))));
  CHECK(contains(NcPoly::monomial(F3, word(a3, {"y2", "y2"})) +
                 NcPoly::monomial(F3, word(a3, {"y1", "y1"}))));
  for (const NormalCert& c : deg2.found) {
    for (std::size_t w = 0; w < a3.size(); ++w) {
      Monomial wm = Monomial::letter(static_cast<std::uint16_t>(w),
                                     a3.degree(w));
      NcPoly residual = b3.presentation.normal_form(
          NcPoly::monomial(F3, wm) * c.element -
          c.element * c.multipliers[w]);
      CHECK(residual.is_zero());
    }
    // the scan never returns an element the direct check rejects
    CHECK(check_normal(b3, c.element).has_value());
  }
}

TEST_CASE("enumerate_normal: commutative plane has only normal elements") {
  ExtensionBuild b =
      build(builtin("trivial", {{"p12", Scalar::one(F5)}}, F5).data);
  EnumerateNormalResult res = enumerate_normal(b, 1);
  CHECK(res.supported);
  CHECK(res.points_checked == 6);  // (5^2 - 1) / (5 - 1)
  CHECK(res.found.size() == 6);
}

TEST_CASE("enumerate_normal refuses the rationals") {
  ExtensionBuild b = build(bh_data(Q, 2));
  EnumerateNormalResult res = enumerate_normal(b, 1);
  CHECK(!res.supported);
  CHECK(!res.reason.empty());
}

TEST_CASE("subalgebra dimensions") {
  ExtensionBuild b = build(bh_data(Q, 2));
  const Alphabet& a = b.alphabet();
  REQUIRE(certify_pbw(b, 4).passed());

  // the three-generator family z1 = x1 + y2, z2 = x2 + y2, z3 = y1 + y2
  NcPoly y2p = mono(Q, a, {"y2"});
  std::vector<NcPoly> zs = {mono(Q, a, {"x1"}) + y2p,
                            mono(Q, a, {"x2"}) + y2p,
                            mono(Q, a, {"y1"}) + y2p};
  std::vector<long long> dims = subalgebra_dims(b, zs, 3);
  CHECK(dims[1] == 3);
  CHECK(dims[2] >= 7);  // seven independent degree-2 products

  // all four generators recover the full Hilbert function
  std::vector<NcPoly> gens;
  for (const char* g : {"x1", "x2", "y1", "y2"}) gens.push_back(mono(Q, a, {g}));
  CHECK(subalgebra_dims(b, gens, 4) == b.presentation.hilbert_function(4));

  // the base generators recover the base growth
  std::vector<NcPoly> xs = {mono(Q, a, {"x1"}), mono(Q, a, {"x2"})};
  CHECK(subalgebra_dims(b, xs, 4) ==
        std::vector<long long>{1, 2, 3, 4, 5});

  CHECK_THROWS_AS(
      subalgebra_dims(b, {mono(Q, a, {"x1", "x2"})}, 3), NonHomogeneous);
}

TEST_CASE("koszul numeric check") {
  ExtensionBuild b = build(bh_data(Q, 2));
  CertReport rep = koszul_numeric_check(b, 6);
  CHECK(rep.passed());
  CHECK(datum(rep, "h_dual") == "[1,4,6,4,1,0,0]");

  CertReport qp = koszul_numeric_check(quantum_plane(Q), 5);
  CHECK(qp.passed());
  CHECK(datum(qp, "h_dual") == "[1,2,1,0,0,0]");

  // tensor algebra: dual is 1 + 2t
  Alphabet fa;
  fa.add("x1", 1);
  fa.add("x2", 1);
  CertReport fr = koszul_numeric_check(ReductionSystem(fa, Q), 4);
  CHECK(fr.passed());
  CHECK(datum(fr, "h_dual") == "[1,2,0,0,0]");

  // non-quadratic presentations are rejected
  Alphabet cube;
  cube.add("x", 1);
  NcPoly rel = NcPoly::monomial(Q, Monomial::word(cube, {0, 0, 0}));
  ReductionSystem rs = ReductionSystem::from_relations(cube, Q, {rel});
  CHECK_THROWS_AS(koszul_numeric_check(rs, 4), NotQuadratic);
}

TEST_CASE("builtin catalog: stored data matches the displays") {
  ExampleSpec bh = builtin("Bh", {{"h", q(2)}}, Q);
  const Alphabet& a = bh.data.base().alphabet();
  // sigma(x1) = 2 [[x1 + x2, x1], [x2, 0]], P = (-1, 0)
  CHECK(bh.data.sigma_gen(0).at(1, 1) ==
        (mono(Q, a, {"x1"}) + mono(Q, a, {"x2"})).scaled(q(2)));
  CHECK(bh.data.sigma_gen(0).at(1, 2) == mono(Q, a, {"x1"}).scaled(q(2)));
  CHECK(bh.data.sigma_gen(0).at(2, 1) == mono(Q, a, {"x2"}).scaled(q(2)));
  CHECK(bh.data.sigma_gen(0).at(2, 2).is_zero());
  CHECK(bh.data.sigma_gen(1).at(1, 1).is_zero());
  CHECK(bh.data.sigma_gen(1).at(1, 2) == mono(Q, a, {"x1"}).scaled(q(2)));
  CHECK(bh.data.sigma_gen(1).at(2, 1) == mono(Q, a, {"x2"}).scaled(q(-2)));
  CHECK(bh.data.sigma_gen(1).at(2, 2) ==
        (mono(Q, a, {"x2"}) - mono(Q, a, {"x1"})).scaled(q(2)));
  CHECK(bh.data.p12() == q(-1));
  CHECK(bh.data.p11().is_zero());
  CHECK(bh.data.is_trimmed());

  // B3(2): sigma(x) = [[2x, x], [0, 2x]], delta = 0, P = (1,0), tau = 0
  ExampleSpec b3 = builtin("B3", {{"a", q(2)}}, Q);
  const Alphabet& a3 = b3.data.base().alphabet();
  CHECK(b3.data.sigma_gen(0).at(1, 1) == mono(Q, a3, {"x"}).scaled(q(2)));
  CHECK(b3.data.sigma_gen(0).at(1, 2) == mono(Q, a3, {"x"}));
  CHECK(b3.data.sigma_gen(0).at(2, 1).is_zero());
  CHECK(b3.data.sigma_gen(0).at(2, 2) == mono(Q, a3, {"x"}).scaled(q(2)));
  CHECK(b3.data.p12() == q(1));
  CHECK(b3.data.is_trimmed());
}

TEST_CASE("builtin catalog: parameter constraints") {
  CHECK_THROWS_AS(
      builtin("B1", {{"p", q(1)}, {"a", q(0)}, {"b", q(1)}, {"c", q(0)}}, Q),
      ParameterConstraintViolated);
  CHECK_THROWS_AS(
      builtin("B1", {{"p", q(0)}, {"a", q(0)}, {"b", q(2)}, {"c", q(0)}}, Q),
      ParameterConstraintViolated);
  CHECK_THROWS_AS(builtin("B3", {{"a", q(0)}}, Q),
                  ParameterConstraintViolated);
  CHECK_THROWS_AS(builtin("Bh", {{"h", q(0)}}, Q),
                  ParameterConstraintViolated);
  CHECK_THROWS_AS(
      builtin("B4", {{"a", q(2)}, {"b", q(-1)}, {"c", q(0)}}, Q),
      ParameterConstraintViolated);
  CHECK_THROWS_AS(builtin("Bh", {}, Q), ParameterConstraintViolated);
  CHECK_THROWS_AS(builtin("Bh", {{"h", q(2)}, {"z", q(1)}}, Q),
                  ParameterConstraintViolated);
  CHECK_THROWS_AS(builtin("nope", {}, Q), ParameterConstraintViolated);
}

TEST_CASE("B(h) symmetry: the rotation automorphism") {
  ExtensionBuild b = build(bh_data(Q, 2));
  const Alphabet& a = b.alphabet();
  // x1 -> x2, x2 -> -x1, y1 -> y2, y2 -> -y1
  std::vector<NcPoly> images = {mono(Q, a, {"x2"}), -mono(Q, a, {"x1"}),
                                mono(Q, a, {"y2"}), -mono(Q, a, {"y1"})};
  CHECK(substitution_check(b, b, images, false).passed());
}

TEST_CASE("B(h) symmetry: the x-y anti-automorphism") {
  ExtensionBuild b = build(bh_data(Q, 2));
  const Alphabet& a = b.alphabet();
  // x1 -> y1, x2 -> y2, y1 -> x1, y2 -> x2 with products reversed
  std::vector<NcPoly> images = {mono(Q, a, {"y1"}), mono(Q, a, {"y2"}),
                                mono(Q, a, {"x1"}), mono(Q, a, {"x2"})};
  CHECK(substitution_check(b, b, images, true).passed());

  // without reversal the same substitution is not a homomorphism
  CHECK(!substitution_check(b, b, images, false).passed());
}

TEST_CASE("B1(p,a,b,c) is isomorphic to B1(p,a,b,0)") {
  long long p = 2, av = 1, bv = 3, cv = 5;
  ExtensionBuild src = build(
      builtin("B1", {{"p", q(p)}, {"a", q(av)}, {"b", q(bv)}, {"c", q(cv)}},
              Q)
          .data);
  ExtensionBuild dst = build(
      builtin("B1", {{"p", q(p)}, {"a", q(av)}, {"b", q(bv)}, {"c", q(0)}},
              Q)
          .data);
  const Alphabet& a = dst.alphabet();
  // y2 -> y2 + bc/(b-1) x straightens the tail away
  Scalar e = q(bv) * q(cv) / (q(bv) - q(1));
  std::vector<NcPoly> images = {mono(Q, a, {"x"}), mono(Q, a, {"y1"}),
                                mono(Q, a, {"y2"}) +
                                    mono(Q, a, {"x"}).scaled(e)};
  CHECK(substitution_check(src, dst, images, false).passed());
}
