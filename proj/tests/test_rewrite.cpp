#include <doctest.h>

#include "dext/extension.hpp"
#include "test_util.hpp"

using namespace dext;
using namespace dext::testutil;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("normal forms in the quantum plane") {
  ReductionSystem rs = quantum_plane(Q);
  const Alphabet& a = rs.alphabet();

  CHECK(rs.normal_form(mono(Q, a, {"x2", "x1"})) ==
        -mono(Q, a, {"x1", "x2"}));
  // two rewrite steps, sign (-1)^2
  CHECK(rs.normal_form(mono(Q, a, {"x2", "x1", "x1"})) ==
        mono(Q, a, {"x1", "x1", "x2"}));
  CHECK(rs.normal_form(mono(Q, a, {"x1"})) == mono(Q, a, {"x1"}));
}

TEST_CASE("rules must be oriented and inter-reduced") {
  Alphabet a;
  a.add("x1", 1);
  a.add("x2", 1);
  // a relation whose terms share the degree but not the alphabet order
  NcPoly bad = mono(Q, a, {"x1"}) + mono(Q, a, {"x1", "x2"});
  CHECK_THROWS_AS(ReductionSystem::from_relations(a, Q, {bad}),
                  NonHomogeneous);
  // lead-inside-lead is rejected
  std::vector<Rule> rules;
  rules.push_back(Rule{word(a, {"x2", "x1"}), NcPoly(Q)});
  rules.push_back(Rule{word(a, {"x1", "x2", "x1"}), NcPoly(Q)});
  CHECK_THROWS_AS(ReductionSystem::from_rules(a, Q, rules),
                  std::invalid_argument);
}

TEST_CASE("overlap enumeration") {
  // single rule x2 x1 -> -x1 x2: no proper self-overlap
  CHECK(quantum_plane(Q).overlaps().empty());
  // empty rule set
  Alphabet a;
  a.add("x", 1);
  CHECK(ReductionSystem(a, Q).overlaps().empty());
  // the y2 y1 / y1 x1 pattern overlaps on y1
  ExtensionBuild b = build(bh_data(Q, 2));
  bool found = false;
  for (const Ambiguity& amb : b.presentation.overlaps())
    if (amb.word == word(b.alphabet(), {"y2", "y1", "x1"})) found = true;
  CHECK(found);
}

TEST_CASE("confluence of the quantum plane to degree 6") {
  CertReport rep = quantum_plane(Q).check_confluence(6);
  CHECK(rep.passed());
  CHECK(rep.bound == 6);
}

TEST_CASE("confluence of the full B(h) rule set, h = 2") {
  ExtensionBuild b = build(bh_data(Q, 2));
  CHECK(b.presentation.check_confluence(5).passed());
}

TEST_CASE("mutated B(h) commutation rule breaks confluence at y2 y1 x_j") {
  ExtensionBuild b = build(bh_data(Q, 2));
  const Alphabet& a = b.alphabet();
  std::vector<Rule> rules = b.presentation.rules();
  // replace the coefficient h of the y1 x2 rule by h + 1
  bool replaced = false;
  for (Rule& r : rules) {
    if (r.lead == word(a, {"y1", "x2"})) {
      r.rhs = mono(Q, a, {"x1", "y2"}).scaled(Scalar::from_int(Q, 3));
      replaced = true;
    }
  }
  REQUIRE(replaced);
  ReductionSystem mutated = ReductionSystem::from_rules(a, Q, rules);
  CertReport rep = mutated.check_confluence(5);
  CHECK(!rep.passed());
  REQUIRE(!rep.witnesses.empty());
  CHECK(rep.witnesses[0].kind == "overlap");
  // the broken constraint shows up at a y2 y1 x_j ambiguity
  CHECK(rep.witnesses[0].detail.substr(0, 6) == "y2*y1*");
}

TEST_CASE("confluence bound must cover the rules") {
  CHECK_THROWS_AS(quantum_plane(Q).check_confluence(1),
                  std::invalid_argument);
}

TEST_CASE("irreducible monomials") {
  ReductionSystem rs = quantum_plane(Q);
  const Alphabet& a = rs.alphabet();
  // degree 2: words avoiding x2 x1
  std::vector<Monomial> deg2 = rs.irreducible_monomials(2);
  REQUIRE(deg2.size() == 3);
  CHECK(deg2[0] == word(a, {"x2", "x2"}));  // descending order
  CHECK(deg2[1] == word(a, {"x1", "x2"}));
  CHECK(deg2[2] == word(a, {"x1", "x1"}));

  std::vector<Monomial> deg0 = rs.irreducible_monomials(0);
  REQUIRE(deg0.size() == 1);
  CHECK(deg0[0].is_identity());

  ExtensionBuild b = build(bh_data(Q, 2));
  CHECK(b.presentation.irreducible_monomials(2).size() == 10);
}

TEST_CASE("hilbert functions") {
  CHECK(quantum_plane(Q).hilbert_function(3) ==
        std::vector<long long>{1, 2, 3, 4});
  ExtensionBuild b = build(bh_data(Q, 2));
  CHECK(b.presentation.hilbert_function(4) ==
        std::vector<long long>{1, 4, 10, 20, 35});
  // commutative polynomial count for k<y1,y2>/(y2y1 - y1y2)
  DEData triv = builtin("trivial", {{"p12", Scalar::one(Q)}}, Q).data;
  ExtensionBuild tb = build(triv);
  CHECK(tb.presentation.hilbert_function(2) ==
        std::vector<long long>{1, 2, 3});
}

TEST_CASE("series quotient check") {
  // oracle: brute-force convolution with 1/(1-t^d1) * 1/(1-t^d2)
  auto oracle = [](const std::vector<long long>& h, int d1, int d2) {
    std::vector<long long> out(h.size(), 0);
    for (std::size_t d = 0; d < h.size(); ++d)
      for (int i = 0; i * d1 <= static_cast<int>(d); ++i)
        for (int j = 0; i * d1 + j * d2 <= static_cast<int>(d); ++j)
          out[d] += h[d - i * d1 - j * d2];
    return out;
  };

  std::vector<long long> hA{1, 2, 3, 4, 5};
  std::vector<long long> expect = oracle(hA, 1, 1);
  CHECK(expect == std::vector<long long>{1, 4, 10, 20, 35});
  CHECK(series_quotient_check(hA, 1, 1, expect).passed());

  // A = k gives the two-variable polynomial counts
  std::vector<long long> hk{1, 0, 0, 0};
  CHECK(series_quotient(hk, 1, 1) == std::vector<long long>{1, 2, 3, 4});
  CHECK(series_quotient(hk, 1, 1) == oracle(hk, 1, 1));

  // mixed extension degrees
  std::vector<long long> hm{1, 1, 1, 1, 1};
  CHECK(series_quotient(hm, 1, 2) == oracle(hm, 1, 2));

  // negative control: first mismatching degree is reported
  std::vector<long long> wrong = expect;
  wrong[3] = 19;
  CertReport rep = series_quotient_check(hA, 1, 1, wrong);
  CHECK(!rep.passed());
  REQUIRE(rep.witnesses.size() == 3);
  CHECK(rep.witnesses[0].detail == "3");
}

TEST_CASE("normal form strategy is stable under rhs normalization") {
  // rules arriving with reducible right-hand sides are normalized once
  Alphabet a;
  a.add("u", 1);
  a.add("v", 1);
  a.add("w", 1);
  std::vector<Rule> rules;
  // w v -> v w ; w u -> u w ; v u -> u v : commuting letters
  rules.push_back(Rule{word(a, {"w", "v"}), mono(Q, a, {"v", "w"})});
  rules.push_back(Rule{word(a, {"w", "u"}), mono(Q, a, {"u", "w"})});
  rules.push_back(Rule{word(a, {"v", "u"}), mono(Q, a, {"u", "v"})});
  ReductionSystem rs = ReductionSystem::from_rules(a, Q, rules);
  CHECK(rs.check_confluence(4).passed());
  CHECK(rs.normal_form(mono(Q, a, {"w", "v", "u"})) ==
        mono(Q, a, {"u", "v", "w"}));
  CHECK(rs.hilbert_function(3) == std::vector<long long>{1, 3, 6, 10});
}
