#pragma once

#include <vector>

#include "dext/ncalg.hpp"
#include "dext/report.hpp"

namespace dext {

/// Oriented homogeneous rewrite rule: lead -> rhs with every rhs monomial
/// strictly below lead in the monomial order and of the same degree.
struct Rule {
  Monomial lead;
  NcPoly rhs;
};

/// Overlap ambiguity between two rules: word = u.v.z with lead(left) = u.v
/// and lead(right) = v.z, v nonempty. Inclusion ambiguities cannot occur
/// in an inter-reduced system.
struct Ambiguity {
  std::size_t rule_left;
  std::size_t rule_right;
  Monomial word;
  std::size_t overlap_pos;  // position where lead(right) starts
};

/// Inter-reduced homogeneous reduction system over a graded alphabet.
/// normal_form rewrites the highest reducible monomial at its leftmost
/// match, which terminates and is deterministic.
class ReductionSystem {
 public:
  ReductionSystem(Alphabet alphabet, const Field& field);

  /// Orients each relation by its leading monomial (lead -> rest), checks
  /// homogeneity and inter-reducedness, then normalizes the right-hand
  /// sides against the whole system.
  static ReductionSystem from_relations(Alphabet alphabet, const Field& field,
                                        const std::vector<NcPoly>& relations);
  static ReductionSystem from_rules(Alphabet alphabet, const Field& field,
                                    std::vector<Rule> rules);

  const Alphabet& alphabet() const { return alphabet_; }
  const Field& field() const { return field_; }
  const std::vector<Rule>& rules() const { return rules_; }

  bool is_irreducible(const Monomial& m) const;
  NcPoly normal_form(const NcPoly& p) const;
  NcPoly normal_form(const Monomial& m) const;

  std::vector<Ambiguity> overlaps() const;

  /// Reduces both one-step reducts of every ambiguity of degree <= max_degree
  /// to normal form and compares.
  CertReport check_confluence(int max_degree) const;

  /// All degree-d words containing no rule lead, in descending order.
  std::vector<Monomial> irreducible_monomials(int degree) const;

  /// [dim_0, ..., dim_max]; dim_d = number of irreducible degree-d words.
  std::vector<long long> hilbert_function(int max_degree) const;

  int max_rule_degree() const;

 private:
  // leftmost rule match inside m: (position, rule index)
  std::optional<std::pair<std::size_t, std::size_t>> find_match(
      const Monomial& m) const;

  Alphabet alphabet_;
  Field field_;
  std::vector<Rule> rules_;
};

/// PASS iff hB = hA / ((1-t^dy1)(1-t^dy2)) coefficient-wise.
CertReport series_quotient_check(const std::vector<long long>& hA, int dy1,
                                 int dy2, const std::vector<long long>& hB);

/// Truncated coefficients of h(t) / ((1-t^dy1)(1-t^dy2)).
std::vector<long long> series_quotient(const std::vector<long long>& h,
                                       int dy1, int dy2);

}  // namespace dext
