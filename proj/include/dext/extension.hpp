#pragma once

#include "dext/dedata.hpp"

namespace dext {

enum class RuleTag { Base, Quadratic, Commutation };

/// Thrown by build() when the homomorphism law or the compatibility
/// constraints fail; carries the offending report.
struct ValidationFailed : std::runtime_error {
  explicit ValidationFailed(CertReport r)
      : std::runtime_error("extension data validation failed: " + r.check),
        report(std::move(r)) {}
  CertReport report;
};

/// The presented two-variable extension: base rules plus the quadratic
/// rule (lead y2 y1) and one commutation rule per (y_i, generator).
struct ExtensionBuild {
  DEData data;
  ReductionSystem presentation;
  std::vector<RuleTag> tags;  // parallel to presentation.rules()

  const Alphabet& alphabet() const { return presentation.alphabet(); }
  std::uint16_t y1_index() const { return data.y1_index(); }
  std::uint16_t y2_index() const { return data.y2_index(); }
  Monomial y1() const { return Monomial::letter(y1_index(), data.dy1()); }
  Monomial y2() const { return Monomial::letter(y2_index(), data.dy2()); }
};

/// Validates the DE-data (homomorphism law + the six constraints) and
/// assembles the oriented presentation. Throws ValidationFailed.
ExtensionBuild build(const DEData& d);

/// Confluence to max_degree plus the basis identification: the
/// irreducible monomials of each degree are exactly
/// { m y1^a y2^b : m irreducible in the base }.
CertReport certify_pbw(const ExtensionBuild& b, int max_degree);

/// Counted dimensions match hA / ((1-t^dy1)(1-t^dy2)).
CertReport certify_hilbert(const ExtensionBuild& b, int max_degree);

/// Degree-wise freeness of A y1 + A y2 + A = y1 A + y2 A + A with basis
/// {1, y1, y2} on both sides (exact rank computations).
CertReport certify_free_rank3(const ExtensionBuild& b, int max_degree);

/// Aggregate double-extension certificate: p12 != 0, sigma invertible
/// (constructive phi when p11 = 0, else a caller-supplied phi),
/// two-sided rank-3 freeness, the right-basis spanning check, and the
/// extracted left-form coefficients of the quadratic relation.
CertReport certify_double(const ExtensionBuild& b, int max_degree,
                          const std::optional<PhiMap>& user_phi = {});

/// delta := 0, tau := 0 (the associated graded data).
DEData trim(const DEData& d);

/// The factor by the ideal generated by the positive part of the base is
/// the one-relator algebra on y1, y2; also reports the p12 != 0
/// noetherian necessary condition.
CertReport factor_ring_check(const ExtensionBuild& b);

}  // namespace dext
