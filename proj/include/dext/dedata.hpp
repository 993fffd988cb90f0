#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "dext/rewrite.hpp"

namespace dext {

/// 2x2 matrix over the base algebra (entries in normal form).
struct Mat2 {
  std::array<NcPoly, 4> e;
  NcPoly& at(int i, int j) { return e[(i - 1) * 2 + (j - 1)]; }
  const NcPoly& at(int i, int j) const { return e[(i - 1) * 2 + (j - 1)]; }
  static Mat2 zero(const Field& f);
  static Mat2 identity(const Field& f);
  Mat2 operator+(const Mat2& o) const;
  bool operator==(const Mat2& o) const = default;
};

struct Col2 {
  std::array<NcPoly, 2> e;
  NcPoly& at(int i) { return e[i - 1]; }
  const NcPoly& at(int i) const { return e[i - 1]; }
  static Col2 zero(const Field& f);
  bool operator==(const Col2& o) const = default;
};

/// 3x3 matrix indexed 0..2; row/column 0 carries the identity and the
/// derivation entries of the extended homomorphism.
struct Mat3 {
  std::array<NcPoly, 9> e;
  NcPoly& at(int i, int j) { return e[i * 3 + j]; }
  const NcPoly& at(int i, int j) const { return e[i * 3 + j]; }
  static Mat3 identity(const Field& f);
  bool operator==(const Mat3& o) const = default;
};

/// Graded algebra endomorphism given by generator images (normal forms).
struct EndoMap {
  std::vector<NcPoly> images;

  NcPoly apply(const NcPoly& p, const ReductionSystem& base) const;
  bool is_identity(const ReductionSystem& base) const;
  /// Residuals of the base relations under the map; all zero iff the
  /// generator images define an algebra endomorphism.
  std::vector<NcPoly> relation_residuals(const ReductionSystem& base) const;
};

/// Inverts a graded endomorphism degree-by-degree via exact linear algebra
/// on the generator-degree pieces, then certifies the candidate two-sided.
std::optional<EndoMap> invert_endo(const EndoMap& e,
                                   const ReductionSystem& base);

/// Smallest n <= max_n with e^n = id on generators; nullopt if none.
std::optional<int> endo_order(const EndoMap& e, const ReductionSystem& base,
                              int max_n);

using PhiMap = std::vector<Mat2>;  // generator images of a map A -> M2(A)

struct NormalizedDEData;

/// The data {P, sigma, delta, tau} of a two-variable extension over a
/// confluence-certified base, plus the degrees of the new variables.
/// Entries are validated for homogeneity and stored in normal form.
class DEData {
 public:
  DEData(ReductionSystem base, Scalar p12, Scalar p11,
         std::vector<Mat2> sigma, std::vector<Col2> delta, NcPoly tau1,
         NcPoly tau2, NcPoly tau0, int dy1, int dy2);

  const ReductionSystem& base() const { return base_; }
  const Field& field() const { return base_.field(); }
  const Scalar& p12() const { return p12_; }
  const Scalar& p11() const { return p11_; }
  const Mat2& sigma_gen(std::size_t g) const { return sigma_[g]; }
  const Col2& delta_gen(std::size_t g) const { return delta_[g]; }
  const std::vector<Mat2>& sigma() const { return sigma_; }
  const std::vector<Col2>& delta() const { return delta_; }
  const NcPoly& tau1() const { return tau1_; }
  const NcPoly& tau2() const { return tau2_; }
  const NcPoly& tau0() const { return tau0_; }
  int dy1() const { return dy1_; }
  int dy2() const { return dy2_; }
  bool is_trimmed() const;

  /// Multiplicative extension of sigma: sigma(uv) = sigma(u) sigma(v),
  /// entries in normal form. Linear over terms; sigma(1) = I.
  Mat2 extend_sigma(const NcPoly& p) const;
  /// Extension of delta by the derivation law delta(uv) =
  /// sigma(u) delta(v) + delta(u) v; delta(1) = 0.
  Col2 extend_delta(const NcPoly& p) const;
  /// Multiplicative extension of the 3x3 map; row 0 is (id, 0, 0), column
  /// 0 holds the derivation entries.
  Mat3 extend_sigma_hat(const NcPoly& p) const;
  /// Entry (i,j) of extend_sigma_hat, i,j in 0..2.
  NcPoly sigma_hat_entry(int i, int j, const NcPoly& p) const;

  /// Substitutes the 3x3 extension into every base relation; PASS iff all
  /// residual matrices vanish (sigma is a homomorphism and delta a
  /// sigma-derivation).
  CertReport validate_hom() const;

  /// Evaluates the six compatibility constraints on every generator.
  CertReport check_r3_formulas() const;

  /// Resolves y2.y1.r two ways (quadratic relation first vs commutation
  /// first) inside the assembled rewrite system and compares.
  CertReport check_r3_by_ambiguity() const;

  /// Generator images of the determinant endomorphism
  /// r -> -p11 s12(s11(r)) + s22(s11(r)) - p12 s12(s21(r)).
  /// Verifies it kills the base relations and is multiplicative on all
  /// monomial pairs up to mult_bound; throws EndomorphismViolation.
  EndoMap det_sigma(int mult_bound = 4) const;

  /// Evaluates the composition-order variants of the determinant on the
  /// generators and reports which coincide with it.
  CertReport naive_det_variants() const;

  /// The constructive right inverse of sigma for parameter (p, 0):
  /// phi = [[s22 d^-1, -p s21 d^-1], [-p^-1 s12 d^-1, s11 d^-1]].
  /// nullopt when p11 != 0 or det sigma is not invertible.
  std::optional<PhiMap> right_inverse_phi() const;

  /// Checks phi is a homomorphism and satisfies both two-sided composition
  /// identities on all generators, then on all monomials up to sweep_bound.
  CertReport verify_phi(const PhiMap& phi, int sweep_bound = 4) const;

  /// Same data with delta = 0 and tau = (0,0,0).
  DEData trimmed() const;

  /// Change of variables bringing P to one of (0,0), (p,0), (1,1);
  /// returns the transformed data plus the 2x2 change matrix rows.
  NormalizedDEData normalize_parameters() const;

  /// Rewrite rules of the extension: base rules, the quadratic rule
  /// y2 y1 -> ..., and one commutation rule per (y_i, generator). Does not
  /// require the compatibility constraints to hold.
  ReductionSystem assemble_presentation() const;
  const Alphabet& extended_alphabet() const { return ext_alphabet_; }
  std::uint16_t y1_index() const { return y1_; }
  std::uint16_t y2_index() const { return y2_; }

  /// Extension of an arbitrary generator-image matrix map (used for phi).
  Mat2 extend_mat2(const PhiMap& images, const NcPoly& p) const;

 private:
  Mat3 sigma_hat_word(const Monomial& m) const;
  Mat2 sigma_word(const Monomial& m) const;
  Col2 delta_word(const Monomial& m) const;
  bool alphabet_contains_poly(const NcPoly& p) const;
  NcPoly r1_rhs() const;
  NcPoly det_formula(const NcPoly& p) const;

  ReductionSystem base_;
  Scalar p12_, p11_;
  std::vector<Mat2> sigma_;
  std::vector<Col2> delta_;
  NcPoly tau1_, tau2_, tau0_;
  int dy1_, dy2_;

  Alphabet ext_alphabet_;
  std::uint16_t y1_ = 0, y2_ = 0;

  // memo caches for the word extensions, shared between copies (they are
  // derived from the immutable generator data), guarded for concurrent use
  struct Caches {
    std::mutex mu;
    std::map<Monomial, Mat2, MonomialGreater> sigma;
    std::map<Monomial, Col2, MonomialGreater> delta;
    std::map<Monomial, Mat3, MonomialGreater> hat;
  };
  std::shared_ptr<Caches> caches_;
};

struct NormalizedDEData {
  DEData data;
  std::array<Scalar, 4> transform;  // (y1';y2') = T (y1;y2), row-major
};

}  // namespace dext
