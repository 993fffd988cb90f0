#pragma once

#include <map>

#include "dext/extension.hpp"

namespace dext {

/// Degree-wise exactness of 0 -> B -> B (+) B -> B -> A -> 0 with
/// g(c) = (c (p11 y1 - y2), c p12 y1), f(a,b) = a y1 + b y2 and the
/// augmentation B -> A, for trimmed data. Throws NotTrimmed.
CertReport exact_sequence_check(const ExtensionBuild& b, int max_degree);

/// The twisted right-module property of g: both component identities on
/// every generator, then g(c) * r = g(c det(r)) on monomials up to the
/// bound. Throws NotTrimmed.
CertReport g_twist_check(const ExtensionBuild& b, int max_degree);

/// Normality certificate: one multiplier per generator w of the extension
/// with w z = z m_w (all in normal form).
struct NormalCert {
  NcPoly element;
  std::vector<NcPoly> multipliers;  // indexed by extension letter
};

/// Solves the exact linear systems NF(w z) = sum c_k NF(z b_k) per
/// generator; nullopt when some system is inconsistent (z not normal).
std::optional<NormalCert> check_normal(const ExtensionBuild& b,
                                       const NcPoly& z);

struct EnumerateNormalResult {
  bool supported = true;
  std::string reason;
  long long points_checked = 0;
  std::vector<NormalCert> found;
};

/// Exhaustive scan of the projective space of the degree-d piece over a
/// prime field; refuses over Q (a nonexistence claim needs exhaustion).
EnumerateNormalResult enumerate_normal(const ExtensionBuild& b, int degree);

/// Dimension, per degree, of the span of all words in the given degree-1
/// elements.
std::vector<long long> subalgebra_dims(const ExtensionBuild& b,
                                       const std::vector<NcPoly>& elements,
                                       int max_degree);

/// Numeric necessary condition for Koszulity of a quadratic presentation:
/// computes the dual dimensions via iterated subspace intersections and
/// checks H_dual(-t) H_B(t) = 1 up to the bound. Throws NotQuadratic.
CertReport koszul_numeric_check(const ReductionSystem& rs, int max_degree);
CertReport koszul_numeric_check(const ExtensionBuild& b, int max_degree);

/// Applies a generator substitution to every defining relation of `src`
/// and reduces in `dst`; PASS iff all residuals vanish. With `reverse`
/// set, words are mapped with their letter order reversed
/// (anti-homomorphism check).
CertReport substitution_check(const ExtensionBuild& src,
                              const ExtensionBuild& dst,
                              const std::vector<NcPoly>& images,
                              bool reverse = false);

/// A named parameter instance of one of the catalog algebras.
struct ExampleSpec {
  std::string name;
  std::map<std::string, Scalar> parameters;
  DEData data;
};

/// Catalog: trivial (base k), B1(p,a,b,c), B2(a,b,c), B3(a), B4(a,b,c),
/// Bh(h). Throws ParameterConstraintViolated on a forbidden parameter.
ExampleSpec builtin(const std::string& name,
                    const std::map<std::string, Scalar>& params,
                    const Field& field);

std::vector<std::string> builtin_names();
/// Parameter names in canonical order for a catalog algebra.
std::vector<std::string> builtin_parameter_names(const std::string& name);

}  // namespace dext
