#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "dext/errors.hpp"

namespace dext {

using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, Prime };

/// The exact coefficient field of a computation session: either the
/// rationals or F_p for a prime p < 2^31. All scalars of a session share
/// one Field; arithmetic between different fields throws FieldMismatch.
class Field {
 public:
  Field() : kind_(FieldKind::Rationals), p_(0) {}

  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);

  FieldKind kind() const { return kind_; }
  std::uint32_t prime_modulus() const { return p_; }
  bool is_prime_field() const { return kind_ == FieldKind::Prime; }

  bool operator==(const Field& o) const = default;

  /// "q" or "fp:<p>", the spelling used by the CLI --field flag.
  std::string to_string() const;
  static Field from_string(const std::string& s);

 private:
  FieldKind kind_;
  std::uint32_t p_;
};

/// An element of the session field. Rationals are kept in lowest terms
/// with positive denominator; F_p values live in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long long n);
  /// n/d as a field element; throws on d == 0 (mod p included).
  static Scalar fraction(const Field& f, long long n, long long d);
  static Scalar from_rational(const Rational& q);  // rationals only

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text: "n" or "n/d" over Q, the residue in [0,p) over F_p.
  std::string to_string() const;

  const Rational& rational_value() const { return q_; }
  std::uint32_t residue() const { return r_; }

 private:
  void check_same_field(const Scalar& o) const;

  Field field_;
  Rational q_;          // engaged when field is Q
  std::uint32_t r_ = 0; // engaged when field is F_p
};

inline Scalar operator*(long long n, const Scalar& s) {
  return Scalar::from_int(s.field(), n) * s;
}

}  // namespace dext
