#include "dext/scalar.hpp"

namespace dext {
namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return (a * b) % m;  // safe: operands < 2^31, product < 2^62
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin; bases {2,3,5,7} decide primality below 3.2e9,
// which covers the whole p < 2^31 range.
bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("division by zero in F_p");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31))
    throw std::invalid_argument("prime modulus must be < 2^31");
  if (!is_prime_u32(p))
    throw std::invalid_argument("modulus " + std::to_string(p) +
                                " is not prime");
  Field f;
  f.kind_ = FieldKind::Prime;
  f.p_ = p;
  return f;
}

std::string Field::to_string() const {
  if (kind_ == FieldKind::Rationals) return "q";
  return "fp:" + std::to_string(p_);
}

Field Field::from_string(const std::string& s) {
  if (s == "q" || s == "Q") return rationals();
  if (s.rfind("fp:", 0) == 0) {
    unsigned long p = std::stoul(s.substr(3));
    return prime(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("unknown field spec '" + s +
                              "' (expected q or fp:<prime>)");
}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long long n) {
  Scalar s;
  s.field_ = f;
  if (f.kind() == FieldKind::Rationals) {
    s.q_ = Rational(n);
  } else {
    long long p = f.prime_modulus();
    long long r = n % p;
    if (r < 0) r += p;
    s.r_ = static_cast<std::uint32_t>(r);
  }
  return s;
}

Scalar Scalar::fraction(const Field& f, long long n, long long d) {
  return from_int(f, n) / from_int(f, d);
}

Scalar Scalar::from_rational(const Rational& q) {
  Scalar s;
  s.field_ = Field::rationals();
  s.q_ = q;
  return s;
}

bool Scalar::is_zero() const {
  return field_.kind() == FieldKind::Rationals ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind() == FieldKind::Rationals ? q_ == 1 : r_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("scalars from different fields: " +
                        field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.kind() == FieldKind::Rationals) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = field_.prime_modulus() - r_;
  }
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.kind() == FieldKind::Rationals) {
    s.q_ = q_ + o.q_;
  } else {
    std::uint64_t v = std::uint64_t(r_) + o.r_;
    if (v >= field_.prime_modulus()) v -= field_.prime_modulus();
    s.r_ = static_cast<std::uint32_t>(v);
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.kind() == FieldKind::Rationals) {
    s.q_ = q_ * o.q_;
  } else {
    s.r_ = static_cast<std::uint32_t>(
        mulmod64(r_, o.r_, field_.prime_modulus()));
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  Scalar s = *this;
  if (field_.kind() == FieldKind::Rationals) {
    if (q_.is_zero()) throw std::domain_error("division by zero");
    s.q_ = Rational(1) / q_;
  } else {
    s.r_ = inv_mod(r_, field_.prime_modulus());
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.kind() == FieldKind::Rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
  if (field_.kind() == FieldKind::Prime) return std::to_string(r_);
  std::string s = numerator(q_).str();
  if (denominator(q_) != 1) s += "/" + denominator(q_).str();
  return s;
}

}  // namespace dext
