#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dext/scalar.hpp"

namespace dext {

/// Ordered generator alphabet with positive integer degrees. The list
/// order is the total order on letters used by the monomial order.
class Alphabet {
 public:
  Alphabet() = default;

  std::uint16_t add(const std::string& name, int degree);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int degree(std::size_t i) const { return degrees_[i]; }
  std::optional<std::uint16_t> index_of(std::string_view name) const;
  int max_degree() const;

  bool operator==(const Alphabet& o) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
};

/// A word in the alphabet, with its weighted degree cached. The empty
/// word is the identity.
class Monomial {
 public:
  Monomial() = default;

  static Monomial letter(std::uint16_t index, int degree);
  static Monomial word(const Alphabet& a,
                       const std::vector<std::uint16_t>& letters);

  int degree() const { return degree_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }
  std::uint16_t letter_at(std::size_t i) const { return word_[i]; }
  const std::vector<std::uint16_t>& letters() const { return word_; }

  Monomial operator*(const Monomial& o) const;
  Monomial subword(std::size_t pos, std::size_t len, const Alphabet& a) const;
  Monomial prefix(std::size_t len, const Alphabet& a) const;
  Monomial suffix_from(std::size_t pos, const Alphabet& a) const;

  /// Leftmost occurrence of `pattern` as a subword, if any.
  std::optional<std::size_t> find(const Monomial& pattern) const;
  bool ends_with(const Monomial& pattern) const;

  bool operator==(const Monomial& o) const { return word_ == o.word_; }

  std::string to_string(const Alphabet& a) const;  // "x1*x2", identity "1"

 private:
  std::vector<std::uint16_t> word_;
  int degree_ = 0;
};

/// Graded lexicographic order: weighted degree first, then left-to-right
/// letter comparison in the alphabet order.
std::strong_ordering deglex_compare(const Monomial& a, const Monomial& b);

/// Same order with an alphabet-membership check (AlphabetMismatch on
/// letters outside `a`).
std::strong_ordering compare(const Alphabet& a, const Monomial& u,
                             const Monomial& v);
bool alphabet_contains(const Alphabet& a, const Monomial& m);

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return deglex_compare(a, b) == std::strong_ordering::greater;
  }
};

/// Element of the free algebra: finite scalar-weighted sum of words.
/// Terms are kept in descending monomial order with no zero coefficients.
class NcPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, MonomialGreater>;

  NcPoly() = default;  // zero over Q
  explicit NcPoly(const Field& f) : field_(f) {}

  static NcPoly constant(const Scalar& c);
  static NcPoly term(const Scalar& c, const Monomial& m);
  static NcPoly monomial(const Field& f, const Monomial& m);

  const Field& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  const Monomial& leading_monomial() const;
  const Scalar& leading_coeff() const;
  Scalar coeff(const Monomial& m) const;

  /// Max term degree; -1 for the zero polynomial.
  int degree() const;
  /// Common degree of all terms, if homogeneous (zero counts as any degree).
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return homogeneous_degree().has_value(); }

  NcPoly operator-() const;
  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly operator*(const NcPoly& o) const;  // concatenation product
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);

  NcPoly scaled(const Scalar& c) const;
  NcPoly left_mul(const Monomial& m) const;
  NcPoly right_mul(const Monomial& m) const;

  void add_term(const Scalar& c, const Monomial& m);

  bool operator==(const NcPoly& o) const;
  bool operator!=(const NcPoly& o) const { return !(*this == o); }

  /// Canonical rendering: descending terms, '*'-separated letters.
  std::string to_string(const Alphabet& a) const;

 private:
  void check_same_field(const NcPoly& o) const;

  Field field_;
  TermMap terms_;
};

}  // namespace dext
