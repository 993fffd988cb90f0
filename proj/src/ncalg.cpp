#include "dext/ncalg.hpp"

#include <algorithm>

#include "dext/errors.hpp"

namespace dext {

std::uint16_t Alphabet::add(const std::string& name, int degree) {
  if (degree < 1) throw std::invalid_argument("generator degree must be >= 1");
  if (name.empty()) throw std::invalid_argument("empty generator name");
  if (index_of(name))
    throw std::invalid_argument("duplicate generator name '" + name + "'");
  names_.push_back(name);
  degrees_.push_back(degree);
  return static_cast<std::uint16_t>(names_.size() - 1);
}

std::optional<std::uint16_t> Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<std::uint16_t>(i);
  return std::nullopt;
}

int Alphabet::max_degree() const {
  int d = 0;
  for (int g : degrees_) d = std::max(d, g);
  return d;
}

Monomial Monomial::letter(std::uint16_t index, int degree) {
  Monomial m;
  m.word_.push_back(index);
  m.degree_ = degree;
  return m;
}

Monomial Monomial::word(const Alphabet& a,
                        const std::vector<std::uint16_t>& letters) {
  Monomial m;
  m.word_ = letters;
  for (std::uint16_t ell : letters) {
    if (ell >= a.size()) throw AlphabetMismatch("letter index out of range");
    m.degree_ += a.degree(ell);
  }
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  m.word_.reserve(word_.size() + o.word_.size());
  m.word_ = word_;
  m.word_.insert(m.word_.end(), o.word_.begin(), o.word_.end());
  m.degree_ = degree_ + o.degree_;
  return m;
}

Monomial Monomial::subword(std::size_t pos, std::size_t len,
                           const Alphabet& a) const {
  std::vector<std::uint16_t> w(word_.begin() + pos, word_.begin() + pos + len);
  return word(a, w);
}

Monomial Monomial::prefix(std::size_t len, const Alphabet& a) const {
  return subword(0, len, a);
}

Monomial Monomial::suffix_from(std::size_t pos, const Alphabet& a) const {
  return subword(pos, word_.size() - pos, a);
}

std::optional<std::size_t> Monomial::find(const Monomial& pattern) const {
  if (pattern.word_.empty() || pattern.word_.size() > word_.size())
    return std::nullopt;
  auto it = std::search(word_.begin(), word_.end(), pattern.word_.begin(),
                        pattern.word_.end());
  if (it == word_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - word_.begin());
}

bool Monomial::ends_with(const Monomial& pattern) const {
  if (pattern.word_.size() > word_.size()) return false;
  return std::equal(pattern.word_.begin(), pattern.word_.end(),
                    word_.end() - pattern.word_.size());
}

std::string Monomial::to_string(const Alphabet& a) const {
  if (word_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) s += "*";
    s += a.name(word_[i]);
  }
  return s;
}

std::strong_ordering deglex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const auto& u = a.letters();
  const auto& v = b.letters();
  // Equal weighted degree: words of different lengths must differ within
  // the common prefix (a proper prefix of equal degree is impossible).
  std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i)
    if (u[i] != v[i]) return u[i] <=> v[i];
  return u.size() <=> v.size();
}

bool alphabet_contains(const Alphabet& a, const Monomial& m) {
  int deg = 0;
  for (std::uint16_t ell : m.letters()) {
    if (ell >= a.size()) return false;
    deg += a.degree(ell);
  }
  return deg == m.degree();
}

std::strong_ordering compare(const Alphabet& a, const Monomial& u,
                             const Monomial& v) {
  if (!alphabet_contains(a, u) || !alphabet_contains(a, v))
    throw AlphabetMismatch("monomial does not belong to the alphabet");
  return deglex_compare(u, v);
}

NcPoly NcPoly::constant(const Scalar& c) {
  NcPoly p(c.field());
  p.add_term(c, Monomial());
  return p;
}

NcPoly NcPoly::term(const Scalar& c, const Monomial& m) {
  NcPoly p(c.field());
  p.add_term(c, m);
  return p;
}

NcPoly NcPoly::monomial(const Field& f, const Monomial& m) {
  NcPoly p(f);
  p.add_term(Scalar::one(f), m);
  return p;
}

const Monomial& NcPoly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.begin()->first;
}

const Scalar& NcPoly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.begin()->second;
}

Scalar NcPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

int NcPoly::degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

std::optional<int> NcPoly::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

void NcPoly::check_same_field(const NcPoly& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("polynomials over different fields");
}

void NcPoly::add_term(const Scalar& c, const Monomial& m) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPoly NcPoly::operator-() const {
  NcPoly p(field_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  check_same_field(o);
  for (const auto& [m, c] : o.terms_) add_term(c, m);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  check_same_field(o);
  for (const auto& [m, c] : o.terms_) add_term(-c, m);
  return *this;
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  NcPoly p = *this;
  return p += o;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
  NcPoly p = *this;
  return p -= o;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
  check_same_field(o);
  NcPoly p(field_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) p.add_term(c1 * c2, m1 * m2);
  return p;
}

NcPoly NcPoly::scaled(const Scalar& c) const {
  NcPoly p(field_);
  if (c.is_zero()) return p;
  for (const auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
  return p;
}

NcPoly NcPoly::left_mul(const Monomial& m) const {
  NcPoly p(field_);
  for (const auto& [w, c] : terms_) p.terms_.emplace(m * w, c);
  return p;
}

NcPoly NcPoly::right_mul(const Monomial& m) const {
  NcPoly p(field_);
  for (const auto& [w, c] : terms_) p.terms_.emplace(w * m, c);
  return p;
}

bool NcPoly::operator==(const NcPoly& o) const {
  return field_ == o.field_ && terms_ == o.terms_;
}

std::string NcPoly::to_string(const Alphabet& a) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    std::string abs = neg ? cs.substr(1) : cs;
    if (first) {
      s += neg ? "-" : "";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (m.is_identity()) {
      s += abs;
    } else if (abs == "1") {
      s += m.to_string(a);
    } else {
      s += abs + "*" + m.to_string(a);
    }
  }
  return s;
}

}  // namespace dext
