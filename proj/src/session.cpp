#include "dext/session.hpp"

#include <cctype>
#include <sstream>

#include "dext/errors.hpp"

namespace dext {
namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ >= s_.size()) {
      tok_ = {Tok::End, "", line_, col_};
      return;
    }
    int line = line_, col = col_;
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string t;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_')) {
        t += s_[pos_++];
        ++col_;
      }
      tok_ = {Tok::Ident, std::move(t), line, col};
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string t;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        t += s_[pos_++];
        ++col_;
      }
      tok_ = {Tok::Int, std::move(t), line, col};
    } else if (std::string("{}[]()=,:*+-/;").find(c) != std::string::npos) {
      ++pos_;
      ++col_;
      tok_ = {Tok::Punct, std::string(1, c), line, col};
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c +
                                      "'");
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_{Tok::End, "", 1, 1};
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError(t.line, t.col, msg);
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  SessionFile parse() {
    SessionFile s;
    bool have_field = false;
    while (lex_.peek().kind != Tok::End) {
      Token t = expect_ident("statement");
      if (t.text == "field") {
        s.field = parse_field();
        have_field = true;
        field_ = s.field;
      } else if (t.text == "base") {
        if (!have_field) fail(t, "field declaration must come first");
        parse_base(s);
        alphabet_ = s.base_alphabet();
        have_base_ = true;
      } else if (t.text == "extension") {
        if (!have_base_) fail(t, "base block must precede extension");
        parse_extension(s);
      } else if (t.text == "options") {
        parse_options(s);
      } else {
        fail(t, "unknown statement '" + t.text + "'");
      }
    }
    if (!have_field)
      throw ParseError(1, 1, "missing field declaration");
    return s;
  }

  NcPoly parse_expr_only(const Alphabet& a, const Field& f) {
    field_ = f;
    alphabet_ = a;
    NcPoly p = parse_expr();
    if (lex_.peek().kind != Tok::End)
      fail(lex_.peek(), "trailing input after expression");
    return p;
  }

 private:
  Token expect_ident(const std::string& what) {
    Token t = lex_.take();
    if (t.kind != Tok::Ident) fail(t, "expected " + what);
    return t;
  }

  void expect_punct(const std::string& p) {
    Token t = lex_.take();
    if (t.kind != Tok::Punct || t.text != p)
      fail(t, "expected '" + p + "'");
  }

  long long expect_int() {
    Token t = lex_.take();
    if (t.kind != Tok::Int) fail(t, "expected an integer");
    return std::stoll(t.text);
  }

  Field parse_field() {
    Token t = expect_ident("field kind (q or fp)");
    if (t.text == "q") return Field::rationals();
    if (t.text == "fp") {
      long long p = expect_int();
      try {
        return Field::prime(static_cast<std::uint32_t>(p));
      } catch (const std::invalid_argument& e) {
        fail(t, e.what());
      }
    }
    fail(t, "unknown field kind '" + t.text + "'");
  }

  void parse_base(SessionFile& s) {
    expect_punct("{");
    while (true) {
      Token t = lex_.take();
      if (t.kind == Tok::Punct && t.text == "}") break;
      if (t.kind != Tok::Ident) fail(t, "expected generator or relation");
      if (t.text == "generator") {
        Token name = expect_ident("generator name");
        expect_punct(":");
        long long deg = expect_int();
        if (deg < 1) fail(name, "generator degree must be >= 1");
        for (const auto& [n, d] : s.base.generators)
          if (n == name.text) fail(name, "duplicate generator");
        if (name.text == "y1" || name.text == "y2")
          fail(name, "y1 and y2 are reserved for the extension");
        s.base.generators.emplace_back(name.text,
                                       static_cast<int>(deg));
        alphabet_ = s.base_alphabet();
      } else if (t.text == "relation") {
        NcPoly lhs = parse_expr();
        if (lex_.peek().kind == Tok::Punct && lex_.peek().text == "=") {
          lex_.take();
          lhs -= parse_expr();
        }
        if (!lhs.is_homogeneous())
          fail(t, "non-homogeneous relation");
        s.base.relations.push_back(std::move(lhs));
      } else {
        fail(t, "expected generator or relation");
      }
    }
  }

  void parse_extension(SessionFile& s) {
    expect_punct("{");
    auto& e = s.ext;
    e.present = true;
    e.p12 = Scalar::zero(field_);
    e.p11 = Scalar::zero(field_);
    e.tau1 = NcPoly(field_);
    e.tau2 = NcPoly(field_);
    e.tau0 = NcPoly(field_);
    std::size_t n = s.base.generators.size();
    e.sigma.assign(n, Mat2::zero(field_));
    e.delta.assign(n, Col2::zero(field_));
    std::vector<bool> sigma_set(n, false);
    while (true) {
      Token t = lex_.take();
      if (t.kind == Tok::Punct && t.text == "}") break;
      if (t.kind != Tok::Ident) fail(t, "expected an extension statement");
      if (t.text == "p12" || t.text == "p11") {
        expect_punct("=");
        Scalar v = parse_scalar_expr();
        (t.text == "p12" ? e.p12 : e.p11) = v;
      } else if (t.text == "dy1" || t.text == "dy2") {
        expect_punct("=");
        long long d = expect_int();
        if (d < 1) fail(t, "degree must be >= 1");
        (t.text == "dy1" ? e.dy1 : e.dy2) = static_cast<int>(d);
      } else if (t.text == "sigma" || t.text == "delta") {
        expect_punct("(");
        Token name = expect_ident("generator name");
        auto idx = alphabet_.index_of(name.text);
        if (!idx) fail(name, "unknown generator '" + name.text + "'");
        expect_punct(")");
        expect_punct("=");
        if (t.text == "sigma") {
          expect_punct("[");
          Mat2 m = Mat2::zero(field_);
          for (int i = 1; i <= 2; ++i) {
            expect_punct("[");
            m.at(i, 1) = parse_expr();
            expect_punct(",");
            m.at(i, 2) = parse_expr();
            expect_punct("]");
            if (i == 1) expect_punct(",");
          }
          expect_punct("]");
          e.sigma[*idx] = std::move(m);
          sigma_set[*idx] = true;
        } else {
          expect_punct("[");
          Col2 c = Col2::zero(field_);
          c.at(1) = parse_expr();
          expect_punct(",");
          c.at(2) = parse_expr();
          expect_punct("]");
          e.delta[*idx] = std::move(c);
        }
      } else if (t.text == "tau") {
        expect_punct("=");
        expect_punct("[");
        e.tau1 = parse_expr();
        expect_punct(",");
        e.tau2 = parse_expr();
        expect_punct(",");
        e.tau0 = parse_expr();
        expect_punct("]");
      } else {
        fail(t, "unknown extension statement '" + t.text + "'");
      }
    }
    for (std::size_t g = 0; g < n; ++g)
      if (!sigma_set[g])
        throw ParseError(1, 1, "missing sigma(" +
                                   s.base.generators[g].first + ")");
  }

  void parse_options(SessionFile& s) {
    expect_punct("{");
    while (true) {
      Token t = lex_.take();
      if (t.kind == Tok::Punct && t.text == "}") break;
      if (t.kind != Tok::Ident) fail(t, "expected an option");
      if (t.text == "max_degree") {
        expect_punct("=");
        long long d = expect_int();
        if (d < 0) fail(t, "max_degree must be >= 0");
        s.options.max_degree = static_cast<int>(d);
      } else if (t.text == "checks") {
        expect_punct("=");
        s.options.checks.push_back(expect_ident("check name").text);
        while (lex_.peek().kind == Tok::Punct && lex_.peek().text == ",") {
          lex_.take();
          s.options.checks.push_back(expect_ident("check name").text);
        }
      } else {
        fail(t, "unknown option '" + t.text + "'");
      }
    }
  }

  // expr := term (('+'|'-') term)*
  NcPoly parse_expr() {
    NcPoly p = parse_term();
    while (lex_.peek().kind == Tok::Punct &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      std::string op = lex_.take().text;
      NcPoly q = parse_term();
      if (op == "+")
        p += q;
      else
        p -= q;
    }
    return p;
  }

  // term := factor ('*' factor)*
  NcPoly parse_term() {
    NcPoly p = parse_factor();
    while (lex_.peek().kind == Tok::Punct && lex_.peek().text == "*") {
      lex_.take();
      p = p * parse_factor();
    }
    return p;
  }

  // factor := scalar | generator | '(' expr ')' | '-' factor
  NcPoly parse_factor() {
    Token t = lex_.peek();
    if (t.kind == Tok::Punct && t.text == "-") {
      lex_.take();
      return -parse_factor();
    }
    if (t.kind == Tok::Punct && t.text == "(") {
      lex_.take();
      NcPoly p = parse_expr();
      expect_punct(")");
      return p;
    }
    if (t.kind == Tok::Int) return NcPoly::constant(parse_scalar());
    if (t.kind == Tok::Ident) {
      lex_.take();
      auto idx = alphabet_.index_of(t.text);
      if (!idx) fail(t, "unknown generator '" + t.text + "'");
      return NcPoly::monomial(
          field_, Monomial::letter(*idx, alphabet_.degree(*idx)));
    }
    fail(t, "expected a scalar, generator or parenthesized expression");
  }

  // scalar := integer | integer '/' integer
  Scalar parse_scalar() {
    Token t = lex_.take();
    if (t.kind != Tok::Int) fail(t, "expected an integer");
    long long num = std::stoll(t.text);
    if (lex_.peek().kind == Tok::Punct && lex_.peek().text == "/") {
      lex_.take();
      Token d = lex_.take();
      if (d.kind != Tok::Int) fail(d, "expected a denominator");
      long long den = std::stoll(d.text);
      try {
        return Scalar::fraction(field_, num, den);
      } catch (const std::domain_error& e) {
        fail(d, std::string("field-literal mismatch: ") + e.what());
      }
    }
    return Scalar::from_int(field_, num);
  }

  Scalar parse_scalar_expr() {
    Token at = lex_.peek();
    NcPoly p = parse_expr();
    if (p.is_zero()) return Scalar::zero(field_);
    if (p.term_count() == 1 && p.leading_monomial().is_identity())
      return p.leading_coeff();
    fail(at, "expected a scalar value");
  }

  Lexer lex_;
  Field field_;
  Alphabet alphabet_;
  bool have_base_ = false;
};

}  // namespace

Alphabet SessionFile::base_alphabet() const {
  Alphabet a;
  for (const auto& [name, deg] : base.generators) a.add(name, deg);
  return a;
}

ReductionSystem SessionFile::base_system() const {
  return ReductionSystem::from_relations(base_alphabet(), field,
                                         base.relations);
}

DEData SessionFile::to_dedata() const {
  if (!ext.present)
    throw std::invalid_argument("session has no extension block");
  return DEData(base_system(), ext.p12, ext.p11, ext.sigma, ext.delta,
                ext.tau1, ext.tau2, ext.tau0, ext.dy1, ext.dy2);
}

SessionFile parse_session(const std::string& text) {
  return Parser(text).parse();
}

NcPoly parse_expression(const std::string& text, const Alphabet& alphabet,
                        const Field& field) {
  return Parser(text).parse_expr_only(alphabet, field);
}

std::string render_session(const SessionFile& s) {
  std::ostringstream out;
  Alphabet a = s.base_alphabet();
  out << "field "
      << (s.field.is_prime_field()
              ? "fp " + std::to_string(s.field.prime_modulus())
              : std::string("q"))
      << "\n\n";
  out << "base {\n";
  for (const auto& [name, deg] : s.base.generators)
    out << "  generator " << name << " : " << deg << "\n";
  for (const NcPoly& r : s.base.relations)
    out << "  relation " << r.to_string(a) << "\n";
  out << "}\n";
  if (s.ext.present) {
    out << "\nextension {\n";
    out << "  p12 = " << s.ext.p12.to_string() << "\n";
    out << "  p11 = " << s.ext.p11.to_string() << "\n";
    out << "  dy1 = " << s.ext.dy1 << "\n";
    out << "  dy2 = " << s.ext.dy2 << "\n";
    for (std::size_t g = 0; g < s.base.generators.size(); ++g) {
      const Mat2& m = s.ext.sigma[g];
      out << "  sigma(" << s.base.generators[g].first << ") = [["
          << m.at(1, 1).to_string(a) << ", " << m.at(1, 2).to_string(a)
          << "], [" << m.at(2, 1).to_string(a) << ", "
          << m.at(2, 2).to_string(a) << "]]\n";
    }
    for (std::size_t g = 0; g < s.base.generators.size(); ++g) {
      const Col2& c = s.ext.delta[g];
      out << "  delta(" << s.base.generators[g].first << ") = ["
          << c.at(1).to_string(a) << ", " << c.at(2).to_string(a) << "]\n";
    }
    out << "  tau = [" << s.ext.tau1.to_string(a) << ", "
        << s.ext.tau2.to_string(a) << ", " << s.ext.tau0.to_string(a)
        << "]\n";
    out << "}\n";
  }
  out << "\noptions {\n";
  out << "  max_degree = " << s.options.max_degree << "\n";
  if (!s.options.checks.empty()) {
    out << "  checks = ";
    for (std::size_t i = 0; i < s.options.checks.size(); ++i) {
      if (i) out << ", ";
      out << s.options.checks[i];
    }
    out << "\n";
  }
  out << "}\n";
  return out.str();
}

SessionFile session_from_dedata(const DEData& d, int max_degree) {
  SessionFile s;
  s.field = d.field();
  const Alphabet& a = d.base().alphabet();
  for (std::size_t g = 0; g < a.size(); ++g)
    s.base.generators.emplace_back(a.name(g), a.degree(g));
  for (const Rule& r : d.base().rules())
    s.base.relations.push_back(NcPoly::monomial(d.field(), r.lead) - r.rhs);
  s.ext.present = true;
  s.ext.p12 = d.p12();
  s.ext.p11 = d.p11();
  s.ext.dy1 = d.dy1();
  s.ext.dy2 = d.dy2();
  s.ext.sigma = d.sigma();
  s.ext.delta = d.delta();
  s.ext.tau1 = d.tau1();
  s.ext.tau2 = d.tau2();
  s.ext.tau0 = d.tau0();
  s.options.max_degree = max_degree;
  return s;
}

}  // namespace dext
