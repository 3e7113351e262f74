#include "hypsec/sections/section.hpp"

#include <cctype>

namespace hypsec {

namespace {

class FormParser {
 public:
  explicit FormParser(std::string_view text) : s_(text) {}

  SectionMatrix<Rational> parse() {
    std::array<Vec3<Rational>, 3> rows;
    for (int i = 0; i < 3; ++i) {
      if (i > 0) {
        skip_ws();
        if (!eat(',')) throw ParseError(at_end() ? "expected 3 linear forms" : "expected ','", pos_);
      }
      rows[i] = parse_form();
    }
    skip_ws();
    if (!at_end()) throw ParseError(peek() == ',' ? "more than 3 linear forms" : "unexpected character", pos_);
    return SectionMatrix<Rational>(Matrix3<Rational>::from_rows(rows[0], rows[1], rows[2]));
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Vec3<Rational> parse_form() {
    Vec3<Rational> form{Rational{}, Rational{}, Rational{}};
    bool first = true;
    for (;;) {
      skip_ws();
      bool negative = false;
      if (!first) {
        if (at_end() || peek() == ',') break;
        if (peek() != '+' && peek() != '-') throw ParseError("expected '+' or '-'", pos_);
      }
      // Binary operator (or a leading sign), then an optional unary sign.
      for (int signs = 0; signs < 2 && (peek() == '+' || peek() == '-'); ++signs) {
        negative ^= peek() == '-';
        ++pos_;
        skip_ws();
      }
      parse_term(form, negative);
      first = false;
    }
    return form;
  }

  void parse_term(Vec3<Rational>& form, bool negative) {
    const std::size_t start = pos_;
    Rational coef{1};
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = parse_coef();
      have_coef = true;
      skip_ws();
    }
    bool star = false;
    if (have_coef && peek() == '*') {
      ++pos_;
      star = true;
      skip_ws();
    }
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      const char v = peek();
      const std::size_t var_pos = pos_;
      if (v != 'X' && v != 'Y' && v != 'Z') throw ParseError(std::string("unknown variable '") + v + "'", var_pos);
      ++pos_;
      skip_ws();
      const char next = peek();
      if (next == '*' || next == '^' || next == '(' || std::isalnum(static_cast<unsigned char>(next)))
        throw ParseError("nonlinear term", start);
      const int idx = v - 'X';
      form[idx] = form[idx] + (negative ? -coef : coef);
      return;
    }
    if (star) throw ParseError("expected variable after '*'", pos_);
    if (!have_coef) throw ParseError(at_end() ? "unexpected end of input" : "expected term", pos_);
    if (!coef.is_zero()) throw ParseError("constant term in linear form", start);
  }

  Rational parse_coef() {
    const std::size_t start = pos_;
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected denominator", pos_);
      std::string den;
      while (std::isdigit(static_cast<unsigned char>(peek()))) den += s_[pos_++];
      try {
        return Rational::parse(digits + "/" + den);
      } catch (const std::domain_error&) {
        throw ParseError("zero denominator", start);
      }
    }
    return Rational::parse(digits);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SectionMatrix<Rational> parse_section(std::string_view text) { return FormParser(text).parse(); }

template <FieldElement F>
std::string render_linear_form(const Vec3<F>& abc) {
  static constexpr const char* kVars[3] = {"X", "Y", "Z"};
  std::string out;
  for (int i = 0; i < 3; ++i) {
    const F& c = abc[i];
    if (c.is_zero()) continue;
    bool negative = false;
    std::string mag = c.to_string();
    if constexpr (std::is_same_v<F, Rational>) {
      negative = c.sign() < 0;
      if (negative) mag = (-c).to_string();
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != "1") out += mag + "*";
    out += kVars[i];
  }
  return out.empty() ? "0" : out;
}

template <FieldElement F>
std::string render_section(const SectionMatrix<F>& s) {
  const auto& a = s.matrix();
  return render_linear_form(a.row(0)) + ", " + render_linear_form(a.row(1)) + ", " + render_linear_form(a.row(2));
}

Gf reduce_rational(const Rational& r, const FiniteField& field) {
  const mpz_class p(static_cast<unsigned long>(field.characteristic()));
  const mpz_class den = r.den();
  if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t()) != 0)
    throw std::invalid_argument("denominator " + den.get_str() + " vanishes modulo " + p.get_str());
  mpz_class n = r.num() % p;
  if (n < 0) n += p;
  mpz_class d = den % p;
  const Gf num = field.from_int(static_cast<long>(n.get_ui()));
  const Gf dd = field.from_int(static_cast<long>(d.get_ui()));
  return num / dd;
}

SectionMatrix<Gf> reduce_section(const SectionMatrix<Rational>& s, const FiniteField& field) {
  std::array<Gf, 9> e;
  for (int i = 0; i < 9; ++i) e[i] = reduce_rational(s.matrix().entries()[i], field);
  return SectionMatrix<Gf>(Matrix3<Gf>(e));
}

template std::string render_linear_form(const Vec3<Rational>&);
template std::string render_linear_form(const Vec3<Gf>&);
template std::string render_section(const SectionMatrix<Rational>&);
template std::string render_section(const SectionMatrix<Gf>&);

}  // namespace hypsec
