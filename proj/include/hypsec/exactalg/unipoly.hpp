#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypsec/exactalg/field.hpp"

namespace hypsec {

/// Dense univariate polynomial, lowest degree first. The zero polynomial has
/// no stored coefficients but keeps a field prototype so that finite-field
/// constants can still be produced from it.
template <FieldElement F>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(F like) : like_(like.zero_like()) {}
  /// Coefficients must be non-empty; trailing zeros are trimmed.
  explicit UniPoly(std::vector<F> coeffs) : like_(), c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("UniPoly needs a coefficient to fix the field");
    like_ = c_.front().zero_like();
    trim();
  }

  static UniPoly monomial(const F& coeff, int degree) {
    std::vector<F> c(degree + 1, coeff.zero_like());
    c[degree] = coeff;
    return UniPoly(std::move(c));
  }
  /// t - root.
  static UniPoly linear_root(const F& root) { return UniPoly(std::vector<F>{-root, root.one_like()}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : like_; }
  F lead() const { return c_.empty() ? like_ : c_.back(); }
  const F& prototype() const { return like_; }

  F eval(const F& x) const {
    F r = like_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly(like_);
    std::vector<F> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * like_.from_int(static_cast<long>(i)));
    return UniPoly(std::move(d));
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    const F inv = c_.back().inverse();
    std::vector<F> m = c_;
    for (auto& x : m) x = x * inv;
    return UniPoly(std::move(m));
  }

  UniPoly operator-() const {
    if (is_zero()) return *this;
    std::vector<F> m = c_;
    for (auto& x : m) x = -x;
    return UniPoly(std::move(m));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()), a.like_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return r.empty() ? UniPoly(a.like_) : UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.like_);
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, a.like_);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const F& s, const UniPoly& a) {
    if (s.is_zero() || a.is_zero()) return UniPoly(a.like_);
    std::vector<F> r = a.c_;
    for (auto& x : r) x = s * x;
    return UniPoly(std::move(r));
  }

  /// Quotient and remainder; throws on division by zero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < d.degree()) return {UniPoly(like_), *this};
    std::vector<F> rem = c_;
    std::vector<F> quo(c_.size() - d.c_.size() + 1, like_);
    const F inv_lead = d.c_.back().inverse();
    for (int top = degree(); top >= d.degree(); --top) {
      const F c = rem[top] * inv_lead;
      if (c.is_zero()) continue;
      const int shift = top - d.degree();
      quo[shift] = c;
      for (int i = 0; i <= d.degree(); ++i) rem[shift + i] = rem[shift + i] - c * d.c_[i];
    }
    rem.resize(d.c_.size() - 1 == 0 ? 1 : d.c_.size() - 1, like_);
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
  }
  UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }
  UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// e.g. "t^3 - 2t^2 + t". Coefficients that are not plain integers are
  /// parenthesised.
  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const F& c = c_[i];
      if (c.is_zero()) continue;
      std::string s = c.to_string();
      bool negative = false;
      if constexpr (std::is_same_v<F, Rational>) {
        negative = c.sign() < 0;
        if (negative) s = (-c).to_string();
      }
      const bool simple = s.find_first_of(" +/") == std::string::npos;
      if (!simple) s = "(" + s + ")";
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (i == 0) {
        out += s;
      } else {
        if (s != "1") out += s;
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  F like_;
  std::vector<F> c_;
};

/// Monic gcd by the Euclidean algorithm.
template <FieldElement F>
UniPoly<F> gcd_monic(UniPoly<F> a, UniPoly<F> b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of zero polynomials");
  while (!b.is_zero()) {
    UniPoly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// base^e mod m.
template <FieldElement F>
UniPoly<F> pow_mod(UniPoly<F> base, std::uint64_t e, const UniPoly<F>& m) {
  UniPoly<F> r(std::vector<F>{m.prototype().one_like()});
  base = base % m;
  while (e) {
    if (e & 1) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r % m;
}

}  // namespace hypsec
