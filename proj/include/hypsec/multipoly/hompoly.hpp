#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypsec/exactalg/field.hpp"
#include "hypsec/exactalg/matrix3.hpp"
#include "hypsec/multipoly/monomial.hpp"

namespace hypsec {

/// Homogeneous polynomial in X, Y, Z with a declared degree, stored densely
/// in the layout of mono::index.
template <FieldElement F>
class HomPoly {
 public:
  HomPoly() = default;
  HomPoly(int degree, const F& like) : deg_(check_degree(degree)), c_(mono::count(degree), like.zero_like()) {}
  HomPoly(int degree, std::vector<F> coeffs) : deg_(check_degree(degree)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != mono::count(deg_)) throw std::invalid_argument("coefficient count mismatch");
  }

  /// aX + bY + cZ.
  static HomPoly linear(const Vec3<F>& abc) { return HomPoly(1, std::vector<F>{abc[0], abc[1], abc[2]}); }
  static HomPoly term(const F& coeff, const Monomial& m) {
    HomPoly p(m.degree(), coeff);
    p.c_[mono::index(m)] = coeff;
    return p;
  }

  int degree() const { return deg_; }
  const std::vector<F>& coeffs() const { return c_; }
  const F& coeff(const Monomial& m) const { return c_[mono::index(m)]; }
  const F& coeff_at(int idx) const { return c_[idx]; }
  void set(const Monomial& m, const F& v) { c_[mono::index(m)] = v; }
  F like() const { return c_.front().zero_like(); }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }
  /// Dense index of the leading monomial, or -1 for zero.
  int leading_index() const {
    for (int i = 0; i < static_cast<int>(c_.size()); ++i)
      if (!c_[i].is_zero()) return i;
    return -1;
  }
  Monomial leading_monomial() const {
    const int i = leading_index();
    if (i < 0) throw std::logic_error("zero polynomial has no leading monomial");
    return mono::at(deg_, i);
  }
  F leading_coeff() const {
    const int i = leading_index();
    return i < 0 ? like() : c_[i];
  }
  HomPoly monic() const {
    const int i = leading_index();
    if (i < 0) return *this;
    return c_[i].inverse() * *this;
  }
  /// Coefficient vector as a linear form (degree 1 only).
  Vec3<F> as_linear() const {
    if (deg_ != 1) throw std::logic_error("not a linear form");
    return {c_[0], c_[1], c_[2]};
  }

  F eval(const Vec3<F>& p) const {
    F acc = like();
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
      if (c_[i].is_zero()) continue;
      const Monomial m = mono::at(deg_, i);
      F t = c_[i];
      for (int e = 0; e < m.x; ++e) t = t * p[0];
      for (int e = 0; e < m.y; ++e) t = t * p[1];
      for (int e = 0; e < m.z; ++e) t = t * p[2];
      acc = acc + t;
    }
    return acc;
  }

  /// Applies fn to every coefficient (e.g. to embed into an extension).
  template <class Fn>
  auto map(Fn fn) const {
    using G = decltype(fn(c_.front()));
    std::vector<G> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(fn(x));
    return HomPoly<G>(deg_, std::move(out));
  }

  HomPoly operator-() const { return like().from_int(-1) * *this; }
  friend HomPoly operator+(HomPoly a, const HomPoly& b) {
    a.require_same_degree(b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] = a.c_[i] + b.c_[i];
    return a;
  }
  friend HomPoly operator-(HomPoly a, const HomPoly& b) {
    a.require_same_degree(b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] = a.c_[i] - b.c_[i];
    return a;
  }
  friend HomPoly operator*(const F& s, HomPoly a) {
    for (auto& x : a.c_) x = s * x;
    return a;
  }
  friend HomPoly operator*(const HomPoly& a, const HomPoly& b) {
    HomPoly r(a.deg_ + b.deg_, a.like());
    for (int i = 0; i < static_cast<int>(a.c_.size()); ++i) {
      if (a.c_[i].is_zero()) continue;
      const Monomial ma = mono::at(a.deg_, i);
      for (int j = 0; j < static_cast<int>(b.c_.size()); ++j) {
        if (b.c_[j].is_zero()) continue;
        const int k = mono::index(mono::product(ma, mono::at(b.deg_, j)));
        r.c_[k] = r.c_[k] + a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  /// coeff * m * this.
  HomPoly shifted(const Monomial& m, const F& coeff) const {
    HomPoly r(deg_ + m.degree(), like());
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
      if (c_[i].is_zero()) continue;
      r.c_[mono::index(mono::product(m, mono::at(deg_, i)))] = coeff * c_[i];
    }
    return r;
  }

  friend bool operator==(const HomPoly& a, const HomPoly& b) { return a.deg_ == b.deg_ && a.c_ == b.c_; }

  /// e.g. "X*Z - Y^2"; the zero polynomial prints as "0".
  std::string to_string() const;

 private:
  static int check_degree(int d) {
    if (d < 0 || d > kMaxDegree) throw std::domain_error("polynomial degree cap exceeded");
    return d;
  }
  void require_same_degree(const HomPoly& o) const {
    if (deg_ != o.deg_) throw std::invalid_argument("degree mismatch in homogeneous arithmetic");
  }

  int deg_ = 0;
  std::vector<F> c_;
};

namespace detail {
// Splits a coefficient's printed form into sign and magnitude.
inline std::pair<bool, std::string> signed_text(const Rational& c) {
  if (c.sign() < 0) return {true, (-c).to_string()};
  return {false, c.to_string()};
}
inline std::pair<bool, std::string> signed_text(const Gf& c) { return {false, c.to_string()}; }
}  // namespace detail

template <FieldElement F>
std::string HomPoly<F>::to_string() const {
  std::string out;
  for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
    if (c_[i].is_zero()) continue;
    auto [negative, mag] = detail::signed_text(c_[i]);
    const Monomial m = mono::at(deg_, i);
    const std::string mon = m.to_string();
    if (mag.find(' ') != std::string::npos) mag = "(" + mag + ")";
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mon.empty()) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += mon;
    }
  }
  return out.empty() ? "0" : out;
}

/// Exact quotient p / d, or nullopt when d does not divide p.
template <FieldElement F>
std::optional<HomPoly<F>> divide_exact(const HomPoly<F>& p, const HomPoly<F>& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.is_zero()) return p.degree() >= d.degree() ? std::optional(HomPoly<F>(p.degree() - d.degree(), p.like()))
                                                   : std::nullopt;
  if (p.degree() < d.degree()) return std::nullopt;
  const Monomial lm = d.leading_monomial();
  const F inv = d.leading_coeff().inverse();
  HomPoly<F> rem = p;
  HomPoly<F> quo(p.degree() - d.degree(), p.like());
  for (int i = 0; i < mono::count(p.degree()); ++i) {
    const F c = rem.coeff_at(i);
    if (c.is_zero()) continue;
    const Monomial m = mono::at(p.degree(), i);
    if (!mono::divides(lm, m)) return std::nullopt;
    const Monomial qm = mono::quotient(m, lm);
    const F f = c * inv;
    quo.set(qm, quo.coeff(qm) + f);
    rem = rem - d.shifted(qm, f);
  }
  return quo;
}

}  // namespace hypsec
