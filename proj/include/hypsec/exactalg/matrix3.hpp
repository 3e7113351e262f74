#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypsec/exactalg/field.hpp"
#include "hypsec/exactalg/linalg.hpp"
#include "hypsec/exactalg/unipoly.hpp"

namespace hypsec {

template <FieldElement F>
using Vec3 = std::array<F, 3>;

/// Scales v so its first nonzero coordinate is 1.
template <FieldElement F>
Vec3<F> normalize_projective(Vec3<F> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) {
      const F inv = x.inverse();
      for (auto& y : v) y = y * inv;
      return v;
    }
  }
  throw std::invalid_argument("zero vector has no projective point");
}

template <FieldElement F>
bool is_zero_vec(const Vec3<F>& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

template <FieldElement F>
F dot(const Vec3<F>& a, const Vec3<F>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

/// "(1,0,0)"
template <FieldElement F>
std::string point_string(const Vec3<F>& v) {
  return "(" + v[0].to_string() + "," + v[1].to_string() + "," + v[2].to_string() + ")";
}

/// Row-major 3x3 matrix over a single field.
template <FieldElement F>
class Matrix3 {
 public:
  Matrix3() = default;
  explicit Matrix3(std::array<F, 9> entries) : e_(std::move(entries)) {}

  static Matrix3 zero(const F& like) {
    std::array<F, 9> e;
    e.fill(like.zero_like());
    return Matrix3(e);
  }
  static Matrix3 identity(const F& like) { return diag(like.one_like(), like.one_like(), like.one_like()); }
  static Matrix3 diag(const F& a, const F& b, const F& c) {
    Matrix3 m = zero(a);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
  }
  static Matrix3 from_rows(const Vec3<F>& r0, const Vec3<F>& r1, const Vec3<F>& r2) {
    return Matrix3({r0[0], r0[1], r0[2], r1[0], r1[1], r1[2], r2[0], r2[1], r2[2]});
  }
  /// Matrix unit E_ij (zero-based indices).
  static Matrix3 unit(int i, int j, const F& like) {
    Matrix3 m = zero(like);
    m(i, j) = like.one_like();
    return m;
  }

  F& operator()(int i, int j) { return e_[3 * i + j]; }
  const F& operator()(int i, int j) const { return e_[3 * i + j]; }
  const std::array<F, 9>& entries() const { return e_; }
  F like() const { return e_[0].zero_like(); }

  Vec3<F> row(int i) const { return {e_[3 * i], e_[3 * i + 1], e_[3 * i + 2]}; }
  Vec3<F> col(int j) const { return {e_[j], e_[3 + j], e_[6 + j]}; }

  F trace() const { return e_[0] + e_[4] + e_[8]; }
  F det() const {
    const auto& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }
  Matrix3 transpose() const {
    Matrix3 t = *this;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
    return t;
  }
  Matrix3 adjugate() const {
    const auto& m = *this;
    Matrix3 a = zero(like());
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        a(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
      }
    }
    return a;
  }
  Matrix3 inverse() const {
    const F d = det();
    if (d.is_zero()) throw std::invalid_argument("singular matrix");
    return d.inverse() * adjugate();
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }
  /// True when the matrix is c * I for some c (including 0).
  bool is_scalar() const {
    const auto& m = *this;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j && !m(i, j).is_zero()) return false;
    return m(0, 0) == m(1, 1) && m(1, 1) == m(2, 2);
  }

  Vec3<F> apply(const Vec3<F>& v) const {
    return {dot(row(0), v), dot(row(1), v), dot(row(2), v)};
  }

  friend Matrix3 operator+(Matrix3 a, const Matrix3& b) {
    for (int i = 0; i < 9; ++i) a.e_[i] = a.e_[i] + b.e_[i];
    return a;
  }
  friend Matrix3 operator-(Matrix3 a, const Matrix3& b) {
    for (int i = 0; i < 9; ++i) a.e_[i] = a.e_[i] - b.e_[i];
    return a;
  }
  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 c = zero(a.like());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) c(i, j) = c(i, j) + a(i, k) * b(k, j);
    return c;
  }
  friend Matrix3 operator*(const F& s, Matrix3 a) {
    for (auto& x : a.e_) x = s * x;
    return a;
  }
  friend bool operator==(const Matrix3& a, const Matrix3& b) { return a.e_ == b.e_; }

 private:
  std::array<F, 9> e_;
};

/// det(tI - A): monic of degree exactly 3.
template <FieldElement F>
UniPoly<F> charpoly(const Matrix3<F>& a) {
  const F tr = a.trace();
  F minors2 = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  minors2 = minors2 + a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
  minors2 = minors2 + a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  std::vector<F> c{-a.det(), minors2, -tr, tr.one_like()};
  return UniPoly<F>(std::move(c));
}

template <FieldElement F>
linalg::DenseMatrix<F> to_dense(const Matrix3<F>& a) {
  linalg::DenseMatrix<F> m(3);
  for (int i = 0; i < 3; ++i) m[i] = {a(i, 0), a(i, 1), a(i, 2)};
  return m;
}

template <FieldElement F>
int rank3(const Matrix3<F>& a) {
  return static_cast<int>(linalg::rank(to_dense(a)));
}

/// Basis of the right kernel {v : A v = 0}.
template <FieldElement F>
std::vector<Vec3<F>> kernel(const Matrix3<F>& a) {
  std::vector<Vec3<F>> out;
  for (auto& v : linalg::nullspace(to_dense(a), 3, a.like())) out.push_back({v[0], v[1], v[2]});
  return out;
}

/// Evaluates the polynomial at a matrix argument (Horner).
template <FieldElement F>
Matrix3<F> eval_at_matrix(const UniPoly<F>& p, const Matrix3<F>& a) {
  Matrix3<F> r = Matrix3<F>::zero(a.like());
  const Matrix3<F> id = Matrix3<F>::identity(a.like());
  for (int i = p.degree(); i >= 0; --i) r = r * a + p.coeff(i) * id;
  return r;
}

}  // namespace hypsec
