#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hypsec/exactalg/field.hpp"
#include "hypsec/exactalg/matrix3.hpp"

namespace hypsec {

/// A section of T_P2 given by the triple of linear forms (f1, f2, f3):
/// row i holds the coefficients of f_i in X, Y, Z. Two matrices give the
/// same section exactly when they differ by a multiple of the identity.
template <FieldElement F>
class SectionMatrix {
 public:
  SectionMatrix() = default;
  explicit SectionMatrix(Matrix3<F> a) : a_(std::move(a)) {}

  const Matrix3<F>& matrix() const { return a_; }
  F like() const { return a_.like(); }

  bool is_zero_section() const { return a_.is_scalar(); }
  bool same_section(const SectionMatrix& other) const { return (a_ - other.a_).is_scalar(); }

  /// A - (tr A / 3) I, the unique trace-free representative.
  SectionMatrix trace_free() const {
    require_supported_characteristic(like());
    const F third = like().from_int(3).inverse();
    return SectionMatrix(a_ - (a_.trace() * third) * Matrix3<F>::identity(like()));
  }

  /// Throws "zero section" when the matrix is a multiple of the identity.
  void require_nonzero() const {
    if (is_zero_section()) throw std::invalid_argument("zero section");
  }

  friend bool operator==(const SectionMatrix& a, const SectionMatrix& b) { return a.a_ == b.a_; }

 private:
  Matrix3<F> a_;
};

/// Syntax error in a linear-form triple, with the 0-based character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses "f1, f2, f3" where each f_i is a linear form in X, Y, Z with
/// integer or rational coefficients:
///
///   form := term (('+'|'-') term)*
///   term := ['+'|'-'] (coef ['*'] var | var | coef)
///   coef := integer | integer '/' integer
///   var  := 'X' | 'Y' | 'Z'
///
/// Whitespace is ignored. A constant term must be zero.
SectionMatrix<Rational> parse_section(std::string_view text);

/// Inverse of parse_section for normalized output: "X, 2*Y, 3*Z".
template <FieldElement F>
std::string render_section(const SectionMatrix<F>& s);

/// Renders one linear form aX + bY + cZ, "0" when all vanish.
template <FieldElement F>
std::string render_linear_form(const Vec3<F>& abc);

/// Image of a rational in F_q; throws when p divides the denominator.
Gf reduce_rational(const Rational& r, const FiniteField& field);
SectionMatrix<Gf> reduce_section(const SectionMatrix<Rational>& s, const FiniteField& field);

}  // namespace hypsec
