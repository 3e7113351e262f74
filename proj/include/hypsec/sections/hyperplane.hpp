#pragma once

#include <array>
#include <string>

#include "hypsec/sections/section.hpp"

namespace hypsec {

/// Hyperplane of P7 in coordinates dual to the trace-free basis
/// (E11-E33, E22-E33, E12, E13, E21, E23, E31, E32). Always stored with the
/// first nonzero coordinate equal to 1.
template <FieldElement F>
class HyperplaneP7 {
 public:
  explicit HyperplaneP7(std::array<F, 8> coords) : c_(std::move(coords)) {
    for (const auto& x : c_) {
      if (!x.is_zero()) {
        const F inv = x.inverse();
        for (auto& y : c_) y = y * inv;
        return;
      }
    }
    throw std::invalid_argument("all-zero hyperplane coordinates");
  }

  const std::array<F, 8>& coords() const { return c_; }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) out += (i ? "," : "") + c_[i].to_string();
    return out + ")";
  }

  friend bool operator==(const HyperplaneP7& a, const HyperplaneP7& b) { return a.c_ == b.c_; }

 private:
  std::array<F, 8> c_;
};

/// Coordinates of the trace-free representative in the basis above, not
/// rescaled.
template <FieldElement F>
std::array<F, 8> trace_free_coords(const SectionMatrix<F>& s) {
  const Matrix3<F> t = s.trace_free().matrix();
  return {t(0, 0), t(1, 1), t(0, 1), t(0, 2), t(1, 0), t(1, 2), t(2, 0), t(2, 1)};
}

template <FieldElement F>
HyperplaneP7<F> section_to_hyperplane(const SectionMatrix<F>& s) {
  s.require_nonzero();
  return HyperplaneP7<F>(trace_free_coords(s));
}

/// The trace-free matrix with the given coordinates.
template <FieldElement F>
SectionMatrix<F> hyperplane_to_section(const HyperplaneP7<F>& h) {
  const auto& c = h.coords();
  Matrix3<F> m = Matrix3<F>::zero(c[0]);
  m(0, 0) = c[0];
  m(1, 1) = c[1];
  m(2, 2) = -(c[0] + c[1]);
  m(0, 1) = c[2];
  m(0, 2) = c[3];
  m(1, 0) = c[4];
  m(1, 2) = c[5];
  m(2, 0) = c[6];
  m(2, 1) = c[7];
  return SectionMatrix<F>(m);
}

}  // namespace hypsec
