#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "hypsec/exactalg/finite_field.hpp"
#include "hypsec/exactalg/matrix3.hpp"
#include "hypsec/exactalg/rational.hpp"
#include "hypsec/sections/section.hpp"

namespace hypsec::test {

inline Matrix3<Rational> qmat(std::initializer_list<long> e) {
  std::array<Rational, 9> a;
  int i = 0;
  for (long x : e) a[i++] = Rational(x);
  return Matrix3<Rational>(a);
}

inline Matrix3<Gf> fmat(const FiniteField& f, std::initializer_list<long> e) {
  std::array<Gf, 9> a;
  int i = 0;
  for (long x : e) a[i++] = f.from_int(x);
  return Matrix3<Gf>(a);
}

inline Vec3<Gf> fvec(const FiniteField& f, long a, long b, long c) { return {f.from_int(a), f.from_int(b), f.from_int(c)}; }
inline Vec3<Rational> qvec(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

inline Gf random_gf(const FiniteField& f, std::mt19937_64& rng) { return f.element(rng() % f.order()); }

inline Rational random_small_rational(std::mt19937_64& rng, long range = 5) {
  const long num = static_cast<long>(rng() % (2 * range + 1)) - range;
  const long den = static_cast<long>(rng() % 3) + 1;
  return Rational(num, den);
}

inline Matrix3<Gf> random_gf_matrix(const FiniteField& f, std::mt19937_64& rng) {
  std::array<Gf, 9> a;
  for (auto& x : a) x = random_gf(f, rng);
  return Matrix3<Gf>(a);
}

inline Matrix3<Rational> random_rational_matrix(std::mt19937_64& rng, long range = 5) {
  std::array<Rational, 9> a;
  for (auto& x : a) x = random_small_rational(rng, range);
  return Matrix3<Rational>(a);
}

/// Random nonzero section; the matrices are sparse with probability 1/2 so
/// degenerate types show up often.
template <class Draw>
auto random_section(Draw&& draw_matrix, std::mt19937_64& rng) {
  for (;;) {
    auto m = draw_matrix();
    if (rng() % 2) {
      auto e = m.entries();
      for (auto& x : e)
        if (rng() % 2) x = x.zero_like();
      m = decltype(m)(e);
    }
    SectionMatrix s(m);
    if (!s.is_zero_section()) return s;
  }
}

}  // namespace hypsec::test
