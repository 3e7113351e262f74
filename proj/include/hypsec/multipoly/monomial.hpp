#pragma once

#include <array>
#include <compare>
#include <string>

namespace hypsec {

/// Highest degree representable by the dense tables.
inline constexpr int kMaxDegree = 8;

/// X^x Y^y Z^z.
struct Monomial {
  int x = 0;
  int y = 0;
  int z = 0;

  constexpr int degree() const { return x + y + z; }
  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;
};

namespace mono {

constexpr int count(int degree) { return (degree + 1) * (degree + 2) / 2; }

/// Position in the dense layout of its degree. Index 0 is the largest
/// monomial in graded reverse lexicographic order with X > Y > Z, and the
/// order decreases with the index: all monomials free of Z first (by
/// increasing Y), then those with Z^1, and so on.
constexpr int index(const Monomial& m) {
  const int d = m.degree();
  return m.z * (d + 1) - m.z * (m.z - 1) / 2 + m.y;
}

constexpr Monomial at(int degree, int idx) {
  int z = 0;
  int row = degree + 1;
  while (idx >= row) {
    idx -= row;
    ++z;
    --row;
  }
  return {degree - z - idx, idx, z};
}

constexpr bool divides(const Monomial& a, const Monomial& b) { return a.x <= b.x && a.y <= b.y && a.z <= b.z; }

constexpr Monomial lcm(const Monomial& a, const Monomial& b) {
  return {a.x > b.x ? a.x : b.x, a.y > b.y ? a.y : b.y, a.z > b.z ? a.z : b.z};
}

/// b / a, assuming a divides b.
constexpr Monomial quotient(const Monomial& b, const Monomial& a) { return {b.x - a.x, b.y - a.y, b.z - a.z}; }

constexpr Monomial product(const Monomial& a, const Monomial& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }

constexpr bool coprime(const Monomial& a, const Monomial& b) {
  return (a.x == 0 || b.x == 0) && (a.y == 0 || b.y == 0) && (a.z == 0 || b.z == 0);
}

/// Graded reverse lexicographic comparison.
constexpr std::strong_ordering compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  // Within a degree a smaller dense index means a larger monomial.
  return index(b) <=> index(a);
}

}  // namespace mono
}  // namespace hypsec
