#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hypsec {

class Gf;

/// The finite field F_{p^k} = F_p[t]/(m(t)) for p >= 5 and 1 <= k <= 3.
///
/// Elements are encoded as integers in [0, p^k): the base-p digits of the
/// encoding are the coefficients of the residue, constant term first. The
/// prime subfield is therefore the range [0, p) in every extension, which
/// makes embedding from F_p a no-op on encodings.
///
/// Instances are immutable once built. Obtain them through build_ext_field,
/// which caches one instance per (p, k) for the lifetime of the process, so
/// elements may safely hold a plain pointer to their field.
class FiniteField {
 public:
  FiniteField(std::uint64_t p, int k, std::vector<std::uint64_t> modulus);
  FiniteField(const FiniteField&) = delete;
  FiniteField& operator=(const FiniteField&) = delete;

  std::uint64_t characteristic() const { return p_; }
  int degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  /// Monic modulus coefficients, constant term first (size k + 1).
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  Gf zero() const;
  Gf one() const;
  Gf from_int(long n) const;
  /// Element with the given encoding; encodings >= order() are rejected.
  Gf element(std::uint64_t encoding) const;
  /// Image of an element of the prime subfield of this field.
  Gf embed(const Gf& base) const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;

  /// "3" for the prime field; "2a^2 + a + 1" in an extension, where a is the
  /// class of t.
  std::string format(std::uint64_t a) const;
  std::string modulus_string() const;

 private:
  std::uint64_t poly_mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t poly_pow(std::uint64_t a, std::uint64_t e) const;
  void build_tables();

  std::uint64_t p_;
  int k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, size 2(q-1)
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
  std::vector<std::uint16_t> add_;  // full addition table when q is tiny
};

/// Element of a FiniteField. A default-constructed Gf is unbound and only
/// useful as a placeholder to be assigned over.
class Gf {
 public:
  Gf() = default;
  Gf(const FiniteField* field, std::uint64_t value) : f_(field), v_(value) {}

  const FiniteField& field() const { return *f_; }
  const FiniteField* field_ptr() const { return f_; }
  std::uint64_t value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  Gf zero_like() const { return {f_, 0}; }
  Gf one_like() const { return {f_, 1}; }
  Gf from_int(long n) const { return f_->from_int(n); }
  Gf inverse() const { return {f_, f_->inv(v_)}; }
  std::string to_string() const { return f_->format(v_); }

  Gf operator-() const { return {f_, f_->neg(v_)}; }
  Gf& operator+=(const Gf& o) { v_ = f_->add(v_, o.v_); return *this; }
  Gf& operator-=(const Gf& o) { v_ = f_->sub(v_, o.v_); return *this; }
  Gf& operator*=(const Gf& o) { v_ = f_->mul(v_, o.v_); return *this; }
  Gf& operator/=(const Gf& o) { v_ = f_->mul(v_, f_->inv(o.v_)); return *this; }

  friend Gf operator+(Gf a, const Gf& b) { return a += b; }
  friend Gf operator-(Gf a, const Gf& b) { return a -= b; }
  friend Gf operator*(Gf a, const Gf& b) { return a *= b; }
  friend Gf operator/(Gf a, const Gf& b) { return a /= b; }

  // Comparison is by encoding; elements of different fields never mix.
  friend bool operator==(const Gf& a, const Gf& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Gf& a, const Gf& b) { return a.v_ <=> b.v_; }

 private:
  const FiniteField* f_ = nullptr;
  std::uint64_t v_ = 0;
};

bool is_prime(std::uint64_t n);

/// True when the monic polynomial (coefficients constant-first, size k + 1)
/// has no factor of degree 1..k/2 over F_p. Brute force; meant for k <= 3.
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& monic, std::uint64_t p);

/// Lowest monic irreducible of degree k over F_p, searching encodings
/// c_0 + c_1 p + ... + c_{k-1} p^{k-1} upward.
std::vector<std::uint64_t> first_irreducible_modulus(std::uint64_t p, int k);

/// Cached F_{p^k}. Requires p prime, p >= 5 and 1 <= k <= 3. Thread-safe.
const FiniteField& build_ext_field(std::uint64_t p, int k);

}  // namespace hypsec
