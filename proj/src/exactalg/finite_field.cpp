#include "hypsec/exactalg/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace hypsec {

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;
constexpr std::uint64_t kAddTableLimit = 512;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& monic, std::uint64_t p) {
  const int k = static_cast<int>(monic.size()) - 1;
  if (k <= 0 || monic.back() != 1) throw std::invalid_argument("expected a monic polynomial of positive degree");
  // Trial division by every monic polynomial of degree 1..k/2.
  for (int d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
      std::vector<std::uint64_t> div(d + 1, 0);
      std::uint64_t e = enc;
      for (int i = 0; i < d; ++i) {
        div[i] = e % p;
        e /= p;
      }
      div[d] = 1;
      std::vector<std::uint64_t> rem = monic;
      for (int top = k; top >= d; --top) {
        const std::uint64_t c = rem[top];
        if (c == 0) continue;
        for (int i = 0; i <= d; ++i) {
          rem[top - d + i] = (rem[top - d + i] + p - mulmod(c, div[i], p)) % p;
        }
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero = zero && rem[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> first_irreducible_modulus(std::uint64_t p, int k) {
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::uint64_t enc = 0; enc < count; ++enc) {
    std::vector<std::uint64_t> m(k + 1, 0);
    std::uint64_t e = enc;
    for (int i = 0; i < k; ++i) {
      m[i] = e % p;
      e /= p;
    }
    m[k] = 1;
    if (is_irreducible_mod_p(m, p)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FiniteField::FiniteField(std::uint64_t p, int k, std::vector<std::uint64_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < k_; ++i) q_ *= p_;
  if (k_ > 1) build_tables();
}

void FiniteField::build_tables() {
  if (q_ > kTableLimit) return;
  // Find a generator of the multiplicative group.
  const auto factors = prime_factors(q_ - 1);
  std::uint64_t g = 0;
  for (std::uint64_t cand = 2; cand < q_; ++cand) {
    bool ok = true;
    for (std::uint64_t r : factors) {
      if (poly_pow(cand, (q_ - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = cand;
      break;
    }
  }
  if (g == 0) throw std::logic_error("no primitive element");
  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = static_cast<std::uint32_t>(x);
    exp_[i + q_ - 1] = static_cast<std::uint32_t>(x);
    log_[x] = static_cast<std::uint32_t>(i);
    x = poly_mul(x, g);
  }
  if (q_ <= kAddTableLimit) {
    add_.assign(q_ * q_, 0);
    for (std::uint64_t a = 0; a < q_; ++a) {
      for (std::uint64_t b = 0; b < q_; ++b) {
        std::uint64_t r = 0, scale = 1, aa = a, bb = b;
        for (int i = 0; i < k_; ++i) {
          r += ((aa % p_ + bb % p_) % p_) * scale;
          aa /= p_;
          bb /= p_;
          scale *= p_;
        }
        add_[a * q_ + b] = static_cast<std::uint16_t>(r);
      }
    }
  }
}

Gf FiniteField::zero() const { return {this, 0}; }
Gf FiniteField::one() const { return {this, 1}; }

Gf FiniteField::from_int(long n) const {
  const auto pp = static_cast<long long>(p_);
  long long r = static_cast<long long>(n) % pp;
  if (r < 0) r += pp;
  return {this, static_cast<std::uint64_t>(r)};
}

Gf FiniteField::element(std::uint64_t encoding) const {
  if (encoding >= q_) throw std::out_of_range("encoding outside the field");
  return {this, encoding};
}

Gf FiniteField::embed(const Gf& base) const {
  if (base.field().characteristic() != p_ || base.field().degree() != 1)
    throw std::invalid_argument("embed expects an element of the prime field");
  return {this, base.value()};
}

std::uint64_t FiniteField::add(std::uint64_t a, std::uint64_t b) const {
  if (k_ == 1) {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (!add_.empty()) return add_[a * q_ + b];
  std::uint64_t r = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    std::uint64_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    r += d * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

std::uint64_t FiniteField::neg(std::uint64_t a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint64_t r = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    const std::uint64_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

std::uint64_t FiniteField::sub(std::uint64_t a, std::uint64_t b) const {
  if (k_ == 1) return a >= b ? a - b : a + p_ - b;
  return add(a, neg(b));
}

std::uint64_t FiniteField::mul(std::uint64_t a, std::uint64_t b) const {
  if (k_ == 1) return mulmod(a, b, p_);
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return poly_mul(a, b);
}

std::uint64_t FiniteField::inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("division by zero");
  if (k_ == 1) return powmod(a, p_ - 2, p_);
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return poly_pow(a, q_ - 2);
}

std::uint64_t FiniteField::poly_mul(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t da[3] = {0, 0, 0}, db[3] = {0, 0, 0};
  for (int i = 0; i < k_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  std::uint64_t prod[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p_)) % p_;
  for (int top = 2 * k_ - 2; top >= k_; --top) {
    const std::uint64_t c = prod[top];
    if (c == 0) continue;
    for (int i = 0; i <= k_; ++i) {
      prod[top - k_ + i] = (prod[top - k_ + i] + p_ - mulmod(c, modulus_[i], p_)) % p_;
    }
  }
  std::uint64_t r = 0;
  for (int i = k_ - 1; i >= 0; --i) r = r * p_ + prod[i];
  return r;
}

std::uint64_t FiniteField::poly_pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = poly_mul(r, a);
    a = poly_mul(a, a);
    e >>= 1;
  }
  return r;
}

std::string FiniteField::format(std::uint64_t a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  std::vector<std::uint64_t> d(k_);
  for (int i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  std::string out;
  for (int i = k_ - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(d[i]);
    } else {
      if (d[i] != 1) out += std::to_string(d[i]);
      out += "a";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::string FiniteField::modulus_string() const {
  std::string out;
  for (int i = k_; i >= 0; --i) {
    const std::uint64_t c = modulus_[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

const FiniteField& build_ext_field(std::uint64_t p, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("extension degree must be 1, 2 or 3");
  if (p < 5) throw std::invalid_argument("characteristic restriction: p must be >= 5");
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("characteristic too large");
  unsigned __int128 q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q >= (static_cast<unsigned __int128>(1) << 62)) throw std::invalid_argument("field too large");

  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, int>, std::unique_ptr<FiniteField>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) {
    std::vector<std::uint64_t> modulus = k == 1 ? std::vector<std::uint64_t>{0, 1} : first_irreducible_modulus(p, k);
    slot = std::make_unique<FiniteField>(p, k, std::move(modulus));
  }
  return *slot;
}

}  // namespace hypsec
