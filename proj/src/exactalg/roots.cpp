#include "hypsec/exactalg/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypsec {

namespace {

// Positive divisors of |n| (n != 0).
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (unsigned long d = 2; d <= 1000000 && mpz_class(d) * d <= n; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) {
      n /= d;
      ++e;
    }
    factors.emplace_back(mpz_class(d), e);
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0 && n > mpz_class("1000000000000"))
      throw std::domain_error("coefficient too large for rational root search");
    factors.emplace_back(n, 1);
  }
  std::vector<mpz_class> out{mpz_class(1)};
  for (const auto& [prime, e] : factors) {
    const std::size_t base = out.size();
    mpz_class pw = 1;
    for (unsigned i = 0; i < e; ++i) {
      pw *= prime;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pw);
    }
  }
  return out;
}

void split_roots(const UniPoly<Gf>& h, std::vector<Gf>& out) {
  if (h.degree() <= 0) return;
  if (h.degree() == 1) {
    const UniPoly<Gf> m = h.monic();
    out.push_back(-m.coeff(0));
    return;
  }
  const FiniteField& f = h.prototype().field();
  const std::uint64_t half = (f.order() - 1) / 2;
  const Gf one = f.one();
  for (std::uint64_t a = 0; a < f.order(); ++a) {
    const UniPoly<Gf> shifted(std::vector<Gf>{f.element(a), one});
    const UniPoly<Gf> w = pow_mod(shifted, half, h) - UniPoly<Gf>(std::vector<Gf>{one});
    if (w.is_zero()) continue;
    const UniPoly<Gf> g = gcd_monic(w, h);
    if (g.degree() > 0 && g.degree() < h.degree()) {
      split_roots(g, out);
      split_roots(h / g, out);
      return;
    }
  }
  throw std::logic_error("root splitting failed");
}

}  // namespace

std::vector<Rational> roots_in_field(const UniPoly<Rational>& f) {
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<Rational> roots;
  // Integer coefficients with the zero root split off.
  mpz_class lcm_den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : f.coeffs()) ints.push_back(mpz_class(c.get() * lcm_den));
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  ints.erase(ints.begin(), ints.begin() + static_cast<long>(low));
  if (ints.size() >= 2) {
    const auto num_cands = divisors(ints.front());
    const auto den_cands = divisors(ints.back());
    std::vector<Rational> poly_q;
    for (const auto& c : ints) poly_q.emplace_back(mpq_class(c));
    const UniPoly<Rational> g(poly_q);
    for (const auto& r : num_cands) {
      for (const auto& s : den_cands) {
        for (int sign : {1, -1}) {
          const Rational cand(mpq_class(mpz_class(sign * r), s));
          if (g.eval(cand).is_zero()) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<Gf> roots_in_field(const UniPoly<Gf>& f) {
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<Gf> roots;
  if (f.degree() == 0) return roots;
  const FiniteField& field = f.prototype().field();
  const UniPoly<Gf> t(std::vector<Gf>{field.zero(), field.one()});
  const UniPoly<Gf> frob = pow_mod(t, field.order(), f);
  const UniPoly<Gf> h = gcd_monic(frob - t, f);
  split_roots(h, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace hypsec
