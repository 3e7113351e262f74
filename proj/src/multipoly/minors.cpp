#include "hypsec/multipoly/minors.hpp"

#include <stdexcept>

#include "hypsec/exactalg/linalg.hpp"

namespace hypsec {

namespace {

template <FieldElement F>
HomPoly<F> var(int i, const F& like) {
  Vec3<F> v{like.zero_like(), like.zero_like(), like.zero_like()};
  v[i] = like.one_like();
  return HomPoly<F>::linear(v);
}

template <FieldElement F>
std::vector<HomPoly<F>> nonzero_minors(const MinorTriple<F>& m) {
  std::vector<HomPoly<F>> out;
  for (const auto& q : m.generators())
    if (!q.is_zero()) out.push_back(q);
  if (out.empty()) throw std::invalid_argument("zero section");
  return out;
}

template <FieldElement F>
bool divides_all(const Vec3<F>& line, const std::vector<HomPoly<F>>& polys) {
  const HomPoly<F> l = HomPoly<F>::linear(line);
  for (const auto& q : polys)
    if (!divide_exact(q, l)) return false;
  return true;
}

}  // namespace

template <FieldElement F>
MinorTriple<F> raw_minors(const Matrix3<F>& a) {
  const F like = a.like();
  const HomPoly<F> x = var(0, like), y = var(1, like), z = var(2, like);
  const HomPoly<F> f1 = HomPoly<F>::linear(a.row(0));
  const HomPoly<F> f2 = HomPoly<F>::linear(a.row(1));
  const HomPoly<F> f3 = HomPoly<F>::linear(a.row(2));
  return {x * f2 - y * f1, x * f3 - z * f1, y * f3 - z * f2};
}

template <FieldElement F>
MinorTriple<F> minors_ideal(const SectionMatrix<F>& s) {
  s.require_nonzero();
  return raw_minors(s.matrix());
}

template <FieldElement F>
HomPoly<F> syzygy_residual(const MinorTriple<F>& m) {
  const F like = m.q12.like();
  return var(0, like) * m.q23 - var(1, like) * m.q13 + var(2, like) * m.q12;
}

template <FieldElement F>
int minor_span_rank(const MinorTriple<F>& m) {
  linalg::DenseMatrix<F> rows;
  for (const auto& q : m.generators()) rows.push_back(q.coeffs());
  return static_cast<int>(linalg::rank(rows));
}

template <FieldElement F>
std::optional<Vec3<F>> common_linear_factor_by_syzygy(const MinorTriple<F>& m) {
  const auto polys = nonzero_minors(m);
  // Pick two independent quadrics.
  std::size_t second = 0;
  for (std::size_t j = 1; j < polys.size() && second == 0; ++j) {
    linalg::DenseMatrix<F> rows{polys[0].coeffs(), polys[j].coeffs()};
    if (linalg::rank(rows) == 2) second = j;
  }
  if (second == 0) {
    // Span of dimension 1 cannot come from a nonzero section.
    throw std::logic_error("minor span has dimension 1");
  }
  const HomPoly<F>& q = polys[0];
  const HomPoly<F>& qq = polys[second];
  const F like = q.like();
  // Columns: x_j * q for u_j, then -x_j * qq for v_j; rows: cubic monomials.
  linalg::DenseMatrix<F> sys(mono::count(3), std::vector<F>(6, like));
  for (int j = 0; j < 3; ++j) {
    const HomPoly<F> a = var(j, like) * q;
    const HomPoly<F> b = -(var(j, like) * qq);
    for (int r = 0; r < mono::count(3); ++r) {
      sys[r][j] = a.coeff_at(r);
      sys[r][3 + j] = b.coeff_at(r);
    }
  }
  const auto ker = linalg::nullspace(sys, 6, like);
  if (ker.empty()) return std::nullopt;
  // u = c m', v = c m where q = l m, qq = l m'; so l = q / v up to scale.
  const Vec3<F> v{ker[0][3], ker[0][4], ker[0][5]};
  const auto l = divide_exact(q, HomPoly<F>::linear(v));
  if (!l) throw std::logic_error("linear factor extraction failed");
  const Vec3<F> line = normalize_projective(l->as_linear());
  if (!divides_all(line, polys)) return std::nullopt;
  return line;
}

std::optional<Vec3<Gf>> common_linear_factor_by_search(const MinorTriple<Gf>& m) {
  const auto polys = nonzero_minors(m);
  const FiniteField& f = m.q12.like().field();
  const std::uint64_t q = f.order();
  auto try_line = [&](const Vec3<Gf>& l) { return divides_all(l, polys); };
  // Normalized lines: (1, b, c), (0, 1, c), (0, 0, 1).
  for (std::uint64_t b = 0; b < q; ++b)
    for (std::uint64_t c = 0; c < q; ++c) {
      const Vec3<Gf> l{f.one(), f.element(b), f.element(c)};
      if (try_line(l)) return l;
    }
  for (std::uint64_t c = 0; c < q; ++c) {
    const Vec3<Gf> l{f.zero(), f.one(), f.element(c)};
    if (try_line(l)) return l;
  }
  const Vec3<Gf> l{f.zero(), f.zero(), f.one()};
  if (try_line(l)) return l;
  return std::nullopt;
}

template <FieldElement F>
std::optional<Vec3<F>> common_linear_factor(const MinorTriple<F>& m) {
  if constexpr (is_finite_field_v<F>) {
    return common_linear_factor_by_search(m);
  } else {
    return common_linear_factor_by_syzygy(m);
  }
}

#define HYPSEC_INSTANTIATE(F)                                                              \
  template MinorTriple<F> raw_minors(const Matrix3<F>&);                                   \
  template MinorTriple<F> minors_ideal(const SectionMatrix<F>&);                           \
  template HomPoly<F> syzygy_residual(const MinorTriple<F>&);                              \
  template int minor_span_rank(const MinorTriple<F>&);                                     \
  template std::optional<Vec3<F>> common_linear_factor_by_syzygy(const MinorTriple<F>&); \
  template std::optional<Vec3<F>> common_linear_factor(const MinorTriple<F>&);
HYPSEC_INSTANTIATE(Rational)
HYPSEC_INSTANTIATE(Gf)
#undef HYPSEC_INSTANTIATE

}  // namespace hypsec
