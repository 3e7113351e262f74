#include "hypsec/flagcount/flagcount.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "hypsec/classify/classify.hpp"
#include "hypsec/multipoly/oracle.hpp"
#include "hypsec/multipoly/points.hpp"
#include "hypsec/sections/hyperplane.hpp"

namespace hypsec {

namespace {

const FiniteField& prime_field_of(const SectionMatrix<Gf>& s) {
  const FiniteField& f = s.like().field();
  if (f.degree() != 1) throw std::invalid_argument("flag counts are defined over prime fields only");
  return f;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::vector<Vec3<Gf>> projective_points(const FiniteField& field) {
  const std::uint64_t q = field.order();
  const Gf zero = field.zero(), one = field.one();
  std::vector<Vec3<Gf>> pts;
  pts.reserve(q * q + q + 1);
  pts.push_back({zero, zero, one});
  for (std::uint64_t z = 0; z < q; ++z) pts.push_back({zero, one, field.element(z)});
  for (std::uint64_t y = 0; y < q; ++y)
    for (std::uint64_t z = 0; z < q; ++z) pts.push_back({one, field.element(y), field.element(z)});
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<FlagPoint> enumerate_flags(const FiniteField& field) {
  const auto pts = projective_points(field);
  std::vector<FlagPoint> flags;
  for (const auto& a : pts)
    for (const auto& b : pts)
      if (dot(a, b).is_zero()) flags.push_back({a, b});
  return flags;
}

Gf evaluate_section_at_flag(const SectionMatrix<Gf>& s, const FlagPoint& f) {
  if (!dot(f.a, f.b).is_zero()) throw std::invalid_argument("flag point violates incidence");
  const Matrix3<Gf>& m = s.matrix();
  Gf acc = s.like();
  for (int i = 0; i < 3; ++i) {
    if (f.a[i].is_zero()) continue;
    acc += f.a[i] * dot(m.row(i), f.b);
  }
  return acc;
}

namespace {

// Evaluation without the incidence check, for flags known to be incident.
bool vanishes(const Matrix3<Gf>& m, const FlagPoint& f) {
  Gf acc = m.like();
  for (int i = 0; i < 3; ++i) acc += f.a[i] * (m(i, 0) * f.b[0] + m(i, 1) * f.b[1] + m(i, 2) * f.b[2]);
  return acc.is_zero();
}

}  // namespace

std::uint64_t count_section_zeros_serial(const SectionMatrix<Gf>& s, const std::vector<FlagPoint>& flags) {
  std::uint64_t n = 0;
  for (const auto& f : flags) n += vanishes(s.matrix(), f);
  return n;
}

std::uint64_t count_section_zeros_parallel(const SectionMatrix<Gf>& s, const std::vector<FlagPoint>& flags) {
  const Matrix3<Gf>& m = s.matrix();
  const auto size = static_cast<std::int64_t>(flags.size());
  std::uint64_t n = 0;
#pragma omp parallel for reduction(+ : n) schedule(static)
  for (std::int64_t i = 0; i < size; ++i) n += vanishes(m, flags[i]);
  return n;
}

CountReport count_hyperplane_section(const SectionMatrix<Gf>& s, const std::vector<FlagPoint>& flags, std::uint64_t n,
                                     bool parallel) {
  s.require_nonzero();
  const std::uint64_t q = prime_field_of(s).order();
  CountReport r;
  r.q = q;
  r.total_flag = flags.size();
  r.section_count = parallel ? count_section_zeros_parallel(s, flags) : count_section_zeros_serial(s, flags);
  r.N = n;
  r.predicted = q * q + q + 1 + q * n;
  r.match = r.predicted == r.section_count;
  return r;
}

CountReport count_hyperplane_section(const SectionMatrix<Gf>& s, bool parallel) {
  s.require_nonzero();
  const FiniteField& field = prime_field_of(s);
  const auto n = count_rational_points(minors_ideal(s).generators(), field);
  return count_hyperplane_section(s, enumerate_flags(field), n, parallel);
}

CountReport count_hyperplane_section(const SectionMatrix<Rational>& s, std::uint64_t q, bool parallel) {
  return count_hyperplane_section(reduce_section(s, build_ext_field(q, 1)), parallel);
}

bool SweepSummary::all_types_present() const {
  return std::all_of(tallies.begin(), tallies.end(), [](std::uint64_t t) { return t > 0; });
}

std::uint64_t exhaustive_class_count(std::uint64_t q) { return (ipow(q, 8) - 1) / (q - 1); }

std::array<std::uint64_t, 8> exhaustive_class(std::uint64_t q, std::uint64_t index) {
  if (index >= exhaustive_class_count(q)) throw std::out_of_range("class index out of range");
  std::array<std::uint64_t, 8> c{};
  int lead = 0;
  for (;; ++lead) {
    const std::uint64_t block = ipow(q, 7 - lead);
    if (index < block) break;
    index -= block;
  }
  c[lead] = 1;
  for (int j = 7; j > lead; --j) {
    c[j] = index % q;
    index /= q;
  }
  return c;
}

std::vector<std::array<std::uint64_t, 8>> sample_classes(std::uint64_t q, std::uint64_t count, std::uint64_t seed) {
  if (count > exhaustive_class_count(q)) throw std::invalid_argument("sample larger than the number of classes");
  const FiniteField& field = build_ext_field(q, 1);
  std::mt19937_64 rng(seed);
  std::set<std::array<std::uint64_t, 8>> seen;
  std::vector<std::array<std::uint64_t, 8>> out;
  out.reserve(count);
  while (out.size() < count) {
    std::array<std::uint64_t, 8> c;
    for (auto& x : c) x = rng() % q;
    auto lead = std::find_if(c.begin(), c.end(), [](std::uint64_t x) { return x != 0; });
    if (lead == c.end()) continue;
    const std::uint64_t inv = field.inv(*lead);
    for (auto& x : c) x = field.mul(x, inv);
    if (seen.insert(c).second) out.push_back(c);
  }
  return out;
}

namespace {

struct SweepContext {
  const FiniteField* field;
  OracleFields oracle_fields;
  std::vector<FlagPoint> flags;
  int d_max;
};

struct Tally {
  std::array<std::uint64_t, 5> types{};
  std::uint64_t inconsistent = 0;
  std::vector<SweepFailure> failures;
};

void check_class(const SweepContext& ctx, std::uint64_t index, const std::array<std::uint64_t, 8>& coords, Tally& t) {
  std::array<Gf, 8> c;
  for (int i = 0; i < 8; ++i) c[i] = ctx.field->element(coords[i]);
  const HyperplaneP7<Gf> h(c);
  const SectionMatrix<Gf> s = hyperplane_to_section(h);
  auto fail = [&](std::string reason) {
    t.failures.push_back({index, h.to_string(), render_section(s), std::move(reason)});
  };
  try {
    const auto report = classify_section(s);
    const auto oracle = oracle_classify(s, ctx.oracle_fields, ctx.d_max);
    t.types[type_index(report.type)]++;
    if (!oracle.deduced_type) {
      t.inconsistent++;
      fail("oracle inconsistent: " + oracle.inconsistency);
    } else if (*oracle.deduced_type != report.type) {
      fail("classifier says " + std::string(type_letter(report.type)) + ", oracle says " +
           std::string(type_letter(*oracle.deduced_type)));
    }
    const std::uint64_t n = oracle.base_points.size();
    const CountReport count = count_hyperplane_section(s, ctx.flags, n, false);
    if (!count.match)
      fail("flag count " + std::to_string(count.section_count) + " != predicted " + std::to_string(count.predicted));
    if (predicted_rational_points(report, ctx.field->order()) != n)
      fail("classifier implies " + std::to_string(predicted_rational_points(report, ctx.field->order())) +
           " rational zeros, enumeration found " + std::to_string(n));
  } catch (const std::exception& e) {
    fail(std::string("exception: ") + e.what());
  }
}

}  // namespace

SweepSummary sweep_verify(const SweepOptions& opt) {
  const bool exhaustive = !opt.sample.has_value();
  if (exhaustive && opt.q != 5 && opt.q != 7) throw std::invalid_argument("exhaustive sweep supports q = 5 or 7");
  SweepContext ctx;
  ctx.field = &build_ext_field(opt.q, 1);
  if (ctx.field->order() != opt.q) throw std::invalid_argument("sweep requires a prime field");
  ctx.oracle_fields = OracleFields::for_prime(opt.q);
  ctx.flags = enumerate_flags(*ctx.field);
  ctx.d_max = opt.d_max;

  SweepSummary summary;
  summary.q = opt.q;
  summary.exhaustive = exhaustive;
  summary.seed = opt.seed;
  std::vector<std::array<std::uint64_t, 8>> sampled;
  if (exhaustive) {
    summary.classes = exhaustive_class_count(opt.q);
  } else {
    summary.sample = *opt.sample;
    sampled = sample_classes(opt.q, *opt.sample, opt.seed);
    summary.classes = sampled.size();
  }
  auto coords_of = [&](std::uint64_t i) { return exhaustive ? exhaustive_class(opt.q, i) : sampled[i]; };

  Tally total;
  const auto n = static_cast<std::int64_t>(summary.classes);
  if (opt.parallel) {
#pragma omp parallel
    {
      Tally local;
#pragma omp for schedule(dynamic, 256) nowait
      for (std::int64_t i = 0; i < n; ++i) check_class(ctx, i, coords_of(i), local);
#pragma omp critical
      {
        for (int k = 0; k < 5; ++k) total.types[k] += local.types[k];
        total.inconsistent += local.inconsistent;
        total.failures.insert(total.failures.end(), local.failures.begin(), local.failures.end());
      }
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) check_class(ctx, i, coords_of(i), total);
  }
  std::stable_sort(total.failures.begin(), total.failures.end(),
                   [](const SweepFailure& a, const SweepFailure& b) { return a.index < b.index; });
  summary.tallies = total.types;
  summary.inconsistent = total.inconsistent;
  summary.failures = std::move(total.failures);
  return summary;
}

}  // namespace hypsec
