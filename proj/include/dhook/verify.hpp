#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dhook/errors.hpp"
#include "dhook/hooks.hpp"
#include "dhook/poset.hpp"
#include "dhook/rational.hpp"
#include "dhook/rsk.hpp"

namespace dhook {

// ---------------------------------------------------------------------------
// Hook length formulas

struct ProctorResult {
  BigInt extensions;
  BigInt hook_product;
  BigInt factorial;
  bool ok = false;
};

/// Checks  #linear extensions * prod_p (hook length of p) == |P|!  exactly.
inline ProctorResult verify_proctor(const DPoset& dp, std::uint64_t cap = 1'000'000) {
  ProctorResult r;
  r.extensions = count_linear_extensions(dp.poset(), cap);
  r.hook_product = 1;
  for (Element p = 0; p < dp.size(); ++p) r.hook_product *= BigInt(static_cast<long>(dp.hook_length(p)));
  r.factorial = factorial(static_cast<unsigned>(dp.size()));
  r.ok = r.extensions * r.hook_product == r.factorial;
  return r;
}

struct WeightEvaluation {
  LinearExtension extension;
  Rational value;
};

/// weight(T)^-1 = prod_i (x_{D(p_i)} + ... + x_{D(p_n)}): factor i sums x over
/// the diagonals of the elements from p_i to the end of the extension.
inline WeightEvaluation weight_eval(const DPoset& dp, const LinearExtension& t, const RationalPoint& x) {
  if (!is_linear_extension(dp.poset(), t)) throw DomainError("weight_eval needs a linear extension");
  if (x.x.size() != dp.diagonals().count()) throw DomainError("point has the wrong number of diagonals");
  x.validate();
  Rational suffix = 0, denom = 1;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    suffix += x.x[dp.diagonal_of(*it)];
    denom *= suffix;
  }
  return {t, Rational(1) / denom};
}

inline Rational hook_product_eval(const DPoset& dp, const RationalPoint& x) {
  Rational prod = 1;
  for (Element p = 0; p < dp.size(); ++p) prod *= hook_polynomial_eval(dp.hook(p), x);
  return prod;
}

/// Sum of weight(T) over all linear extensions, enumerated one by one.
/// Refuses (DomainError) when there are more than `cap` extensions.
inline Rational sum_of_weights(const DPoset& dp, const RationalPoint& x, std::uint64_t cap = 1'000'000) {
  if (count_linear_extensions(dp.poset(), cap) > BigInt(std::to_string(cap)))
    throw DomainError("more than " + std::to_string(cap) + " linear extensions; refusing to enumerate");
  Rational total = 0;
  for_each_linear_extension(dp.poset(), [&](const LinearExtension& t) {
    total += weight_eval(dp, t, x).value;
    return true;
  });
  return total;
}

struct MultivariateReport {
  std::size_t points = 0;
  BigInt extensions;
  std::uint64_t seed = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// At `points` random positive rational points, checks
///   sum_T weight(T) == 1 / prod_p H_p(x)
/// with exact equality.
inline MultivariateReport verify_multivariate(const DPoset& dp, std::size_t points, std::uint64_t seed,
                                              std::uint64_t cap = 1'000'000) {
  MultivariateReport rep;
  rep.seed = seed;
  rep.extensions = count_linear_extensions(dp.poset(), cap);
  if (rep.extensions > BigInt(std::to_string(cap)))
    throw DomainError("more than " + std::to_string(cap) + " linear extensions; refusing to enumerate");
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < points; ++i) {
    auto x = random_point(dp.diagonals().count(), rng);
    Rational lhs = sum_of_weights(dp, x, cap);
    Rational rhs = Rational(1) / hook_product_eval(dp, x);
    ++rep.points;
    if (lhs != rhs) {
      std::string pt;
      for (const auto& v : x.x) pt += (pt.empty() ? "" : " ") + format_rational(v);
      rep.failures.push_back("x=[" + pt + "] lhs=" + format_rational(lhs) + " rhs=" + format_rational(rhs));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The two polytopes

enum class PolytopeKind { fillings, rpp };

struct PolytopeSpec {
  PolytopeKind kind = PolytopeKind::fillings;
  RationalPoint point;
};

/// fillings: t >= 0 and sum_p H_p(x) t_p <= 1.
/// rpp:      s >= 0, order-reversing, and sum_p x_{D(p)} s_p <= 1.
inline bool polytope_membership(const DPoset& dp, const PolytopeSpec& spec, const Filling& v) {
  if (v.size() != dp.size()) throw DomainError("vector has the wrong number of entries");
  if (!is_nonnegative(v)) return false;
  Rational total = 0;
  if (spec.kind == PolytopeKind::fillings) {
    for (Element p = 0; p < dp.size(); ++p) total += hook_polynomial_eval(dp.hook(p), spec.point) * v[p];
  } else {
    if (!is_order_reversing(dp.poset(), v)) return false;
    for (Element p = 0; p < dp.size(); ++p) total += spec.point.x[dp.diagonal_of(p)] * v[p];
  }
  return total <= 1;
}

/// Closed-form volumes: 1/(n! prod H_p(x)) for fillings and
/// (1/n!) sum_T weight(T) for rpp.
inline Rational polytope_volume(const DPoset& dp, const PolytopeSpec& spec, std::uint64_t cap = 1'000'000) {
  Rational nfact(factorial(static_cast<unsigned>(dp.size())));
  if (spec.kind == PolytopeKind::fillings) return Rational(1) / (nfact * hook_product_eval(dp, spec.point));
  return sum_of_weights(dp, spec.point, cap) / nfact;
}

/// Rejection sampling of the fillings simplex: coordinates are drawn on the
/// grid u_p / (2^20 H_p(x)), u_p uniform in [0, 2^20], and the draw is kept
/// when sum_p u_p <= 2^20. Throws after `max_attempts` rejections.
inline Filling sample_fillings_polytope(const DPoset& dp, const RationalPoint& x, std::mt19937_64& rng,
                                        std::uint64_t max_attempts = 4'000'000'000ULL) {
  constexpr std::uint64_t kGrid = 1ULL << 20;
  const std::size_t n = dp.size();
  std::vector<std::uint64_t> u(n);
  std::uniform_int_distribution<std::uint64_t> dist(0, kGrid);
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::uint64_t total = 0;
    std::size_t p = 0;
    for (; p < n && total <= kGrid; ++p) {
      u[p] = dist(rng);
      total += u[p];
    }
    if (p < n || total > kGrid) continue;
    Filling t(n);
    for (Element q = 0; q < n; ++q)
      t[q] = Rational(static_cast<unsigned long>(u[q])) /
             (Rational(static_cast<unsigned long>(kGrid)) * hook_polynomial_eval(dp.hook(q), x));
    return t;
  }
  throw DomainError("rejection sampler exceeded its attempt budget");
}

/// rsk maps random points of the fillings polytope into the rpp polytope,
/// inverse_rsk maps them back, and sum_p x_{D(p)} s_p == sum_p H_p(x) t_p.
inline OracleReport rsk_polytope_check(const DPoset& dp, const RationalPoint& x, std::size_t trials,
                                       std::uint64_t seed) {
  OracleReport r;
  std::mt19937_64 rng(seed);
  PolytopeSpec fill{PolytopeKind::fillings, x}, rpp{PolytopeKind::rpp, x};
  auto order = stable_insertion_order(dp);
  for (std::size_t i = 0; i < trials; ++i) {
    Filling t = sample_fillings_polytope(dp, x, rng);
    if (!polytope_membership(dp, fill, t)) {
      r.fail("sampler produced a point outside the fillings polytope");
      continue;
    }
    Filling s = rsk(dp, t, order);
    if (!polytope_membership(dp, rpp, s)) r.fail("image of trial " + std::to_string(i) + " is outside the rpp polytope");
    if (inverse_rsk(dp, s, order) != t) r.fail("trial " + std::to_string(i) + " does not round-trip");
    Rational lhs = 0, rhs = 0;
    for (Element p = 0; p < dp.size(); ++p) {
      lhs += x.x[dp.diagonal_of(p)] * s[p];
      rhs += hook_polynomial_eval(dp.hook(p), x) * t[p];
    }
    if (lhs != rhs)
      r.fail("trial " + std::to_string(i) + ": weighted sums differ " + format_rational(lhs) + " vs " +
             format_rational(rhs));
  }
  return r;
}

struct VolumeEstimate {
  double estimate = 0;
  double standard_error = 0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  double box_volume = 0;
  std::uint64_t seed = 0;
};

/// Hit-or-miss volume estimate. Each coordinate is drawn uniformly from
/// [0, b_p] where b_p bounds it on the polytope: 1/H_p(x) for fillings and
/// 1/sum_{q <= p} x_{D(q)} for rpp. Membership is tested in double precision.
inline VolumeEstimate monte_carlo_volume(const DPoset& dp, const PolytopeSpec& spec, std::uint64_t samples,
                                         std::uint64_t seed) {
  const std::size_t n = dp.size();
  const Poset& poset = dp.poset();
  std::vector<double> bound(n), weight(n);
  for (Element p = 0; p < n; ++p) {
    if (spec.kind == PolytopeKind::fillings) {
      weight[p] = hook_polynomial_eval(dp.hook(p), spec.point).get_d();
      bound[p] = 1.0 / weight[p];
    } else {
      weight[p] = spec.point.x[dp.diagonal_of(p)].get_d();
      Rational below = 0;
      for (Element q = 0; q < n; ++q)
        if (poset.leq(q, p)) below += spec.point.x[dp.diagonal_of(q)];
      bound[p] = 1.0 / below.get_d();
    }
  }
  auto covers = poset.cover_pairs();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> v(n);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    double total = 0;
    for (Element p = 0; p < n; ++p) {
      v[p] = unit(rng) * bound[p];
      total += weight[p] * v[p];
    }
    if (total > 1.0) continue;
    if (spec.kind == PolytopeKind::rpp) {
      bool ok = true;
      for (auto [lo, hi] : covers)
        if (v[lo] < v[hi]) {
          ok = false;
          break;
        }
      if (!ok) continue;
    }
    ++hits;
  }
  VolumeEstimate est;
  est.samples = samples;
  est.hits = hits;
  est.seed = seed;
  est.box_volume = 1.0;
  for (double b : bound) est.box_volume *= b;
  double frac = samples ? static_cast<double>(hits) / static_cast<double>(samples) : 0.0;
  est.estimate = frac * est.box_volume;
  est.standard_error =
      samples ? est.box_volume * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples)) : 0.0;
  return est;
}

}  // namespace dhook
