#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dhook/catalog.hpp"
#include "dhook/classical.hpp"
#include "dhook/d_structure.hpp"
#include "dhook/diagonals.hpp"
#include "dhook/hooks.hpp"
#include "dhook/rsk.hpp"
#include "dhook/verify.hpp"

// The acceptance battery: ten end-to-end checks over the poset catalog.
// Shared by the acceptance test binary and `dhook suite`.
namespace dhook::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool ok = false;
  std::string detail;  // summary on success, first witness on failure
  double seconds = 0;
};

struct Options {
  std::uint64_t seed = 7;
  std::size_t hlf_points = 20;
  std::uint64_t hlf_extension_limit = 100'000;
  std::size_t rsk_trials = 100;
  std::size_t jacobian_points = 25;
  std::size_t jacobian_max_size = 10;
  std::size_t polytope_trials = 100;
  std::uint64_t mc_samples = 1'000'000;
  std::size_t mc_max_size = 6;
  double mc_sigmas = 4.0;
  std::size_t matrix_trials = 200;
};

namespace detail {

struct Analyzed {
  std::string name;
  DPoset dp;
};

inline std::vector<Analyzed> analyzed_catalog() {
  std::vector<Analyzed> out;
  for (auto& e : catalog()) out.push_back({e.name, DPoset::analyze(std::move(e.poset))});
  return out;
}

inline std::uint64_t sub_seed(std::uint64_t seed, std::size_t index, int criterion) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(criterion)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

// Collects failures, keeping the first few as witnesses.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> witnesses;

  void fail(const std::string& where, const std::string& what) {
    ++failed;
    if (witnesses.size() < 3) witnesses.push_back(where + ": " + what);
  }
  void fill(CriterionResult& r, const std::string& summary) const {
    r.ok = failed == 0;
    if (r.ok) {
      r.detail = summary;
      return;
    }
    r.detail = std::to_string(failed) + " failures";
    for (const auto& w : witnesses) r.detail += "; " + w;
  }
};

inline Filling from_ints(std::initializer_list<long> v) {
  Filling f;
  for (long x : v) f.emplace_back(x);
  return f;
}

}  // namespace detail

inline CriterionResult proctor_identity(const std::vector<detail::Analyzed>& cat) {
  CriterionResult r{1, "proctor-identity", false, {}, 0};
  detail::Tally tally;
  for (const auto& e : cat) {
    ++tally.checked;
    auto res = verify_proctor(e.dp);
    if (!res.ok)
      tally.fail(e.name, "extensions=" + res.extensions.get_str() + " hook_product=" + res.hook_product.get_str() +
                             " factorial=" + res.factorial.get_str());
  }
  auto d4 = verify_proctor(DPoset::analyze(d_k_one(4)));
  if (d4.extensions != 2 || d4.hook_product != 360 || d4.factorial != 720 || !d4.ok)
    tally.fail("d4", "expected extensions=2 hook_product=360 factorial=720");
  tally.fill(r, std::to_string(tally.checked) + " posets; d4: extensions=2 hook_product=360 factorial=720");
  return r;
}

inline CriterionResult multivariate_identity(const std::vector<detail::Analyzed>& cat, const Options& opt) {
  CriterionResult r{2, "multivariate-identity", false, {}, 0};
  detail::Tally tally;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& e = cat[i];
    if (count_linear_extensions(e.dp.poset()) > BigInt(std::to_string(opt.hlf_extension_limit))) {
      ++skipped;
      continue;
    }
    ++tally.checked;
    auto rep = verify_multivariate(e.dp, opt.hlf_points, detail::sub_seed(opt.seed, i, 2));
    if (!rep.ok()) tally.fail(e.name, rep.failures.front());
  }
  tally.fill(r, std::to_string(tally.checked) + " posets x " + std::to_string(opt.hlf_points) + " points" +
                    (skipped ? ", " + std::to_string(skipped) + " over the extension limit" : ""));
  return r;
}

/// Worked example on d_4(1): ids 0,1 tail (bottom up), 2,3 sides, 4,5 neck.
inline CriterionResult worked_rsk_example() {
  CriterionResult r{3, "worked-rsk-example", false, {}, 0};
  auto dp = DPoset::analyze(d_k_one(4));
  LinearExtension order{5, 4, 2, 3, 1, 0};
  Filling t = detail::from_ints({2, 2, 3, 4, 2, 1});
  Filling expect = detail::from_ints({11, 9, 6, 7, 4, 3});
  Filling s = rsk(dp, t, order);
  detail::Tally tally;
  if (s != expect) {
    std::string got;
    for (const auto& v : s) got += " " + format_rational(v);
    tally.fail("d4", "rsk gave" + got);
  }
  if (inverse_rsk(dp, s, order) != t) tally.fail("d4", "inverse_rsk does not recover the input");
  tally.fill(r, "labels 3,4,6,7,9,11; inverse recovers 1,2,3,4,2,2");
  return r;
}

/// Criteria 4 and 5 share the randomized RSK oracle runs.
inline std::pair<CriterionResult, CriterionResult> rsk_identities(const std::vector<detail::Analyzed>& cat,
                                                                 const Options& opt) {
  CriterionResult sums{4, "diagonal-sum-identity", false, {}, 0}, order{5, "order-independence", false, {}, 0};
  detail::Tally ts, to;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& e = cat[i];
    ++ts.checked;
    ++to.checked;
    auto rep = rsk_oracles(e.dp, opt.rsk_trials, detail::sub_seed(opt.seed, i, 4));
    for (const auto& f : rep.failures) {
      if (f.rfind("(b)", 0) == 0) ts.fail(e.name, f);
      if (f.rfind("(a)", 0) == 0) to.fail(e.name, f);
    }
  }
  auto dp = DPoset::analyze(d_k_one(4));
  Filling s = rsk(dp, detail::from_ints({2, 2, 3, 4, 2, 1}), LinearExtension{5, 4, 2, 3, 1, 0});
  if (diagonal_sums(dp.diagonals(), s) != std::vector<Rational>{14, 13, 6, 7})
    ts.fail("d4", "diagonal sums differ from 14,13,6,7");
  std::string per = std::to_string(ts.checked) + " posets x " + std::to_string(opt.rsk_trials) + " fillings";
  ts.fill(sums, per + "; d4 sums 14,13,6,7");
  to.fill(order, per);
  return {sums, order};
}

inline CriterionResult volume_preservation(const std::vector<detail::Analyzed>& cat, const Options& opt) {
  CriterionResult r{6, "volume-preservation", false, {}, 0};
  detail::Tally tally;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& e = cat[i];
    if (e.dp.size() > opt.jacobian_max_size) continue;
    ++tally.checked;
    std::mt19937_64 rng(detail::sub_seed(opt.seed, i, 6));
    std::size_t done = 0, attempts = 0;
    while (done < opt.jacobian_points && attempts < 100 * opt.jacobian_points) {
      ++attempts;
      Filling t = random_filling(e.dp.size(), rng);
      auto order = random_linear_extension(e.dp.poset(), rng);
      auto jac = rsk_jacobian(e.dp, t, order);
      if (!jac) continue;  // a tie: not a generic point
      ++done;
      if (abs(jac->determinant) != 1) tally.fail(e.name, "determinant " + format_rational(jac->determinant));
    }
    if (done < opt.jacobian_points) tally.fail(e.name, "could not find enough generic points");
  }
  tally.fill(r, std::to_string(tally.checked) + " posets x " + std::to_string(opt.jacobian_points) +
                    " generic points, |det| = 1");
  return r;
}

inline CriterionResult polytope_bijection(const std::vector<detail::Analyzed>& cat, const Options& opt) {
  CriterionResult r{7, "polytope-bijection", false, {}, 0};
  detail::Tally tally;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& e = cat[i];
    ++tally.checked;
    std::uint64_t seed = detail::sub_seed(opt.seed, i, 7);
    std::mt19937_64 rng(seed);
    auto x = random_point(e.dp.diagonals().count(), rng);
    auto rep = rsk_polytope_check(e.dp, x, opt.polytope_trials, seed + 1);
    if (!rep.ok()) tally.fail(e.name, rep.failures.front());
  }
  tally.fill(r, std::to_string(tally.checked) + " posets x " + std::to_string(opt.polytope_trials) + " points");
  return r;
}

inline CriterionResult structural(const std::vector<detail::Analyzed>& cat) {
  CriterionResult r{8, "structural-oracles", false, {}, 0};
  detail::Tally tally;
  for (const auto& e : cat) {
    ++tally.checked;
    const Poset& p = e.dp.poset();
    if (!check_d_complete(p).is_d_complete) tally.fail(e.name, "not d-complete");
    OracleReport rep = structural_oracles(p);
    rep.merge(diagonal_oracles(p, e.dp.diagonals()));
    if (!is_stable(e.dp, stable_insertion_order(e.dp))) rep.fail("constructed insertion order is not stable");
    if (!rep.ok()) tally.fail(e.name, rep.failures.front());
  }
  tally.fill(r, std::to_string(tally.checked) + " posets");
  return r;
}

/// (P, Q) from row insertion against the SSYTs read off the toggle RPP.
inline std::optional<std::string> classical_mismatch(const classical::MatrixFilling& m) {
  auto [p, q] = classical::classical_insert_rsk(m);
  auto rpp = classical::toggle_rpp(m);
  if (!classical::is_rpp(rpp)) return "toggle output is not an RPP";
  auto [lower, upper] = classical::gt_from_rpp(rpp);
  if (classical::ssyt_from_gt(lower) != p) return "lower pattern does not give P";
  if (classical::ssyt_from_gt(upper) != q) return "upper pattern does not give Q";
  return std::nullopt;
}

inline CriterionResult appendix_equivalence(const Options& opt) {
  CriterionResult r{9, "appendix-equivalence", false, {}, 0};
  detail::Tally tally;
  classical::MatrixFilling m{{{1, 0, 2}, {0, 2, 0}, {1, 1, 0}}};
  auto rpp = classical::toggle_rpp(m);
  if (rpp.rows != std::vector<std::vector<classical::Entry>>{{1, 2, 3}, {1, 2, 3}, {2, 4, 4}})
    tally.fail("appendix", "RPP differs from (1,2,3)/(1,2,3)/(2,4,4)");
  auto [lower, upper] = classical::gt_from_rpp(rpp);
  if (lower.rows != std::vector<std::vector<classical::Entry>>{{4, 2, 1}, {4, 1}, {2}})
    tally.fail("appendix", "lower pattern differs from 4,2,1/4,1/2");
  if (upper.rows != std::vector<std::vector<classical::Entry>>{{4, 2, 1}, {3, 2}, {3}})
    tally.fail("appendix", "upper pattern differs from 4,2,1/3,2/3");
  auto [p, q] = classical::classical_insert_rsk(m);
  if (p.rows != std::vector<std::vector<int>>{{1, 1, 2, 2}, {2, 3}, {3}}) tally.fail("appendix", "P differs");
  if (q.rows != std::vector<std::vector<int>>{{1, 1, 1, 3}, {2, 2}, {3}}) tally.fail("appendix", "Q differs");
  if (auto bad = classical_mismatch(m)) tally.fail("appendix", *bad);

  std::mt19937_64 rng(detail::sub_seed(opt.seed, 0, 9));
  std::uniform_int_distribution<int> entry(0, 4);
  for (std::size_t size : {3, 4})
    for (std::size_t trial = 0; trial < opt.matrix_trials; ++trial) {
      classical::MatrixFilling rm;
      rm.rows.assign(size, std::vector<classical::Entry>(size));
      for (auto& row : rm.rows)
        for (auto& v : row) v = entry(rng);
      ++tally.checked;
      if (auto bad = classical_mismatch(rm)) tally.fail(std::to_string(size) + "x" + std::to_string(size), *bad);
    }
  tally.fill(r, "appendix example plus " + std::to_string(tally.checked) + " random matrices");
  return r;
}

inline CriterionResult monte_carlo(const std::vector<detail::Analyzed>& cat, const Options& opt) {
  CriterionResult r{10, "monte-carlo-volume", false, {}, 0};
  detail::Tally tally;
  double worst = 0;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& e = cat[i];
    if (e.dp.size() > opt.mc_max_size) continue;
    std::mt19937_64 rng(detail::sub_seed(opt.seed, i, 10));
    auto x = random_point(e.dp.diagonals().count(), rng);
    for (auto kind : {PolytopeKind::fillings, PolytopeKind::rpp}) {
      ++tally.checked;
      PolytopeSpec spec{kind, x};
      double exact = polytope_volume(e.dp, spec).get_d();
      auto est = monte_carlo_volume(e.dp, spec, opt.mc_samples, rng());
      double z = est.standard_error > 0 ? std::abs(est.estimate - exact) / est.standard_error
                                        : (est.estimate == exact ? 0.0 : INFINITY);
      worst = std::max(worst, z);
      if (!(z <= opt.mc_sigmas))
        tally.fail(e.name, std::string(kind == PolytopeKind::fillings ? "fillings" : "rpp") +
                               " estimate off by " + std::to_string(z) + " standard errors");
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", worst);
  tally.fill(r, std::to_string(tally.checked) + " volumes, worst deviation " + buf + " standard errors");
  return r;
}

/// Runs every criterion in order; `report` is called as each one finishes.
inline std::vector<CriterionResult> run_all(const Options& opt,
                                            const std::function<void(const CriterionResult&)>& report = {}) {
  using clock = std::chrono::steady_clock;
  std::vector<CriterionResult> out;
  auto cat = detail::analyzed_catalog();
  auto emit = [&](CriterionResult r, clock::time_point start) {
    r.seconds = std::chrono::duration<double>(clock::now() - start).count();
    if (report) report(r);
    out.push_back(std::move(r));
  };
  auto t = clock::now();
  emit(proctor_identity(cat), t);
  t = clock::now();
  emit(multivariate_identity(cat, opt), t);
  t = clock::now();
  emit(worked_rsk_example(), t);
  t = clock::now();
  auto [sums, order] = rsk_identities(cat, opt);
  double shared = std::chrono::duration<double>(clock::now() - t).count();
  sums.seconds = order.seconds = shared;
  for (auto* c : {&sums, &order}) {
    if (report) report(*c);
    out.push_back(*c);
  }
  t = clock::now();
  emit(volume_preservation(cat, opt), t);
  t = clock::now();
  emit(polytope_bijection(cat, opt), t);
  t = clock::now();
  emit(structural(cat), t);
  t = clock::now();
  emit(appendix_equivalence(opt), t);
  t = clock::now();
  emit(monte_carlo(cat, opt), t);
  return out;
}

}  // namespace dhook::acceptance
