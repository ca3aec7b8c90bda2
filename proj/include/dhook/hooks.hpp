#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "dhook/d_structure.hpp"
#include "dhook/diagonals.hpp"
#include "dhook/errors.hpp"
#include "dhook/poset.hpp"
#include "dhook/rational.hpp"

namespace dhook {

/// Integer vector indexed by diagonal id. Used both for hook vectors and for
/// indicator vectors; the zero vector stands for elements outside the poset.
struct DiagonalVector {
  std::vector<long long> entries;

  static DiagonalVector zero(std::size_t diagonals) { return {std::vector<long long>(diagonals, 0)}; }

  std::size_t size() const { return entries.size(); }
  long long sum() const { return std::accumulate(entries.begin(), entries.end(), 0LL); }

  DiagonalVector& operator+=(const DiagonalVector& o) {
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += o.entries[i];
    return *this;
  }
  DiagonalVector& operator-=(const DiagonalVector& o) {
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] -= o.entries[i];
    return *this;
  }
  friend DiagonalVector operator+(DiagonalVector a, const DiagonalVector& b) { return a += b; }
  friend DiagonalVector operator-(DiagonalVector a, const DiagonalVector& b) { return a -= b; }
  friend bool operator==(const DiagonalVector&, const DiagonalVector&) = default;
};

using HookVector = DiagonalVector;
using IndicatorVector = DiagonalVector;

/// Kronecker delta on D(p).
inline IndicatorVector indicator(const DiagonalPartition& part, Element p) {
  auto v = IndicatorVector::zero(part.count());
  v.entries[part.diagonal_of[p]] = 1;
  return v;
}

inline IndicatorVector indicator(const DiagonalPartition& part, const ElementSet& s) {
  auto v = IndicatorVector::zero(part.count());
  for (Element e : s.members()) ++v.entries[part.diagonal_of[e]];
  return v;
}

/// Positive rational value per diagonal.
struct RationalPoint {
  std::vector<Rational> x;

  static RationalPoint ones(std::size_t diagonals) { return {std::vector<Rational>(diagonals, Rational(1))}; }

  void validate() const {
    for (const auto& v : x)
      if (sgn(v) <= 0) throw DomainError("evaluation point coordinates must be positive");
  }
};

inline RationalPoint random_point(std::size_t diagonals, std::mt19937_64& rng) {
  RationalPoint pt;
  for (std::size_t i = 0; i < diagonals; ++i) pt.x.push_back(random_rational(rng));
  return pt;
}

/// Hook vectors by element. Elements are processed bottom-up: an element that
/// tops a d-interval [p', p] with sides w, z gets h(w) + h(z) - h(p');
/// any other element counts, per diagonal, the elements below it.
inline std::vector<HookVector> hook_vectors(const Poset& poset, const DiagonalPartition& part,
                                            const std::vector<DInterval>& intervals) {
  const std::size_t n = poset.size();
  std::vector<const DInterval*> topped(n, nullptr);
  for (const auto& d : intervals) {
    if (topped[d.top])
      throw ContractError("element " + poset.label(d.top) +
                          " tops two d-intervals; hook vectors need a d-complete poset");
    topped[d.top] = &d;
  }
  // Bottom-up order: reverse of any linear extension.
  LinearExtension order;
  for_each_linear_extension(poset, [&](const LinearExtension& t) {
    order = t;
    return false;
  });
  std::vector<HookVector> h(n, HookVector::zero(part.count()));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Element p = *it;
    if (const DInterval* d = topped[p])
      h[p] = h[d->sides[0]] + h[d->sides[1]] - h[d->bottom];
    else
      h[p] = indicator(part, poset.down_set(p));
  }
  return h;
}

inline Rational hook_polynomial_eval(const HookVector& h, const RationalPoint& x) {
  if (h.size() != x.x.size())
    throw DomainError("hook vector has " + std::to_string(h.size()) + " diagonals, point has " +
                      std::to_string(x.x.size()));
  Rational total = 0;
  for (std::size_t d = 0; d < h.size(); ++d) total += Rational(static_cast<long>(h.entries[d])) * x.x[d];
  return total;
}

/// A poset verified to be d-complete, with its d-intervals, diagonals and
/// hook vectors computed once.
class DPoset {
 public:
  /// Throws ContractError when the poset is not d-complete.
  static DPoset analyze(Poset poset) {
    auto report = check_d_complete(poset);
    if (!report.is_d_complete) {
      const auto& v = report.violations.front();
      throw ContractError("poset is not d-complete: axiom " + std::to_string(v.axiom) + ": " + v.detail);
    }
    DPoset d;
    d.poset_ = std::move(poset);
    d.intervals_ = find_d_intervals(d.poset_);
    d.diagonals_ = compute_diagonals(d.poset_, d.intervals_);
    d.hooks_ = hook_vectors(d.poset_, d.diagonals_, d.intervals_);
    const std::size_t n = d.poset_.size();
    d.up_.assign(n, std::nullopt);
    d.down_.assign(n, std::nullopt);
    for (std::size_t i = 0; i < d.intervals_.size(); ++i) {
      d.up_[d.intervals_[i].bottom] = d.intervals_[i].top;
      d.down_[d.intervals_[i].top] = d.intervals_[i].bottom;
    }
    return d;
  }

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  const std::vector<DInterval>& intervals() const { return intervals_; }
  const DiagonalPartition& diagonals() const { return diagonals_; }
  DiagonalId diagonal_of(Element e) const { return diagonals_.diagonal_of[e]; }
  const HookVector& hook(Element e) const { return hooks_[e]; }
  const std::vector<HookVector>& hooks() const { return hooks_; }
  long long hook_length(Element e) const { return hooks_[e].sum(); }
  std::optional<Element> up(Element e) const { return up_[e]; }
  std::optional<Element> down(Element e) const { return down_[e]; }

  /// The d-interval with bottom e, if any.
  const DInterval* interval_from(Element e) const {
    for (const auto& d : intervals_)
      if (d.bottom == e) return &d;
    return nullptr;
  }

 private:
  Poset poset_;
  std::vector<DInterval> intervals_;
  DiagonalPartition diagonals_;
  std::vector<HookVector> hooks_;
  std::vector<std::optional<Element>> up_, down_;
};

}  // namespace dhook
