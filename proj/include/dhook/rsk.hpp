#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dhook/errors.hpp"
#include "dhook/hooks.hpp"
#include "dhook/poset.hpp"
#include "dhook/rational.hpp"

namespace dhook {

/// Exact rational label per element.
using Filling = std::vector<Rational>;

inline bool is_nonnegative(const Filling& t) {
  return std::all_of(t.begin(), t.end(), [](const Rational& v) { return sgn(v) >= 0; });
}

/// s_p >= s_q whenever p <= q.
inline bool is_order_reversing(const Poset& poset, const Filling& s) {
  for (auto [lo, hi] : poset.cover_pairs())
    if (s[lo] < s[hi]) return false;
  return true;
}

inline Filling random_filling(std::size_t n, std::mt19937_64& rng) {
  Filling t;
  for (std::size_t i = 0; i < n; ++i) t.push_back(random_rational(rng));
  return t;
}

/// One toggle as performed during RSK: which neighbours won the max/min and
/// whether the choice was strict (no tie).
struct ToggleStep {
  Element element = 0;
  std::optional<Element> x, y;
  bool strict = true;
  friend bool operator==(const ToggleStep&, const ToggleStep&) = default;
};

/// New label for p: s_x + s_y - s_p with x the largest-labelled element
/// covering p and y the smallest-labelled element covered by p, both taken
/// among `active` elements; a missing neighbour reads as 0. Ties go to the
/// lowest id.
inline Rational toggled_value(const Poset& poset, const Filling& s, Element p,
                              const std::vector<char>& active, ToggleStep* step = nullptr) {
  std::optional<Element> x, y;
  bool strict = true;
  for (Element u : poset.upper_covers(p)) {
    if (!active[u]) continue;
    if (!x || s[u] > s[*x]) {
      x = u;
    } else if (s[u] == s[*x]) {
      strict = false;
    }
  }
  for (Element d : poset.lower_covers(p)) {
    if (!active[d]) continue;
    if (!y || s[d] < s[*y]) {
      y = d;
    } else if (s[d] == s[*y]) {
      strict = false;
    }
  }
  if (step) *step = {p, x, y, strict};
  Rational sx = x ? s[*x] : Rational(0);
  Rational sy = y ? s[*y] : Rational(0);
  return sx + sy - s[p];
}

/// Toggle at p over the whole poset.
inline Filling toggle(const Poset& poset, Filling s, Element p) {
  std::vector<char> active(poset.size(), 1);
  s[p] = toggled_value(poset, s, p, active);
  return s;
}

namespace detail {

inline void require_order(const Poset& poset, std::span<const Element> order) {
  if (!is_linear_extension(poset, order))
    throw DomainError("insertion order is not a linear extension (largest element first)");
}

// Toggles every active element of diagonal `d`. Members of one diagonal are
// never adjacent, so the toggles commute and may be applied in place.
inline void toggle_diagonal(const DPoset& dp, Filling& s, DiagonalId d, const std::vector<char>& active,
                            std::vector<ToggleStep>* trace) {
  for (Element e : dp.diagonals().classes[d]) {
    if (!active[e]) continue;
    ToggleStep step;
    s[e] = toggled_value(dp.poset(), s, e, active, trace ? &step : nullptr);
    if (trace) trace->push_back(step);
  }
}

}  // namespace detail

/// Stable insertion order: a linear extension such that whenever p_i is the
/// bottom of a d-interval of the prefix {p_1..p_i}, the sides of that
/// interval are neck elements of no other d-interval of the prefix.
inline bool is_stable(const DPoset& dp, std::span<const Element> order) {
  const Poset& poset = dp.poset();
  if (!is_linear_extension(poset, order)) return false;
  std::vector<char> present(poset.size(), 0);
  for (Element c : order) {
    present[c] = 1;
    const DInterval* mine = dp.interval_from(c);
    if (!mine) continue;
    for (const auto& other : dp.intervals()) {
      if (&other == mine || !present[other.bottom]) continue;
      for (Element side : mine->sides)
        if (other.is_neck(side)) return false;
    }
  }
  return true;
}

/// Builds a stable insertion order from the bottom up: repeatedly remove a
/// minimal element lying in no d-interval, or else the bottom of a maximal
/// d-interval whose waist diamond has a minimal top.
inline LinearExtension stable_insertion_order(const DPoset& dp) {
  const Poset& poset = dp.poset();
  const std::size_t n = poset.size();
  std::vector<char> present(n, 1);
  LinearExtension reversed;
  auto is_min = [&](Element e) {
    for (Element d : poset.lower_covers(e))
      if (present[d]) return false;
    return true;
  };
  for (std::size_t step = 0; step < n; ++step) {
    // d-intervals of the remaining upper set are those of P whose bottom survives.
    std::vector<const DInterval*> live;
    for (const auto& d : dp.intervals())
      if (present[d.bottom]) live.push_back(&d);
    std::optional<Element> pick;
    for (Element e = 0; e < n && !pick; ++e) {
      if (!present[e] || !is_min(e)) continue;
      bool inside = std::any_of(live.begin(), live.end(), [&](const DInterval* d) { return d->contains(e); });
      if (!inside) pick = e;
    }
    if (!pick) {
      auto contains_all = [](const DInterval& outer, const DInterval& inner) {
        for (Element x : inner.members())
          if (!outer.contains(x)) return false;
        return true;
      };
      std::vector<const DInterval*> maximal;
      for (const DInterval* d : live) {
        bool dominated = std::any_of(live.begin(), live.end(), [&](const DInterval* o) {
          return o != d && contains_all(*o, *d);
        });
        if (!dominated) maximal.push_back(d);
      }
      const DInterval* best = nullptr;
      for (const DInterval* d : maximal) {
        bool lowest = std::none_of(maximal.begin(), maximal.end(), [&](const DInterval* o) {
          return poset.lt(o->diamond_top(), d->diamond_top());
        });
        if (lowest && (!best || d->bottom < best->bottom)) best = d;
      }
      if (!best) throw ContractError("no d-interval available while building a stable order");
      if (!is_min(best->bottom))
        throw ContractError("chosen d-interval bottom " + poset.label(best->bottom) + " is not minimal");
      pick = best->bottom;
    }
    present[*pick] = 0;
    reversed.push_back(*pick);
  }
  LinearExtension order(reversed.rbegin(), reversed.rend());
  if (!is_stable(dp, order)) throw ContractError("constructed insertion order is not stable");
  return order;
}

/// Generalized RSK. Inserts elements in `order` (default: a stable order):
/// the new element c is labelled -t_c, then every inserted element of D(c)
/// is toggled within the inserted upper set.
inline Filling rsk(const DPoset& dp, const Filling& t, std::optional<LinearExtension> order = std::nullopt,
                   std::vector<ToggleStep>* trace = nullptr) {
  const std::size_t n = dp.size();
  if (t.size() != n) throw DomainError("filling has the wrong number of entries");
  if (!is_nonnegative(t)) throw DomainError("RSK input filling must be nonnegative");
  LinearExtension ord = order ? std::move(*order) : stable_insertion_order(dp);
  detail::require_order(dp.poset(), ord);
  Filling s(n, Rational(0));
  std::vector<char> active(n, 0);
  for (Element c : ord) {
    active[c] = 1;
    s[c] = -t[c];
    detail::toggle_diagonal(dp, s, dp.diagonal_of(c), active, trace);
  }
  return s;
}

/// Undoes rsk: for each element in reverse insertion order, re-toggle its
/// diagonal and read off t_c = -s_c.
inline Filling inverse_rsk(const DPoset& dp, const Filling& s_in,
                           std::optional<LinearExtension> order = std::nullopt) {
  const std::size_t n = dp.size();
  if (s_in.size() != n) throw DomainError("filling has the wrong number of entries");
  if (!is_nonnegative(s_in) || !is_order_reversing(dp.poset(), s_in))
    throw DomainError("inverse RSK needs a nonnegative order-reversing filling");
  LinearExtension ord = order ? std::move(*order) : stable_insertion_order(dp);
  detail::require_order(dp.poset(), ord);
  Filling s = s_in, t(n, Rational(0));
  std::vector<char> active(n, 1);
  for (auto it = ord.rbegin(); it != ord.rend(); ++it) {
    Element c = *it;
    detail::toggle_diagonal(dp, s, dp.diagonal_of(c), active, nullptr);
    t[c] = -s[c];
    active[c] = 0;
  }
  return t;
}

inline std::vector<Rational> diagonal_sums(const DiagonalPartition& part, const Filling& s) {
  std::vector<Rational> sums(part.count(), Rational(0));
  for (Element e = 0; e < s.size(); ++e) sums[part.diagonal_of[e]] += s[e];
  return sums;
}

/// A linear extension chosen by picking uniformly among the available maximal
/// elements at each step.
inline LinearExtension random_linear_extension(const Poset& poset, std::mt19937_64& rng) {
  const std::size_t n = poset.size();
  std::vector<std::size_t> blocked(n);
  for (Element e = 0; e < n; ++e) blocked[e] = poset.upper_covers(e).size();
  std::vector<char> placed(n, 0);
  LinearExtension out;
  while (out.size() < n) {
    std::vector<Element> avail;
    for (Element e = 0; e < n; ++e)
      if (!placed[e] && blocked[e] == 0) avail.push_back(e);
    Element e = avail[std::uniform_int_distribution<std::size_t>(0, avail.size() - 1)(rng)];
    placed[e] = 1;
    out.push_back(e);
    for (Element d : poset.lower_covers(e)) --blocked[d];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Local linear structure

/// Determinant of a square rational matrix (row-major) by exact elimination.
inline Rational determinant(std::vector<Rational> m, std::size_t n) {
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv * n + col]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[col * n + j]);
      det = -det;
    }
    det *= m[col * n + col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (sgn(m[row * n + col]) == 0) continue;
      Rational f = m[row * n + col] / m[col * n + col];
      for (std::size_t j = col; j < n; ++j) m[row * n + j] -= f * m[col * n + j];
    }
  }
  return det;
}

struct LocalJacobian {
  std::vector<Rational> matrix;  // n x n, row-major: d s_row / d t_col
  Rational determinant;
  std::size_t toggles = 0;       // toggles performed, for the sign check
};

/// Finite-difference Jacobian of rsk at t, exact within one linearity cell.
/// Returns nullopt when t is not generic (some max/min selection is tied).
/// The step starts at 2^-20 times the smallest gap between distinct labels
/// and is halved until every perturbed run makes the same selections.
inline std::optional<LocalJacobian> rsk_jacobian(const DPoset& dp, const Filling& t, const LinearExtension& order) {
  const std::size_t n = dp.size();
  std::vector<ToggleStep> base_trace;
  Filling base = rsk(dp, t, order, &base_trace);
  for (const auto& st : base_trace)
    if (!st.strict) return std::nullopt;

  Rational gap = 1;
  std::vector<Rational> labels = t;
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i + 1 < labels.size(); ++i)
    if (labels[i + 1] != labels[i]) gap = std::min(gap, Rational(labels[i + 1] - labels[i]));
  Rational eps0 = gap / Rational(1 << 20);

  LocalJacobian jac;
  jac.toggles = base_trace.size();
  jac.matrix.assign(n * n, Rational(0));
  for (std::size_t col = 0; col < n; ++col) {
    Rational eps = eps0;
    bool same = false;
    Filling moved;
    for (int attempt = 0; attempt < 64 && !same; ++attempt, eps /= 2) {
      Filling tp = t;
      tp[col] += eps;
      std::vector<ToggleStep> trace;
      moved = rsk(dp, tp, order, &trace);
      same = std::equal(trace.begin(), trace.end(), base_trace.begin(), base_trace.end(),
                        [](const ToggleStep& a, const ToggleStep& b) {
                          return a.element == b.element && a.x == b.x && a.y == b.y;
                        });
      if (same) {
        for (std::size_t row = 0; row < n; ++row) jac.matrix[row * n + col] = (moved[row] - base[row]) / eps;
      }
    }
    if (!same) return std::nullopt;
  }
  jac.determinant = determinant(jac.matrix, n);
  return jac;
}

// ---------------------------------------------------------------------------
// Oracles

/// Randomized check of the RSK identities on `trials` random fillings:
///  (a) the output does not depend on the insertion order;
///  (b) diagonal sums equal sum_p h^(D)(p) t_p;
///  (c) removing a minimal element c, with P' = P \ {c}:
///      S_P(D(c)) + S_P'(D(c)) = t_c + sum of S_P' over diagonals adjacent to D(c);
///  (d) the output is nonnegative and order-reversing, and inverse_rsk
///      recovers the input;
///  (e) a toggle lacks a lower neighbour only for the element just inserted.
inline OracleReport rsk_oracles(const DPoset& dp, std::size_t trials, std::uint64_t seed) {
  OracleReport r;
  const Poset& poset = dp.poset();
  const std::size_t n = poset.size();
  const auto& part = dp.diagonals();
  std::mt19937_64 rng(seed);
  auto dump = [&](const Filling& t) {
    std::string out = "[";
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? " " : "") + format_rational(t[i]);
    return out + "]";
  };

  // Upper sets P' \ {c} for each minimal c, analysed once.
  struct Removal {
    Element c;
    std::vector<Element> kept;  // sub id -> element
    std::optional<DPoset> sub;
  };
  std::vector<Removal> removals;
  if (n > 1)
    for (Element c : poset.minimal_elements()) {
      ElementSet rest = ElementSet::all(n);
      rest.erase(c);
      removals.push_back({c, rest.members(), DPoset::analyze(poset.induced(rest))});
    }

  for (std::size_t trial = 0; trial < trials; ++trial) {
    Filling t = random_filling(n, rng);
    std::vector<ToggleStep> trace;
    auto order_a = random_linear_extension(poset, rng);
    auto order_b = random_linear_extension(poset, rng);
    Filling s = rsk(dp, t, order_a, &trace);
    if (rsk(dp, t, order_b) != s) r.fail("(a) insertion order changes the output for t=" + dump(t));

    auto sums = diagonal_sums(part, s);
    for (DiagonalId d = 0; d < part.count(); ++d) {
      Rational expect = 0;
      for (Element p = 0; p < n; ++p) expect += Rational(static_cast<long>(dp.hook(p).entries[d])) * t[p];
      if (expect != sums[d]) r.fail("(b) diagonal sum of D" + std::to_string(d) + " is off for t=" + dump(t));
    }

    if (!is_nonnegative(s) || !is_order_reversing(poset, s)) r.fail("(d) output not order-reversing for t=" + dump(t));
    else if (inverse_rsk(dp, s, order_a) != t) r.fail("(d) inverse does not recover t=" + dump(t));

    {
      std::vector<char> active(n, 0);
      std::size_t idx = 0;
      for (Element c : order_a) {
        active[c] = 1;
        for (Element e : part.classes[dp.diagonal_of(c)]) {
          if (!active[e]) continue;
          const ToggleStep& st = trace[idx++];
          if (!st.y && st.element != c)
            r.fail("(e) toggle of " + poset.label(st.element) + " found no lower neighbour");
        }
      }
    }

    for (const auto& rm : removals) {
      Filling t_sub;
      for (Element e : rm.kept) t_sub.push_back(t[e]);
      Filling s_sub = rsk(*rm.sub, t_sub);
      std::vector<Rational> small(part.count(), Rational(0));  // S_P, indexed by P' diagonals
      for (std::size_t i = 0; i < rm.kept.size(); ++i) small[dp.diagonal_of(rm.kept[i])] += s_sub[i];
      DiagonalId dc = dp.diagonal_of(rm.c);
      Rational rhs = t[rm.c];
      for (DiagonalId d = 0; d < part.count(); ++d)
        if (d != dc && part.adjacent(d, dc)) rhs += small[d];
      if (small[dc] + sums[dc] != rhs)
        r.fail("(c) diagonal-sum recurrence fails removing " + poset.label(rm.c) + " for t=" + dump(t));
    }
  }
  return r;
}

}  // namespace dhook
