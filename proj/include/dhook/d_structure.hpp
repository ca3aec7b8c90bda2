#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dhook/errors.hpp"
#include "dhook/poset.hpp"

namespace dhook {

/// An interval [bottom, top] isomorphic to d_k(1).
struct DInterval {
  int k = 0;
  Element bottom = 0;
  Element top = 0;
  std::array<Element, 2> sides{};  // increasing id
  std::vector<Element> neck;       // k-2 elements, top first
  std::vector<Element> tail;       // k-2 elements, highest first, bottom last

  bool is_neck(Element e) const { return std::find(neck.begin(), neck.end(), e) != neck.end(); }
  bool is_tail(Element e) const { return std::find(tail.begin(), tail.end(), e) != tail.end(); }
  bool is_side(Element e) const { return sides[0] == e || sides[1] == e; }
  bool contains(Element e) const { return is_neck(e) || is_tail(e) || is_side(e); }

  std::vector<Element> members() const {
    std::vector<Element> m(neck.begin(), neck.end());
    m.insert(m.end(), tail.begin(), tail.end());
    m.push_back(sides[0]);
    m.push_back(sides[1]);
    std::sort(m.begin(), m.end());
    return m;
  }

  /// The diamond at the waist: highest tail element, the sides, lowest neck element.
  Element diamond_top() const { return neck.back(); }
  Element diamond_bottom() const { return tail.front(); }

  friend bool operator==(const DInterval&, const DInterval&) = default;
};

/// A convex subset isomorphic to d_k(1) with its maximum removed.
struct DMinusConvexSet {
  int k = 0;
  ElementSet members;
  Element bottom = 0;
  std::array<Element, 2> sides{};  // increasing id

  friend bool operator==(const DMinusConvexSet&, const DMinusConvexSet&) = default;
};

struct AxiomViolation {
  int axiom = 0;  // 1..3
  std::vector<Element> witness;
  std::string detail;
};

struct AxiomReport {
  bool is_d_complete = true;
  std::vector<AxiomViolation> violations;
};

/// Failures found by an exhaustive oracle; empty means the checked
/// statements hold.
struct OracleReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void fail(std::string what) { failures.push_back(std::move(what)); }
  void merge(const OracleReport& other) {
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

namespace detail {

// Splits a set whose members are all pairwise comparable except for exactly
// one pair. Returns false when the set has no such shape.
struct RigidShape {
  std::array<Element, 2> sides{};
  std::vector<Element> above, below;  // above both sides / below both sides
};

inline std::optional<RigidShape> rigid_shape(const Poset& p, const std::vector<Element>& m) {
  RigidShape out;
  int incomparable = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!p.comparable(m[i], m[j])) {
        if (++incomparable > 1) return std::nullopt;
        out.sides = {m[i], m[j]};
      }
  if (incomparable != 1) return std::nullopt;
  for (Element x : m) {
    if (x == out.sides[0] || x == out.sides[1]) continue;
    if (p.lt(out.sides[0], x) && p.lt(out.sides[1], x))
      out.above.push_back(x);
    else if (p.lt(x, out.sides[0]) && p.lt(x, out.sides[1]))
      out.below.push_back(x);
    else
      return std::nullopt;
  }
  // Chains sorted from the top down.
  auto desc = [&](Element a, Element b) { return p.lt(b, a); };
  std::sort(out.above.begin(), out.above.end(), desc);
  std::sort(out.below.begin(), out.below.end(), desc);
  return out;
}

}  // namespace detail

/// Returns the d_k(1) structure of [p, q] if it has one. Requires p <= q.
inline std::optional<DInterval> classify_interval(const Poset& poset, Element p, Element q) {
  auto members = poset.interval(p, q).members();
  const std::size_t m = members.size();
  if (m < 4 || m % 2 != 0) return std::nullopt;
  auto shape = detail::rigid_shape(poset, members);
  if (!shape) return std::nullopt;
  const std::size_t half = (m - 2) / 2;
  if (shape->above.size() != half || shape->below.size() != half) return std::nullopt;
  DInterval d;
  d.k = static_cast<int>(half + 2);
  d.bottom = p;
  d.top = q;
  d.sides = shape->sides;
  d.neck = std::move(shape->above);
  d.tail = std::move(shape->below);
  return d;
}

/// Every d-interval of the poset, ordered by (bottom, top).
inline std::vector<DInterval> find_d_intervals(const Poset& poset) {
  std::vector<DInterval> out;
  for (Element p = 0; p < poset.size(); ++p)
    for (Element q = 0; q < poset.size(); ++q)
      if (poset.lt(p, q))
        if (auto d = classify_interval(poset, p, q)) out.push_back(std::move(*d));
  return out;
}

/// Every d^- convex set. For k = 3 these are {w, a, b} with a, b covering w;
/// for k >= 4 the set has a maximum m and equals the interval [w, m].
inline std::vector<DMinusConvexSet> find_d_minus_convex_sets(const Poset& poset) {
  std::vector<DMinusConvexSet> out;
  const std::size_t n = poset.size();
  for (Element w = 0; w < n; ++w) {
    const auto& ups = poset.upper_covers(w);
    for (std::size_t i = 0; i < ups.size(); ++i)
      for (std::size_t j = i + 1; j < ups.size(); ++j) {
        DMinusConvexSet s{3, ElementSet(n), w, {ups[i], ups[j]}};
        s.members.insert(w);
        s.members.insert(ups[i]);
        s.members.insert(ups[j]);
        out.push_back(std::move(s));
      }
  }
  for (Element w = 0; w < n; ++w)
    for (Element m = 0; m < n; ++m) {
      if (!poset.lt(w, m)) continue;
      ElementSet iv = poset.interval(w, m);
      auto members = iv.members();
      if (members.size() < 5 || members.size() % 2 == 0) continue;
      auto shape = detail::rigid_shape(poset, members);
      if (!shape) continue;
      const std::size_t tail = (members.size() - 1) / 2;  // 2k-3 = size, tail = k-2
      if (shape->below.size() != tail || shape->above.size() + 1 != tail) continue;
      out.push_back({static_cast<int>(tail + 2), std::move(iv), w, shape->sides});
    }
  std::sort(out.begin(), out.end(), [](const DMinusConvexSet& a, const DMinusConvexSet& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.bottom != b.bottom) return a.bottom < b.bottom;
    return a.members.members() < b.members.members();
  });
  return out;
}

/// Checks the three d-complete axioms and reports every violation.
inline AxiomReport check_d_complete(const Poset& poset) {
  AxiomReport report;
  auto minus_sets = find_d_minus_convex_sets(poset);

  // Axiom 1: every d_k^- convex set I extends to a d_k-interval I + {z}.
  for (const auto& s : minus_sets) {
    auto members = s.members.members();
    std::vector<Element> candidates;
    if (s.k == 3) {
      for (Element z : poset.upper_covers(s.sides[0]))
        if (poset.covers(z, s.sides[1])) candidates.push_back(z);
    } else {
      Element top = members.front();
      for (Element x : members)
        if (poset.lt(top, x)) top = x;
      candidates = poset.upper_covers(top);
    }
    bool found = false;
    for (Element z : candidates) {
      auto d = classify_interval(poset, s.bottom, z);
      if (!d || d->k != s.k) continue;
      ElementSet expect = s.members;
      expect.insert(z);
      if (poset.interval(s.bottom, z) == expect) {
        found = true;
        break;
      }
    }
    if (!found)
      report.violations.push_back(
          {1, members, "d_" + std::to_string(s.k) + "^- convex set has no completing top"});
  }

  // Axiom 2: the top of a d-interval covers nothing outside it.
  for (const auto& d : find_d_intervals(poset))
    for (Element c : poset.lower_covers(d.top))
      if (!d.contains(c))
        report.violations.push_back(
            {2, {d.bottom, d.top, c}, "top of d-interval covers an element outside it"});

  // Axiom 3: no two d^- convex sets differ only in their minimal elements.
  for (std::size_t i = 0; i < minus_sets.size(); ++i)
    for (std::size_t j = i + 1; j < minus_sets.size(); ++j) {
      ElementSet a = minus_sets[i].members, b = minus_sets[j].members;
      a.erase(minus_sets[i].bottom);
      b.erase(minus_sets[j].bottom);
      if (a == b)
        report.violations.push_back({3,
                                     {minus_sets[i].bottom, minus_sets[j].bottom},
                                     "d^- convex sets differ only in their minimal elements"});
    }

  report.is_d_complete = report.violations.empty();
  return report;
}

/// The unique q with [p, q] a d-interval. Throws ContractError if there are
/// two, which cannot happen in a d-complete poset.
inline std::optional<Element> up_of(const Poset& poset, Element p) {
  std::optional<Element> found;
  for (Element q = 0; q < poset.size(); ++q) {
    if (!poset.lt(p, q) || !classify_interval(poset, p, q)) continue;
    if (found)
      throw ContractError("element " + poset.label(p) +
                          " is the bottom of two d-intervals; poset is not d-complete");
    found = q;
  }
  return found;
}

/// The unique q with [q, p] a d-interval; dual of up_of.
inline std::optional<Element> down_of(const Poset& poset, Element p) {
  std::optional<Element> found;
  for (Element q = 0; q < poset.size(); ++q) {
    if (!poset.lt(q, p) || !classify_interval(poset, q, p)) continue;
    if (found)
      throw ContractError("element " + poset.label(p) +
                          " is the top of two d-intervals; poset is not d-complete");
    found = q;
  }
  return found;
}

/// Exhaustive check of the structural facts every d-complete poset satisfies:
/// cover bound, neck/tail closure, the forbidden six-element configuration,
/// and uniqueness/containment of d-intervals by top and by bottom.
inline OracleReport structural_oracles(const Poset& poset) {
  OracleReport r;
  const std::size_t n = poset.size();
  auto lbl = [&](Element e) { return poset.label(e); };

  for (Element e = 0; e < n; ++e)
    if (poset.upper_covers(e).size() > 2)
      r.fail("cover bound: " + lbl(e) + " is covered by " +
             std::to_string(poset.upper_covers(e).size()) + " elements");

  auto intervals = find_d_intervals(poset);
  for (const auto& d : intervals) {
    for (Element x : d.neck)
      for (Element c : poset.lower_covers(x))
        if (!d.contains(c))
          r.fail("closure: neck element " + lbl(x) + " of [" + lbl(d.bottom) + "," + lbl(d.top) +
                 "] covers " + lbl(c) + " outside it");
    for (Element x : d.tail)
      for (Element c : poset.upper_covers(x))
        if (!d.contains(c))
          r.fail("closure: tail element " + lbl(x) + " of [" + lbl(d.bottom) + "," + lbl(d.top) +
                 "] is covered by " + lbl(c) + " outside it");
  }

  // Forbidden configuration: q1,q2,q3 and distinct p1,p2,p3 with p_i covered
  // by the two q's other than q_i.
  auto common_lower = [&](Element a, Element b) {
    std::vector<Element> out;
    for (Element x : poset.lower_covers(a))
      if (poset.covers(b, x)) out.push_back(x);
    return out;
  };
  for (Element q1 = 0; q1 < n; ++q1)
    for (Element q2 = q1 + 1; q2 < n; ++q2)
      for (Element q3 = q2 + 1; q3 < n; ++q3) {
        auto c1 = common_lower(q2, q3), c2 = common_lower(q1, q3), c3 = common_lower(q1, q2);
        for (Element a : c1)
          for (Element b : c2)
            for (Element c : c3)
              if (a != b && b != c && a != c)
                r.fail("forbidden subposet: q = {" + lbl(q1) + "," + lbl(q2) + "," + lbl(q3) +
                       "}, p = {" + lbl(a) + "," + lbl(b) + "," + lbl(c) + "}");
      }

  std::vector<std::vector<const DInterval*>> by_top(n), by_bottom(n);
  for (const auto& d : intervals) {
    by_top[d.top].push_back(&d);
    by_bottom[d.bottom].push_back(&d);
  }
  for (Element e = 0; e < n; ++e) {
    if (by_top[e].size() > 1) r.fail("uniqueness: " + lbl(e) + " is the top of several d-intervals");
    if (by_bottom[e].size() > 1)
      r.fail("uniqueness: " + lbl(e) + " is the bottom of several d-intervals");
  }
  auto includes = [](const DInterval& outer, const DInterval& inner) {
    for (Element x : inner.members())
      if (!outer.contains(x)) return false;
    return true;
  };
  for (const auto& d : intervals) {
    for (Element x : d.neck)
      if (by_top[x].size() == 1 && !includes(d, *by_top[x][0]))
        r.fail("containment: [" + lbl(d.bottom) + "," + lbl(d.top) + "] has neck element " + lbl(x) +
               " but misses its d-interval");
    for (Element x : d.tail)
      if (by_bottom[x].size() == 1 && !includes(d, *by_bottom[x][0]))
        r.fail("containment: [" + lbl(d.bottom) + "," + lbl(d.top) + "] has tail element " + lbl(x) +
               " but misses its d-interval");
  }
  return r;
}

/// Every upper set of the poset (including the empty set and the whole).
/// Exponential; intended for desk-scale posets.
inline std::vector<ElementSet> upper_sets(const Poset& poset) {
  const std::size_t n = poset.size();
  std::vector<ElementSet> out;
  // Walk elements in an order where larger elements come first, deciding
  // membership; an element may join only if everything above it has.
  LinearExtension order;
  for_each_linear_extension(poset, [&](const LinearExtension& t) {
    order = t;
    return false;
  });
  ElementSet cur(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == order.size()) {
      out.push_back(cur);
      return;
    }
    Element e = order[i];
    rec(i + 1);
    bool allowed = true;
    for (Element u : poset.upper_covers(e))
      if (!cur.contains(u)) allowed = false;
    if (allowed) {
      cur.insert(e);
      rec(i + 1);
      cur.erase(e);
    }
  };
  rec(0);
  return out;
}

}  // namespace dhook
