#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "dhook/d_structure.hpp"
#include "dhook/poset.hpp"

namespace dhook {

using DiagonalId = std::size_t;

/// Diagonals of a d-complete poset: classes of the equivalence generated by
/// "p and q span a d-interval", with the induced adjacency relation.
/// Diagonal ids are ordered by the smallest element id in each class.
struct DiagonalPartition {
  std::vector<DiagonalId> diagonal_of;           // element -> diagonal
  std::vector<std::vector<Element>> classes;     // members, increasing id
  std::vector<char> adjacency;                   // count() x count(), symmetric

  std::size_t count() const { return classes.size(); }
  bool adjacent(DiagonalId c, DiagonalId d) const { return adjacency[c * count() + d] != 0; }

  /// Adjacent pairs (c, d) with c < d, lexicographic.
  std::vector<std::pair<DiagonalId, DiagonalId>> adjacent_pairs() const {
    std::vector<std::pair<DiagonalId, DiagonalId>> out;
    for (DiagonalId c = 0; c < count(); ++c)
      for (DiagonalId d = c + 1; d < count(); ++d)
        if (adjacent(c, d)) out.emplace_back(c, d);
    return out;
  }

  friend bool operator==(const DiagonalPartition&, const DiagonalPartition&) = default;
};

inline DiagonalPartition compute_diagonals(const Poset& poset, const std::vector<DInterval>& intervals) {
  const std::size_t n = poset.size();
  std::vector<Element> parent(n);
  std::iota(parent.begin(), parent.end(), Element{0});
  auto find = [&](Element x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& d : intervals) {
    Element a = find(d.bottom), b = find(d.top);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  DiagonalPartition part;
  part.diagonal_of.assign(n, 0);
  std::vector<std::size_t> id_of_root(n, n);
  for (Element e = 0; e < n; ++e) {  // first member seen is the smallest id
    Element r = find(e);
    if (id_of_root[r] == n) {
      id_of_root[r] = part.classes.size();
      part.classes.emplace_back();
    }
    part.diagonal_of[e] = id_of_root[r];
    part.classes[id_of_root[r]].push_back(e);
  }
  const std::size_t k = part.classes.size();
  part.adjacency.assign(k * k, 0);
  for (auto [lo, hi] : poset.cover_pairs()) {
    DiagonalId c = part.diagonal_of[lo], d = part.diagonal_of[hi];
    part.adjacency[c * k + d] = part.adjacency[d * k + c] = 1;
  }
  return part;
}

inline DiagonalPartition compute_diagonals(const Poset& poset) {
  return compute_diagonals(poset, find_d_intervals(poset));
}

/// Largest poset for which the upper-set statements are checked.
inline constexpr std::size_t kUpperSetCheckLimit = 12;

/// Exhaustive check of the six diagonal properties of d-complete posets:
///  (1) each diagonal is a chain whose covering steps are p -> up_of(p);
///  (2) no two elements of one diagonal are adjacent;
///  (3) on every upper set, diagonals are the restrictions of P's diagonals;
///  (4) if C, D are adjacent and min C is minimal in P, every element of D is
///      adjacent to an element of C;
///  (5) on every upper set, adjacency of the surviving diagonals is unchanged;
///  (6) adjacent diagonals do not both have minima that are minimal in P.
/// (3) and (5) are skipped above kUpperSetCheckLimit elements.
inline OracleReport diagonal_oracles(const Poset& poset, const DiagonalPartition& part) {
  OracleReport r;
  const std::size_t n = poset.size();
  auto lbl = [&](Element e) { return poset.label(e); };
  auto diag_name = [](DiagonalId d) { return "D" + std::to_string(d); };

  std::vector<Element> class_min(part.count());
  for (DiagonalId d = 0; d < part.count(); ++d) {
    auto chain = part.classes[d];
    std::sort(chain.begin(), chain.end(), [&](Element a, Element b) {
      if (poset.lt(a, b)) return true;
      if (poset.lt(b, a)) return false;
      return a < b;
    });
    class_min[d] = chain.front();
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      if (!poset.lt(chain[i], chain[i + 1])) {
        r.fail("(1) " + diag_name(d) + " is not a chain: " + lbl(chain[i]) + " vs " + lbl(chain[i + 1]));
        continue;
      }
      auto up = up_of(poset, chain[i]);
      if (!up || *up != chain[i + 1])
        r.fail("(1) in " + diag_name(d) + " the step above " + lbl(chain[i]) + " is not its up element");
    }
    if (up_of(poset, chain.back())) r.fail("(1) top of " + diag_name(d) + " has an up element");
    if (down_of(poset, chain.front())) r.fail("(1) bottom of " + diag_name(d) + " has a down element");
    for (Element a : part.classes[d])
      for (Element b : part.classes[d])
        if (a < b && poset.adjacent(a, b))
          r.fail("(2) " + lbl(a) + " and " + lbl(b) + " lie in " + diag_name(d) + " and are adjacent");
  }

  auto is_minimal = [&](Element e) { return poset.lower_covers(e).empty(); };
  for (auto [c, d] : part.adjacent_pairs()) {
    for (auto [from, to] : {std::pair{c, d}, std::pair{d, c}}) {
      if (!is_minimal(class_min[from])) continue;
      for (Element y : part.classes[to]) {
        bool hit = false;
        for (Element x : part.classes[from]) hit = hit || poset.adjacent(x, y);
        if (!hit)
          r.fail("(4) " + lbl(y) + " in " + diag_name(to) + " has no neighbour in " + diag_name(from));
      }
    }
    if (is_minimal(class_min[c]) && is_minimal(class_min[d]))
      r.fail("(6) adjacent " + diag_name(c) + ", " + diag_name(d) + " both have minimal bottoms");
  }

  if (n > kUpperSetCheckLimit) return r;
  for (const auto& upper : upper_sets(poset)) {
    auto members = upper.members();
    if (members.empty()) continue;
    Poset sub = poset.induced(upper);
    auto sub_part = compute_diagonals(sub);
    std::string where = " on upper set of size " + std::to_string(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        bool in_sub = sub_part.diagonal_of[i] == sub_part.diagonal_of[j];
        bool in_full = part.diagonal_of[members[i]] == part.diagonal_of[members[j]];
        if (in_sub != in_full)
          r.fail("(3) " + lbl(members[i]) + ", " + lbl(members[j]) + " disagree" + where);
      }
    // Adjacency among the diagonals of P that meet the upper set, measured in
    // the subposet's own Hasse diagram.
    const std::size_t k = part.count();
    std::vector<char> meets(k, 0), adj_sub(k * k, 0);
    for (Element e : members) meets[part.diagonal_of[e]] = 1;
    for (auto [lo, hi] : sub.cover_pairs()) {
      DiagonalId c = part.diagonal_of[members[lo]], d = part.diagonal_of[members[hi]];
      adj_sub[c * k + d] = adj_sub[d * k + c] = 1;
    }
    for (DiagonalId c = 0; c < k; ++c)
      for (DiagonalId d = c + 1; d < k; ++d)
        if (meets[c] && meets[d] && (adj_sub[c * k + d] != 0) != part.adjacent(c, d))
          r.fail("(5) adjacency of " + diag_name(c) + ", " + diag_name(d) + " changes" + where);
  }
  return r;
}

}  // namespace dhook
