#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dhook/errors.hpp"
#include "dhook/rational.hpp"

namespace dhook {

using Element = std::size_t;
using CoverPair = std::pair<Element, Element>;  // (low, high): high covers low

/// A subset of the elements {0..n-1} of some poset.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe, 0) {}
  ElementSet(std::size_t universe, std::span<const Element> members) : bits_(universe, 0) {
    for (Element e : members) insert(e);
  }

  static ElementSet all(std::size_t universe) {
    ElementSet s(universe);
    std::fill(s.bits_.begin(), s.bits_.end(), 1);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  bool contains(Element e) const { return e < bits_.size() && bits_[e] != 0; }
  void insert(Element e) {
    if (e >= bits_.size()) throw DomainError("element " + std::to_string(e) + " out of range");
    bits_[e] = 1;
  }
  void erase(Element e) {
    if (e < bits_.size()) bits_[e] = 0;
  }
  std::size_t size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)); }
  bool empty() const { return size() == 0; }

  /// Members in increasing id order.
  std::vector<Element> members() const {
    std::vector<Element> out;
    for (Element e = 0; e < bits_.size(); ++e)
      if (bits_[e]) out.push_back(e);
    return out;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (Element e = 0; e < bits_.size(); ++e)
      if (bits_[e] && !other.contains(e)) return false;
    return true;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<char> bits_;
};

/// A linear extension listed from a maximal element down: whenever a < b in
/// the poset, b appears before a.
using LinearExtension = std::vector<Element>;

/// Finite poset stored as its Hasse diagram plus the cached order relation.
/// Immutable after construction.
class Poset {
 public:
  Poset() = default;

  /// Builds a poset from "high covers low" pairs. Pairs implied by
  /// transitivity are dropped; a cycle throws StructuralError.
  static Poset from_cover_relations(std::size_t n, std::span<const CoverPair> pairs,
                                    std::vector<std::string> names = {}) {
    if (!names.empty() && names.size() != n)
      throw DomainError("names must be empty or have one entry per element");
    std::vector<std::vector<Element>> succ(n);
    for (auto [lo, hi] : pairs) {
      if (lo >= n || hi >= n)
        throw DomainError("cover pair (" + std::to_string(lo) + "," + std::to_string(hi) +
                          ") references an element outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
      succ[lo].push_back(hi);
    }
    if (auto cycle = find_cycle(succ))
      throw StructuralError("cover relations contain a cycle: " + *cycle);

    Poset p;
    p.n_ = n;
    p.names_ = names.empty() ? std::vector<std::string>(n) : std::move(names);
    p.leq_.assign(n * n, 0);
    for (Element s = 0; s < n; ++s) {
      std::vector<Element> stack{s};
      p.leq_[s * n + s] = 1;
      while (!stack.empty()) {
        Element u = stack.back();
        stack.pop_back();
        for (Element v : succ[u])
          if (!p.leq_[s * n + v]) {
            p.leq_[s * n + v] = 1;
            stack.push_back(v);
          }
      }
    }
    p.up_.assign(n, {});
    p.down_.assign(n, {});
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        if (a == b || !p.leq(a, b)) continue;
        bool cover = true;
        for (Element c = 0; c < n && cover; ++c)
          if (c != a && c != b && p.leq(a, c) && p.leq(c, b)) cover = false;
        if (cover) {
          p.up_[a].push_back(b);
          p.down_[b].push_back(a);
        }
      }
    return p;
  }

  std::size_t size() const { return n_; }
  bool leq(Element a, Element b) const { return leq_[a * n_ + b] != 0; }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }
  bool covers(Element high, Element low) const {
    const auto& d = down_[high];
    return std::find(d.begin(), d.end(), low) != d.end();
  }
  bool adjacent(Element a, Element b) const { return covers(a, b) || covers(b, a); }

  /// Elements covering e, increasing id.
  const std::vector<Element>& upper_covers(Element e) const { return up_[e]; }
  /// Elements covered by e, increasing id.
  const std::vector<Element>& lower_covers(Element e) const { return down_[e]; }

  std::vector<CoverPair> cover_pairs() const {
    std::vector<CoverPair> out;
    for (Element a = 0; a < n_; ++a)
      for (Element b : up_[a]) out.emplace_back(a, b);
    return out;
  }

  const std::string& name(Element e) const { return names_[e]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Name if present, otherwise the numeric id.
  std::string label(Element e) const { return names_[e].empty() ? std::to_string(e) : names_[e]; }

  std::optional<Element> find_by_name(const std::string& nm) const {
    for (Element e = 0; e < n_; ++e)
      if (names_[e] == nm) return e;
    return std::nullopt;
  }

  ElementSet interval(Element p, Element q) const {
    if (!leq(p, q))
      throw DomainError("interval [" + label(p) + "," + label(q) + "] is empty: p is not <= q");
    ElementSet s(n_);
    for (Element x = 0; x < n_; ++x)
      if (leq(p, x) && leq(x, q)) s.insert(x);
    return s;
  }

  bool is_convex(const ElementSet& s) const {
    auto m = s.members();
    for (Element a : m)
      for (Element b : m) {
        if (!lt(a, b)) continue;
        for (Element x = 0; x < n_; ++x)
          if (!s.contains(x) && leq(a, x) && leq(x, b)) return false;
      }
    return true;
  }

  bool is_upper_set(const ElementSet& s) const {
    for (Element x : s.members())
      for (Element y : up_[x])
        if (!s.contains(y)) return false;
    return true;
  }

  /// { q : q <= p }
  ElementSet down_set(Element p) const {
    ElementSet s(n_);
    for (Element q = 0; q < n_; ++q)
      if (leq(q, p)) s.insert(q);
    return s;
  }

  std::vector<Element> minimal_elements() const {
    std::vector<Element> out;
    for (Element e = 0; e < n_; ++e)
      if (down_[e].empty()) out.push_back(e);
    return out;
  }

  std::vector<Element> maximal_elements() const {
    std::vector<Element> out;
    for (Element e = 0; e < n_; ++e)
      if (up_[e].empty()) out.push_back(e);
    return out;
  }

  /// Induced subposet on s; element i of the result is members()[i].
  Poset induced(const ElementSet& s) const {
    auto m = s.members();
    std::vector<CoverPair> rel;
    std::vector<std::string> nm;
    for (std::size_t i = 0; i < m.size(); ++i) {
      nm.push_back(names_[m[i]]);
      for (std::size_t j = 0; j < m.size(); ++j)
        if (lt(m[i], m[j])) rel.emplace_back(i, j);
    }
    return from_cover_relations(m.size(), rel, std::move(nm));
  }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.names_ == b.names_ && a.up_ == b.up_;
  }

 private:
  static std::optional<std::string> find_cycle(const std::vector<std::vector<Element>>& succ) {
    const std::size_t n = succ.size();
    std::vector<int> color(n, 0);
    std::vector<Element> parent(n, n);
    for (Element root = 0; root < n; ++root) {
      if (color[root]) continue;
      std::vector<std::pair<Element, std::size_t>> stack{{root, 0}};
      color[root] = 1;
      while (!stack.empty()) {
        auto& [u, idx] = stack.back();
        if (idx < succ[u].size()) {
          Element v = succ[u][idx++];
          if (color[v] == 1) {
            std::string w = std::to_string(v);
            for (Element x = u; x != v; x = parent[x]) w = std::to_string(x) + " -> " + w;
            return std::to_string(v) + " -> " + w;
          }
          if (color[v] == 0) {
            color[v] = 1;
            parent[v] = u;
            stack.emplace_back(v, 0);
          }
        } else {
          color[u] = 2;
          stack.pop_back();
        }
      }
    }
    return std::nullopt;
  }

  std::size_t n_ = 0;
  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<std::vector<Element>> up_, down_;
};

/// Visits every linear extension once, largest element first. At each step
/// the available maximal elements are tried in increasing id order. The
/// visitor returns false to stop early; the function returns the number of
/// extensions visited.
inline std::uint64_t for_each_linear_extension(
    const Poset& p, const std::function<bool(const LinearExtension&)>& visit) {
  const std::size_t n = p.size();
  std::vector<std::size_t> blocked(n);  // upper covers not yet placed
  for (Element e = 0; e < n; ++e) blocked[e] = p.upper_covers(e).size();
  std::vector<char> placed(n, 0);
  LinearExtension prefix;
  prefix.reserve(n);
  std::uint64_t count = 0;
  bool stop = false;

  std::function<void()> rec = [&] {
    if (prefix.size() == n) {
      ++count;
      if (!visit(prefix)) stop = true;
      return;
    }
    for (Element e = 0; e < n && !stop; ++e) {
      if (placed[e] || blocked[e] != 0) continue;
      placed[e] = 1;
      prefix.push_back(e);
      for (Element d : p.lower_covers(e)) --blocked[d];
      rec();
      for (Element d : p.lower_covers(e)) ++blocked[d];
      prefix.pop_back();
      placed[e] = 0;
    }
  };
  rec();
  return count;
}

/// Materializes all linear extensions. Throws DomainError when there are
/// more than `cap`.
inline std::vector<LinearExtension> enumerate_linear_extensions(const Poset& p,
                                                                std::uint64_t cap = 1'000'000) {
  std::vector<LinearExtension> out;
  bool over = false;
  for_each_linear_extension(p, [&](const LinearExtension& t) {
    if (out.size() == cap) {
      over = true;
      return false;
    }
    out.push_back(t);
    return true;
  });
  if (over) throw DomainError("more than " + std::to_string(cap) + " linear extensions");
  return out;
}

inline bool is_linear_extension(const Poset& p, std::span<const Element> order) {
  const std::size_t n = p.size();
  if (order.size() != n) return false;
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != n) return false;
    pos[order[i]] = i;
  }
  for (auto [lo, hi] : p.cover_pairs())
    if (pos[hi] > pos[lo]) return false;
  return true;
}

/// Largest poset size handled by the order-ideal DP; larger posets fall back
/// to enumeration.
inline constexpr std::size_t kIdealDpLimit = 64;

/// Exact number of linear extensions. Uses a DP over order ideals keyed by
/// bitmask; beyond kIdealDpLimit elements it counts by enumeration and
/// throws DomainError past `cap`.
inline BigInt count_linear_extensions(const Poset& p, std::uint64_t cap = 1'000'000) {
  const std::size_t n = p.size();
  if (n > kIdealDpLimit) {
    std::uint64_t c = 0;
    bool over = false;
    for_each_linear_extension(p, [&](const LinearExtension&) {
      if (++c > cap) over = true;
      return !over;
    });
    if (over) throw DomainError("more than " + std::to_string(cap) + " linear extensions");
    return BigInt(std::to_string(c));
  }
  std::vector<std::uint64_t> up_mask(n, 0);
  for (Element e = 0; e < n; ++e)
    for (Element u : p.upper_covers(e)) up_mask[e] |= std::uint64_t{1} << u;

  // ways(S) for a down-set S: extensions of the subposet S.
  std::unordered_map<std::uint64_t, BigInt> memo;
  std::function<BigInt(std::uint64_t)> ways = [&](std::uint64_t s) -> BigInt {
    if (s == 0) return 1;
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    BigInt total = 0;
    for (Element e = 0; e < n; ++e) {
      std::uint64_t bit = std::uint64_t{1} << e;
      if ((s & bit) && (up_mask[e] & s) == 0) total += ways(s & ~bit);
    }
    memo.emplace(s, total);
    return total;
  };
  std::uint64_t full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return ways(full);
}

// ---------------------------------------------------------------------------
// Generators

using Partition = std::vector<int>;

inline void require_partition(const Partition& lambda, bool strict) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && (strict ? lambda[i] >= lambda[i - 1] : lambda[i] > lambda[i - 1]))
      throw DomainError(strict ? "shifted shape needs a strictly decreasing partition"
                               : "partition parts must be weakly decreasing");
  }
}

/// Young diagram of shape lambda. Cells are numbered row by row; cell (i,j)
/// is covered by the cells directly above and to its left, so (1,1) is the
/// maximum.
inline Poset young(const Partition& lambda) {
  require_partition(lambda, false);
  std::vector<std::vector<Element>> id(lambda.size());
  std::vector<std::string> names;
  Element next = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      id[i].push_back(next++);
      names.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  std::vector<CoverPair> rel;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      if (i > 0) rel.emplace_back(id[i][j], id[i - 1][j]);
      if (j > 0) rel.emplace_back(id[i][j], id[i][j - 1]);
    }
  return Poset::from_cover_relations(next, rel, std::move(names));
}

/// Shifted Young diagram: row i starts in column i.
inline Poset shifted_young(const Partition& lambda) {
  require_partition(lambda, true);
  std::vector<std::vector<Element>> id(lambda.size());  // id[i][c - i]
  std::vector<std::string> names;
  Element next = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int k = 0; k < lambda[i]; ++k) {
      id[i].push_back(next++);
      names.push_back("(" + std::to_string(i + 1) + "," + std::to_string(i + k + 1) + ")");
    }
  auto cell = [&](std::size_t i, std::size_t col) -> std::optional<Element> {
    if (i >= lambda.size() || col < i) return std::nullopt;
    std::size_t k = col - i;
    if (k >= static_cast<std::size_t>(lambda[i])) return std::nullopt;
    return id[i][k];
  };
  std::vector<CoverPair> rel;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int k = 0; k < lambda[i]; ++k) {
      std::size_t col = i + k;
      Element me = id[i][k];
      if (i > 0)
        if (auto up = cell(i - 1, col)) rel.emplace_back(me, *up);
      if (col > i)
        if (auto left = cell(i, col - 1)) rel.emplace_back(me, *left);
    }
  return Poset::from_cover_relations(next, rel, std::move(names));
}

/// Rooted tree from a parent array (-1 marks the root). The root is the
/// maximum; each child is covered by its parent.
inline Poset tree(const std::vector<int>& parent) {
  const std::size_t n = parent.size();
  std::vector<CoverPair> rel;
  std::size_t roots = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (parent[i] < 0) {
      ++roots;
      continue;
    }
    if (static_cast<std::size_t>(parent[i]) >= n) throw DomainError("parent id out of range");
    rel.emplace_back(i, static_cast<Element>(parent[i]));
  }
  if (n > 0 && roots != 1) throw DomainError("a tree needs exactly one root");
  return Poset::from_cover_relations(n, rel);
}

/// The double-tailed diamond d_k(1). Ids: tail 0..k-3 from the bottom up,
/// sides k-2 and k-1, neck k..2k-3 from the bottom up.
inline Poset d_k_one(int k) {
  if (k < 3) throw DomainError("d_k(1) needs k >= 3");
  const std::size_t t = static_cast<std::size_t>(k - 2);
  const Element a = t, b = t + 1;
  std::vector<CoverPair> rel;
  for (Element i = 0; i + 1 < t; ++i) rel.emplace_back(i, i + 1);
  rel.emplace_back(t - 1, a);
  rel.emplace_back(t - 1, b);
  rel.emplace_back(a, t + 2);
  rel.emplace_back(b, t + 2);
  for (Element i = t + 2; i + 1 < 2 * t + 2; ++i) rel.emplace_back(i, i + 1);
  return Poset::from_cover_relations(2 * t + 2, rel);
}

/// Named posets from the d-complete literature:
///  - "d4-interval": the d_4-interval with neck q,d, sides a,b, tail c,p;
///  - "ten-element": the 10-element d-complete poset that is neither a tree
///    nor a (shifted) Young diagram, rows listed top to bottom.
inline Poset paper_example(const std::string& which) {
  if (which == "d4-interval") {
    // p < c < a,b < d < q
    std::vector<std::string> nm{"p", "c", "a", "b", "d", "q"};
    std::vector<CoverPair> rel{{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}};
    return Poset::from_cover_relations(6, rel, nm);
  }
  if (which == "ten-element") {
    //           A
    //           B
    //        C     E
    //     F     G     H
    //        I  J  K
    std::vector<std::string> nm{"A", "B", "C", "E", "F", "G", "H", "I", "J", "K"};
    enum : Element { A, B, C, E, F, G, H, I, J, K };
    std::vector<CoverPair> rel{{B, A}, {C, B}, {E, B}, {F, C}, {G, C}, {G, E},
                               {H, E}, {I, F}, {I, G}, {K, G}, {K, H}, {J, G}};
    return Poset::from_cover_relations(10, rel, nm);
  }
  throw DomainError("unknown example poset '" + which + "'");
}

}  // namespace dhook
