#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "dhook/poset.hpp"

namespace dhook {

struct CatalogEntry {
  std::string name;
  Poset poset;
};

/// Partitions of n, largest parts first; strict = distinct parts only.
inline std::vector<Partition> partitions_of(int n, bool strict = false) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, strict ? p - 1 : p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace detail {

// A rooted tree as a child list; node 0 is the root.
using ChildList = std::vector<std::vector<int>>;

inline std::string canonical_code(const ChildList& t, int v = 0) {
  std::vector<std::string> kids;
  for (int c : t[v]) kids.push_back(canonical_code(t, c));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

// Parent array from a canonical code, nodes numbered in preorder.
inline std::vector<int> parents_from_code(const std::string& code) {
  std::vector<int> parent, stack;
  for (char ch : code) {
    if (ch == '(') {
      parent.push_back(stack.empty() ? -1 : stack.back());
      stack.push_back(static_cast<int>(parent.size()) - 1);
    } else {
      stack.pop_back();
    }
  }
  return parent;
}

}  // namespace detail

/// All unlabeled rooted trees on n nodes as parent arrays (root = node 0),
/// sorted by canonical code.
inline std::vector<std::vector<int>> rooted_trees(int n) {
  if (n <= 0) return {};
  std::set<std::string> level{"()"};
  for (int size = 2; size <= n; ++size) {
    std::set<std::string> next;
    for (const auto& code : level) {
      auto parent = detail::parents_from_code(code);
      for (std::size_t v = 0; v < parent.size(); ++v) {
        detail::ChildList t(parent.size() + 1);
        for (std::size_t i = 1; i < parent.size(); ++i) t[parent[i]].push_back(static_cast<int>(i));
        t[v].push_back(static_cast<int>(parent.size()));
        next.insert(detail::canonical_code(t));
      }
    }
    level = std::move(next);
  }
  std::vector<std::vector<int>> out;
  for (const auto& code : level) out.push_back(detail::parents_from_code(code));
  return out;
}

inline std::string partition_name(const Partition& lambda) {
  std::string s;
  for (int p : lambda) s += (s.empty() ? "" : ",") + std::to_string(p);
  return s;
}

/// The test catalog: Young diagrams and shifted diagrams with at most 8
/// cells, rooted trees with at most 8 nodes, d_k(1) for k = 3..6, and the
/// two named example posets.
inline std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n)) out.push_back({"young(" + partition_name(lambda) + ")", young(lambda)});
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n, true))
      out.push_back({"shifted(" + partition_name(lambda) + ")", shifted_young(lambda)});
  for (int n = 1; n <= 8; ++n) {
    auto trees = rooted_trees(n);
    for (std::size_t i = 0; i < trees.size(); ++i)
      out.push_back({"tree" + std::to_string(n) + "-" + std::to_string(i), tree(trees[i])});
  }
  for (int k = 3; k <= 6; ++k) out.push_back({"d" + std::to_string(k), d_k_one(k)});
  out.push_back({"d4-interval", paper_example("d4-interval")});
  out.push_back({"ten-element", paper_example("ten-element")});
  return out;
}

/// Catalog poset by name, e.g. "d4", "young(3,1)", "ten-element".
inline std::optional<Poset> catalog_poset(const std::string& name) {
  for (auto& e : catalog())
    if (e.name == name) return std::move(e.poset);
  return std::nullopt;
}

}  // namespace dhook
