#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dhook/errors.hpp"

// Classical RSK on Young diagrams: two-line-array row insertion, the
// toggle-based construction of a reverse plane partition, and the
// Gelfand-Tsetlin patterns that connect the two.
namespace dhook::classical {

using Entry = long long;

/// Nonnegative integers on the cells of a Young diagram, row by row. Rows
/// may be ragged but their lengths must weakly decrease.
struct MatrixFilling {
  std::vector<std::vector<Entry>> rows;

  std::size_t row_count() const { return rows.size(); }
  bool in_shape(long i, long j) const {
    return i >= 0 && j >= 0 && static_cast<std::size_t>(i) < rows.size() &&
           static_cast<std::size_t>(j) < rows[i].size();
  }
  bool is_square() const {
    return std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return r.size() == rows.size(); });
  }
  void validate() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i > 0 && rows[i].size() > rows[i - 1].size())
        throw DomainError("row lengths must weakly decrease");
      for (Entry v : rows[i])
        if (v < 0) throw DomainError("matrix entries must be nonnegative");
    }
  }
  friend bool operator==(const MatrixFilling&, const MatrixFilling&) = default;
};

/// Semistandard Young tableau: rows weakly increase, columns strictly increase.
struct SSYT {
  std::vector<std::vector<int>> rows;

  std::vector<int> shape() const {
    std::vector<int> s;
    for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
    return s;
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.size();
    return n;
  }
  bool is_semistandard() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].empty()) return false;
      if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (j > 0 && rows[i][j] < rows[i][j - 1]) return false;
        if (i > 0 && rows[i][j] <= rows[i - 1][j]) return false;
      }
    }
    return true;
  }
  friend bool operator==(const SSYT&, const SSYT&) = default;
};

/// Gelfand-Tsetlin pattern, longest row first: rows[k] has N - k entries and
/// lists the shape of the entries <= N - k. Consecutive rows interlace.
struct GTPattern {
  std::vector<std::vector<Entry>> rows;

  bool interlaces() const {
    for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
      if (rows[k + 1].size() + 1 != rows[k].size()) return false;
      for (std::size_t i = 0; i < rows[k + 1].size(); ++i)
        if (rows[k + 1][i] > rows[k][i] || rows[k + 1][i] < rows[k][i + 1]) return false;
    }
    return true;
  }
  friend bool operator==(const GTPattern&, const GTPattern&) = default;
};

/// Row insertion of x: bump the leftmost entry strictly greater than x.
/// Returns the row index where a new cell was created.
inline std::size_t row_insert(SSYT& t, int x) {
  for (std::size_t i = 0;; ++i) {
    if (i == t.rows.size()) {
      t.rows.push_back({x});
      return i;
    }
    auto& row = t.rows[i];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return i;
    }
    std::swap(*it, x);
  }
}

/// RSK via the two-line array: pairs (i, j) with multiplicity m[i][j],
/// sorted lexicographically, 1-based. P collects the column indices, Q
/// records the row indices.
inline std::pair<SSYT, SSYT> classical_insert_rsk(const MatrixFilling& m) {
  m.validate();
  SSYT p, q;
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (std::size_t j = 0; j < m.rows[i].size(); ++j)
      for (Entry c = 0; c < m.rows[i][j]; ++c) {
        std::size_t row = row_insert(p, static_cast<int>(j + 1));
        if (row == q.rows.size()) q.rows.emplace_back();
        q.rows[row].push_back(static_cast<int>(i + 1));
      }
  return {p, q};
}

using Square = std::pair<std::size_t, std::size_t>;  // 0-based (row, column)

/// Row-major order of the cells of the shape.
inline std::vector<Square> row_major_order(const MatrixFilling& m) {
  std::vector<Square> out;
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (std::size_t j = 0; j < m.rows[i].size(); ++j) out.emplace_back(i, j);
  return out;
}

/// Builds the reverse plane partition by inserting squares in `order` (each
/// square after the squares above and to its left). A new square gets
/// max(above, left) + t; every other placed square on its diagonal is
/// toggled to max(above, left) + min(below, right) - value. Missing
/// neighbours read as 0.
inline MatrixFilling toggle_rpp(const MatrixFilling& m, std::optional<std::vector<Square>> order = std::nullopt) {
  m.validate();
  std::vector<Square> ord = order ? std::move(*order) : row_major_order(m);
  std::vector<std::vector<char>> placed(m.rows.size());
  MatrixFilling r;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    placed[i].assign(m.rows[i].size(), 0);
    r.rows.emplace_back(m.rows[i].size(), 0);
    cells += m.rows[i].size();
  }
  if (ord.size() != cells) throw DomainError("square ordering must list every cell once");
  auto here = [&](long i, long j) { return m.in_shape(i, j) && placed[i][j]; };
  auto val = [&](long i, long j) -> Entry { return r.rows[i][j]; };

  for (auto [i, j] : ord) {
    const long li = static_cast<long>(i), lj = static_cast<long>(j);
    if (!m.in_shape(li, lj) || placed[i][j]) throw DomainError("square ordering must list every cell once");
    if ((li > 0 && !placed[i - 1][j]) || (lj > 0 && !placed[i][j - 1]))
      throw DomainError("square (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") comes before a square above or to its left");
    Entry above_left = 0;
    if (here(li - 1, lj)) above_left = std::max(above_left, val(li - 1, lj));
    if (here(li, lj - 1)) above_left = std::max(above_left, val(li, lj - 1));
    placed[i][j] = 1;
    r.rows[i][j] = above_left + m.rows[i][j];

    for (long a = 0; a < static_cast<long>(m.rows.size()); ++a) {
      long b = a + (lj - li);
      if (a == li || !here(a, b)) continue;
      std::optional<Entry> hi, lo;
      for (auto [di, dj] : {std::pair{-1L, 0L}, std::pair{0L, -1L}})
        if (here(a + di, b + dj)) hi = std::max(hi.value_or(val(a + di, b + dj)), val(a + di, b + dj));
      for (auto [di, dj] : {std::pair{1L, 0L}, std::pair{0L, 1L}})
        if (here(a + di, b + dj)) lo = std::min(lo.value_or(val(a + di, b + dj)), val(a + di, b + dj));
      r.rows[a][b] = hi.value_or(0) + lo.value_or(0) - r.rows[a][b];
    }
  }
  return r;
}

inline bool is_rpp(const MatrixFilling& r) {
  for (std::size_t i = 0; i < r.rows.size(); ++i)
    for (std::size_t j = 0; j < r.rows[i].size(); ++j) {
      if (r.rows[i][j] < 0) return false;
      if (j > 0 && r.rows[i][j] < r.rows[i][j - 1]) return false;
      if (i > 0 && r.rows[i][j] < r.rows[i - 1][j]) return false;
    }
  return true;
}

/// Splits a square RPP into its lower and upper Gelfand-Tsetlin patterns.
/// Row k of either pattern has N - k entries read along a diagonal from the
/// bottom-right: the lower pattern walks diagonals on or below the main one,
/// the upper pattern those on or above it.
inline std::pair<GTPattern, GTPattern> gt_from_rpp(const MatrixFilling& r) {
  if (!r.is_square()) throw DomainError("Gelfand-Tsetlin extraction needs a square RPP");
  const std::size_t n = r.rows.size();
  GTPattern lower, upper;
  for (std::size_t level = n; level >= 1; --level) {
    std::vector<Entry> lo, up;
    for (std::size_t l = 0; l < level; ++l) {
      lo.push_back(r.rows[n - 1 - l][level - 1 - l]);
      up.push_back(r.rows[level - 1 - l][n - 1 - l]);
    }
    lower.rows.push_back(std::move(lo));
    upper.rows.push_back(std::move(up));
  }
  if (!lower.interlaces() || !upper.interlaces()) throw DomainError("RPP diagonals do not interlace");
  return {lower, upper};
}

/// The unique SSYT whose entries <= i fill the shape in row N - i of the
/// pattern.
inline SSYT ssyt_from_gt(const GTPattern& g) {
  if (!g.interlaces()) throw DomainError("pattern rows do not interlace");
  const std::size_t n = g.rows.size();
  SSYT t;
  std::vector<Entry> prev;
  for (std::size_t level = 1; level <= n; ++level) {
    const auto& shape = g.rows[n - level];
    for (std::size_t i = 0; i < shape.size(); ++i) {
      Entry before = i < prev.size() ? prev[i] : 0;
      if (shape[i] < 0) throw DomainError("pattern entries must be nonnegative");
      if (shape[i] > 0 && t.rows.size() <= i) t.rows.resize(i + 1);
      for (Entry c = before; c < shape[i]; ++c) t.rows[i].push_back(static_cast<int>(level));
    }
    prev = shape;
  }
  return t;
}

}  // namespace dhook::classical
