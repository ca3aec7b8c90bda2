#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dhook/classical.hpp"
#include "dhook/errors.hpp"
#include "dhook/poset.hpp"
#include "dhook/rational.hpp"
#include "dhook/rsk.hpp"

// Text formats. All are line oriented, '#' starts a comment, blank lines are
// ignored.
//
//   poset:    elements <n> / name <id> <string> / cover <low> <high>
//   filling:  value <element> <p>/<q>
//   matrix:   whitespace-separated integer rows
namespace dhook::io {

namespace detail {

inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline std::size_t parse_index(const std::string& t, std::size_t line_no) {
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }) || t.size() > 9)
    throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" + t + "'");
  return static_cast<std::size_t>(std::stoul(t));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Posets

/// Canonical form: `elements`, then names by id, then covers sorted by
/// (low, high).
inline std::string write_poset(const Poset& p) {
  std::string out = "elements " + std::to_string(p.size()) + "\n";
  for (Element e = 0; e < p.size(); ++e)
    if (!p.name(e).empty()) out += "name " + std::to_string(e) + " " + p.name(e) + "\n";
  auto covers = p.cover_pairs();
  std::sort(covers.begin(), covers.end());
  for (auto [lo, hi] : covers) out += "cover " + std::to_string(lo) + " " + std::to_string(hi) + "\n";
  return out;
}

inline Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  std::optional<std::size_t> n;
  std::vector<std::string> names;
  std::vector<CoverPair> covers;
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    auto tok = detail::tokens(detail::strip_comment(raw));
    if (tok.empty()) continue;
    auto where = "line " + std::to_string(line_no) + ": ";
    if (tok[0] == "elements") {
      if (n) throw ParseError(where + "duplicate 'elements' line");
      if (tok.size() != 2) throw ParseError(where + "expected 'elements <n>'");
      n = detail::parse_index(tok[1], line_no);
      names.assign(*n, "");
      continue;
    }
    if (!n) throw ParseError(where + "'elements <n>' must come first");
    if (tok[0] == "name") {
      if (tok.size() != 3) throw ParseError(where + "expected 'name <id> <string>'");
      auto id = detail::parse_index(tok[1], line_no);
      if (id >= *n) throw ParseError(where + "element " + tok[1] + " out of range");
      names[id] = tok[2];
    } else if (tok[0] == "cover") {
      if (tok.size() != 3) throw ParseError(where + "expected 'cover <low> <high>'");
      auto lo = detail::parse_index(tok[1], line_no), hi = detail::parse_index(tok[2], line_no);
      if (lo >= *n || hi >= *n) throw ParseError(where + "cover references an element out of range");
      covers.emplace_back(lo, hi);
    } else {
      throw ParseError(where + "unknown directive '" + tok[0] + "'");
    }
  }
  if (!n) throw ParseError("missing 'elements <n>' line");
  return Poset::from_cover_relations(*n, covers, names);
}

inline Poset read_poset(const std::string& path) { return parse_poset(detail::read_file(path)); }
inline void save_poset(const std::string& path, const Poset& p) { detail::write_file(path, write_poset(p)); }

// ---------------------------------------------------------------------------
// Fillings

inline std::string write_filling(const Filling& f) {
  std::string out;
  for (Element e = 0; e < f.size(); ++e) out += "value " + std::to_string(e) + " " + format_rational(f[e]) + "\n";
  return out;
}

/// Every element of an n-element poset must get exactly one value.
inline Filling parse_filling(const std::string& text, std::size_t n) {
  std::istringstream in(text);
  Filling f(n);
  std::vector<char> seen(n, 0);
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    auto tok = detail::tokens(detail::strip_comment(raw));
    if (tok.empty()) continue;
    auto where = "line " + std::to_string(line_no) + ": ";
    if (tok[0] != "value" || tok.size() != 3) throw ParseError(where + "expected 'value <element> <p>/<q>'");
    auto e = detail::parse_index(tok[1], line_no);
    if (e >= n) throw ParseError(where + "element " + tok[1] + " out of range");
    if (seen[e]) throw ParseError(where + "element " + tok[1] + " given twice");
    try {
      f[e] = parse_rational(tok[2]);
    } catch (const ParseError& err) {
      throw ParseError(where + err.what());
    }
    seen[e] = 1;
  }
  for (Element e = 0; e < n; ++e)
    if (!seen[e]) throw ParseError("no value for element " + std::to_string(e));
  return f;
}

inline Filling read_filling(const std::string& path, std::size_t n) {
  return parse_filling(detail::read_file(path), n);
}

// ---------------------------------------------------------------------------
// Linear extensions: element ids, whitespace separated, maximal element first.

inline LinearExtension parse_order(const std::string& text) {
  LinearExtension out;
  std::istringstream in(text);
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    for (const auto& t : detail::tokens(detail::strip_comment(raw))) out.push_back(detail::parse_index(t, line_no));
  }
  return out;
}

inline LinearExtension read_order(const std::string& path) { return parse_order(detail::read_file(path)); }

// ---------------------------------------------------------------------------
// Matrices

inline std::string write_matrix(const classical::MatrixFilling& m) {
  std::string out;
  for (const auto& row : m.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + std::to_string(row[j]);
    out += "\n";
  }
  return out;
}

inline classical::MatrixFilling parse_matrix(const std::string& text) {
  classical::MatrixFilling m;
  std::istringstream in(text);
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    auto tok = detail::tokens(detail::strip_comment(raw));
    if (tok.empty()) continue;
    std::vector<classical::Entry> row;
    for (const auto& t : tok) row.push_back(static_cast<classical::Entry>(detail::parse_index(t, line_no)));
    m.rows.push_back(std::move(row));
  }
  try {
    m.validate();
  } catch (const DomainError& err) {
    throw ParseError(err.what());
  }
  return m;
}

inline classical::MatrixFilling read_matrix(const std::string& path) { return parse_matrix(detail::read_file(path)); }

}  // namespace dhook::io
