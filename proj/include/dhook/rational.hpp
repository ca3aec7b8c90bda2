#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "dhook/errors.hpp"

namespace dhook {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Canonical `p/q` form: lowest terms, positive denominator, always with a
/// denominator (so `3` prints as `3/1`).
inline std::string format_rational(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Accepts `p/q` or a bare integer. Rejects a zero denominator.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw ParseError("malformed rational '" + s + "'");
  BigInt n(strip_plus(num)), d(strip_plus(den));
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Uniform p/q with p, q drawn independently from [lo, hi].
inline Rational random_rational(std::mt19937_64& rng, int lo = 1, int hi = 16) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Rational r(dist(rng), dist(rng));
  r.canonicalize();
  return r;
}

inline BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace dhook
