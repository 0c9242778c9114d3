#ifndef STATPHASE_CORE_RATIONAL_HPP
#define STATPHASE_CORE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "statphase/core/error.hpp"

namespace statphase {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical: lowest terms, positive denominator

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "a", "-a", "a/b". Throws SyntaxError on anything else or b == 0.
inline Rational parse_rational(std::string_view text) {
  auto bad = [&] {
    return Error(ErrorKind::SyntaxError, "poly",
                 "malformed rational literal '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  std::size_t slash = text.find('/');
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw Error(ErrorKind::SyntaxError, "poly", "zero denominator in '" + std::string(text) + "'");
  Rational q{Integer(num), d};
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs_value(const Rational& q) { return abs(q); }

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational out = 1;
  Rational b = base;
  while (exponent) {
    if (exponent & 1u) out *= b;
    b *= b;
    exponent >>= 1u;
  }
  return out;
}

/// Deterministic sampler of bounded-height rationals.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  // Integer in [lo, hi], independent of the standard library's distribution code.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  // Nonzero rational with |numerator|, denominator <= height.
  Rational nonzero(std::int64_t height) {
    std::int64_t n = 0;
    while (n == 0) n = uniform(-height, height);
    Rational q{n, uniform(1, height)};
    q.canonicalize();
    return q;
  }

  // Rational in [-radius, radius] on a grid of the given resolution, possibly zero.
  Rational within(const Rational& radius, std::int64_t resolution = 97) {
    Rational q{uniform(-resolution, resolution), resolution};
    q.canonicalize();
    return q * radius;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace statphase

#endif  // STATPHASE_CORE_RATIONAL_HPP
