#ifndef FROBKIT_RATIONAL_HPP
#define FROBKIT_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "frobkit/errors.hpp"

namespace frobkit {

/// Exact rational exponent, reduced, with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw InvalidInputError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool positive() const { return num > 0; }

  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
};

/// ceil(t * p^e) as a checked 64-bit integer, t > 0.
inline std::uint64_t ceil_mul_prime_power(const Rational& t, std::uint32_t p,
                                          std::uint32_t e) {
  __int128 scaled = t.num;
  for (std::uint32_t i = 0; i < e; ++i) {
    scaled *= p;
    if (scaled > (__int128{1} << 100))
      throw ExponentOverflowError("t * p^e overflows");
  }
  __int128 c = (scaled + t.den - 1) / t.den;
  if (c > INT64_MAX) throw ExponentOverflowError("ceil(t * p^e) overflows");
  return static_cast<std::uint64_t>(c);
}

inline Rational parse_rational(const std::string& s) {
  auto parse_int = [](const std::string& part) {
    if (part.empty()) throw InvalidInputError("malformed rational: " + part);
    std::size_t i = part[0] == '-' ? 1 : 0;
    if (i == part.size()) throw InvalidInputError("malformed rational: " + part);
    std::int64_t v = 0;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9')
        throw InvalidInputError("malformed rational: " + part);
      v = v * 10 + (part[i] - '0');
      if (v < 0) throw InvalidInputError("rational out of range: " + part);
    }
    return part[0] == '-' ? -v : v;
  };
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  return Rational(parse_int(s.substr(0, slash)),
                  parse_int(s.substr(slash + 1)));
}

}  // namespace frobkit

#endif
