#ifndef FROBKIT_PRIME_FIELD_HPP
#define FROBKIT_PRIME_FIELD_HPP

#include <cstdint>
#include <string>

#include "frobkit/errors.hpp"

namespace frobkit {

/// Arithmetic in the prime field F_p. Element values are always canonical
/// representatives in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p))
      throw InvalidInputError("characteristic must be prime, got " +
                              std::to_string(p));
  }

  std::uint32_t characteristic() const { return p_; }

  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    if (s >= p_) s -= p_;
    return static_cast<std::uint32_t>(s);
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : static_cast<std::uint32_t>(a + p_ - b);
  }

  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t n) const {
    std::uint64_t base = a % p_, acc = 1;
    while (n) {
      if (n & 1) acc = acc * base % p_;
      base = base * base % p_;
      n >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
  }

  /// Multiplicative inverse; requires a != 0.
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw InvalidInputError("inverse of zero in F_p");
    return pow(a, p_ - 2);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

}  // namespace frobkit

#endif
