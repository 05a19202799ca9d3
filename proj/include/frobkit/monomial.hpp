#ifndef FROBKIT_MONOMIAL_HPP
#define FROBKIT_MONOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "frobkit/errors.hpp"

namespace frobkit {

using Exponent = std::uint64_t;

/// Exponent vector of fixed length (the ambient ring's variable count).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : e_(std::move(exps)) {}

  std::size_t nvars() const { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  Exponent& operator[](std::size_t i) { return e_[i]; }
  const std::vector<Exponent>& exponents() const { return e_; }

  Exponent degree() const {
    return std::accumulate(e_.begin(), e_.end(), Exponent{0});
  }

  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](Exponent v) { return v == 0; });
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  Monomial mul(const Monomial& m, Exponent bound) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      r.e_[i] = e_[i] + m.e_[i];
      if (r.e_[i] > bound || r.e_[i] < e_[i])
        throw ExponentOverflowError("monomial exponent exceeds bound");
    }
    return r;
  }

  /// Exact division; requires m.divides(*this).
  Monomial div(const Monomial& m) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - m.e_[i];
    return r;
  }

  Monomial lcm(const Monomial& m) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      r.e_[i] = std::max(e_[i], m.e_[i]);
    return r;
  }

  /// Componentwise scaling by q, used by Frobenius powers.
  Monomial scaled(Exponent q, Exponent bound) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] != 0 && q > bound / e_[i])
        throw ExponentOverflowError("monomial exponent exceeds bound");
      r.e_[i] = e_[i] * q;
    }
    return r;
  }

  /// Componentwise remainder and quotient mod q (base-q digit split).
  Monomial mod(Exponent q) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] % q;
    return r;
  }
  Monomial quot(Exponent q) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] / q;
    return r;
  }

  bool operator==(const Monomial& m) const { return e_ == m.e_; }
  bool operator!=(const Monomial& m) const { return e_ != m.e_; }

 private:
  std::vector<Exponent> e_;
};

enum class OrderKind { grevlex, lex };

/// Total multiplicative well-order on monomials. The optional permutation
/// reindexes variables before comparison (perm[i] = source index of slot i).
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(OrderKind kind, std::vector<std::uint32_t> perm = {})
      : kind_(kind), perm_(std::move(perm)) {}

  OrderKind kind() const { return kind_; }
  const std::vector<std::uint32_t>& permutation() const { return perm_; }

  /// Three-way compare: negative if a < b, 0 if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.nvars();
    if (kind_ == OrderKind::grevlex) {
      Exponent da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      for (std::size_t k = n; k-- > 0;) {
        Exponent ea = at(a, k), eb = at(b, k);
        if (ea != eb) return ea > eb ? -1 : 1;
      }
      return 0;
    }
    for (std::size_t k = 0; k < n; ++k) {
      Exponent ea = at(a, k), eb = at(b, k);
      if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && perm_ == o.perm_;
  }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

 private:
  Exponent at(const Monomial& m, std::size_t k) const {
    return perm_.empty() ? m[k] : m[perm_[k]];
  }

  OrderKind kind_ = OrderKind::grevlex;
  std::vector<std::uint32_t> perm_;
};

}  // namespace frobkit

#endif
