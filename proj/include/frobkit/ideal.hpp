#ifndef FROBKIT_IDEAL_HPP
#define FROBKIT_IDEAL_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frobkit/polynomial.hpp"

namespace frobkit {

/// Finitely generated ideal. Generators share the ambient ring; the zero
/// ideal is represented by the single generator 0. Zero generators and exact
/// duplicates are dropped on construction (same ideal, smaller presentation).
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    std::set<Polynomial, PolynomialLess> seen;
    for (auto& g : gens) {
      ring_.require_compatible(g.ring());
      if (g.is_zero()) continue;
      if (seen.insert(g).second) gens_.push_back(std::move(g));
    }
    if (gens_.empty()) gens_.push_back(Polynomial::zero(ring_));
  }

  static Ideal zero(const Ring& r) { return Ideal(r, {}); }
  static Ideal unit(const Ring& r) { return Ideal(r, {Polynomial::one(r)}); }

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  bool is_zero_ideal() const {
    return gens_.size() == 1 && gens_[0].is_zero();
  }

  std::vector<std::string> generator_strings() const {
    std::vector<std::string> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.to_string());
    return out;
  }

  Exponent max_generator_degree() const {
    Exponent d = 0;
    for (const auto& g : gens_)
      if (!g.is_zero() && g.total_degree() > d) d = g.total_degree();
    return d;
  }

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
};

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  a.ring().require_compatible(b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
  a.ring().require_compatible(b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

/// a^k at generator level; a^0 = (1).
inline Ideal ideal_power(const Ideal& a, std::uint64_t k) {
  if (k == 0) return Ideal::unit(a.ring());
  if (a.generators().size() == 1)
    return Ideal(a.ring(), {a.generators()[0].pow(k)});
  Ideal acc = a;
  for (std::uint64_t i = 1; i < k; ++i) acc = ideal_product(acc, a);
  return acc;
}

/// Bracket power a^[p^e]: the ideal generated by the p^e-th powers of the
/// stored generators. Well-defined on the ideal (independent of the chosen
/// generating set).
inline Ideal bracket_power(const Ideal& a, std::uint32_t e) {
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size());
  for (const auto& g : a.generators()) gens.push_back(g.frobenius_power(e));
  return Ideal(a.ring(), std::move(gens));
}

}  // namespace frobkit

#endif
