#ifndef FROBKIT_FROBENIUS_ROOT_HPP
#define FROBKIT_FROBENIUS_ROOT_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "frobkit/groebner.hpp"
#include "frobkit/ideal.hpp"
#include "frobkit/polynomial.hpp"

namespace frobkit {

/// Frobenius root I_e(a, R) = a^[1/p^e]: the smallest ideal J with
/// a contained in J^[p^e]. Over the polynomial ring R is free over R^q on
/// the monomials with exponents below q, so the root is generated by the
/// base-q digit coefficients of the generators. e = 0 is the identity and
/// the root of (0) is (0).
inline Ideal frobenius_root(const Ideal& a, std::uint32_t e) {
  if (e == 0) return a;
  if (a.is_zero_ideal()) return Ideal::zero(a.ring());
  std::set<Polynomial, PolynomialLess> gens;
  for (const auto& g : a.generators())
    for (auto& [mu, c] : digit_decompose(g, e)) gens.insert(std::move(c));
  return Ideal(a.ring(),
               std::vector<Polynomial>(gens.begin(), gens.end()));
}

/// The descending chain I_1(x^{p-1}) >= I_2(x^{p^2-1}) >= ... with its
/// stabilization index: the least e* such that every consecutive pair from
/// e* through e_max is equal (at least one verified equality; a lone final
/// level certifies nothing).
struct FrobeniusChainReport {
  Polynomial x;
  std::uint32_t e_max;
  std::vector<std::pair<std::uint32_t, Ideal>> levels;  // (e, I_e(x^{p^e-1}))
  std::optional<std::uint32_t> stabilization_index;
};

inline FrobeniusChainReport descending_chain(
    const Polynomial& x, std::uint32_t e_max,
    const GroebnerLimits& lim = default_groebner_limits()) {
  if (x.is_zero()) throw InvalidInputError("descending_chain: x must be nonzero");
  if (e_max < 1) throw InvalidInputError("descending_chain: e_max must be >= 1");
  const std::uint32_t p = x.ring().characteristic();
  FrobeniusChainReport report{x, e_max, {}, std::nullopt};
  Polynomial xpow = Polynomial::one(x.ring());  // x^{p^e - 1}
  const Polynomial xp1 = x.pow(p - 1);
  for (std::uint32_t e = 1; e <= e_max; ++e) {
    // x^{p^e - 1} = (x^{p^{e-1} - 1})^p * x^{p-1}
    xpow = xpow.frobenius_power(1) * xp1;
    report.levels.emplace_back(e, frobenius_root(Ideal(x.ring(), {xpow}), e));
  }
  std::uint32_t suffix_start = e_max;
  for (std::uint32_t e = e_max; e-- > 1;) {
    if (ideal_equal(report.levels[e - 1].second, report.levels[e].second, lim))
      suffix_start = e;
    else
      break;
  }
  if (suffix_start < e_max) report.stabilization_index = suffix_start;
  return report;
}

/// Validation utility behind stabilization detection:
/// I_{e1+e2}(a) == I_{e2}(I_{e1}(a)).
inline bool root_compose_check(const Ideal& a, std::uint32_t e1,
                               std::uint32_t e2,
                               const GroebnerLimits& lim = default_groebner_limits()) {
  return ideal_equal(frobenius_root(a, e1 + e2),
                     frobenius_root(frobenius_root(a, e1), e2), lim);
}

}  // namespace frobkit

#endif
