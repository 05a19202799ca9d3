#ifndef FROBKIT_SEMIGROUP_HPP
#define FROBKIT_SEMIGROUP_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobkit/errors.hpp"

namespace frobkit {

/// Numerical semigroup <n_1, ..., n_r> with gcd 1 (inputs are divided by
/// their gcd; the scaling is recorded). Conductor and gaps are computed by
/// sieve; membership beyond the conductor is automatic. Immutable, cheap to
/// copy.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<std::uint64_t> gens) {
    if (gens.empty())
      throw InvalidInputError("semigroup needs at least one generator");
    for (auto g : gens)
      if (g == 0) throw InvalidInputError("semigroup generators must be > 0");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::uint64_t g = 0;
    for (auto v : gens) g = std::gcd(g, v);
    auto d = std::make_shared<Data>();
    d->scale = g;
    if (g > 1)
      for (auto& v : gens) v /= g;
    d->gens = std::move(gens);
    sieve(*d);
    d_ = std::move(d);
  }

  const std::vector<std::uint64_t>& generators() const { return d_->gens; }
  std::uint64_t recorded_scale() const { return d_->scale; }
  std::uint64_t conductor() const { return d_->conductor; }
  const std::vector<std::uint64_t>& gaps() const { return d_->gaps; }
  std::uint64_t min_generator() const { return d_->gens.front(); }

  bool contains(std::int64_t v) const {
    if (v < 0) return false;
    auto u = static_cast<std::uint64_t>(v);
    if (u >= d_->conductor) return true;
    return d_->member[u];
  }

  bool same(const NumericalSemigroup& o) const {
    return d_ == o.d_ || d_->gens == o.d_->gens;
  }

 private:
  struct Data {
    std::vector<std::uint64_t> gens;
    std::uint64_t scale = 1;
    std::uint64_t conductor = 0;
    std::vector<std::uint64_t> gaps;
    std::vector<bool> member;  // table over [0, conductor)
  };

  /// Sieve with a doubling bound until a run of min-generator consecutive
  /// members appears; past such a run everything is a member.
  static void sieve(Data& d) {
    const std::uint64_t need = d.gens.front();
    std::uint64_t bound = 64;
    for (;;) {
      std::vector<bool> table(bound, false);
      table[0] = true;
      for (std::uint64_t v = 1; v < bound; ++v)
        for (auto g : d.gens) {
          if (g <= v && table[v - g]) {
            table[v] = true;
            break;
          }
        }
      std::uint64_t run = 0;
      for (std::uint64_t v = 0; v < bound; ++v) {
        run = table[v] ? run + 1 : 0;
        if (run == need) {
          std::uint64_t c = v + 1 - run;
          d.conductor = c;
          d.member.assign(table.begin(), table.begin() + c);
          for (std::uint64_t u = 0; u < c; ++u)
            if (!d.member[u]) d.gaps.push_back(u);
          return;
        }
      }
      bound *= 2;
    }
  }

  std::shared_ptr<const Data> d_;
};

/// Fractional ideal of a numerical semigroup ring: a finite set of integer
/// generators; the underlying exponent set is generators + S. Canonical
/// form: no generator lies in another generator + S, sorted ascending.
class FracIdeal {
 public:
  FracIdeal(NumericalSemigroup S, std::vector<std::int64_t> gens)
      : S_(std::move(S)) {
    if (gens.empty())
      throw InvalidInputError("fractional ideal needs at least one generator");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (auto g : gens) {
      bool reachable = false;
      for (auto h : gens_)
        if (S_.contains(g - h)) {
          reachable = true;
          break;
        }
      if (!reachable) gens_.push_back(g);
    }
  }

  static FracIdeal ring(const NumericalSemigroup& S) {
    return FracIdeal(S, {0});
  }

  /// The conductor ideal M = (0, 1, ..., c-1): underlying set Z_{>=0}, the
  /// common FFRT summand class of the monomial curve.
  static FracIdeal conductor_ideal(const NumericalSemigroup& S) {
    std::vector<std::int64_t> gens;
    std::uint64_t c = S.conductor();
    for (std::uint64_t j = 0; j < std::max<std::uint64_t>(c, 1); ++j)
      gens.push_back(static_cast<std::int64_t>(j));
    return FracIdeal(S, std::move(gens));
  }

  const NumericalSemigroup& semigroup() const { return S_; }
  const std::vector<std::int64_t>& generators() const { return gens_; }
  std::int64_t min_generator() const { return gens_.front(); }
  std::int64_t max_generator() const { return gens_.back(); }

  bool contains(std::int64_t z) const {
    for (auto g : gens_)
      if (S_.contains(z - g)) return true;
    return false;
  }

  FracIdeal translated(std::int64_t shift) const {
    std::vector<std::int64_t> g = gens_;
    for (auto& v : g) v += shift;
    return FracIdeal(S_, std::move(g));
  }

  bool operator==(const FracIdeal& o) const {
    return S_.same(o.S_) && gens_ == o.gens_;
  }
  bool operator!=(const FracIdeal& o) const { return !(*this == o); }

  /// Subset check; both sides are S-modules, so generator membership
  /// suffices.
  bool subset_of(const FracIdeal& o) const {
    for (auto g : gens_)
      if (!o.contains(g)) return false;
    return true;
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(gens_[i]);
    }
    return s + "}";
  }

 private:
  NumericalSemigroup S_;
  std::vector<std::int64_t> gens_;
};

/// Minimal generators of an S-closed integer set given by a membership
/// predicate on a window [lo, hi); elements >= hi are assumed members.
/// z is a generator when z - g is a nonmember for every semigroup
/// generator g (generator steps suffice since S is generated by them).
template <class Member>
inline std::vector<std::int64_t> minimal_generators(
    const NumericalSemigroup& S, std::int64_t lo, std::int64_t hi,
    Member member) {
  auto is_member = [&](std::int64_t z) {
    if (z < lo) return false;
    if (z >= hi) return true;
    return static_cast<bool>(member(z));
  };
  std::vector<std::int64_t> gens;
  std::int64_t top = hi + static_cast<std::int64_t>(S.conductor() +
                                                    S.generators().back()) + 1;
  for (std::int64_t z = lo; z < top; ++z) {
    if (!is_member(z)) continue;
    bool reachable = false;
    for (auto g : S.generators())
      if (is_member(z - static_cast<std::int64_t>(g))) {
        reachable = true;
        break;
      }
    if (!reachable) gens.push_back(z);
  }
  return gens;
}

/// Hom between fractional ideals as the fractional ideal
/// {z : z + underlying(I) is contained in underlying(J)}; the condition is
/// decidable from the generators of I and a conductor-bounded window.
inline FracIdeal frac_hom(const FracIdeal& I, const FracIdeal& J) {
  if (!I.semigroup().same(J.semigroup()))
    throw InvalidInputError("frac_hom: mismatched semigroups");
  const NumericalSemigroup& S = I.semigroup();
  auto cond = [&](std::int64_t z) {
    for (auto g : I.generators())
      if (!J.contains(z + g)) return false;
    return true;
  };
  // All z >= hi qualify: z + g >= min(J) + conductor lands past every gap.
  std::int64_t hi = J.min_generator() + static_cast<std::int64_t>(S.conductor()) -
                    I.min_generator();
  std::int64_t lo = J.min_generator() - I.max_generator();
  std::vector<std::int64_t> gens = minimal_generators(S, lo, hi, cond);
  return FracIdeal(S, std::move(gens));
}

/// One residue class of the FFRT decomposition of R^{1/q}: the set
/// S_i = {v in S : v = i mod q} with least element r_i, recorded in
/// denominator-cleared form: scaled_ideal has underlying set
/// (S_i - i)/q, an S-module under the usual action.
struct ResidueClassSummand {
  std::uint64_t residue;
  std::uint64_t least;  // r_i
  FracIdeal scaled_ideal;
  bool isomorphic_to_conductor_ideal;
};

/// R^{1/q} =直 sum of the q residue-class summands; for q >= c each summand
/// is isomorphic to the conductor ideal M via 1 -> t^{r_i/q}, which holds
/// exactly when S_i = r_i + q Z_{>=0} (checked as a set equality on the
/// scaled sets up to the decidability bound).
struct FFRTDecomposition {
  std::uint64_t q;
  std::vector<ResidueClassSummand> classes;
  bool multiplicity_claim;  // R^{1/q} iso M^{(+) q}, asserted only if verified
};

inline FFRTDecomposition ffrt_decompose(const NumericalSemigroup& S,
                                        std::uint64_t q) {
  if (q < 1) throw InvalidInputError("ffrt_decompose: q must be >= 1");
  FFRTDecomposition out{q, {}, false};
  const std::uint64_t c = S.conductor();
  bool all_iso = true;
  for (std::uint64_t i = 0; i < q; ++i) {
    std::uint64_t r = i;
    while (!S.contains(static_cast<std::int64_t>(r))) r += q;
    auto member = [&](std::int64_t z) {
      return S.contains(static_cast<std::int64_t>(i) +
                        z * static_cast<std::int64_t>(q));
    };
    std::int64_t window_hi =
        static_cast<std::int64_t>((c + q - 1) / q + c + 2);
    std::vector<std::int64_t> gens =
        minimal_generators(S, 0, window_hi, member);
    FracIdeal scaled(S, std::move(gens));
    // Isomorphism criterion: scaled set equals {(r_i - i)/q} + Z_{>=0}.
    std::int64_t rscaled = static_cast<std::int64_t>((r - i) / q);
    bool iso = true;
    std::int64_t check_hi = window_hi + static_cast<std::int64_t>(c) + 2;
    for (std::int64_t z = 0; z <= check_hi && iso; ++z) {
      bool in_class = z < window_hi ? static_cast<bool>(member(z))
                                    : true;
      if (in_class != (z >= rscaled)) iso = false;
    }
    all_iso = all_iso && iso;
    out.classes.push_back({i, r, std::move(scaled), iso});
  }
  out.multiplicity_claim = q >= std::max<std::uint64_t>(c, 1) && all_iso;
  return out;
}

/// I_e((t^m), M) computed through the decomposition: t^m sits in the
/// residue-class summand of m mod q; graded homs of that summand into M are
/// a frac_hom, and the image of t^{m/q} is floor(m/q) + Hom. For e = 0 this
/// is t^m * M.
inline FracIdeal frobenius_root_frac(std::uint64_t m, const FracIdeal& M,
                                     std::uint32_t e, std::uint32_t p) {
  const NumericalSemigroup& S = M.semigroup();
  if (!S.contains(static_cast<std::int64_t>(m)))
    throw InvalidInputError("frobenius_root_frac: m must lie in S");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  const std::uint64_t residue = m % q;
  const std::uint64_t c = S.conductor();
  auto member = [&](std::int64_t z) {
    return S.contains(static_cast<std::int64_t>(residue) +
                      z * static_cast<std::int64_t>(q));
  };
  std::int64_t window_hi = static_cast<std::int64_t>((c + q - 1) / q + c + 2);
  FracIdeal summand(S, minimal_generators(S, 0, window_hi, member));
  FracIdeal hom = frac_hom(summand, M);
  return hom.translated(static_cast<std::int64_t>(m / q));
}

/// The module-level descending chain I_e(t^{(p^e-1)x}, M) for e = 1..e_max,
/// with the same stabilization semantics as the polynomial chains.
struct FracChainReport {
  std::uint64_t x;
  FracIdeal module;
  std::uint32_t e_max;
  std::vector<std::pair<std::uint32_t, FracIdeal>> levels;
  std::optional<std::uint32_t> stabilization_index;
};

inline FracChainReport chain_stabilize_frac(std::uint64_t x, const FracIdeal& M,
                                            std::uint32_t e_max,
                                            std::uint32_t p) {
  const NumericalSemigroup& S = M.semigroup();
  if (!S.contains(static_cast<std::int64_t>(x)))
    throw InvalidInputError("chain_stabilize_frac: x must lie in S");
  if (e_max < 1)
    throw InvalidInputError("chain_stabilize_frac: e_max must be >= 1");
  FracChainReport report{x, M, e_max, {}, std::nullopt};
  std::uint64_t q = 1;
  for (std::uint32_t e = 1; e <= e_max; ++e) {
    q *= p;
    report.levels.emplace_back(e, frobenius_root_frac((q - 1) * x, M, e, p));
  }
  std::uint32_t suffix_start = e_max;
  for (std::uint32_t e = e_max; e-- > 1;) {
    if (report.levels[e - 1].second == report.levels[e].second)
      suffix_start = e;
    else
      break;
  }
  if (suffix_start < e_max) report.stabilization_index = suffix_start;
  return report;
}

/// (p, e) with q = p^e, for validating prime-power inputs.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power_split(
    std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    std::uint32_t e = 0;
    std::uint64_t v = q;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (v == 1) return std::make_pair(static_cast<std::uint32_t>(p), e);
    return std::nullopt;
  }
  return std::make_pair(static_cast<std::uint32_t>(q), 1u);  // q prime
}

}  // namespace frobkit

#endif
