#ifndef FROBKIT_GROEBNER_HPP
#define FROBKIT_GROEBNER_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "frobkit/ideal.hpp"
#include "frobkit/polynomial.hpp"

namespace frobkit {

/// Resource caps for Buchberger and division. Exceeding a cap raises
/// ResourceExhaustedError; a capped run never returns a wrong answer.
struct GroebnerLimits {
  std::uint64_t spair_cap = 1'000'000;
  Exponent degree_cap = 512;
};

/// Process-wide default caps, settable once at startup (CLI flag or the
/// FROBKIT_SPAIR_CAP environment variable).
inline GroebnerLimits& default_groebner_limits() {
  static GroebnerLimits limits;
  return limits;
}

/// Reduced Groebner basis: monic elements, no term of any element divisible
/// by the leading term of another, sorted by descending leading monomial.
/// This is the unique canonical form of (ideal, order). The zero ideal has
/// an empty element list. When requested, cofactors[i][j] expresses
/// elements[i] = sum_j cofactors[i][j] * g_j over the original generators.
struct GroebnerBasis {
  Ring ring;
  std::vector<Polynomial> elements;
  bool reduced = true;
  std::vector<std::vector<Polynomial>> cofactors;

  bool has_cofactors() const { return !cofactors.empty(); }
};

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;  // aligned with the divisor list
};

namespace detail {

inline void check_degree(const Polynomial& f, const GroebnerLimits& lim) {
  if (f.total_degree() > lim.degree_cap)
    throw ResourceExhaustedError("intermediate degree exceeds cap");
}

}  // namespace detail

/// Multivariate division: f = sum quotients[i]*basis[i] + remainder with no
/// remainder term divisible by any leading term of the basis. Deterministic:
/// always reduces the current leading term by the first matching divisor.
inline DivisionResult normal_form(const Polynomial& f,
                                  const std::vector<Polynomial>& basis,
                                  const GroebnerLimits& lim,
                                  std::uint64_t* step_budget = nullptr) {
  const Ring& R = f.ring();
  DivisionResult out{Polynomial::zero(R), {}};
  out.quotients.assign(basis.size(), Polynomial::zero(R));
  Polynomial h = f;
  std::vector<std::pair<Monomial, std::int64_t>> rem_terms;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    bool reduced_step = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].is_zero()) continue;
      const Term& glt = basis[i].leading_term();
      if (!glt.mono.divides(lt.mono)) continue;
      Monomial qm = lt.mono.div(glt.mono);
      std::uint32_t qc = R.field().mul(lt.coeff, R.field().inv(glt.coeff));
      out.quotients[i] =
          out.quotients[i] + Polynomial::from_term(R, qm, qc);
      h = h - basis[i].term_mul(qm, qc);
      detail::check_degree(h, lim);
      if (step_budget) {
        if (*step_budget == 0)
          throw ResourceExhaustedError("S-pair reduction budget exhausted");
        --*step_budget;
      }
      reduced_step = true;
      break;
    }
    if (!reduced_step) {
      rem_terms.emplace_back(lt.mono, static_cast<std::int64_t>(lt.coeff));
      h = h - Polynomial::from_term(R, lt.mono, lt.coeff);
    }
  }
  out.remainder = Polynomial::from_terms(R, rem_terms);
  return out;
}

inline DivisionResult normal_form(const Polynomial& f, const GroebnerBasis& G,
                                  const GroebnerLimits& lim = default_groebner_limits()) {
  return normal_form(f, G.elements, lim);
}

namespace detail {

struct WorkEntry {
  Polynomial poly;
  std::vector<Polynomial> cof;  // over original generators; empty if untracked
};

/// Reduced basis of a monomial ideal: its minimal monomial generators.
/// Every S-polynomial of two monomials is zero, so no pair processing is
/// needed.
inline std::vector<Polynomial> monomial_reduced_basis(
    const Ring& R, const std::vector<Polynomial>& gens) {
  std::vector<Monomial> monos;
  monos.reserve(gens.size());
  for (const auto& g : gens) monos.push_back(g.leading_term().mono);
  std::sort(monos.begin(), monos.end(),
            [&](const Monomial& a, const Monomial& b) {
              return R.order().less(a, b);
            });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::vector<Monomial> kept;
  for (const auto& m : monos) {
    bool redundant = false;
    for (const auto& k : kept)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end(),
            [&](const Monomial& a, const Monomial& b) {
              return R.order().greater(a, b);
            });
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (const auto& m : kept) out.push_back(Polynomial::from_term(R, m, 1));
  return out;
}

}  // namespace detail

/// Buchberger's algorithm with normal (sugar-free) pair selection, the
/// coprimality criterion, and chain-criterion discards of redundant pairs.
/// Output is the reduced Groebner basis under the ideal ring's active order;
/// idempotent on its own output. Set with_cofactors to additionally express
/// each basis element over the input generators (needed for explicit
/// operator witnesses).
inline GroebnerBasis buchberger(const Ideal& a,
                                const GroebnerLimits& lim = default_groebner_limits(),
                                bool with_cofactors = false) {
  const Ring& R = a.ring();
  GroebnerBasis out{R, {}, true, {}};
  const auto& gens = a.generators();
  if (a.is_zero_ideal()) return out;

  bool all_monomial = true;
  for (const auto& g : gens)
    if (g.num_terms() > 1) all_monomial = false;
  if (all_monomial && !with_cofactors) {
    out.elements = detail::monomial_reduced_basis(R, gens);
    return out;
  }

  std::uint64_t budget = lim.spair_cap;
  std::vector<detail::WorkEntry> G;
  auto unit_cof = [&](std::size_t j) {
    std::vector<Polynomial> c(gens.size(), Polynomial::zero(R));
    c[j] = Polynomial::one(R);
    return c;
  };
  auto current_polys = [&] {
    std::vector<Polynomial> ps;
    ps.reserve(G.size());
    for (const auto& e : G) ps.push_back(e.poly);
    return ps;
  };
  auto combine = [&](const std::vector<Polynomial>& qs,
                     const std::vector<Polynomial>& base,
                     std::size_t skip = SIZE_MAX) {
    // base - sum qs[k]*G[k].cof, skipping index `skip`
    std::vector<Polynomial> c = base;
    for (std::size_t k = 0; k < qs.size(); ++k) {
      if (k == skip || qs[k].is_zero()) continue;
      for (std::size_t j = 0; j < c.size(); ++j)
        c[j] = c[j] - qs[k] * G[k].cof[j];
    }
    return c;
  };

  // Interreduce the input as it is added, tracking cofactors if requested.
  for (std::size_t j = 0; j < gens.size(); ++j) {
    detail::check_degree(gens[j], lim);
    G.push_back({gens[j], with_cofactors ? unit_cof(j)
                                         : std::vector<Polynomial>{}});
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  auto pair_less = [&](const Pair& x, const Pair& y) {
    int c = R.order().compare(x.lcm, y.lcm);
    if (c != 0) return c < 0;
    if (x.i != y.i) return x.i < y.i;
    return x.j < y.j;
  };
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> treated;
  auto push_pairs_for = [&](std::size_t t) {
    for (std::size_t i = 0; i < t; ++i) {
      if (G[i].poly.is_zero()) continue;
      pending.push_back(
          {i, t,
           G[i].poly.leading_term().mono.lcm(G[t].poly.leading_term().mono)});
    }
  };
  for (std::size_t t = 1; t < G.size(); ++t) push_pairs_for(t);

  while (!pending.empty()) {
    auto it = std::min_element(pending.begin(), pending.end(), pair_less);
    Pair pr = *it;
    pending.erase(it);
    treated.insert({pr.i, pr.j});

    const Monomial& lti = G[pr.i].poly.leading_term().mono;
    const Monomial& ltj = G[pr.j].poly.leading_term().mono;
    // Coprime leading terms: S-polynomial reduces to zero.
    if (pr.lcm.degree() == lti.degree() + ltj.degree()) continue;
    // Chain criterion: both sub-pairs already treated through some divisor.
    bool chained = false;
    for (std::size_t k = 0; k < G.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j || G[k].poly.is_zero()) continue;
      if (!G[k].poly.leading_term().mono.divides(pr.lcm)) continue;
      auto key1 = std::minmax(pr.i, k);
      auto key2 = std::minmax(pr.j, k);
      if (treated.count({key1.first, key1.second}) &&
          treated.count({key2.first, key2.second}))
        chained = true;
    }
    if (chained) continue;

    if (pr.lcm.degree() > lim.degree_cap)
      throw ResourceExhaustedError("S-pair degree exceeds cap");
    const PrimeField& F = R.field();
    const Term& ti = G[pr.i].poly.leading_term();
    const Term& tj = G[pr.j].poly.leading_term();
    Monomial ui = pr.lcm.div(ti.mono);
    Monomial uj = pr.lcm.div(tj.mono);
    std::uint32_t ci = F.inv(ti.coeff);
    std::uint32_t cj = F.inv(tj.coeff);
    Polynomial s =
        G[pr.i].poly.term_mul(ui, ci) - G[pr.j].poly.term_mul(uj, cj);
    DivisionResult div = normal_form(s, current_polys(), lim, &budget);
    if (div.remainder.is_zero()) continue;

    detail::WorkEntry entry{div.remainder, {}};
    if (with_cofactors) {
      std::vector<Polynomial> base(gens.size(), Polynomial::zero(R));
      for (std::size_t j = 0; j < base.size(); ++j)
        base[j] = G[pr.i].cof[j].term_mul(ui, ci) -
                  G[pr.j].cof[j].term_mul(uj, cj);
      entry.cof = combine(div.quotients, base);
    }
    // Normalize monic.
    std::uint32_t lc_inv = F.inv(entry.poly.leading_term().coeff);
    entry.poly = entry.poly.scaled(lc_inv);
    for (auto& c : entry.cof) c = c.scaled(lc_inv);
    G.push_back(std::move(entry));
    push_pairs_for(G.size() - 1);
  }

  // Minimization: drop elements whose leading term is divisible by another
  // kept element's leading term.
  std::vector<std::size_t> order_idx(G.size());
  for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t x, std::size_t y) {
    int c = R.order().compare(G[x].poly.leading_term().mono,
                              G[y].poly.leading_term().mono);
    return c != 0 ? c < 0 : x < y;
  });
  std::vector<std::size_t> kept;
  for (std::size_t idx : order_idx) {
    const Monomial& lt = G[idx].poly.leading_term().mono;
    bool redundant = false;
    for (std::size_t k : kept) {
      const Monomial& klt = G[k].poly.leading_term().mono;
      if (klt.divides(lt)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(idx);
  }

  // Tail interreduction; leading terms are pairwise indivisible so a single
  // pass with updates yields the reduced basis.
  std::vector<detail::WorkEntry> final_set;
  for (std::size_t k : kept) {
    detail::WorkEntry e = G[k];
    std::uint32_t lc_inv = R.field().inv(e.poly.leading_term().coeff);
    e.poly = e.poly.scaled(lc_inv);
    for (auto& c : e.cof) c = c.scaled(lc_inv);
    final_set.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < final_set.size(); ++i) {
    std::vector<Polynomial> others;
    std::vector<std::size_t> oidx;
    for (std::size_t j = 0; j < final_set.size(); ++j)
      if (j != i) {
        others.push_back(final_set[j].poly);
        oidx.push_back(j);
      }
    DivisionResult div = normal_form(final_set[i].poly, others, lim, &budget);
    if (with_cofactors) {
      std::vector<Polynomial> c = final_set[i].cof;
      for (std::size_t k = 0; k < others.size(); ++k) {
        if (div.quotients[k].is_zero()) continue;
        for (std::size_t j = 0; j < c.size(); ++j)
          c[j] = c[j] - div.quotients[k] * final_set[oidx[k]].cof[j];
      }
      final_set[i].cof = std::move(c);
    }
    final_set[i].poly = div.remainder;
  }

  std::sort(final_set.begin(), final_set.end(),
            [&](const detail::WorkEntry& x, const detail::WorkEntry& y) {
              return R.order().greater(x.poly.leading_term().mono,
                                       y.poly.leading_term().mono);
            });
  for (auto& e : final_set) {
    out.elements.push_back(std::move(e.poly));
    if (with_cofactors) out.cofactors.push_back(std::move(e.cof));
  }
  return out;
}

/// Reduced basis under a different order than the ideal's ring carries.
inline GroebnerBasis buchberger(const Ideal& a, const MonomialOrder& ord,
                                const GroebnerLimits& lim = default_groebner_limits(),
                                bool with_cofactors = false) {
  if (ord == a.ring().order()) return buchberger(a, lim, with_cofactors);
  Ring reordered = a.ring().with_order(ord);
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) {
    std::vector<std::pair<Monomial, std::int64_t>> ts;
    for (const auto& t : g.terms())
      ts.emplace_back(t.mono, static_cast<std::int64_t>(t.coeff));
    gens.push_back(Polynomial::from_terms(reordered, ts));
  }
  return buchberger(Ideal(reordered, std::move(gens)), lim, with_cofactors);
}

struct MembershipResult {
  bool member;
  std::vector<Polynomial> quotients;  // over basis.elements, valid if member
  GroebnerBasis basis;
};

/// f in a, with witness quotients over the reduced basis on success.
inline MembershipResult ideal_member(const Polynomial& f, const Ideal& a,
                                     const GroebnerLimits& lim = default_groebner_limits()) {
  a.ring().require_compatible(f.ring());
  GroebnerBasis G = buchberger(a, lim);
  DivisionResult div = normal_form(f, G, lim);
  return {div.remainder.is_zero(), std::move(div.quotients), std::move(G)};
}

/// Canonical equality: reduced bases under the same order coincide.
inline bool ideal_equal(const Ideal& a, const Ideal& b,
                        const GroebnerLimits& lim = default_groebner_limits()) {
  a.ring().require_compatible(b.ring());
  GroebnerBasis ga = buchberger(a, lim);
  GroebnerBasis gb = buchberger(b, lim);
  if (ga.elements.size() != gb.elements.size()) return false;
  for (std::size_t i = 0; i < ga.elements.size(); ++i)
    if (ga.elements[i] != gb.elements[i]) return false;
  return true;
}

/// a contained in b, decided against b's reduced basis.
inline bool ideal_contains(const Ideal& outer, const Ideal& inner,
                           const GroebnerLimits& lim = default_groebner_limits()) {
  GroebnerBasis G = buchberger(outer, lim);
  for (const auto& g : inner.generators()) {
    if (g.is_zero()) continue;
    if (!normal_form(g, G, lim).remainder.is_zero()) return false;
  }
  return true;
}

/// The ideal presented by its reduced basis (unique canonical generators).
inline Ideal canonical_form(const Ideal& a,
                            const GroebnerLimits& lim = default_groebner_limits()) {
  GroebnerBasis G = buchberger(a, lim);
  if (G.elements.empty()) return Ideal::zero(a.ring());
  return Ideal(a.ring(), G.elements);
}

}  // namespace frobkit

#endif
