// Acceptance suite: one criterion per invocation (argument 1..9), or all
// when run without arguments. Prints one PASS/FAIL line per criterion and
// exits nonzero if any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "frobkit/frobkit.hpp"
#include "frobkit/json_report.hpp"
#include "oracles.hpp"

using namespace frobkit;

namespace {

struct Checker {
  int failures = 0;
  int checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = what;
    }
  }
};

Polynomial P(const Ring& R, const std::string& s) {
  return parse_polynomial(R, s);
}

Ideal monomial_ideal(const Ring& R, const std::vector<Monomial>& monos) {
  std::vector<Polynomial> gens;
  for (const auto& m : monos) gens.push_back(Polynomial::from_term(R, m, 1));
  return Ideal(R, std::move(gens));
}

// ---------------------------------------------------------------------------
// Criterion 1: Frobenius-root oracle equivalence over every monomial ideal
// in <= 3 variables with generator degrees <= 4, p in {2,3}, e in {1,2}.
// ---------------------------------------------------------------------------
void criterion_1(Checker& c) {
  std::vector<std::string> names = {"x", "y", "z"};
  for (std::size_t nvars = 1; nvars <= 3; ++nvars) {
    std::vector<Monomial> box = oracles::monomial_box(nvars, 4);
    std::vector<Monomial> poset;
    for (const auto& m : box)
      if (!m.is_one()) poset.push_back(m);

    std::vector<Ring> rings;
    for (std::uint32_t p : {2u, 3u})
      rings.emplace_back(
          p, std::vector<std::string>(names.begin(), names.begin() + nvars));

    std::vector<Monomial> chosen;
    std::uint64_t count = 0;
    std::function<void(std::size_t)> enumerate = [&](std::size_t start) {
      if (!chosen.empty()) {
        ++count;
        for (const Ring& R : rings) {
          Ideal a = monomial_ideal(R, chosen);
          Exponent dmax = a.max_generator_degree();
          for (std::uint32_t e : {1u, 2u}) {
            auto oracle = oracles::monomial_root_oracle(
                chosen, R.frobenius_q(e), dmax);
            if (oracle.empty()) {
              c.expect(false, "oracle premise failed");
              continue;
            }
            bool ok = ideal_equal(frobenius_root(a, e),
                                  monomial_ideal(R, oracle));
            if (!ok)
              c.expect(false, "root mismatch at nvars=" +
                                  std::to_string(nvars) + " p=" +
                                  std::to_string(R.characteristic()) +
                                  " e=" + std::to_string(e));
          }
        }
      }
      for (std::size_t k = start; k < poset.size(); ++k) {
        bool antichain = true;
        for (const auto& m : chosen)
          if (m.divides(poset[k]) || poset[k].divides(m)) {
            antichain = false;
            break;
          }
        if (!antichain) continue;
        chosen.push_back(poset[k]);
        enumerate(k + 1);
        chosen.pop_back();
      }
    };
    enumerate(0);
    c.expect(count > 0, "no ideals enumerated");
    if (nvars == 3) c.expect(count == 161420, "unexpected antichain count");

    // unit and zero ideals as edge cases
    for (const Ring& R : rings)
      for (std::uint32_t e : {1u, 2u}) {
        c.expect(ideal_equal(frobenius_root(Ideal::unit(R), e),
                             Ideal::unit(R)),
                 "root of (1)");
        c.expect(frobenius_root(Ideal::zero(R), e).is_zero_ideal(),
                 "root of (0)");
      }
  }
}

// ---------------------------------------------------------------------------
// Criterion 2: the basic submodule-chain identities on >= 200 randomized
// (a, x, e) cases over p in {2,3,5}. Zero violations allowed.
// ---------------------------------------------------------------------------
void criterion_2(Checker& c) {
  std::mt19937 rng(260809);
  int cases = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Ring R(p, {"x", "y"});
    std::uniform_int_distribution<int> coeff(1, p - 1);
    std::uniform_int_distribution<int> nterms(1, 4);
    auto rand_poly = [&](int dmax) {
      std::vector<std::pair<Monomial, std::int64_t>> ts;
      int n = nterms(rng);
      for (int t = 0; t < n; ++t) {
        Monomial m(2);
        std::uniform_int_distribution<Exponent> d(0, dmax);
        m[0] = d(rng);
        std::uniform_int_distribution<Exponent> d2(0, dmax - std::min<Exponent>(m[0], dmax));
        m[1] = d2(rng);
        ts.emplace_back(m, coeff(rng));
      }
      return Polynomial::from_terms(R, ts);
    };
    for (int trial = 0; trial < 40; ++trial) {
      Polynomial f = rand_poly(4);
      Polynomial g = rand_poly(4);
      Polynomial x = rand_poly(3);
      if (f.is_zero() || g.is_zero() || x.is_zero()) continue;
      Ideal a(R, {f});
      Ideal b(R, {f, g});
      for (std::uint32_t e : {1u, 2u}) {
        // (1) containment
        c.expect(ideal_contains(frobenius_root(b, e), frobenius_root(a, e)),
                 "lemma(1) containment violated");
        // (2) F-pure equality through one bracket level
        c.expect(ideal_equal(frobenius_root(bracket_power(b, 1), e + 1),
                             frobenius_root(b, e)),
                 "lemma(2) equality violated");
        ++cases;
      }
      // (3) descending chain
      FrobeniusChainReport rep = descending_chain(x, 3);
      for (std::size_t i = 0; i + 1 < rep.levels.size(); ++i)
        c.expect(ideal_contains(rep.levels[i].second,
                                rep.levels[i + 1].second),
                 "lemma(3) descent violated");
      ++cases;
    }
  }
  c.expect(cases >= 200, "fewer than 200 randomized cases (" +
                             std::to_string(cases) + ")");
}

/// Fixed 20-polynomial corpus in <= 2 variables over F_2 / F_3.
std::vector<Polynomial> fixed_corpus() {
  std::vector<Polynomial> out;
  Ring F2(2, {"x", "y"});
  for (const char* s : {"x", "y", "x*y", "x+y", "x^2*y", "x^3 + x*y^2",
                        "x^2*y + x*y^2", "x^2 + x*y", "x^3*y^2",
                        "x^2*y^2 + x*y", "x^4 + y^4 + x^2*y"})
    out.push_back(P(F2, s));
  Ring F3(3, {"x", "y"});
  for (const char* s : {"x", "x*y", "x^2*y", "x + 2*y", "x^2 + y^2",
                        "x^3 + y^3", "x*y^2 + x", "2*x^2 + x*y",
                        "x^2*y^2"})
    out.push_back(P(F3, s));
  return out;
}

Ideal chain_level(const Polynomial& x, std::uint32_t e) {
  Exponent q = x.ring().frobenius_q(e);
  return frobenius_root(Ideal(x.ring(), {x.pow(q - 1)}), e);
}

// ---------------------------------------------------------------------------
// Criterion 3: delta certificates exist exactly when consecutive chain
// levels agree; every returned certificate verifies exactly.
// ---------------------------------------------------------------------------
void criterion_3(Checker& c) {
  std::vector<Polynomial> corpus = fixed_corpus();
  c.expect(corpus.size() == 20, "corpus size");
  for (const Polynomial& x : corpus) {
    for (std::uint32_t e : {0u, 1u, 2u}) {
      bool roots_equal =
          ideal_equal(chain_level(x, e + 1),
                      e == 0 ? Ideal::unit(x.ring()) : chain_level(x, e));
      auto cert = construct_delta(x, e);
      c.expect(cert.has_value() == roots_equal,
               "equivalence failed for x=" + x.to_string() +
                   " e=" + std::to_string(e));
      if (cert)
        c.expect(verify_delta(*cert),
                 "certificate failed verification for x=" + x.to_string());
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 4: generation reports conclude positively (with verified
// certificates) within e_max = 6 on the corpus; F-pure pairs at e* = 1 with
// chain constantly (1).
// ---------------------------------------------------------------------------
void criterion_4(Checker& c) {
  for (const Polynomial& x : fixed_corpus()) {
    GenerationReport rep = generation_report(x, 6);
    c.expect(rep.generated && rep.delta_verified,
             "generation not certified for x=" + x.to_string() + " over F_" +
                 std::to_string(x.ring().characteristic()));
  }
  // squarefree monomials are F-pure pairs
  for (std::uint32_t p : {2u, 3u}) {
    Ring R(p, {"x", "y"});
    for (const char* s : {"x", "y", "x*y"}) {
      Polynomial x = P(R, s);
      c.expect(is_fpure_pair(x, 1), std::string("F-purity of ") + s);
      GenerationReport rep = generation_report(x, 6);
      c.expect(rep.generated, std::string("generation of ") + s);
      c.expect(rep.chain.stabilization_index.has_value() &&
                   *rep.chain.stabilization_index == 1,
               std::string("e* = 1 for ") + s);
      bool constant_unit = true;
      for (const auto& [e, ideal] : rep.chain.levels)
        if (!ideal_equal(ideal, Ideal::unit(R))) constant_unit = false;
      c.expect(constant_unit, std::string("chain constantly (1) for ") + s);
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 5: test-ideal golden values.
// ---------------------------------------------------------------------------
void criterion_5(Checker& c) {
  {
    Ring R(2, {"x", "y"});
    Ideal m(R, {P(R, "x"), P(R, "y")});
    c.expect(ideal_equal(test_ideal(m, Rational(2)).tau, m),
             "tau((x,y)^2) != (x,y) over F_2");
  }
  {
    Ring R(2, {"x"});
    Ideal a(R, {P(R, "x")});
    JumpReport rep = jumping_exponents(a, Rational(2), 3);
    bool jumps_at_integers = rep.jumps.size() == 2 &&
                             rep.jumps[0].hi == Rational(1) &&
                             rep.jumps[1].hi == Rational(2) &&
                             rep.jumps[0].exact_candidate &&
                             rep.jumps[1].exact_candidate;
    c.expect(jumps_at_integers, "tau((x)^t) jumps not at integers");
    // plateau values: (1) then (x) then (x^2)
    c.expect(rep.plateaus.size() == 3, "tau((x)^t) plateau count");
    if (rep.plateaus.size() == 3) {
      c.expect(ideal_equal(rep.plateaus[0].tau, Ideal::unit(R)),
               "first plateau not (1)");
      c.expect(ideal_equal(rep.plateaus[1].tau, a), "second plateau not (x)");
      c.expect(ideal_equal(rep.plateaus[2].tau, Ideal(R, {P(R, "x^2")})),
               "third plateau not (x^2)");
    }
  }
  {
    Ring R(7, {"x", "y"});
    Ideal cusp(R, {P(R, "x^2 + y^3")});
    auto [lo, hi] = fpt_interval(cusp, 4);
    c.expect(lo < Rational(5, 6) && Rational(5, 6) <= hi,
             "fpt interval misses 5/6");
    c.expect(hi.num * lo.den - lo.num * hi.den == 1 &&
                 hi.den == 2401 && lo.den <= 2401,
             "fpt interval width is not 7^-4");
  }
}

// ---------------------------------------------------------------------------
// Criterion 6: discreteness at resolution, with plateau-constancy checks.
// ---------------------------------------------------------------------------
void criterion_6(Checker& c) {
  {
    Ring R(2, {"x", "y"});
    Ideal m(R, {P(R, "x"), P(R, "y")});
    JumpReport rep = jumping_exponents(m, Rational(3), 3);
    c.expect(rep.jumps.size() == 2, "(x,y): expected exactly 2 jumps");
    if (rep.jumps.size() == 2) {
      c.expect(rep.jumps[0].hi == Rational(2) && rep.jumps[0].exact_candidate,
               "(x,y): first jump not at 2");
      c.expect(rep.jumps[1].hi == Rational(3) && rep.jumps[1].exact_candidate,
               "(x,y): second jump not at 3");
      c.expect(ideal_equal(rep.jumps[0].tau_left, Ideal::unit(R)) &&
                   ideal_equal(rep.jumps[0].tau_right, m) &&
                   ideal_equal(rep.jumps[1].tau_right, ideal_power(m, 2)),
               "(x,y): tau sequence (1) -> m -> m^2");
    }
    // Lemma conti: every multi-point plateau passed its interior sample
    for (const auto& pl : rep.plateaus) {
      std::int64_t k0 = pl.from.num * (8 / pl.from.den);
      std::int64_t k1 = pl.to.num * (8 / pl.to.den);
      if (k1 > k0)
        c.expect(pl.interior_checked, "(x,y): plateau interior unchecked");
    }
  }
  {
    Ring R(7, {"x", "y"});
    Ideal cusp(R, {P(R, "x^2 + y^3")});
    JumpReport rep = jumping_exponents(cusp, Rational(1), 4);
    c.expect(rep.jumps.size() == 2, "cusp: expected exactly 2 jump intervals");
    if (rep.jumps.size() == 2) {
      c.expect(rep.jumps[0].lo < Rational(5, 6) &&
                   Rational(5, 6) <= rep.jumps[0].hi,
               "cusp: first jump interval misses 5/6");
      c.expect(rep.jumps[1].hi == Rational(1) && rep.jumps[1].exact_candidate,
               "cusp: second jump not at 1");
      c.expect(ideal_equal(rep.jumps[0].tau_right,
                           Ideal(R, {P(R, "x"), P(R, "y")})),
               "cusp: tau right of 5/6 is not (x,y)");
      c.expect(ideal_equal(rep.jumps[1].tau_right, cusp),
               "cusp: tau at 1 is not (x^2+y^3)");
    }
    for (const auto& pl : rep.plateaus) {
      std::int64_t k0 = pl.from.num * (2401 / pl.from.den);
      std::int64_t k1 = pl.to.num * (2401 / pl.to.den);
      if (k1 > k0)
        c.expect(pl.interior_checked, "cusp: plateau interior unchecked");
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 7: the degree bound with r = n holds for every tau computed in
// criteria 5-6 (each distinct tau is represented by its plateau endpoints
// and the golden exponents).
// ---------------------------------------------------------------------------
void criterion_7(Checker& c) {
  {
    Ring R(2, {"x", "y"});
    Ideal m(R, {P(R, "x"), P(R, "y")});
    c.expect(degree_bound_check(m, Rational(2), 2), "(x,y) at t=2");
    JumpReport rep = jumping_exponents(m, Rational(3), 3);
    for (const auto& pl : rep.plateaus) {
      c.expect(degree_bound_check(m, pl.from, 2),
               "(x,y) at t=" + pl.from.str());
      c.expect(degree_bound_check(m, pl.to, 2), "(x,y) at t=" + pl.to.str());
    }
  }
  {
    Ring R(2, {"x"});
    Ideal a(R, {P(R, "x")});
    JumpReport rep = jumping_exponents(a, Rational(2), 3);
    for (const auto& pl : rep.plateaus)
      c.expect(degree_bound_check(a, pl.from, 1), "(x) at t=" + pl.from.str());
  }
  {
    Ring R(7, {"x", "y"});
    Ideal cusp(R, {P(R, "x^2 + y^3")});
    JumpReport rep = jumping_exponents(cusp, Rational(1), 4);
    for (const auto& pl : rep.plateaus)
      c.expect(degree_bound_check(cusp, pl.from, 2),
               "cusp at t=" + pl.from.str());
    c.expect(degree_bound_check(cusp, Rational(5, 6), 2), "cusp at t=5/6");
  }
}

// ---------------------------------------------------------------------------
// Criterion 8: the monomial-curve decomposition and module chains.
// ---------------------------------------------------------------------------
void criterion_8(Checker& c) {
  struct Case {
    std::vector<std::uint64_t> gens;
    std::vector<std::uint64_t> qs;  // prime powers >= conductor
  };
  std::vector<Case> cases = {{{2, 3}, {2, 5, 8}}, {{3, 5}, {9, 16}}};
  for (const auto& cs : cases) {
    NumericalSemigroup S(cs.gens);
    for (std::uint64_t q : cs.qs) {
      FFRTDecomposition d = ffrt_decompose(S, q);
      c.expect(d.classes.size() == q, "class count");
      bool all_iso = true;
      for (const auto& cl : d.classes)
        if (!cl.isomorphic_to_conductor_ideal) all_iso = false;
      c.expect(all_iso, "summand not isomorphic to M at q=" +
                            std::to_string(q));
      c.expect(d.multiplicity_claim, "multiplicity claim at q=" +
                                         std::to_string(q));
    }
    // Theorem stabilize desk check on the module chains
    for (std::uint32_t p : {2u, 3u}) {
      for (std::uint64_t x : cs.gens) {
        for (const FracIdeal& M :
             {FracIdeal::ring(S), FracIdeal::conductor_ideal(S)}) {
          FracChainReport rep = chain_stabilize_frac(x, M, 6, p);
          c.expect(rep.stabilization_index.has_value(),
                   "module chain unstabilized for x=" + std::to_string(x));
          for (std::size_t i = 0; i + 1 < rep.levels.size(); ++i)
            c.expect(rep.levels[i + 1].second.subset_of(rep.levels[i].second),
                     "module chain not descending");
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 9: byte-identical CLI output on repeated runs over the fixture
// directory.
// ---------------------------------------------------------------------------
void criterion_9(Checker& c) {
  std::vector<std::string> fixtures = {
      "frob_root_basic.prob", "frob_root_order.prob", "chain_horizon.prob",
      "chain_x2y.prob",       "delta_cert.prob",      "fpure_pair.prob",
      "test_ideal_m2.prob",   "test_ideal_half.prob", "nu_xy.prob",
      "fpt_x2.prob",          "jumps_m.prob",         "jumps_principal.prob",
      "degree_check.prob",    "ffrt_23.prob",         "ffrt_35.prob",
      "frac_chain_23.prob",   "frac_chain_35.prob",   "generation_x2y.prob",
  };
  auto run_once = [&](const std::string& fixture, int* code) {
    std::string cmd = std::string(FROBKIT_CLI_PATH) + " " +
                      FROBKIT_FIXTURE_DIR + "/" + fixture + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return std::string();
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    if (code) *code = WEXITSTATUS(status);
    return out;
  };
  for (const auto& fixture : fixtures) {
    int code1 = -1, code2 = -1;
    std::string a = run_once(fixture, &code1);
    std::string b = run_once(fixture, &code2);
    c.expect(!a.empty(), fixture + ": no output");
    c.expect(a == b, fixture + ": outputs differ between runs");
    c.expect(code1 == code2, fixture + ": exit codes differ");
    c.expect(code1 != 2, fixture + ": unexpected input/resource error");
  }
}

struct Criterion {
  int number;
  const char* description;
  void (*run)(Checker&);
};

const Criterion kCriteria[] = {
    {1, "Frobenius-root oracle equivalence (exhaustive monomial sweep)",
     criterion_1},
    {2, "submodule-chain identities on randomized cases", criterion_2},
    {3, "delta certificate existence equivalence", criterion_3},
    {4, "D-module generation desk check", criterion_4},
    {5, "test-ideal golden values", criterion_5},
    {6, "F-jumping exponent discreteness at resolution", criterion_6},
    {7, "degree bound with r = n", criterion_7},
    {8, "monomial-curve FFRT decomposition and module chains", criterion_8},
    {9, "CLI determinism over the fixture directory", criterion_9},
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  if (argc > 1) selected = std::atoi(argv[1]);
  bool all_ok = true;
  for (const Criterion& cr : kCriteria) {
    if (selected != 0 && cr.number != selected) continue;
    Checker checker;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::ostringstream line;
    if (checker.failures == 0) {
      line << "PASS criterion " << cr.number << ": " << cr.description
           << " (" << checker.checks << " checks, " << std::fixed;
      line.precision(1);
      line << secs << "s)";
    } else {
      all_ok = false;
      line << "FAIL criterion " << cr.number << ": " << cr.description
           << " (" << checker.failures << "/" << checker.checks
           << " checks failed; first: " << checker.first_failure << ")";
    }
    std::cout << line.str() << std::endl;
  }
  return all_ok ? 0 : 1;
}
