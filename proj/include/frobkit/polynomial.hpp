#ifndef FROBKIT_POLYNOMIAL_HPP
#define FROBKIT_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "frobkit/monomial.hpp"
#include "frobkit/ring.hpp"

namespace frobkit {

struct Term {
  Monomial mono;
  std::uint32_t coeff;  // nonzero, canonical in [0, p)
};

/// Sparse exact multivariate polynomial over F_p. Terms are kept sorted in
/// descending monomial order (leading term first) with no zero coefficients;
/// the zero polynomial has an empty term list. Immutable value semantics.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial zero(const Ring& r) { return Polynomial(r); }

  static Polynomial constant(const Ring& r, std::int64_t c) {
    Polynomial f(r);
    std::uint32_t v = r.field().reduce(c);
    if (v != 0) f.terms_.push_back({Monomial(r.nvars()), v});
    return f;
  }

  static Polynomial one(const Ring& r) { return constant(r, 1); }

  static Polynomial variable(const Ring& r, std::size_t i) {
    Monomial m(r.nvars());
    m[i] = 1;
    return from_term(r, m, 1);
  }

  static Polynomial from_term(const Ring& r, const Monomial& m,
                              std::int64_t c) {
    Polynomial f(r);
    std::uint32_t v = r.field().reduce(c);
    if (v != 0) f.terms_.push_back({m, v});
    return f;
  }

  /// Builds from arbitrary (monomial, coefficient) pairs; sorts and combines.
  static Polynomial from_terms(const Ring& r,
                               const std::vector<std::pair<Monomial, std::int64_t>>& ts) {
    std::map<Monomial, std::uint32_t, DescLess> acc{DescLess{r.order()}};
    for (const auto& [m, c] : ts) {
      std::uint32_t v = r.field().reduce(c);
      auto [it, fresh] = acc.emplace(m, v);
      if (!fresh) it->second = r.field().add(it->second, v);
    }
    Polynomial f(r);
    for (const auto& [m, c] : acc)
      if (c != 0) f.terms_.push_back({m, c});
    return f;
  }

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw InvalidInputError("leading term of zero");
    return terms_.front();
  }

  Exponent total_degree() const {
    Exponent d = 0;
    for (const auto& t : terms_)
      if (t.mono.degree() > d) d = t.mono.degree();
    return d;
  }

  Polynomial operator+(const Polynomial& g) const {
    ring_.require_compatible(g.ring_);
    Polynomial r(ring_);
    r.terms_ = merge_add(terms_, g.terms_, 1);
    return r;
  }

  Polynomial operator-(const Polynomial& g) const {
    ring_.require_compatible(g.ring_);
    Polynomial r(ring_);
    r.terms_ = merge_add(terms_, g.terms_, ring_.field().neg(1));
    return r;
  }

  Polynomial operator-() const { return scaled(ring_.field().neg(1)); }

  Polynomial scaled(std::uint32_t c) const {
    Polynomial r(ring_);
    c = c % ring_.characteristic();
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      r.terms_.push_back({t.mono, ring_.field().mul(t.coeff, c)});
    return r;
  }

  /// Product with a single term. Multiplicativity of the order keeps the
  /// term list sorted, so this is a linear pass.
  Polynomial term_mul(const Monomial& m, std::uint32_t c) const {
    Polynomial r(ring_);
    c = c % ring_.characteristic();
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      r.terms_.push_back({t.mono.mul(m, ring_.max_exponent()),
                          ring_.field().mul(t.coeff, c)});
    return r;
  }

  Polynomial operator*(const Polynomial& g) const {
    ring_.require_compatible(g.ring_);
    if (is_zero() || g.is_zero()) return zero(ring_);
    const Polynomial& small = num_terms() <= g.num_terms() ? *this : g;
    const Polynomial& large = num_terms() <= g.num_terms() ? g : *this;
    if (small.num_terms() <= 16) {
      Polynomial acc = zero(ring_);
      for (const auto& t : small.terms_) {
        Polynomial shifted = large.term_mul(t.mono, t.coeff);
        acc.terms_ = merge_add(acc.terms_, shifted.terms_, 1);
      }
      return acc;
    }
    std::map<Monomial, std::uint32_t, DescLess> acc{DescLess{ring_.order()}};
    for (const auto& a : small.terms_)
      for (const auto& b : large.terms_) {
        Monomial m = a.mono.mul(b.mono, ring_.max_exponent());
        std::uint32_t c = ring_.field().mul(a.coeff, b.coeff);
        auto [it, fresh] = acc.emplace(std::move(m), c);
        if (!fresh) it->second = ring_.field().add(it->second, c);
      }
    Polynomial r(ring_);
    for (const auto& [m, c] : acc)
      if (c != 0) r.terms_.push_back({m, c});
    return r;
  }

  Polynomial pow(std::uint64_t n) const {
    Polynomial acc = one(ring_);
    Polynomial base = *this;
    while (n) {
      if (n & 1) acc = acc * base;
      n >>= 1;
      if (n) base = base * base;
    }
    return acc;
  }

  /// f^(p^e). Over F_p coefficients are Frobenius-fixed, so this is exactly
  /// termwise exponent scaling by q = p^e.
  Polynomial frobenius_power(std::uint32_t e) const {
    Exponent q = ring_.frobenius_q(e);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      r.terms_.push_back({t.mono.scaled(q, ring_.max_exponent()), t.coeff});
    return r;
  }

  bool operator==(const Polynomial& g) const {
    if (!ring_.compatible(g.ring_)) return false;
    if (terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].coeff != g.terms_[i].coeff ||
          terms_[i].mono != g.terms_[i].mono)
        return false;
    return true;
  }
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

  /// Canonical text form: terms in descending order, "+"-joined, canonical
  /// coefficients. Example: "x^2*y + 3*y^3 + 6".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      if (!first) os << " + ";
      first = false;
      bool unit = t.mono.is_one();
      if (t.coeff != 1 || unit) {
        os << t.coeff;
        if (!unit) os << "*";
      }
      bool started = false;
      for (std::size_t i = 0; i < ring_.nvars(); ++i) {
        if (t.mono[i] == 0) continue;
        if (started) os << "*";
        started = true;
        os << ring_.variables()[i];
        if (t.mono[i] > 1) os << "^" << t.mono[i];
      }
    }
    return os.str();
  }

  struct DescLess {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const {
      return order.greater(a, b);
    }
  };

 private:
  std::vector<Term> merge_add(const std::vector<Term>& a,
                              const std::vector<Term>& b,
                              std::uint32_t bscale) const {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    const MonomialOrder& ord = ring_.order();
    const PrimeField& F = ring_.field();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      int c = ord.compare(a[i].mono, b[j].mono);
      if (c > 0) {
        out.push_back(a[i++]);
      } else if (c < 0) {
        std::uint32_t v = F.mul(b[j].coeff, bscale);
        if (v) out.push_back({b[j].mono, v});
        ++j;
      } else {
        std::uint32_t v = F.add(a[i].coeff, F.mul(b[j].coeff, bscale));
        if (v) out.push_back({a[i].mono, v});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
      std::uint32_t v = F.mul(b[j].coeff, bscale);
      if (v) out.push_back({b[j].mono, v});
    }
    return out;
  }

  Ring ring_;
  std::vector<Term> terms_;
};

/// Deterministic (non-semantic) strict order on polynomials, for use in sets.
struct PolynomialLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    if (ta.size() != tb.size()) return ta.size() < tb.size();
    const MonomialOrder& ord = a.ring().order();
    for (std::size_t i = 0; i < ta.size(); ++i) {
      int c = ord.compare(ta[i].mono, tb[i].mono);
      if (c != 0) return c > 0;
      if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
    }
    return false;
  }
};

/// Base-p^e digit decomposition: f = sum over basis monomials mu (exponents
/// < p^e) of (c_mu)^{p^e} * mu, exactly. Returns the nonzero (mu, c_mu)
/// pairs sorted in descending order of mu. This realizes the projections of
/// Hom(R^{1/q}, R) onto the free monomial basis over the prime field.
inline std::vector<std::pair<Monomial, Polynomial>> digit_decompose(
    const Polynomial& f, std::uint32_t e) {
  const Ring& R = f.ring();
  Exponent q = R.frobenius_q(e);
  std::map<Monomial, std::vector<std::pair<Monomial, std::int64_t>>,
           Polynomial::DescLess>
      buckets{Polynomial::DescLess{R.order()}};
  for (const auto& t : f.terms()) {
    Monomial mu = t.mono.mod(q);
    Monomial base = t.mono.quot(q);
    buckets[mu].emplace_back(base, static_cast<std::int64_t>(t.coeff));
  }
  std::vector<std::pair<Monomial, Polynomial>> out;
  out.reserve(buckets.size());
  for (auto& [mu, parts] : buckets) {
    Polynomial c = Polynomial::from_terms(R, parts);
    if (!c.is_zero()) out.emplace_back(mu, std::move(c));
  }
  return out;
}

}  // namespace frobkit

#endif
