#ifndef FROBKIT_RING_HPP
#define FROBKIT_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "frobkit/errors.hpp"
#include "frobkit/monomial.hpp"
#include "frobkit/prime_field.hpp"

namespace frobkit {

/// Ambient polynomial ring F_p[vars] with an active monomial order and a
/// hard exponent bound (computations that would exceed it are rejected).
/// Immutable; cheap to copy.
class Ring {
 public:
  static constexpr Exponent kDefaultExponentBound = Exponent{1} << 32;

  Ring(std::uint32_t p, std::vector<std::string> vars,
       MonomialOrder order = MonomialOrder{},
       Exponent max_exponent = kDefaultExponentBound)
      : d_(std::make_shared<const Data>(
            Data{PrimeField(p), std::move(vars), order, max_exponent})) {
    if (d_->vars.empty())
      throw InvalidInputError("ring needs at least one variable");
  }

  const PrimeField& field() const { return d_->field; }
  std::uint32_t characteristic() const { return d_->field.characteristic(); }
  std::size_t nvars() const { return d_->vars.size(); }
  const std::vector<std::string>& variables() const { return d_->vars; }
  const MonomialOrder& order() const { return d_->order; }
  Exponent max_exponent() const { return d_->max_exponent; }

  Ring with_order(MonomialOrder order) const {
    return Ring(characteristic(), d_->vars, order, d_->max_exponent);
  }

  /// Deep equality: independently constructed rings interoperate.
  bool compatible(const Ring& o) const {
    if (d_ == o.d_) return true;
    return d_->field == o.d_->field && d_->vars == o.d_->vars &&
           d_->order == o.d_->order;
  }

  void require_compatible(const Ring& o) const {
    if (!compatible(o)) throw RingMismatchError("ambient ring mismatch");
  }

  /// p^e as a checked 64-bit value.
  Exponent frobenius_q(std::uint32_t e) const {
    Exponent q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      if (q > d_->max_exponent / characteristic())
        throw ExponentOverflowError("p^e exceeds exponent bound");
      q *= characteristic();
    }
    return q;
  }

 private:
  struct Data {
    PrimeField field;
    std::vector<std::string> vars;
    MonomialOrder order;
    Exponent max_exponent;
  };
  std::shared_ptr<const Data> d_;
};

}  // namespace frobkit

#endif
