#pragma once

// The order context a tropical curve is metrized in: either the partial order
// of a sharp monoid or a lexicographic total order refining one.

#include "tropjac/ordmonoid.hpp"

#include <variant>

namespace tropjac {

class Metric {
 public:
  Metric() = default;
  Metric(SharpMonoid m) : ctx_(std::move(m)) {}
  Metric(ValuationOrder v) : ctx_(std::move(v)) {}

  bool is_total() const { return std::holds_alternative<ValuationOrder>(ctx_); }
  const ValuationOrder& order() const { return std::get<ValuationOrder>(ctx_); }
  const SharpMonoid& monoid() const {
    return is_total() ? order().base() : std::get<SharpMonoid>(ctx_);
  }
  std::size_t ambient_rank() const { return monoid().ambient_rank(); }

  // x > 0 in the order context.  For a monoid this means x is a nonzero
  // element of Q_{>=0} M; lengths may be rational.
  bool positive(const LatticeVector& x) const {
    if (is_total()) return order().sign(x) > 0;
    return !x.is_zero() && monoid().in_rational_cone(x);
  }

  bool nonnegative(const LatticeVector& x) const {
    if (is_total()) return order().sign(x) >= 0;
    return monoid().in_rational_cone(x);
  }

  bool leq(const LatticeVector& a, const LatticeVector& b) const { return nonnegative(b - a); }

  // Bound witnesses for alpha against a nonnegative delta.  In the monoid
  // case the decision is made in Q M, which agrees with M for saturated M.
  std::optional<BoundWitness> bounds(const LatticeVector& alpha, const LatticeVector& delta) const {
    if (is_total()) return order().bounds(alpha, delta);
    return rational_bounds(monoid(), alpha, delta);
  }

  static std::optional<BoundWitness> rational_bounds(const SharpMonoid& m, const LatticeVector& alpha,
                                                     const LatticeVector& delta) {
    // Clearing denominators does not change boundedness or the witnesses'
    // existence; rescale so the integral membership test applies.
    Integer den = 1;
    for (const auto& x : alpha) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& x : delta) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    if (den == 1) return m.bounds(alpha, delta);
    // m*delta <= alpha  <=>  m*(den delta) <= den alpha; witnesses are unchanged.
    return m.bounds(Rational(den) * alpha, Rational(den) * delta);
  }

 private:
  std::variant<SharpMonoid, ValuationOrder> ctx_;
};

}  // namespace tropjac
