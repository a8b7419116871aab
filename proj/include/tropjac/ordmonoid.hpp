#pragma once

// Sharp saturated monoids in Z^n and lexicographic (valuative) refinements.
//
// A SharpMonoid is the set of integral points of the rational cone spanned by
// its generators; it induces the partial order a <= b iff b - a lies in it.
// A ValuationOrder refines that partial order to a total preorder on Z^n by
// comparing W a and W b lexicographically, row 1 being the most significant.

#include "tropjac/linalg.hpp"
#include "tropjac/simplex.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tropjac {

struct BoundWitness {
  Integer lower;  // m with m*delta <= alpha
  Integer upper;  // n with alpha <= n*delta
  friend bool operator==(const BoundWitness&, const BoundWitness&) = default;
};

class SharpMonoid {
 public:
  SharpMonoid() = default;

  SharpMonoid(std::size_t ambient_rank, std::vector<LatticeVector> generators)
      : rank_(ambient_rank), generators_(std::move(generators)) {
    if (rank_ == 0) throw InputError("ambient rank must be positive");
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const auto& g = generators_[i];
      if (g.rank() != rank_)
        throw InputError("generator " + std::to_string(i) + " has wrong length");
      if (!g.is_integral()) throw InputError("generator " + std::to_string(i) + " is not integral");
      if (g.is_zero()) throw InputError("generator " + std::to_string(i) + " is zero");
      for (std::size_t j = 0; j < i; ++j)
        if (generators_[j] == g) throw InputError("duplicate generator " + to_string(g));
    }
    if (!is_pointed()) throw PreconditionError("monoid is not sharp: its cone contains a line");
  }

  // Generated by the unit vectors, i.e. N^n.
  bool is_free() const {
    if (generators_.size() != rank_) return false;
    std::vector<bool> hit(rank_);
    for (const auto& g : generators_) {
      std::size_t ones = 0, at = 0;
      for (std::size_t r = 0; r < rank_; ++r) {
        if (g[r] == 1) ++ones, at = r;
        else if (sgn(g[r]) != 0) return false;
      }
      if (ones != 1 || hit[at]) return false;
      hit[at] = true;
    }
    return true;
  }

  // The free monoid N^n.
  static SharpMonoid orthant(std::size_t n) {
    std::vector<LatticeVector> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(LatticeVector::unit(n, i));
    return SharpMonoid(n, std::move(gens));
  }

  std::size_t ambient_rank() const { return rank_; }
  const std::vector<LatticeVector>& generators() const { return generators_; }

  bool contains(const LatticeVector& x) const {
    check(x);
    if (!x.is_integral()) return false;
    return in_rational_cone(x);
  }

  bool in_rational_cone(const LatticeVector& x) const {
    check(x);
    if (x.is_zero()) return true;
    if (is_free()) {
      for (std::size_t r = 0; r < rank_; ++r)
        if (sgn(x[r]) < 0) return false;
      return true;
    }
    RationalMatrix a(rank_, std::vector<Rational>(generators_.size()));
    std::vector<Rational> b(rank_);
    for (std::size_t r = 0; r < rank_; ++r) {
      for (std::size_t j = 0; j < generators_.size(); ++j) a[r][j] = generators_[j][r];
      b[r] = x[r];
    }
    return lp::feasible(a, b, generators_.size());
  }

  bool leq(const LatticeVector& a, const LatticeVector& b) const {
    check(a);
    return contains(b - a);
  }

  // Integers m <= n with m*delta <= alpha <= n*delta, chosen extremal
  // (m as large and n as small as possible), when alpha is bounded by delta.
  std::optional<BoundWitness> bounds(const LatticeVector& alpha, const LatticeVector& delta) const {
    check(alpha);
    if (!contains(delta)) throw PreconditionError("bounds: delta " + to_string(delta) + " is not in the monoid");
    if (delta.is_zero()) {
      if (alpha.is_zero()) return BoundWitness{0, 0};
      return std::nullopt;
    }
    if (is_free()) {
      // Coordinatewise: t_max = min alpha_i / delta_i, t_min = max, over the support of delta.
      std::optional<Rational> lo, hi;
      for (std::size_t r = 0; r < rank_; ++r) {
        if (sgn(delta[r]) == 0) {
          if (sgn(alpha[r]) != 0) return std::nullopt;
          continue;
        }
        Rational q = alpha[r] / delta[r];
        if (!hi || q < *hi) hi = q;
        if (!lo || q > *lo) lo = q;
      }
      return BoundWitness{floor_of(*hi), ceil_of(*lo)};
    }
    // Over Q the feasible t with alpha - t*delta in the cone form a ray
    // (-inf, t_max]; likewise t*delta - alpha for [t_min, +inf).
    auto t_max = extreme_multiple(alpha, delta, +1);
    if (!t_max) return std::nullopt;
    auto t_min = extreme_multiple(alpha, delta, -1);
    if (!t_min) return std::nullopt;
    return BoundWitness{floor_of(*t_max), ceil_of(*t_min)};
  }

  bool bounded_by(const LatticeVector& alpha, const LatticeVector& delta) const {
    return bounds(alpha, delta).has_value();
  }

  // A rational functional w with w.g >= 1 on every generator minimizing
  // |w|_1, scaled to a primitive integer vector.  Zero when there are no
  // generators.
  std::vector<Rational> positive_functional() const {
    const std::size_t n = rank_, m = generators_.size();
    if (m == 0) return std::vector<Rational>(n);
    // variables: w+ (n), w- (n), slack (m)
    RationalMatrix a(m, std::vector<Rational>(2 * n + m));
    std::vector<Rational> b(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = generators_[i][j];
        a[i][n + j] = -generators_[i][j];
      }
      a[i][2 * n + i] = -1;
    }
    std::vector<Rational> c(2 * n + m);
    for (std::size_t j = 0; j < 2 * n; ++j) c[j] = -1;
    auto res = lp::maximize(a, b, c);
    if (res.status != lp::Status::optimal)
      throw PreconditionError("no strictly positive functional: monoid is not sharp");
    std::vector<Rational> w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = res.x[j] - res.x[n + j];
    return primitive(w);
  }

  static std::vector<Rational> primitive(std::vector<Rational> w) {
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& x : w) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    for (auto& x : w) {
      x *= den_lcm;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
    }
    if (sgn(num_gcd) != 0)
      for (auto& x : w) x /= num_gcd;
    return w;
  }

  friend bool operator==(const SharpMonoid& a, const SharpMonoid& b) {
    return a.rank_ == b.rank_ && a.generators_ == b.generators_;
  }

 private:
  void check(const LatticeVector& x) const {
    if (x.rank() != rank_)
      throw InputError("dimension mismatch: expected rank " + std::to_string(rank_) + ", got " +
                       std::to_string(x.rank()));
  }

  bool is_pointed() const {
    const std::size_t m = generators_.size();
    if (m == 0) return true;
    // lambda >= 0, sum lambda = 1, sum lambda_i g_i = 0 feasible <=> not pointed
    RationalMatrix a(rank_ + 1, std::vector<Rational>(m));
    std::vector<Rational> b(rank_ + 1);
    for (std::size_t r = 0; r < rank_; ++r)
      for (std::size_t j = 0; j < m; ++j) a[r][j] = generators_[j][r];
    for (std::size_t j = 0; j < m; ++j) a[rank_][j] = 1;
    b[rank_] = 1;
    return !lp::feasible(a, b, m);
  }

  // direction +1: sup{t : alpha - t delta in cone}; -1: inf{t : t delta - alpha in cone}.
  std::optional<Rational> extreme_multiple(const LatticeVector& alpha, const LatticeVector& delta,
                                           int direction) const {
    const std::size_t m = generators_.size();
    // variables: lambda (m), t+ , t-
    RationalMatrix a(rank_, std::vector<Rational>(m + 2));
    std::vector<Rational> b(rank_);
    for (std::size_t r = 0; r < rank_; ++r) {
      for (std::size_t j = 0; j < m; ++j) a[r][j] = generators_[j][r];
      // direction +1: sum lambda g + t delta = alpha
      // direction -1: sum lambda g - t delta = -alpha
      a[r][m] = direction * delta[r];
      a[r][m + 1] = -direction * delta[r];
      b[r] = direction * alpha[r];
    }
    std::vector<Rational> c(m + 2);
    c[m] = direction;
    c[m + 1] = -direction;
    auto res = lp::maximize(a, b, c);
    if (res.status == lp::Status::infeasible) return std::nullopt;
    if (res.status == lp::Status::unbounded)
      throw PreconditionError("bounds: unbounded multiple, monoid is not sharp");
    return Rational(res.x[m] - res.x[m + 1]);
  }

  std::size_t rank_ = 0;
  std::vector<LatticeVector> generators_;
};

// Total preorder on Z^n given by a weight matrix read lexicographically.  It
// is a total order on Z^n exactly when the weights have full column rank.
class ValuationOrder {
 public:
  ValuationOrder() = default;

  ValuationOrder(SharpMonoid base, RationalMatrix weights)
      : base_(std::move(base)), weights_(std::move(weights)) {
    for (std::size_t r = 0; r < weights_.size(); ++r)
      if (weights_[r].size() != base_.ambient_rank())
        throw InputError("weight row " + std::to_string(r) + " has wrong length");
    for (const auto& g : base_.generators())
      if (sign(g) <= 0)
        throw PreconditionError("weights do not map generator " + to_string(g) + " lex-positively");
  }

  const SharpMonoid& base() const { return base_; }
  const RationalMatrix& weights() const { return weights_; }
  std::size_t levels() const { return weights_.size(); }
  std::size_t ambient_rank() const { return base_.ambient_rank(); }

  Rational level_value(std::size_t level, const LatticeVector& x) const {
    check(x);
    return dot(weights_[level - 1], x);
  }

  // Sign of x in the total order.
  int sign(const LatticeVector& x) const {
    check(x);
    for (const auto& row : weights_) {
      int s = sgn(dot(row, x));
      if (s != 0) return s;
    }
    return 0;
  }

  bool lex_leq(const LatticeVector& a, const LatticeVector& b) const { return sign(b - a) >= 0; }
  bool lex_less(const LatticeVector& a, const LatticeVector& b) const { return sign(b - a) > 0; }
  bool equivalent(const LatticeVector& a, const LatticeVector& b) const { return sign(b - a) == 0; }

  // 1-based index of the first row not annihilating x, or levels()+1.
  std::size_t arch_level(const LatticeVector& x) const {
    check(x);
    for (std::size_t r = 0; r < weights_.size(); ++r)
      if (sgn(dot(weights_[r], x)) != 0) return r + 1;
    return weights_.size() + 1;
  }

  // In a lexicographic order alpha is bounded by a positive delta exactly
  // when delta's archimedean level is not deeper than alpha's.
  bool bounded_by(const LatticeVector& alpha, const LatticeVector& delta) const {
    if (sign(delta) < 0) throw PreconditionError("bounded_by: delta is negative");
    if (sign(delta) == 0) return sign(alpha) == 0;
    return arch_level(alpha) >= arch_level(delta);
  }

  // Greatest k with k*delta <= alpha, when alpha is bounded by delta.
  std::optional<Integer> floor_div(const LatticeVector& alpha, const LatticeVector& delta) const {
    check(alpha);
    if (sign(delta) <= 0) throw PreconditionError("floor_div: delta " + to_string(delta) + " is not positive");
    if (!bounded_by(alpha, delta)) return std::nullopt;
    const std::size_t level = arch_level(delta);
    Integer guess = floor_of(level_value(level, alpha) / level_value(level, delta));
    // lo satisfies k*delta <= alpha, hi does not.
    Integer lo = guess - 1, hi = guess + 1;
    auto fits = [&](const Integer& k) { return lex_leq(Rational(k) * delta, alpha); };
    while (hi - lo > 1) {
      Integer mid = lo + (hi - lo) / 2;
      (fits(mid) ? lo : hi) = mid;
    }
    return lo;
  }

  std::optional<BoundWitness> bounds(const LatticeVector& alpha, const LatticeVector& delta) const {
    auto m = floor_div(alpha, delta);
    if (!m) return std::nullopt;
    Integer n = -*floor_div(-alpha, delta);
    return BoundWitness{*m, n};
  }

 private:
  void check(const LatticeVector& x) const {
    if (x.rank() != base_.ambient_rank())
      throw InputError("dimension mismatch: expected rank " + std::to_string(base_.ambient_rank()) +
                       ", got " + std::to_string(x.rank()));
  }

  SharpMonoid base_;
  RationalMatrix weights_;
};

// Deterministic total refinement: a primitive strictly positive functional of
// minimal l1 norm, followed by the standard basis rows that raise the rank.
inline ValuationOrder totalize(const SharpMonoid& m) {
  const std::size_t n = m.ambient_rank();
  RationalMatrix rows;
  auto w = m.positive_functional();
  bool nonzero = false;
  for (const auto& x : w) nonzero = nonzero || sgn(x) != 0;
  if (nonzero) rows.push_back(w);
  for (std::size_t i = 0; i < n && rows.size() < n; ++i) {
    auto trial = rows;
    std::vector<Rational> e(n);
    e[i] = 1;
    trial.push_back(std::move(e));
    if (rank_of(trial, n) == trial.size()) rows = std::move(trial);
  }
  return ValuationOrder(m, std::move(rows));
}

}  // namespace tropjac
