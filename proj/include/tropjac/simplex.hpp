#pragma once

// Exact two-phase simplex over Q with Bland's anti-cycling rule.
//
// Problem form: maximize c.x subject to A x = b, x >= 0.  Problem sizes in
// this library are tiny (a handful of generators), so a dense tableau is
// adequate and keeps every pivot exact.

#include "tropjac/linalg.hpp"

#include <optional>
#include <vector>

namespace tropjac::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  std::vector<Rational> x;
  Rational value;
};

namespace detail {

struct Tableau {
  // rows_[r] has `width` entries followed by the rhs.
  RationalMatrix rows;
  std::vector<std::size_t> basis;
  std::size_t width = 0;

  void pivot(std::size_t r, std::size_t col, std::vector<Rational>& objective) {
    Rational inv = 1 / rows[r][col];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][col]) == 0) continue;
      Rational f = rows[i][col];
      for (std::size_t k = 0; k <= width; ++k) rows[i][k] -= f * rows[r][k];
    }
    if (sgn(objective[col]) != 0) {
      Rational f = objective[col];
      for (std::size_t k = 0; k <= width; ++k) objective[k] -= f * rows[r][k];
    }
    basis[r] = col;
  }

  // objective holds reduced costs for a maximization (entering when > 0);
  // objective[width] holds minus the current value.
  bool optimize(std::vector<Rational>& objective, std::size_t allowed) {
    while (true) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j)
        if (sgn(objective[j]) > 0) {
          enter = j;
          break;
        }
      if (enter == allowed) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (sgn(rows[r][enter]) <= 0) continue;
        Rational ratio = rows[r][width] / rows[r][enter];
        if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, enter, objective);
    }
  }
};

}  // namespace detail

inline Result maximize(const RationalMatrix& a, const std::vector<Rational>& b,
                       const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw InputError("lp: rhs length mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw InputError("lp: row length mismatch");

  detail::Tableau t;
  t.width = n + m;
  t.rows.assign(m, std::vector<Rational>(t.width + 1));
  t.basis.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    Rational sign = sgn(b[r]) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t.rows[r][j] = sign * a[r][j];
    t.rows[r][n + r] = 1;
    t.rows[r][t.width] = sign * b[r];
    t.basis[r] = n + r;
  }

  // Phase one: maximize -(sum of artificials).
  std::vector<Rational> phase1(t.width + 1);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= t.width; ++k)
      if (k < n || k == t.width) phase1[k] += t.rows[r][k];
  t.optimize(phase1, n);
  if (sgn(phase1[t.width]) != 0) return {Status::infeasible, {}, 0};

  // Drive remaining artificials out of the basis where possible.
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (t.basis[r] < n) continue;
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(t.rows[r][j]) != 0) {
        col = j;
        break;
      }
    if (col < n) {
      t.pivot(r, col, phase1);
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(r));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
      --r;
    }
  }

  std::vector<Rational> objective(t.width + 1);
  for (std::size_t j = 0; j < n; ++j) objective[j] = c[j];
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    std::size_t bcol = t.basis[r];
    if (sgn(objective[bcol]) == 0) continue;
    Rational f = objective[bcol];
    for (std::size_t k = 0; k <= t.width; ++k) objective[k] -= f * t.rows[r][k];
  }
  if (!t.optimize(objective, n)) return {Status::unbounded, {}, 0};

  Result res;
  res.status = Status::optimal;
  res.x.assign(n, 0);
  for (std::size_t r = 0; r < t.rows.size(); ++r) res.x[t.basis[r]] = t.rows[r][t.width];
  res.value = 0;
  for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

inline bool feasible(const RationalMatrix& a, const std::vector<Rational>& b, std::size_t n) {
  return maximize(a, b, std::vector<Rational>(n)).status != Status::infeasible;
}

}  // namespace tropjac::lp
