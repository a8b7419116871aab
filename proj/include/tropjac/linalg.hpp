#pragma once

// Exact dense linear algebra over Q and Z.
//
// Rational side: reduced row echelon form, rank, particular solutions and
// null spaces.  Integer side: column-style Hermite normal form with a
// unimodular transform, which gives integer solving and integer kernels.

#include "tropjac/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tropjac {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<Integer>>;
using IntVector = std::vector<Integer>;

inline std::size_t num_cols(const RationalMatrix& m, std::size_t fallback = 0) {
  return m.empty() ? fallback : m.front().size();
}

struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan elimination.  `cols` must be passed when `m` has no rows.
inline RowEchelon row_reduce(RationalMatrix m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && sgn(m[pick][col]) == 0) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank_of(const RationalMatrix& m, std::size_t cols) {
  return row_reduce(m, cols).pivot_cols.size();
}

// Some x with m x = b, free variables set to zero; nullopt if inconsistent.
inline std::optional<std::vector<Rational>> solve_rational(const RationalMatrix& m,
                                                           const std::vector<Rational>& b,
                                                           std::size_t cols) {
  if (b.size() != m.size()) throw InputError("solve_rational: right-hand side length mismatch");
  RationalMatrix aug = m;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  auto ech = row_reduce(std::move(aug), cols + 1);
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
    if (ech.pivot_cols[r] == cols) return std::nullopt;
    x[ech.pivot_cols[r]] = ech.reduced[r][cols];
  }
  return x;
}

// Basis of {x : m x = 0} over Q.
inline RationalMatrix nullspace_rational(const RationalMatrix& m, std::size_t cols) {
  auto ech = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  RationalMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) v[ech.pivot_cols[r]] = -ech.reduced[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Integer side.

struct ColumnHermite {
  IntMatrix h;                  // h = a * u, lower echelon by columns
  IntMatrix u;                  // unimodular, cols x cols
  std::vector<std::size_t> pivot_rows;  // pivot row of column j, j < rank
};

// Column-style Hermite normal form: elementary unimodular column operations
// bring `a` to lower echelon form with positive pivots and entries left of
// each pivot reduced into [0, pivot).
inline ColumnHermite column_hermite(const IntMatrix& a, std::size_t cols) {
  const std::size_t rows = a.size();
  IntMatrix h = a;
  IntMatrix u(cols, IntVector(cols));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

  auto col_combine = [&](std::size_t j, std::size_t k, const Integer& p, const Integer& q,
                         const Integer& r, const Integer& s) {
    // (col_j, col_k) <- (p col_j + q col_k, r col_j + s col_k)
    for (std::size_t i = 0; i < rows; ++i) {
      Integer x = h[i][j], y = h[i][k];
      h[i][j] = p * x + q * y;
      h[i][k] = r * x + s * y;
    }
    for (std::size_t i = 0; i < cols; ++i) {
      Integer x = u[i][j], y = u[i][k];
      u[i][j] = p * x + q * y;
      u[i][k] = r * x + s * y;
    }
  };

  std::vector<std::size_t> pivot_rows;
  std::size_t piv = 0;
  for (std::size_t i = 0; i < rows && piv < cols; ++i) {
    for (std::size_t k = piv + 1; k < cols; ++k) {
      if (sgn(h[i][k]) == 0) continue;
      Integer a0 = h[i][piv], b0 = h[i][k];
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a0.get_mpz_t(), b0.get_mpz_t());
      Integer ag = a0 / g, bg = b0 / g;
      // det [[x, -bg],[y, ag]] = x*ag + y*bg = 1
      col_combine(piv, k, x, y, -bg, ag);
    }
    if (sgn(h[i][piv]) == 0) continue;
    if (sgn(h[i][piv]) < 0) col_combine(piv, piv, -1, 0, -1, 0);
    for (std::size_t k = 0; k < piv; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][k].get_mpz_t(), h[i][piv].get_mpz_t());
      if (sgn(q) != 0) col_combine(k, piv, 1, -q, 0, 1);
    }
    pivot_rows.push_back(i);
    ++piv;
  }
  return {std::move(h), std::move(u), std::move(pivot_rows)};
}

// Integer solution of a x = b.  Returns nullopt when none exists.  Among all
// solutions the one with zero coordinates along the kernel directions of the
// Hermite transform is returned; it is the unique solution when a has full
// column rank.
inline std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b,
                                              std::size_t cols) {
  if (b.size() != a.size()) throw InputError("solve_integer: right-hand side length mismatch");
  auto hf = column_hermite(a, cols);
  const std::size_t rank = hf.pivot_rows.size();
  IntVector y(cols);
  IntVector residual = b;
  for (std::size_t j = 0; j < rank; ++j) {
    std::size_t i = hf.pivot_rows[j];
    // rows strictly between pivots must already be satisfied
    for (std::size_t r = (j == 0 ? 0 : hf.pivot_rows[j - 1] + 1); r < i; ++r)
      if (sgn(residual[r]) != 0) return std::nullopt;
    if (!mpz_divisible_p(residual[i].get_mpz_t(), hf.h[i][j].get_mpz_t())) return std::nullopt;
    y[j] = residual[i] / hf.h[i][j];
    for (std::size_t r = i; r < a.size(); ++r) residual[r] -= hf.h[r][j] * y[j];
  }
  for (const auto& r : residual)
    if (sgn(r) != 0) return std::nullopt;
  IntVector x(cols);
  for (std::size_t r = 0; r < cols; ++r)
    for (std::size_t j = 0; j < rank; ++j) x[r] += hf.u[r][j] * y[j];
  return x;
}

// Z-basis of the integer kernel {x in Z^cols : a x = 0}.
inline IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols) {
  auto hf = column_hermite(a, cols);
  IntMatrix basis;
  for (std::size_t j = hf.pivot_rows.size(); j < cols; ++j) {
    IntVector v(cols);
    for (std::size_t r = 0; r < cols; ++r) v[r] = hf.u[r][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace tropjac
