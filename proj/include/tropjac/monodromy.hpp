#pragma once

// Monodromy homomorphisms H1 -> M^gp, stored as values on a cycle basis.

#include "tropjac/plfun.hpp"

#include <map>
#include <queue>
#include <random>
#include <set>

namespace tropjac {

struct MonodromyHom {
  std::vector<LatticeVector> values;

  std::size_t genus() const { return values.size(); }
  friend MonodromyHom operator+(MonodromyHom a, const MonodromyHom& b) {
    check_same(a, b);
    for (std::size_t j = 0; j < a.values.size(); ++j) a.values[j] += b.values[j];
    return a;
  }
  friend MonodromyHom operator-(MonodromyHom a, const MonodromyHom& b) {
    check_same(a, b);
    for (std::size_t j = 0; j < a.values.size(); ++j) a.values[j] -= b.values[j];
    return a;
  }
  friend bool operator==(const MonodromyHom&, const MonodromyHom&) = default;

  static void check_same(const MonodromyHom& a, const MonodromyHom& b) {
    if (a.values.size() != b.values.size()) throw InputError("monodromy homomorphisms of different genus");
  }
};

inline void check_hom(const TropicalCurve& x, const CycleBasis& b, const MonodromyHom& mu) {
  if (mu.genus() != b.genus())
    throw InputError("monodromy has " + std::to_string(mu.genus()) + " values, genus is " +
                     std::to_string(b.genus()));
  for (const auto& v : mu.values)
    if (v.rank() != x.ambient_rank()) throw InputError("monodromy value has wrong rank");
}

// mu evaluated on an arbitrary cycle.
inline LatticeVector evaluate(const TropicalCurve& x, const CycleBasis& b, const MonodromyHom& mu,
                              const Chain& z) {
  check_hom(x, b, mu);
  auto coords = b.express(x, z);
  LatticeVector out(x.ambient_rank());
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (coords[j] != 0) out += Rational(coords[j]) * mu.values[j];
  return out;
}

// gamma -> (sum_e c_e e).gamma on each basis cycle.
inline MonodromyHom coboundary(const TropicalCurve& x, const CycleBasis& b, const Chain& c) {
  x.require_compact("coboundary");
  MonodromyHom mu;
  for (const auto& g : b.cycles()) mu.values.push_back(pairing(x, c, g));
  return mu;
}

// The homomorphism gamma' -> gamma.gamma' for gamma given in basis coordinates.
inline MonodromyHom cycle_coboundary(const PairingMatrix& a, const std::vector<Integer>& gamma,
                                     std::size_t rank) {
  MonodromyHom mu;
  for (std::size_t j = 0; j < a.size(); ++j) {
    LatticeVector v(rank);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (gamma[i] != 0) v += Rational(gamma[i]) * a[i][j];
    mu.values.push_back(std::move(v));
  }
  return mu;
}

struct BoundednessReport {
  bool bounded = true;
  std::vector<std::optional<BoundWitness>> witnesses;  // per basis cycle
  std::optional<Chain> failing_cycle;
};

namespace detail {

inline BoundednessReport basis_witnesses(const TropicalCurve& x, const CycleBasis& b, const MonodromyHom& mu) {
  BoundednessReport rep;
  for (std::size_t j = 0; j < b.genus(); ++j) {
    auto w = x.metric().bounds(mu.values[j], cycle_length(x, b.cycle(j)));
    if (!w && rep.bounded) {
      rep.bounded = false;
      rep.failing_cycle = b.cycle(j);
    }
    rep.witnesses.push_back(w);
  }
  return rep;
}

// Fundamental cycle of a non-tree edge k with respect to a forest.
inline std::optional<Chain> tree_cycle(const TropicalCurve& x, const std::vector<bool>& tree, std::size_t k) {
  // Breadth-first search in the forest from the head of k back to its tail.
  const Edge& ek = x.edge(k);
  const std::size_t nv = x.num_vertices();
  std::vector<std::optional<std::pair<std::size_t, int>>> via(nv);
  std::vector<bool> seen(nv, false);
  std::queue<std::size_t> q;
  q.push(*ek.head);
  seen[*ek.head] = true;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (std::size_t j = 0; j < x.num_edges(); ++j) {
      if (!tree[j]) continue;
      const Edge& e = x.edge(j);
      std::optional<std::size_t> w;
      int s = 0;
      if (*e.tail == v) w = *e.head, s = 1;
      else if (*e.head == v) w = *e.tail, s = -1;
      if (!w || seen[*w]) continue;
      seen[*w] = true;
      via[*w] = {j, s};
      q.push(*w);
    }
  }
  if (!seen[*ek.tail]) return std::nullopt;
  Chain g(x.num_edges());
  g[k] = 1;
  for (std::size_t v = *ek.tail; v != *ek.head;) {
    auto [j, s] = *via[v];
    g[j] += s;
    v = s > 0 ? *x.edge(j).tail : *x.edge(j).head;
  }
  return g;
}

// Edge subset -> basis of cycles supported on it, as fundamental cycles of a
// spanning forest of the subgraph.
inline std::vector<Chain> subgraph_cycles(const TropicalCurve& x, const std::vector<bool>& keep) {
  const std::size_t nv = x.num_vertices();
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> tree(x.num_edges(), false);
  std::vector<std::size_t> extra;
  for (std::size_t k = 0; k < x.num_edges(); ++k) {
    if (!keep[k]) continue;
    auto a = find(*x.edge(k).tail), c = find(*x.edge(k).head);
    if (a == c) {
      extra.push_back(k);
    } else {
      parent[a] = c;
      tree[k] = true;
    }
  }
  std::vector<Chain> out;
  for (auto k : extra) out.push_back(*tree_cycle(x, tree, k));
  return out;
}

}  // namespace detail

// Exact test under a lexicographic order: mu(gamma) must vanish on the first
// j weight rows for every cycle supported on edges deeper than level j.
inline BoundednessReport is_bounded(const TropicalCurve& x, const CycleBasis& b, const MonodromyHom& mu,
                                    const ValuationOrder& v) {
  x.require_compact("is_bounded");
  check_hom(x, b, mu);
  BoundednessReport rep;
  for (std::size_t j = 0; j < b.genus(); ++j) {
    auto len = cycle_length(x, b.cycle(j));
    rep.witnesses.push_back(v.sign(len) > 0 ? v.bounds(mu.values[j], len) : std::nullopt);
  }
  std::vector<std::size_t> level;
  for (const auto& e : x.edges()) {
    if (v.sign(e.length) <= 0)
      throw PreconditionError("is_bounded: edge " + e.name + " is not positive in the order");
    level.push_back(v.arch_level(e.length));
  }
  for (std::size_t j = 1; j <= v.levels() && rep.bounded; ++j) {
    std::vector<bool> keep(x.num_edges());
    for (std::size_t k = 0; k < keep.size(); ++k) keep[k] = level[k] > j;
    for (const auto& z : detail::subgraph_cycles(x, keep)) {
      auto val = evaluate(x, b, mu, z);
      bool ok = true;
      for (std::size_t r = 1; r <= j; ++r) ok = ok && sgn(v.level_value(r, val)) == 0;
      if (!ok) {
        rep.bounded = false;
        rep.failing_cycle = z;
        break;
      }
    }
  }
  return rep;
}

// Test over all cycles.  In a saturated monoid alpha is bounded by delta
// exactly when alpha lies in the span of the smallest face containing delta,
// and that face depends only on the edges a cycle uses.  It suffices to check
// a cycle basis of each closed edge set {e : l(e) bounded by l(T)}; these are
// generated from single edges under closure of unions.
inline BoundednessReport is_bounded(const TropicalCurve& x, const CycleBasis& b, const MonodromyHom& mu) {
  if (x.metric().is_total()) return is_bounded(x, b, mu, x.metric().order());
  x.require_compact("is_bounded");
  check_hom(x, b, mu);
  auto rep = detail::basis_witnesses(x, b, mu);
  rep.bounded = true;
  rep.failing_cycle.reset();
  const std::size_t n = x.num_edges();
  const Metric& m = x.metric();
  std::map<std::vector<bool>, std::pair<std::vector<bool>, LatticeVector>> memo;
  auto closure = [&](const std::vector<bool>& t) -> const std::pair<std::vector<bool>, LatticeVector>& {
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    LatticeVector delta(x.ambient_rank());
    for (std::size_t k = 0; k < n; ++k)
      if (t[k]) delta += x.edge(k).length;
    std::vector<bool> s(n);
    for (std::size_t k = 0; k < n; ++k) s[k] = t[k] || m.bounds(x.edge(k).length, delta).has_value();
    return memo.emplace(t, std::pair{s, delta}).first->second;
  };
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> singles, queue;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<bool> t(n);
    t[k] = true;
    auto s = closure(t).first;
    singles.push_back(s);
    if (seen.insert(s).second) queue.push_back(s);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto& [s, delta] = closure(queue[i]);
    for (const auto& z : detail::subgraph_cycles(x, s))
      if (!m.bounds(evaluate(x, b, mu, z), delta)) {
        rep.bounded = false;
        rep.failing_cycle = z;
        return rep;
      }
    for (const auto& one : singles) {
      std::vector<bool> u(n);
      for (std::size_t k = 0; k < n; ++k) u[k] = queue[i][k] || one[k];
      auto c = closure(u).first;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return rep;
}

// Samples random small combinations of basis cycles and tests each directly.
inline std::optional<Chain> sample_unbounded_cycle(const TropicalCurve& x, const CycleBasis& b,
                                                   const MonodromyHom& mu, std::uint64_t seed, int samples,
                                                   int coeff_bound = 2) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  for (int s = 0; s < samples; ++s) {
    Chain z(x.num_edges());
    for (std::size_t j = 0; j < b.genus(); ++j) {
      int c = coeff(rng);
      for (std::size_t k = 0; k < z.size(); ++k) z[k] += c * b.cycle(j)[k];
    }
    auto len = cycle_length(x, z);
    if (len.is_zero()) continue;
    if (!x.metric().bounds(evaluate(x, b, mu, z), len)) return z;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Trivialization

struct Trivialization {
  Subdivision subdivision;  // from the input curve to Y
  Chain cochain;            // integer cochain on the edges of Y
};

// Pullback of the coboundary of c along a subdivision, on the original basis.
inline MonodromyHom pulled_back_coboundary(const Subdivision& s, const CycleBasis& b, const Chain& c) {
  MonodromyHom mu;
  for (const auto& g : b.cycles()) mu.values.push_back(pairing(s.curve, c, s.map_chain(g)));
  return mu;
}

namespace detail {

// Spanning forest preferring edges of deeper archimedean level.
inline std::vector<bool> level_adapted_forest(const TropicalCurve& x, const ValuationOrder& v) {
  std::vector<std::size_t> idx(x.num_edges());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::size_t> level;
  for (const auto& e : x.edges()) level.push_back(v.arch_level(e.length));
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return level[a] > level[b]; });
  std::vector<std::size_t> parent(x.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t u) {
    while (parent[u] != u) u = parent[u] = parent[parent[u]];
    return u;
  };
  std::vector<bool> tree(x.num_edges(), false);
  for (auto k : idx) {
    auto a = find(*x.edge(k).tail), c = find(*x.edge(k).head);
    if (a != c) {
      parent[a] = c;
      tree[k] = true;
    }
  }
  return tree;
}

}  // namespace detail

// Finds a subdivision Y and an integer cochain c on Y whose coboundary pulls
// back to mu.  Each edge receives at most one new vertex.
inline Trivialization trivialize(const TropicalCurve& x, const CycleBasis& b, const ValuationOrder& v,
                                 const MonodromyHom& mu) {
  auto rep = is_bounded(x, b, mu, v);
  if (!rep.bounded) throw PreconditionError("trivialize: monodromy is unbounded");
  auto tree = detail::level_adapted_forest(x, v);
  Trivialization t{Subdivision::identity(x.remetrized(v)), Chain(x.num_edges())};
  for (std::size_t k = 0; k < x.num_edges(); ++k) {
    if (tree[k]) continue;
    auto gamma = *detail::tree_cycle(x, tree, k);
    LatticeVector rho = evaluate(x, b, mu, gamma);
    const LatticeVector& len = x.edge(k).length;
    auto q = v.floor_div(rho, len);
    if (!q) throw Error("trivialize: residual not bounded by its edge");
    LatticeVector rem = rho - Rational(*q) * len;
    t.cochain[k] = q->get_si();
    if (v.sign(rem) == 0) {
      if (!rem.is_zero())
        throw PreconditionError("trivialize: weights do not separate " + to_string(rem) + " from 0");
      continue;
    }
    // Segment k keeps the tail and length rem; the appended segment runs
    // backwards, so it carries the negated coefficient.
    auto step = subdivide(t.subdivision.curve, k, rem, v);
    t.subdivision = t.subdivision.then(step);
    t.cochain.push_back(-t.cochain[k]);
    t.cochain[k] += 1;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Normalization

struct Normalization {
  MonodromyHom zeta;
  std::vector<Integer> gamma;  // zeta = mu - (gamma . -)
};

// The box -r(g+1) l(e_j) <= zeta(e_j) <= r(g+1) l(e_j) on every basis cycle.
inline std::optional<std::size_t> normalization_violation(const TropicalCurve& x, const CycleBasis& b,
                                                          const ValuationOrder& v, const MonodromyHom& zeta) {
  const Rational bound(static_cast<long>(x.ambient_rank() * (b.genus() + 1)));
  for (std::size_t j = 0; j < b.genus(); ++j) {
    auto len = bound * cycle_length(x, b.cycle(j));
    if (!v.lex_leq(-len, zeta.values[j]) || !v.lex_leq(zeta.values[j], len)) return j;
  }
  return std::nullopt;
}

// Level by level, rounds the real solution of the level-j pairing system
// restricted to basis cycles whose length has level j.
inline Normalization normalize(const TropicalCurve& x, const CycleBasis& b, const ValuationOrder& v,
                               const MonodromyHom& mu) {
  if (!is_bounded(x, b, mu, v).bounded) throw PreconditionError("normalize: monodromy is unbounded");
  const std::size_t g = b.genus();
  const std::size_t rank = x.ambient_rank();
  auto a = intersection_matrix(x, b);
  std::vector<std::size_t> edge_level, cycle_level;
  for (const auto& e : x.edges()) edge_level.push_back(v.arch_level(e.length));
  for (std::size_t j = 0; j < g; ++j) cycle_level.push_back(v.arch_level(cycle_length(x, b.cycle(j))));

  Normalization out{mu, std::vector<Integer>(g)};
  for (std::size_t lvl = 1; lvl <= v.levels(); ++lvl) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < g; ++j)
      if (cycle_level[j] == lvl) idx.push_back(j);
    if (idx.empty()) continue;
    const std::size_t m = idx.size();
    auto p = [&](std::size_t i, std::size_t j) {
      Rational s = 0;
      for (std::size_t e = 0; e < x.num_edges(); ++e)
        if (edge_level[e] == lvl)
          s += to_rational(b.cycle(i)[e] * b.cycle(j)[e]) * v.level_value(lvl, x.edge(e).length);
      return s;
    };
    RationalMatrix sys(m, std::vector<Rational>(m));
    std::vector<Rational> rhs(m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) sys[r][c] = p(idx[c], idx[r]);
      rhs[r] = v.level_value(lvl, out.zeta.values[idx[r]]);
    }
    auto sol = solve_rational(sys, rhs, m);
    if (!sol) throw Error("normalize: inconsistent level system");
    std::vector<Integer> step(g);
    for (std::size_t c = 0; c < m; ++c) step[idx[c]] = floor_of((*sol)[c] + Rational(1, 2));
    out.zeta = out.zeta - cycle_coboundary(a, step, rank);
    for (std::size_t j = 0; j < g; ++j) out.gamma[j] += step[j];
  }
  if (auto bad = normalization_violation(x, b, v, out.zeta))
    throw PreconditionError("normalize: bound fails on basis cycle " + std::to_string(*bad + 1) +
                            "; the basis has coefficients outside {-1,0,1}");
  return out;
}

}  // namespace tropjac
