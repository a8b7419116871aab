#pragma once

// Piecewise linear functions: a value per flag and an integer slope per flag.

#include "tropjac/tropcurve.hpp"

namespace tropjac {

struct PLFunction {
  std::vector<LatticeVector> alpha;  // per flag
  std::vector<long long> mu;         // per flag

  friend PLFunction operator+(PLFunction a, const PLFunction& b) {
    if (a.alpha.size() != b.alpha.size()) throw InputError("PL functions live on different curves");
    for (std::size_t x = 0; x < a.alpha.size(); ++x) {
      a.alpha[x] += b.alpha[x];
      a.mu[x] += b.mu[x];
    }
    return a;
  }
  friend bool operator==(const PLFunction&, const PLFunction&) = default;

  // Slopes of the canonical orientations, one per edge.
  Chain edge_slopes(const TropicalCurve& x) const {
    Chain s;
    for (const auto& e : x.edges()) s.push_back(mu.at(e.tail_flag));
    return s;
  }

  const LatticeVector& vertex_value(const TropicalCurve& x, std::size_t v) const {
    return alpha.at(x.vertex_flag(v));
  }
};

// Builds f from values at vertices and slopes along canonical orientations.
// An edge open at one end takes its free value from the rooted end.
inline PLFunction pl_from_vertex_values(const TropicalCurve& x, const std::vector<LatticeVector>& values,
                                        const Chain& slopes) {
  if (values.size() != x.num_vertices()) throw InputError("one value per vertex required");
  x.check_chain(slopes);
  PLFunction f;
  f.alpha.assign(x.flags().size(), LatticeVector::zero(x.ambient_rank()));
  f.mu.assign(x.flags().size(), 0);
  for (std::size_t v = 0; v < x.num_vertices(); ++v) {
    values[v].check_rank(f.alpha[0]);
    f.alpha[x.vertex_flag(v)] = values[v];
  }
  for (std::size_t k = 0; k < x.num_edges(); ++k) {
    const Edge& e = x.edge(k);
    LatticeVector rise = to_rational(slopes[k]) * e.length;
    f.mu[e.tail_flag] = slopes[k];
    f.mu[e.head_flag] = -slopes[k];
    if (e.tail && e.head) {
      if (!(values[*e.head] == values[*e.tail] + rise))
        throw InputError("slope on edge " + e.name + " is inconsistent with the vertex values");
      f.alpha[e.tail_flag] = values[*e.tail];
      f.alpha[e.head_flag] = values[*e.head];
    } else if (e.tail) {
      f.alpha[e.tail_flag] = values[*e.tail];
      f.alpha[e.head_flag] = values[*e.tail] + rise;
    } else if (e.head) {
      f.alpha[e.head_flag] = values[*e.head];
      f.alpha[e.tail_flag] = values[*e.head] - rise;
    }
  }
  return f;
}

// Violations of the defining conditions of a PL function, as messages.
inline std::vector<std::string> pl_violations(const TropicalCurve& x, const PLFunction& f) {
  std::vector<std::string> out;
  const auto& flags = x.flags();
  if (f.alpha.size() != flags.size() || f.mu.size() != flags.size()) {
    out.push_back("value or slope count does not match flag count");
    return out;
  }
  for (std::size_t y = 0; y < flags.size(); ++y) {
    const Flag& fl = flags[y];
    if (fl.length.is_zero() && f.mu[y] != 0) out.push_back("flag " + std::to_string(y) + ": vertex with slope");
    if (fl.root && !(f.alpha[*fl.root] == f.alpha[y]))
      out.push_back("flag " + std::to_string(y) + ": value differs from its root");
    if (!(f.alpha[fl.involution] == f.alpha[y] + to_rational(f.mu[y]) * fl.length))
      out.push_back("flag " + std::to_string(y) + ": value jump does not match slope");
    if (f.mu[fl.involution] != -f.mu[y] && !fl.length.is_zero())
      out.push_back("flag " + std::to_string(y) + ": slopes not opposite");
  }
  return out;
}

inline void require_pl(const TropicalCurve& x, const PLFunction& f) {
  auto v = pl_violations(x, f);
  if (!v.empty()) throw InputError("invalid PL function: " + v.front());
}

// Sum of outgoing slopes at each vertex.
inline Divisor multidegree(const TropicalCurve& x, const PLFunction& f) {
  x.require_compact("multidegree");
  require_pl(x, f);
  Divisor d;
  d.values.assign(x.num_vertices(), 0);
  for (std::size_t y = 0; y < x.flags().size(); ++y)
    if (!x.flags()[y].length.is_zero()) d.values[*x.root_vertex(y)] += f.mu[y];
  return d;
}

inline bool is_linear(const TropicalCurve& x, const PLFunction& f) {
  for (auto v : multidegree(x, f).values)
    if (v != 0) return false;
  return true;
}

inline Divisor pushforward(const Contraction& c, const Divisor& d) {
  if (d.values.size() != c.vertex_map.size()) throw InputError("pushforward: divisor size mismatch");
  Divisor out;
  out.values.assign(c.curve.num_vertices(), 0);
  for (std::size_t v = 0; v < d.values.size(); ++v) out.values[c.vertex_map[v]] += d.values[v];
  return out;
}

// The induced function on the contracted curve.
inline PLFunction contract_plf(const TropicalCurve& x, const PLFunction& f, const Contraction& c) {
  require_pl(x, f);
  std::vector<std::optional<LatticeVector>> values(c.curve.num_vertices());
  for (std::size_t v = 0; v < x.num_vertices(); ++v) {
    auto img = c.apply(f.vertex_value(x, v));
    auto& slot = values[c.vertex_map[v]];
    if (slot && !(*slot == img))
      throw PreconditionError("contract_plf: function is not constant on a contracted region");
    slot = std::move(img);
  }
  std::vector<LatticeVector> vals;
  for (auto& v : values) vals.push_back(std::move(*v));
  Chain slopes(c.curve.num_edges());
  auto old = f.edge_slopes(x);
  for (std::size_t k = 0; k < old.size(); ++k)
    if (c.edge_map[k]) slopes[*c.edge_map[k]] = old[k];
  return pl_from_vertex_values(c.curve, vals, slopes);
}

}  // namespace tropjac
