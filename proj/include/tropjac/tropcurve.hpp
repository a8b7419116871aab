#pragma once

// Tropical curves as flag structures (G, r, i, l).
//
// Every vertex is itself a flag of length zero fixed by the involution.  An
// edge is a pair of distinct flags swapped by the involution; its canonical
// orientation runs from the root of the lower flag to the root of the upper
// one.  Edge indices follow creation order, so subdivision appends and never
// renumbers.

#include "tropjac/linalg.hpp"
#include "tropjac/metric.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

namespace tropjac {

using Chain = std::vector<long long>;

struct Flag {
  std::size_t involution = 0;
  std::optional<std::size_t> root;
  LatticeVector length;
};

struct Edge {
  std::size_t tail_flag = 0;
  std::size_t head_flag = 0;
  std::optional<std::size_t> tail;  // vertex index, absent for an open end
  std::optional<std::size_t> head;
  LatticeVector length;
  std::string name;
};

struct Violation {
  std::size_t flag = 0;
  std::string condition;
  std::string message;
};

struct Divisor {
  std::vector<long long> values;  // one per vertex

  long long degree() const { return std::accumulate(values.begin(), values.end(), 0LL); }
  friend bool operator==(const Divisor&, const Divisor&) = default;
};

class TropicalCurve {
 public:
  TropicalCurve() = default;

  // Edges are ordered by lower flag; names default to v1.. and e1.. .
  static TropicalCurve from_flags(Metric metric, std::vector<Flag> flags,
                                  std::vector<std::string> vertex_names = {},
                                  std::vector<std::string> edge_names = {}) {
    std::vector<std::size_t> order;
    for (std::size_t x = 0; x < flags.size(); ++x) {
      std::size_t y = flags[x].involution;
      if (!flags[x].length.is_zero() && y < flags.size() && x < y) order.push_back(x);
    }
    return TropicalCurve(std::move(metric), std::move(flags), std::move(order),
                         std::move(vertex_names), std::move(edge_names));
  }

  TropicalCurve(Metric metric, std::vector<Flag> flags, std::vector<std::size_t> edge_order,
                std::vector<std::string> vertex_names, std::vector<std::string> edge_names)
      : metric_(std::move(metric)), flags_(std::move(flags)) {
    vertex_of_flag_.assign(flags_.size(), std::nullopt);
    for (std::size_t x = 0; x < flags_.size(); ++x)
      if (flags_[x].length.is_zero()) {
        vertex_of_flag_[x] = vertex_flags_.size();
        vertex_flags_.push_back(x);
      }
    if (!vertex_names.empty() && vertex_names.size() != vertex_flags_.size())
      throw InputError("vertex name count does not match vertex count");
    if (!edge_names.empty() && edge_names.size() != edge_order.size())
      throw InputError("edge name count does not match edge count");
    vertex_names_ = std::move(vertex_names);
    for (std::size_t v = vertex_names_.size(); v < vertex_flags_.size(); ++v)
      vertex_names_.push_back("v" + std::to_string(v + 1));
    for (std::size_t k = 0; k < edge_order.size(); ++k) {
      Edge e;
      e.tail_flag = edge_order[k];
      e.head_flag = flags_.at(e.tail_flag).involution;
      e.tail = root_vertex(e.tail_flag);
      e.head = root_vertex(e.head_flag);
      e.length = flags_[e.tail_flag].length;
      e.name = edge_names.empty() ? "e" + std::to_string(k + 1) : edge_names[k];
      edges_.push_back(std::move(e));
    }
  }

  const Metric& metric() const { return metric_; }

  TropicalCurve remetrized(Metric m) const {
    if (m.ambient_rank() != ambient_rank()) throw InputError("remetrized: rank mismatch");
    TropicalCurve out = *this;
    out.metric_ = std::move(m);
    return out;
  }
  std::size_t ambient_rank() const { return metric_.ambient_rank(); }
  const std::vector<Flag>& flags() const { return flags_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t k) const { return edges_.at(k); }
  std::size_t num_vertices() const { return vertex_flags_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t vertex_flag(std::size_t v) const { return vertex_flags_.at(v); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::string& vertex_name(std::size_t v) const { return vertex_names_.at(v); }

  std::optional<std::size_t> root_vertex(std::size_t flag) const {
    const auto& r = flags_.at(flag).root;
    if (!r || *r >= flags_.size()) return std::nullopt;
    return vertex_of_flag_[*r];
  }

  std::optional<std::size_t> find_vertex(std::string_view name) const {
    for (std::size_t v = 0; v < vertex_names_.size(); ++v)
      if (vertex_names_[v] == name) return v;
    return std::nullopt;
  }
  std::optional<std::size_t> find_edge(std::string_view name) const {
    for (std::size_t k = 0; k < edges_.size(); ++k)
      if (edges_[k].name == name) return k;
    return std::nullopt;
  }

  bool is_compact() const {
    for (const auto& f : flags_)
      if (!f.root) return false;
    return true;
  }

  std::vector<Violation> validate() const {
    std::vector<Violation> out;
    auto report = [&](std::size_t x, std::string cond, std::string msg) {
      out.push_back({x, std::move(cond), std::move(msg)});
    };
    const std::size_t n = flags_.size();
    for (std::size_t x = 0; x < n; ++x) {
      const Flag& f = flags_[x];
      if (f.length.rank() != ambient_rank()) {
        report(x, "rank", "length has rank " + std::to_string(f.length.rank()));
        continue;
      }
      if (f.involution >= n) {
        report(x, "involution", "involution points outside the flag set");
        continue;
      }
      const Flag& g = flags_[f.involution];
      if (g.involution != x) report(x, "involution", "i(i(x)) != x");
      if (g.length.rank() == f.length.rank() && !(g.length == f.length))
        report(x, "length-symmetry", "l(i(x)) != l(x)");
      bool fixed_i = f.involution == x;
      bool zero = f.length.is_zero();
      bool fixed_r = f.root && *f.root == x;
      if (fixed_i != zero || fixed_r != zero)
        report(x, "fixed-points", "r(x)=x, i(x)=x and l(x)=0 must agree");
      if (f.root) {
        if (*f.root >= n) {
          report(x, "retraction", "retraction points outside the flag set");
        } else {
          const Flag& v = flags_[*f.root];
          if (!v.length.is_zero() || v.involution != *f.root || !v.root || *v.root != *f.root)
            report(x, "retraction", "r(x) is not a vertex");
        }
      }
      if (!zero && !metric_.positive(f.length))
        report(x, "length-positivity", "length " + to_string(f.length) + " is not positive");
    }
    return out;
  }

  void require_valid() const {
    auto v = validate();
    if (!v.empty())
      throw InputError("invalid curve: flag " + std::to_string(v[0].flag) + " violates " +
                       v[0].condition + " (" + v[0].message + ")");
  }

  void require_compact(std::string_view what) const {
    if (!is_compact()) throw PreconditionError(std::string(what) + ": curve is not compact");
  }

  // Connected-component label of each vertex, numbered by lowest vertex.
  std::vector<std::size_t> components() const {
    std::vector<std::size_t> parent(num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& e : edges_)
      if (e.tail && e.head) {
        auto a = find(*e.tail), b = find(*e.head);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    std::vector<std::size_t> label(num_vertices());
    std::map<std::size_t, std::size_t> ids;
    for (std::size_t v = 0; v < num_vertices(); ++v) {
      auto [it, _] = ids.emplace(find(v), ids.size());
      label[v] = it->second;
    }
    return label;
  }

  std::pair<std::size_t, std::size_t> betti() const {
    require_compact("betti");
    auto comp = components();
    std::size_t b0 = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    return {b0, num_edges() + b0 - num_vertices()};
  }

  bool is_connected() const { return betti().first == 1; }

  // Vertex boundary of an edge chain: head minus tail.
  std::vector<long long> boundary(const Chain& c) const {
    check_chain(c);
    std::vector<long long> d(num_vertices());
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      if (c[k] == 0) continue;
      if (!edges_[k].tail || !edges_[k].head)
        throw PreconditionError("boundary: chain meets open edge " + edges_[k].name);
      d[*edges_[k].head] += c[k];
      d[*edges_[k].tail] -= c[k];
    }
    return d;
  }

  bool is_cycle(const Chain& c) const {
    for (auto x : boundary(c))
      if (x != 0) return false;
    return true;
  }

  void check_chain(const Chain& c) const {
    if (c.size() != edges_.size())
      throw InputError("chain has " + std::to_string(c.size()) + " coefficients, curve has " +
                       std::to_string(edges_.size()) + " edges");
  }

 private:
  Metric metric_;
  std::vector<Flag> flags_;
  std::vector<std::optional<std::size_t>> vertex_of_flag_;
  std::vector<std::size_t> vertex_flags_;
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
};

// Lays out vertex flags first, then the two flags of each edge (tail, head).
class CurveBuilder {
 public:
  explicit CurveBuilder(Metric metric) : metric_(std::move(metric)) {}

  std::size_t add_vertex(std::string name = "") {
    if (name.empty()) name = "v" + std::to_string(vertices_.size() + 1);
    vertices_.push_back(std::move(name));
    return vertices_.size() - 1;
  }

  std::size_t add_edge(std::optional<std::size_t> from, std::optional<std::size_t> to,
                       LatticeVector length, std::string name = "") {
    if (name.empty()) name = "e" + std::to_string(edges_.size() + 1);
    edges_.push_back({from, to, std::move(length), std::move(name)});
    return edges_.size() - 1;
  }

  TropicalCurve build() const {
    const std::size_t nv = vertices_.size();
    const std::size_t rank = metric_.ambient_rank();
    std::vector<Flag> flags;
    std::vector<std::size_t> order;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < nv; ++v) flags.push_back({v, v, LatticeVector::zero(rank)});
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const auto& e = edges_[k];
      for (auto end : {e.from, e.to})
        if (end && *end >= nv) throw InputError("edge " + e.name + " refers to unknown vertex");
      std::size_t a = nv + 2 * k;
      flags.push_back({a + 1, e.from, e.length});
      flags.push_back({a, e.to, e.length});
      order.push_back(a);
      names.push_back(e.name);
    }
    return TropicalCurve(metric_, std::move(flags), std::move(order), vertices_, std::move(names));
  }

 private:
  struct PendingEdge {
    std::optional<std::size_t> from, to;
    LatticeVector length;
    std::string name;
  };
  Metric metric_;
  std::vector<std::string> vertices_;
  std::vector<PendingEdge> edges_;
};

// ---------------------------------------------------------------------------
// Homology

inline LatticeVector cycle_length(const TropicalCurve& x, const Chain& gamma) {
  x.check_chain(gamma);
  LatticeVector out(x.ambient_rank());
  for (std::size_t k = 0; k < gamma.size(); ++k)
    if (gamma[k] != 0) out += to_rational(std::abs(gamma[k])) * x.edge(k).length;
  return out;
}

// Bilinear extension of e.e = l(e).
inline LatticeVector pairing(const TropicalCurve& x, const Chain& a, const Chain& b) {
  x.check_chain(a);
  x.check_chain(b);
  LatticeVector out(x.ambient_rank());
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) out += to_rational(a[k] * b[k]) * x.edge(k).length;
  return out;
}

using PairingMatrix = std::vector<std::vector<LatticeVector>>;

class CycleBasis {
 public:
  CycleBasis() = default;

  // BFS spanning forest grown from the lowest unvisited vertex, scanning
  // incident edges by index; one fundamental cycle per non-tree edge.
  static CycleBasis fundamental(const TropicalCurve& x) {
    x.require_compact("cycle_basis");
    const std::size_t nv = x.num_vertices();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv);
    for (std::size_t k = 0; k < x.num_edges(); ++k) {
      const auto& e = x.edge(k);
      adj[*e.tail].push_back({k, *e.head});
      if (*e.head != *e.tail) adj[*e.head].push_back({k, *e.tail});
    }
    CycleBasis b;
    b.in_tree_.assign(x.num_edges(), false);
    std::vector<bool> seen(nv, false);
    std::vector<std::optional<std::size_t>> parent_edge(nv);
    for (std::size_t s = 0; s < nv; ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      std::queue<std::size_t> q;
      q.push(s);
      while (!q.empty()) {
        auto v = q.front();
        q.pop();
        for (auto [k, w] : adj[v]) {
          if (seen[w]) continue;
          seen[w] = true;
          b.in_tree_[k] = true;
          parent_edge[w] = k;
          q.push(w);
        }
      }
    }
    b.path_to_root_ = [&] {
      std::vector<Chain> paths(nv, Chain(x.num_edges()));
      for (std::size_t v = 0; v < nv; ++v) {
        std::size_t u = v;
        while (parent_edge[u]) {
          const auto& e = x.edge(*parent_edge[u]);
          // Walking u -> parent traverses the edge backwards when u is its head.
          bool backwards = *e.head == u;
          paths[v][*parent_edge[u]] += backwards ? -1 : 1;
          u = backwards ? *e.tail : *e.head;
        }
      }
      return paths;
    }();
    for (std::size_t k = 0; k < x.num_edges(); ++k) {
      if (b.in_tree_[k]) continue;
      const auto& e = x.edge(k);
      Chain g(x.num_edges());
      for (std::size_t j = 0; j < g.size(); ++j)
        g[j] = b.path_to_root_[*e.head][j] - b.path_to_root_[*e.tail][j];
      g[k] += 1;
      b.cotree_.push_back(k);
      b.cycles_.push_back(std::move(g));
    }
    b.transition_ = identity_matrix(b.cycles_.size());
    return b;
  }

  // A caller-supplied basis, checked to be a Z-basis of H1.
  static CycleBasis from_cycles(const TropicalCurve& x, std::vector<Chain> cycles) {
    CycleBasis b = fundamental(x);
    const std::size_t g = b.cycles_.size();
    if (cycles.size() != g)
      throw InputError("cycle basis has " + std::to_string(cycles.size()) + " cycles, b1 = " +
                       std::to_string(g));
    RationalMatrix f(g, std::vector<Rational>(g));
    for (std::size_t j = 0; j < g; ++j) {
      x.check_chain(cycles[j]);
      if (!x.is_cycle(cycles[j]))
        throw InputError("cycle " + std::to_string(j + 1) + " has nonzero boundary");
      for (std::size_t i = 0; i < g; ++i) f[j][i] = to_rational(cycles[j][b.cotree_[i]]);
    }
    Rational det = determinant(f);
    if (det != 1 && det != -1) throw InputError("cycles do not form a basis of H1 (det " + det.get_str() + ")");
    b.cycles_ = std::move(cycles);
    b.transition_ = std::move(f);
    return b;
  }

  std::size_t genus() const { return cycles_.size(); }
  const std::vector<Chain>& cycles() const { return cycles_; }
  const Chain& cycle(std::size_t j) const { return cycles_.at(j); }
  bool in_tree(std::size_t edge) const { return in_tree_.at(edge); }
  const std::vector<std::size_t>& cotree_edges() const { return cotree_; }

  // Tree path from a vertex to the root of its component.
  const Chain& path_to_root(std::size_t v) const { return path_to_root_.at(v); }

  // Coordinates of a cycle in this basis.
  std::vector<Integer> express(const TropicalCurve& x, const Chain& z) const {
    if (!x.is_cycle(z)) throw InputError("express: chain is not a cycle");
    const std::size_t g = genus();
    // z = sum_j c_j cycles_j; on cotree coordinates z_cot = c * transition.
    RationalMatrix t(g, std::vector<Rational>(g));
    std::vector<Rational> rhs(g);
    for (std::size_t i = 0; i < g; ++i) {
      rhs[i] = to_rational(z[cotree_[i]]);
      for (std::size_t j = 0; j < g; ++j) t[i][j] = transition_[j][i];
    }
    auto c = solve_rational(t, rhs, g);
    std::vector<Integer> out(g);
    for (std::size_t j = 0; j < g; ++j) {
      if ((*c)[j].get_den() != 1) throw Error("express: non-integral coordinates");
      out[j] = (*c)[j].get_num();
    }
    return out;
  }

 private:
  static RationalMatrix identity_matrix(std::size_t g) {
    RationalMatrix m(g, std::vector<Rational>(g));
    for (std::size_t i = 0; i < g; ++i) m[i][i] = 1;
    return m;
  }

  std::vector<bool> in_tree_;
  std::vector<std::size_t> cotree_;
  std::vector<Chain> cycles_;
  std::vector<Chain> path_to_root_;
  RationalMatrix transition_;  // transition_[j][i] = cycles_[j] on cotree edge i
};

inline CycleBasis cycle_basis(const TropicalCurve& x) { return CycleBasis::fundamental(x); }

inline PairingMatrix intersection_matrix(const TropicalCurve& x, const CycleBasis& b) {
  x.require_compact("intersection_matrix");
  const std::size_t g = b.genus();
  PairingMatrix a(g, std::vector<LatticeVector>(g));
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t k = 0; k < g; ++k) a[j][k] = pairing(x, b.cycle(j), b.cycle(k));
  return a;
}

// ---------------------------------------------------------------------------
// Subdivision

struct SignedEdge {
  std::size_t edge = 0;
  int sign = 1;
};

class Subdivision {
 public:
  TropicalCurve curve;
  std::vector<std::size_t> flag_map;               // old flag -> flag of curve
  std::vector<std::vector<SignedEdge>> edge_image;  // old edge -> chain on curve
  std::vector<std::size_t> vertex_map;             // old vertex -> vertex of curve

  static Subdivision identity(const TropicalCurve& x) {
    Subdivision s;
    s.curve = x;
    s.flag_map.resize(x.flags().size());
    std::iota(s.flag_map.begin(), s.flag_map.end(), 0);
    s.vertex_map.resize(x.num_vertices());
    std::iota(s.vertex_map.begin(), s.vertex_map.end(), 0);
    for (std::size_t k = 0; k < x.num_edges(); ++k) s.edge_image.push_back({{k, 1}});
    return s;
  }

  std::size_t source_edges() const { return edge_image.size(); }

  Chain map_chain(const Chain& c) const {
    if (c.size() != edge_image.size()) throw InputError("map_chain: chain length mismatch");
    Chain out(curve.num_edges());
    for (std::size_t k = 0; k < c.size(); ++k)
      for (auto [e, s] : edge_image[k]) out[e] += s * c[k];
    return out;
  }

  // Composite with a further subdivision of `curve`.
  Subdivision then(const Subdivision& next) const {
    Subdivision s;
    s.curve = next.curve;
    for (auto f : flag_map) s.flag_map.push_back(next.flag_map.at(f));
    for (auto v : vertex_map) s.vertex_map.push_back(next.vertex_map.at(v));
    for (const auto& img : edge_image) {
      std::vector<SignedEdge> out;
      for (auto [e, sg] : img)
        for (auto [e2, sg2] : next.edge_image.at(e)) out.push_back({e2, sg * sg2});
      s.edge_image.push_back(std::move(out));
    }
    return s;
  }
};

namespace detail {

inline std::string fresh_edge_name(const TropicalCurve& x, const std::string& base) {
  std::string name = base + "'";
  while (x.find_edge(name)) name += "'";
  return name;
}

inline std::string fresh_vertex_name(const TropicalCurve& x, const std::string& edge) {
  std::string name = "p(" + edge + ")";
  while (x.find_vertex(name)) name += "'";
  return name;
}

}  // namespace detail

// Splits edge `k` at distance t from its tail.  The segment at the tail keeps
// index k and orientation; the far segment is appended, oriented from the old
// head towards the new vertex.
inline Subdivision subdivide(const TropicalCurve& x, std::size_t k, const LatticeVector& t,
                             const std::optional<ValuationOrder>& order = std::nullopt) {
  if (k >= x.num_edges()) throw InputError("subdivide: no edge " + std::to_string(k));
  const Edge& e = x.edge(k);
  e.length.check_rank(t);
  LatticeVector rest = e.length - t;
  bool interior = order ? (order->sign(t) > 0 && order->sign(rest) > 0)
                        : (x.metric().positive(t) && x.metric().positive(rest));
  if (!interior)
    throw PreconditionError("subdivide: " + to_string(t) + " is not strictly inside edge " + e.name +
                            " of length " + to_string(e.length));

  std::vector<Flag> flags = x.flags();
  const std::size_t a = e.tail_flag, b = e.head_flag;
  const std::size_t y = flags.size(), p = y + 1, q = y + 2;
  flags.push_back({y, y, LatticeVector::zero(x.ambient_rank())});
  flags.push_back({a, y, t});
  flags.push_back({b, y, rest});
  flags[a].involution = p;
  flags[a].length = t;
  flags[b].involution = q;
  flags[b].length = rest;

  std::vector<std::size_t> order_flags;
  std::vector<std::string> names;
  for (const auto& old : x.edges()) {
    order_flags.push_back(old.tail_flag);
    names.push_back(old.name);
  }
  order_flags.push_back(b);
  names.push_back(detail::fresh_edge_name(x, e.name));
  auto vnames = x.vertex_names();
  vnames.push_back(detail::fresh_vertex_name(x, e.name));

  Subdivision s;
  s.curve = TropicalCurve(x.metric(), std::move(flags), std::move(order_flags), std::move(vnames),
                          std::move(names));
  s.flag_map.resize(x.flags().size());
  std::iota(s.flag_map.begin(), s.flag_map.end(), 0);
  s.vertex_map.resize(x.num_vertices());
  std::iota(s.vertex_map.begin(), s.vertex_map.end(), 0);
  for (std::size_t j = 0; j < x.num_edges(); ++j) s.edge_image.push_back({{j, 1}});
  s.edge_image[k] = {{k, 1}, {x.num_edges(), -1}};
  return s;
}

// ---------------------------------------------------------------------------
// Contraction along a lattice map

struct Contraction {
  TropicalCurve curve;
  RationalMatrix hom;                                // target_rank x source_rank
  std::vector<std::size_t> vertex_map;               // old vertex -> new vertex
  std::vector<std::optional<std::size_t>> edge_map;  // old edge -> surviving edge

  Chain pushforward(const Chain& c) const {
    if (c.size() != edge_map.size()) throw InputError("pushforward: chain length mismatch");
    Chain out(curve.num_edges());
    for (std::size_t k = 0; k < c.size(); ++k)
      if (edge_map[k]) out[*edge_map[k]] += c[k];
    return out;
  }

  LatticeVector apply(const LatticeVector& v) const { return apply_hom(hom, v); }

  static LatticeVector apply_hom(const RationalMatrix& h, const LatticeVector& v) {
    LatticeVector out(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) out[i] = dot(h[i], v);
    return out;
  }
};

// Edges whose length maps to zero are collapsed; the merged vertex keeps the
// name of its lowest-index member.
inline Contraction contract(const TropicalCurve& x, const RationalMatrix& hom, const SharpMonoid& target) {
  const std::size_t n = x.ambient_rank();
  for (const auto& row : hom)
    if (row.size() != n) throw InputError("contract: hom has wrong source rank");
  if (hom.size() != target.ambient_rank()) throw InputError("contract: hom has wrong target rank");

  Contraction c;
  c.hom = hom;
  const std::size_t nv = x.num_vertices();
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  Metric tmetric(target);
  std::vector<LatticeVector> mapped;
  for (const auto& e : x.edges()) {
    auto img = Contraction::apply_hom(hom, e.length);
    if (img.is_zero()) {
      if (!e.tail || !e.head)
        throw PreconditionError("contract: edge " + e.name + " is dangling and cannot be contracted");
      auto a = find(*e.tail), b = find(*e.head);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    } else if (!tmetric.positive(img)) {
      throw PreconditionError("contract: length of edge " + e.name + " maps to " + to_string(img) +
                              ", outside the target monoid");
    }
    mapped.push_back(std::move(img));
  }

  CurveBuilder builder(tmetric);
  std::map<std::size_t, std::size_t> new_index;
  for (std::size_t v = 0; v < nv; ++v)
    if (find(v) == v) new_index[v] = builder.add_vertex(x.vertex_name(v));
  for (std::size_t v = 0; v < nv; ++v) c.vertex_map.push_back(new_index.at(find(v)));
  auto image = [&](std::optional<std::size_t> v) -> std::optional<std::size_t> {
    if (!v) return std::nullopt;
    return c.vertex_map[*v];
  };
  std::size_t next = 0;
  for (std::size_t k = 0; k < x.num_edges(); ++k) {
    const auto& e = x.edge(k);
    if (mapped[k].is_zero()) {
      c.edge_map.push_back(std::nullopt);
      continue;
    }
    builder.add_edge(image(e.tail), image(e.head), mapped[k], e.name);
    c.edge_map.push_back(next++);
  }
  c.curve = builder.build();
  return c;
}

}  // namespace tropjac
