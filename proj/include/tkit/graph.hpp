#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tkit/bitset.hpp"
#include "tkit/errors.hpp"

namespace tkit {

/// Vertices are 1-based labels 1..n throughout the public API.
using Vertex = int;

/// Sorted, duplicate-free list of vertex labels.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) : members_(members) { normalize(); }
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) { normalize(); }

  /// Labels of the set positions of a 0-based bitset.
  static VertexSet from_bits(const Bitset& bits) {
    VertexSet s;
    s.members_.reserve(bits.count());
    bits.for_each([&](std::size_t p) { s.members_.push_back(static_cast<Vertex>(p) + 1); });
    return s;
  }

  Bitset to_bits(std::size_t n) const {
    Bitset b(n);
    for (Vertex v : members_) {
      if (v < 1 || static_cast<std::size_t>(v) > n)
        throw RangeError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      b.set(static_cast<std::size_t>(v - 1));
    }
    return b;
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
  }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Canonical order: by cardinality, then lexicographically.
  friend bool canonical_less(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members_ < b.members_;
  }

  friend std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s.members_[i];
    return os << '}';
  }

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::vector<Vertex> members_;
};

/// Duplicate-free collection of vertex sets kept in canonical order.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(std::initializer_list<VertexSet> sets) : sets_(sets) { normalize(); }
  explicit SetFamily(std::vector<VertexSet> sets) : sets_(std::move(sets)) { normalize(); }

  template <typename Range>
  static SetFamily from_bitsets(const Range& bitsets) {
    std::vector<VertexSet> sets;
    for (const Bitset& b : bitsets) sets.push_back(VertexSet::from_bits(b));
    return SetFamily(std::move(sets));
  }

  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  auto begin() const noexcept { return sets_.begin(); }
  auto end() const noexcept { return sets_.end(); }
  const VertexSet& operator[](std::size_t i) const { return sets_[i]; }
  const std::vector<VertexSet>& sets() const noexcept { return sets_; }

  bool contains(const VertexSet& s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s,
                              [](const VertexSet& a, const VertexSet& b) { return canonical_less(a, b); });
  }
  /// Every member of this family is also a member of `other`.
  bool is_subfamily_of(const SetFamily& other) const {
    return std::all_of(sets_.begin(), sets_.end(), [&](const VertexSet& s) { return other.contains(s); });
  }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

  friend std::ostream& operator<<(std::ostream& os, const SetFamily& f) {
    os << '{';
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f.sets_[i];
    return os << '}';
  }

 private:
  void normalize() {
    std::sort(sets_.begin(), sets_.end(),
              [](const VertexSet& a, const VertexSet& b) { return canonical_less(a, b); });
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  }

  std::vector<VertexSet> sets_;
};

/// Undirected simple graph on vertices 1..n stored as adjacency bitsets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), rows_(n, Bitset(n)) {}

  static Graph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }
  static Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }
  static Graph complete(std::size_t n) {
    Graph g(n);
    for (std::size_t v = 0; v < n; ++v) {
      g.rows_[v].set_all();
      g.rows_[v].reset(v);
    }
    return g;
  }

  std::size_t order() const noexcept { return n_; }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
  }

  /// Adds {u,v}; adding an existing edge is a no-op. Self-loops are rejected.
  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw FormatError("self-loop on vertex " + std::to_string(u));
    rows_[idx(u)].set(idx(v));
    rows_[idx(v)].set(idx(u));
  }

  bool adjacent(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return rows_[idx(u)].test(idx(v));
  }

  std::size_t degree(Vertex v) const {
    check(v);
    return rows_[idx(v)].count();
  }

  /// Neighbors of `v` as a 0-based bitset.
  const Bitset& row(Vertex v) const {
    check(v);
    return rows_[idx(v)];
  }

  VertexSet neighbors(Vertex v) const { return VertexSet::from_bits(row(v)); }

  /// Edges as (u,v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (std::size_t u = 0; u < n_; ++u)
      rows_[u].for_each([&](std::size_t w) {
        if (w > u) out.emplace_back(static_cast<Vertex>(u) + 1, static_cast<Vertex>(w) + 1);
      });
    return out;
  }

  void check(Vertex v) const {
    if (v < 1 || static_cast<std::size_t>(v) > n_)
      throw RangeError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  static std::size_t idx(Vertex v) noexcept { return static_cast<std::size_t>(v - 1); }

  std::size_t n_ = 0;
  std::vector<Bitset> rows_;
};

inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph out(n);
  for (Vertex u = 1; u <= static_cast<Vertex>(n); ++u)
    for (Vertex v = u + 1; v <= static_cast<Vertex>(n); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

inline bool is_independent_set(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) g.check(v);
  const Bitset bits = s.to_bits(g.order());
  return std::none_of(s.begin(), s.end(), [&](Vertex v) { return g.row(v).intersects(bits); });
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) g.check(v);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

/// N(v,S): members of `s` adjacent to `v`.
inline VertexSet neighborhood(const Graph& g, Vertex v, const VertexSet& s) {
  g.check(v);
  return VertexSet::from_bits(s.to_bits(g.order()) & g.row(v));
}

/// S - (N(v,S) + {v}).
inline VertexSet non_neighborhood(const Graph& g, Vertex v, const VertexSet& s) {
  g.check(v);
  Bitset rest = s.to_bits(g.order()) - g.row(v);
  rest.reset(static_cast<std::size_t>(v - 1));
  return VertexSet::from_bits(rest);
}

namespace detail {

template <typename Combine>
Graph combine_graphs(const std::vector<Graph>& gs, Combine combine, const char* what) {
  if (gs.empty()) throw ShapeError(std::string(what) + " of an empty list of graphs");
  const std::size_t n = gs.front().order();
  Graph out(n);
  for (const Graph& g : gs)
    if (g.order() != n) throw ShapeError(std::string(what) + " of graphs with different vertex counts");
  for (Vertex u = 1; u <= static_cast<Vertex>(n); ++u)
    for (Vertex v = u + 1; v <= static_cast<Vertex>(n); ++v) {
      bool e = gs.front().adjacent(u, v);
      for (std::size_t i = 1; i < gs.size(); ++i) e = combine(e, gs[i].adjacent(u, v));
      if (e) out.add_edge(u, v);
    }
  return out;
}

}  // namespace detail

inline Graph union_graphs(const std::vector<Graph>& gs) {
  return detail::combine_graphs(gs, [](bool a, bool b) { return a || b; }, "union");
}

inline Graph intersect_graphs(const std::vector<Graph>& gs) {
  return detail::combine_graphs(gs, [](bool a, bool b) { return a && b; }, "intersection");
}

/// Subgraph induced by `s`, relabeled 1..|s| in ascending order of the original labels.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) g.check(v);
  Graph out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) out.add_edge(static_cast<Vertex>(i) + 1, static_cast<Vertex>(j) + 1);
  return out;
}

/// All vertices 1..n.
inline VertexSet all_vertices(std::size_t n) {
  std::vector<Vertex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i) + 1;
  return VertexSet(std::move(v));
}

namespace detail {

inline void max_clique_search(const Graph& g, std::size_t r, Bitset p, Bitset x, std::size_t& best) {
  if (p.none() && x.none()) {
    best = std::max(best, r);
    return;
  }
  if (r + p.count() <= best) return;
  Bitset px = p;
  px |= x;
  std::size_t pivot = px.first();
  std::size_t pivot_hits = 0;
  px.for_each([&](std::size_t u) {
    Bitset hits = p & g.row(static_cast<Vertex>(u) + 1);
    if (hits.count() >= pivot_hits) {
      pivot_hits = hits.count();
      pivot = u;
    }
  });
  Bitset candidates = p - g.row(static_cast<Vertex>(pivot) + 1);
  candidates.for_each([&](std::size_t v) {
    const Bitset& nv = g.row(static_cast<Vertex>(v) + 1);
    max_clique_search(g, r + 1, p & nv, x & nv, best);
    p.reset(v);
    x.set(v);
  });
}

}  // namespace detail

/// Clique number by Bron-Kerbosch with pivoting and a size bound.
inline std::size_t clique_number(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  Bitset p(n);
  p.set_all();
  std::size_t best = 0;
  detail::max_clique_search(g, 0, p, Bitset(n), best);
  return best;
}

}  // namespace tkit
