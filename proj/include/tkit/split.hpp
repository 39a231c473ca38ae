#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <variant>
#include <vector>

#include "tkit/errors.hpp"
#include "tkit/graph.hpp"
#include "tkit/threshold.hpp"

namespace tkit {

struct SplitFailure {
  /// Induced 2K2, C4 or C5, present only when requested.
  std::optional<ForbiddenSubgraph> witness;
};

using SplitRecognition = std::variant<SplitPartition, SplitFailure>;

/// First induced 2K2 or C4 (4-subsets), else C5 (5-subsets).
inline std::optional<ForbiddenSubgraph> find_split_obstruction(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      for (Vertex c = b + 1; c <= n; ++c)
        for (Vertex d = c + 1; d <= n; ++d) {
          const auto tag = detail::classify_four(g, {a, b, c, d});
          if (tag && *tag != ForbiddenTag::P4) return ForbiddenSubgraph{VertexSet{a, b, c, d}, *tag};
        }
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      for (Vertex c = b + 1; c <= n; ++c)
        for (Vertex d = c + 1; d <= n; ++d)
          for (Vertex e = d + 1; e <= n; ++e) {
            const VertexSet q{a, b, c, d, e};
            const Graph h = induced_subgraph(g, q);
            bool cycle = h.edge_count() == 5;
            for (Vertex v = 1; v <= 5 && cycle; ++v) cycle = h.degree(v) == 2;
            // The only simple 2-regular graph on five vertices is C5.
            if (cycle) return ForbiddenSubgraph{q, ForbiddenTag::C5};
          }
  return std::nullopt;
}

/// Recognizes a split graph from its degree sequence.
///
/// With degrees sorted d_1 >= ... >= d_n and m the largest i with
/// d_i >= i - 1, the graph is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i;
/// the m highest-degree vertices then form the clique side.
inline SplitRecognition recognize_split(const Graph& g, RecognizeOptions options = {}) {
  const std::size_t n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  std::size_t m = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (g.degree(order[i - 1]) + 1 >= i) m = i;

  std::size_t head = 0, tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[i]);

  if (head != m * (m - (m > 0 ? 1 : 0)) + tail) {
    SplitFailure failure;
    if (options.witness) failure.witness = find_split_obstruction(g);
    return failure;
  }
  return SplitPartition{VertexSet(std::vector<Vertex>(order.begin(), order.begin() + static_cast<long>(m))),
                        VertexSet(std::vector<Vertex>(order.begin() + static_cast<long>(m), order.end()))};
}

inline bool is_valid_split_partition(const Graph& g, const SplitPartition& p) {
  if (p.clique.size() + p.independent.size() != g.order()) return false;
  std::vector<Vertex> all = p.clique.members();
  all.insert(all.end(), p.independent.begin(), p.independent.end());
  if (VertexSet(all) != all_vertices(g.order())) return false;
  return is_clique(g, p.clique) && is_independent_set(g, p.independent);
}

/// Which of the three mutually exclusive split-partition situations holds.
enum class PartitionCase {
  Unique = 1,          ///< |S| = alpha and |K| = omega
  CliqueShort = 2,     ///< |K| = omega - 1: some x in S is adjacent to all of K
  IndependentShort = 3 ///< |S| = alpha - 1: some x in K has no neighbor in S
};

struct NormalizedPartition {
  SplitPartition partition;
  PartitionCase original_case;
  /// Vertex moved from S into K in the CliqueShort case.
  std::optional<Vertex> moved;
};

namespace detail {

inline void require_valid(const Graph& g, const SplitPartition& p) {
  if (!is_valid_split_partition(g, p)) throw ContractError("not a split partition of the graph");
}

/// Smallest x in S adjacent to every vertex of K.
inline std::optional<Vertex> clique_extender(const Graph& g, const SplitPartition& p) {
  for (Vertex x : p.independent)
    if (std::all_of(p.clique.begin(), p.clique.end(), [&](Vertex k) { return g.adjacent(x, k); })) return x;
  return std::nullopt;
}

}  // namespace detail

/// Returns a partition with |K| = omega, moving the single vertex of S that
/// completes K when the input is one short of a maximum clique.
inline NormalizedPartition normalize_partition(const Graph& g, const SplitPartition& p) {
  detail::require_valid(g, p);
  if (auto x = detail::clique_extender(g, p)) {
    std::vector<Vertex> k = p.clique.members();
    k.push_back(*x);
    std::vector<Vertex> s;
    std::copy_if(p.independent.begin(), p.independent.end(), std::back_inserter(s), [&](Vertex v) { return v != *x; });
    return {SplitPartition{VertexSet(std::move(k)), VertexSet(std::move(s))}, PartitionCase::CliqueShort, x};
  }
  const Bitset s_bits = p.independent.to_bits(g.order());
  const bool extends_s =
      std::any_of(p.clique.begin(), p.clique.end(), [&](Vertex v) { return !g.row(v).intersects(s_bits); });
  return {p, extends_s ? PartitionCase::IndependentShort : PartitionCase::Unique, std::nullopt};
}

/// Maximal independent sets of a split graph from a partition with |K| = omega.
///
/// K' is the part of K with no neighbor in S. S itself is maximal when K' is
/// empty; each v in K' gives S + v; each v in K - K' gives its non-neighbors
/// in S plus v. Every emitted set is checked for maximality.
inline SetFamily enumerate_mis_split(const Graph& g, const SplitPartition& p) {
  detail::require_valid(g, p);
  if (detail::clique_extender(g, p))
    throw ContractError("split partition is not normalized: K can be extended by a vertex of S");

  const std::size_t n = g.order();
  const Bitset s_bits = p.independent.to_bits(n);
  std::vector<Bitset> emitted;
  bool k_prime_empty = true;
  for (Vertex v : p.clique) {
    Bitset set = s_bits - g.row(v);
    if (!g.row(v).intersects(s_bits)) k_prime_empty = false;
    set.set(static_cast<std::size_t>(v - 1));
    emitted.push_back(std::move(set));
  }
  if (k_prime_empty && s_bits.any()) emitted.push_back(s_bits);

  std::vector<Bitset> maximal;
  for (const Bitset& s : emitted) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      const bool in = s.test(v);
      const bool touches = g.row(static_cast<Vertex>(v) + 1).intersects(s);
      ok = in ? !touches : touches;
    }
    if (ok) maximal.push_back(s);
  }
  return SetFamily::from_bitsets(maximal);
}

/// omega + 1 when K' is empty, omega otherwise.
inline std::size_t count_mis_split(const Graph& g, const SplitPartition& p) {
  detail::require_valid(g, p);
  if (detail::clique_extender(g, p))
    throw ContractError("split partition is not normalized: K can be extended by a vertex of S");
  const Bitset s_bits = p.independent.to_bits(g.order());
  const bool k_prime_empty =
      std::none_of(p.clique.begin(), p.clique.end(), [&](Vertex v) { return !g.row(v).intersects(s_bits); });
  return p.clique.size() + (k_prime_empty && s_bits.any() ? 1 : 0);
}

}  // namespace tkit
