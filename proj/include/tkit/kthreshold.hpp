#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "tkit/bitset.hpp"
#include "tkit/errors.hpp"
#include "tkit/graph.hpp"
#include "tkit/threshold.hpp"

namespace tkit {

/// k threshold graphs on a shared vertex set 1..n, given by creation
/// sequences. Read as a union it covers a k-threshold graph; read as an
/// intersection it describes a k-threshold intersection graph.
class ThresholdCover {
 public:
  ThresholdCover() = default;

  explicit ThresholdCover(std::vector<CreationSequence> members) : members_(std::move(members)) {
    n_ = members_.empty() ? 0 : members_.front().size();
    init();
  }

  ThresholdCover(std::size_t n, std::vector<CreationSequence> members) : n_(n), members_(std::move(members)) { init(); }

  /// Recognizes every graph as threshold; throws FormatError naming the first that is not.
  static ThresholdCover from_graphs(const std::vector<Graph>& graphs) {
    std::vector<CreationSequence> members;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      auto r = recognize_threshold(graphs[i]);
      if (!std::holds_alternative<CreationSequence>(r))
        throw FormatError("cover member " + std::to_string(i + 1) + " is not a threshold graph");
      members.push_back(std::get<CreationSequence>(std::move(r)));
    }
    return ThresholdCover(graphs.empty() ? 0 : graphs.front().order(), std::move(members));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t k() const noexcept { return members_.size(); }
  const std::vector<CreationSequence>& members() const noexcept { return members_; }
  const CreationSequence& member(std::size_t i) const { return members_.at(i); }
  const Graph& member_graph(std::size_t i) const { return graphs_.at(i); }

  /// Union of the member edge sets.
  Graph covered() const { return members_.empty() ? Graph(n_) : union_graphs(graphs_); }
  /// Intersection of the member edge sets.
  Graph intersection() const { return members_.empty() ? Graph(n_) : intersect_graphs(graphs_); }

 private:
  void init() {
    for (std::size_t i = 0; i < members_.size(); ++i)
      if (members_[i].size() != n_)
        throw ShapeError("cover member " + std::to_string(i + 1) + " has " + std::to_string(members_[i].size()) +
                         " vertices, expected " + std::to_string(n_));
    for (const auto& m : members_) graphs_.push_back(creation_sequence_to_graph(m));
  }

  std::size_t n_ = 0;
  std::vector<CreationSequence> members_;
  std::vector<Graph> graphs_;
};

/// K = K1 & K2, S = S1 & S2, A = K1 & S2, B = S1 & K2 for split partitions
/// (K1,S1), (K2,S2) of the two members of a 2-cover.
struct TwoThresholdPartition {
  VertexSet K, S, A, B;
};

namespace detail {

inline void require_members(const ThresholdCover& cover) {
  if (cover.k() == 0) throw ContractError("cover has no member graphs");
}

/// All nonempty intersections M_1 & ... & M_k over the product of the
/// families, deduplicated. Folding family by family yields the same set of
/// intersections as the full product.
inline std::vector<Bitset> product_intersections(const std::vector<std::vector<Bitset>>& families) {
  std::vector<Bitset> acc = families.front();
  for (std::size_t f = 1; f < families.size(); ++f) {
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Bitset> next;
    for (const Bitset& x : acc)
      for (const Bitset& y : families[f]) {
        Bitset z = x & y;
        if (z.none()) continue;
        if (seen.insert(z).second) next.push_back(std::move(z));
      }
    acc = std::move(next);
  }
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> out;
  for (Bitset& b : acc)
    if (b.any() && seen.insert(b).second) out.push_back(std::move(b));
  return out;
}

/// Drops every set that is contained in another. Candidates are visited by
/// decreasing cardinality and tested only against sets already kept.
inline std::vector<Bitset> keep_inclusion_maximal(std::vector<Bitset> sets) {
  std::stable_sort(sets.begin(), sets.end(), [](const Bitset& a, const Bitset& b) { return a.count() > b.count(); });
  std::vector<Bitset> kept;
  for (Bitset& s : sets)
    if (std::none_of(kept.begin(), kept.end(), [&](const Bitset& k) { return s.is_subset_of(k); }))
      kept.push_back(std::move(s));
  return kept;
}

inline std::vector<std::vector<Bitset>> member_mis(const ThresholdCover& cover) {
  std::vector<std::vector<Bitset>> families;
  for (const auto& m : cover.members()) families.push_back(mis_bitsets(m));
  return families;
}

inline std::vector<std::vector<Bitset>> member_max_cliques(const ThresholdCover& cover) {
  std::vector<std::vector<Bitset>> families;
  for (const auto& m : cover.members()) families.push_back(mis_bitsets(complement_sequence(m)));
  return families;
}

}  // namespace detail

/// The intermediate family of all tuple intersections of member MIS families.
inline SetFamily tuple_intersections(const ThresholdCover& cover) {
  detail::require_members(cover);
  return SetFamily::from_bitsets(detail::product_intersections(detail::member_mis(cover)));
}

/// Maximal independent sets of the covered graph: intersect one maximal
/// independent set per member in every combination, then drop sets
/// contained in others. At most prod omega(G_i) sets result.
inline SetFamily enumerate_mis_k(const ThresholdCover& cover) {
  detail::require_members(cover);
  auto candidates = detail::product_intersections(detail::member_mis(cover));
  return SetFamily::from_bitsets(detail::keep_inclusion_maximal(std::move(candidates)));
}

inline std::size_t count_mis_k(const ThresholdCover& cover) { return enumerate_mis_k(cover).size(); }

/// Upper bound prod omega(G_i) on the number of maximal independent sets.
inline BigInt mis_bound_k(const ThresholdCover& cover) {
  BigInt bound = 1;
  for (const auto& m : cover.members()) bound *= m.ones();
  return bound;
}

inline TwoThresholdPartition two_threshold_partition(const ThresholdCover& cover) {
  if (cover.k() != 2) throw ContractError("two-threshold partition needs exactly two cover members");
  const std::size_t n = cover.order();
  const SplitPartition p1 = split_partition(cover.member(0), SplitMode::CliqueMax);
  const SplitPartition p2 = split_partition(cover.member(1), SplitMode::CliqueMax);
  const Bitset k1 = p1.clique.to_bits(n), s1 = p1.independent.to_bits(n);
  const Bitset k2 = p2.clique.to_bits(n), s2 = p2.independent.to_bits(n);
  return {VertexSet::from_bits(k1 & k2), VertexSet::from_bits(s1 & s2), VertexSet::from_bits(k1 & s2),
          VertexSet::from_bits(s1 & k2)};
}

/// Maximal independent sets of a 2-threshold graph from the four-part
/// partition K, S, A, B (K, A, B cliques, S independent).
///
/// Primed parts K', A', B' hold the vertices with no neighbor in S. Sets
/// built on all of S add one vertex of K', or up to two non-adjacent
/// vertices of A' and B'. Sets built on a proper subset of S add a vertex
/// outside the primed parts (or a non-adjacent A/B pair) together with its
/// common non-neighbors in S. Every candidate is checked for maximality and
/// duplicates are merged.
inline SetFamily enumerate_mis_2t(const ThresholdCover& cover) {
  if (cover.k() != 2) throw ContractError("enumerate_mis_2t needs exactly two cover members");
  const std::size_t n = cover.order();
  const Graph g = cover.covered();
  const TwoThresholdPartition part = two_threshold_partition(cover);
  const Bitset S = part.S.to_bits(n);

  auto row = [&](std::size_t v) -> const Bitset& { return g.row(static_cast<Vertex>(v) + 1); };
  auto primed = [&](const VertexSet& x, bool want_primed) {
    std::vector<std::size_t> out;
    for (Vertex v : x) {
      const bool p = !g.row(v).intersects(S);
      if (p == want_primed) out.push_back(static_cast<std::size_t>(v - 1));
    }
    return out;
  };
  const auto Kp = primed(part.K, true), Kr = primed(part.K, false);
  const auto Ap = primed(part.A, true), Ar = primed(part.A, false);
  const auto Bp = primed(part.B, true), Br = primed(part.B, false);

  std::vector<Bitset> out;
  auto with = [&](Bitset base, std::initializer_list<std::size_t> vs) {
    for (std::size_t v : vs) base.set(v);
    out.push_back(std::move(base));
  };
  auto non_nbrs = [&](std::size_t v) { return S - row(v); };
  auto adjacent = [&](std::size_t a, std::size_t b) { return row(a).test(b); };

  // Case 1: all of S plus vertices without neighbors in S.
  if (Kp.empty() && Ap.empty() && Bp.empty() && S.any()) out.push_back(S);
  for (std::size_t v : Kp) with(S, {v});
  if (Ap.empty() != Bp.empty())
    for (std::size_t v : Ap.empty() ? Bp : Ap) with(S, {v});
  if (!Ap.empty() && !Bp.empty()) {
    for (std::size_t a : Ap)
      for (std::size_t b : Bp)
        if (!adjacent(a, b)) with(S, {a, b});
    for (std::size_t a : Ap)
      if (std::all_of(Bp.begin(), Bp.end(), [&](std::size_t b) { return adjacent(a, b); })) with(S, {a});
    for (std::size_t b : Bp)
      if (std::all_of(Ap.begin(), Ap.end(), [&](std::size_t a) { return adjacent(a, b); })) with(S, {b});
  }

  // Case 2: a proper subset of S, namely the common non-neighbors.
  for (std::size_t v : Kr) with(non_nbrs(v), {v});
  if (Ar.empty() != Br.empty())
    for (std::size_t v : Ar.empty() ? Br : Ar) with(non_nbrs(v), {v});
  auto pair_up = [&](const std::vector<std::size_t>& as, const std::vector<std::size_t>& bs) {
    for (std::size_t a : as)
      for (std::size_t b : bs)
        if (!adjacent(a, b)) with(non_nbrs(a) & non_nbrs(b), {a, b});
  };
  pair_up(Ar, Br);
  pair_up(Ap, Br);
  pair_up(Ar, Bp);
  // N(b,S) within N(a,S) means b could join the set built on a.
  auto covered_by = [&](std::size_t inner, std::size_t outer) { return (row(inner) & S).is_subset_of(row(outer) & S); };
  for (std::size_t a : Ar)
    if (std::none_of(Br.begin(), Br.end(), [&](std::size_t b) { return !adjacent(a, b) && covered_by(b, a); }))
      with(non_nbrs(a), {a});
  for (std::size_t b : Br)
    if (std::none_of(Ar.begin(), Ar.end(), [&](std::size_t a) { return !adjacent(a, b) && covered_by(a, b); }))
      with(non_nbrs(b), {b});

  std::vector<Bitset> maximal;
  for (const Bitset& s : out) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) ok = s.test(v) ? !row(v).intersects(s) : row(v).intersects(s);
    if (ok) maximal.push_back(s);
  }
  return SetFamily::from_bitsets(maximal);
}

/// Maximum independent sets of the covered graph: the largest tuple
/// intersections.
inline SetFamily enumerate_im_k(const ThresholdCover& cover) {
  detail::require_members(cover);
  auto candidates = detail::product_intersections(detail::member_mis(cover));
  std::size_t best = 0;
  for (const auto& c : candidates) best = std::max(best, c.count());
  std::vector<Bitset> top;
  for (auto& c : candidates)
    if (c.count() == best) top.push_back(std::move(c));
  return SetFamily::from_bitsets(top);
}

inline std::size_t alpha_k(const ThresholdCover& cover) {
  const SetFamily im = enumerate_im_k(cover);
  return im.empty() ? 0 : im[0].size();
}

inline constexpr std::size_t kMaxCoverIndependentSetEnumeration = 20;

/// All nonempty independent sets of the covered graph as intersections of
/// member independent sets.
inline SetFamily enumerate_is_k(const ThresholdCover& cover) {
  detail::require_members(cover);
  if (cover.order() > kMaxCoverIndependentSetEnumeration)
    throw CapacityError("enumerate_is_k: " + std::to_string(cover.order()) + " vertices exceeds limit " +
                        std::to_string(kMaxCoverIndependentSetEnumeration));
  std::vector<std::vector<Bitset>> families;
  for (const auto& m : cover.members()) families.push_back(detail::is_bitsets(m));
  return SetFamily::from_bitsets(detail::product_intersections(families));
}

/// Maximal cliques of the intersection of the members: intersect one
/// maximal clique per member in every combination, then drop sets contained
/// in others. At most prod alpha(G_i) sets result.
inline SetFamily enumerate_mc_intersection(const ThresholdCover& cover) {
  detail::require_members(cover);
  auto candidates = detail::product_intersections(detail::member_max_cliques(cover));
  return SetFamily::from_bitsets(detail::keep_inclusion_maximal(std::move(candidates)));
}

/// Clique number of the intersection graph.
inline std::size_t omega_intersection(const ThresholdCover& cover) {
  detail::require_members(cover);
  std::size_t best = 0;
  for (const auto& c : detail::product_intersections(detail::member_max_cliques(cover)))
    best = std::max(best, c.count());
  return best;
}

}  // namespace tkit
