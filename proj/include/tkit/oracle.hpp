#pragma once

// Exponential reference implementations. They scan subsets with a binary
// counter and share no code path with the structural algorithms, so tests
// can use them as ground truth.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "tkit/errors.hpp"
#include "tkit/graph.hpp"
#include "tkit/instance.hpp"

namespace tkit::oracle {

inline constexpr std::size_t kMaxGraphOrder = 24;
inline constexpr std::size_t kMaxInstanceSize = 24;
inline constexpr std::size_t kMaxPackingSize = 10;
inline constexpr std::size_t kMaxGeometricBinItems = 3;

namespace detail {

using Mask = std::uint32_t;

inline void guard(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit)
    throw CapacityError(std::string(what) + ": size " + std::to_string(n) + " exceeds oracle limit " +
                        std::to_string(limit));
}

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u - 1)] |= Mask{1} << (v - 1);
    adj[static_cast<std::size_t>(v - 1)] |= Mask{1} << (u - 1);
  }
  return adj;
}

inline int lowest(Mask m) { return __builtin_ctz(m); }

/// independent[m] for every subset mask m.
inline std::vector<bool> independence_table(const std::vector<Mask>& adj) {
  const std::size_t n = adj.size();
  std::vector<bool> ok(std::size_t{1} << n, false);
  ok[0] = true;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    const int v = lowest(m);
    const Mask rest = m & (m - 1);
    ok[m] = ok[rest] && (adj[static_cast<std::size_t>(v)] & rest) == 0;
  }
  return ok;
}

inline VertexSet to_set(Mask m) {
  std::vector<Vertex> out;
  for (int v = 0; m != 0; ++v, m >>= 1)
    if (m & 1u) out.push_back(v + 1);
  return VertexSet(std::move(out));
}

inline bool is_maximal(Mask m, const std::vector<Mask>& adj) {
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (!(m >> v & 1u) && (adj[v] & m) == 0) return false;
  return true;
}

}  // namespace detail

/// All nonempty independent sets.
inline SetFamily brute_independent_sets(const Graph& g) {
  detail::guard(g.order(), kMaxGraphOrder, "brute_independent_sets");
  const auto ok = detail::independence_table(detail::adjacency_masks(g));
  std::vector<VertexSet> sets;
  for (detail::Mask m = 1; m < ok.size(); ++m)
    if (ok[m]) sets.push_back(detail::to_set(m));
  return SetFamily(std::move(sets));
}

/// Number of nonempty independent sets, without materializing them.
inline std::uint64_t brute_independent_set_count(const Graph& g) {
  detail::guard(g.order(), kMaxGraphOrder, "brute_independent_set_count");
  const auto ok = detail::independence_table(detail::adjacency_masks(g));
  return static_cast<std::uint64_t>(std::count(ok.begin(), ok.end(), true)) - 1;
}

inline SetFamily brute_maximal_independent_sets(const Graph& g) {
  detail::guard(g.order(), kMaxGraphOrder, "brute_maximal_independent_sets");
  const auto adj = detail::adjacency_masks(g);
  const auto ok = detail::independence_table(adj);
  std::vector<VertexSet> sets;
  for (detail::Mask m = 1; m < ok.size(); ++m)
    if (ok[m] && detail::is_maximal(m, adj)) sets.push_back(detail::to_set(m));
  return SetFamily(std::move(sets));
}

inline std::size_t brute_alpha(const Graph& g) {
  detail::guard(g.order(), kMaxGraphOrder, "brute_alpha");
  const auto ok = detail::independence_table(detail::adjacency_masks(g));
  std::size_t best = 0;
  for (detail::Mask m = 1; m < ok.size(); ++m)
    if (ok[m]) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(m)));
  return best;
}

inline SetFamily brute_maximum_independent_sets(const Graph& g) {
  const std::size_t alpha = brute_alpha(g);
  std::vector<VertexSet> sets;
  for (const VertexSet& s : brute_maximal_independent_sets(g))
    if (s.size() == alpha) sets.push_back(s);
  return SetFamily(std::move(sets));
}

inline std::size_t brute_omega(const Graph& g) { return brute_alpha(complement(g)); }

inline SetFamily brute_maximal_cliques(const Graph& g) { return brute_maximal_independent_sets(complement(g)); }

inline constexpr std::size_t kMaxIsomorphismOrder = 10;

/// Tries every vertex permutation.
inline bool brute_isomorphic(const Graph& g, const Graph& h) {
  detail::guard(g.order(), kMaxIsomorphismOrder, "brute_isomorphic");
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<Vertex> perm = all_vertices(g.order()).members();
  const auto edges = g.edges();
  do {
    bool same = true;
    for (auto [u, v] : edges)
      if (!h.adjacent(perm[static_cast<std::size_t>(u - 1)], perm[static_cast<std::size_t>(v - 1)])) {
        same = false;
        break;
      }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Literal evaluation of: for every item subset, pairwise compatibility
/// (every two distinct items fit together in every dimension) implies the
/// subset fits in every dimension.
inline bool brute_check_property_Pd(const DkpInstance& inst) {
  inst.validate();
  const std::size_t n = inst.size();
  const std::size_t d = inst.dimensions();
  detail::guard(n, kMaxInstanceSize, "brute_check_property_Pd");

  std::vector<detail::Mask> compatible(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      bool fits = true;
      for (std::size_t i = 0; i < d && fits; ++i)
        fits = inst.items[a].sizes[i] + inst.items[b].sizes[i] <= inst.capacities[i];
      if (fits) compatible[a] |= detail::Mask{1} << b;
    }

  for (detail::Mask m = 1; m < (detail::Mask{1} << n); ++m) {
    bool premise = true;
    for (std::size_t a = 0; a < n && premise; ++a)
      if (m >> a & 1u) premise = (m & ~(detail::Mask{1} << a) & ~compatible[a]) == 0;
    if (!premise) continue;
    for (std::size_t i = 0; i < d; ++i) {
      Rational total = 0;
      for (std::size_t a = 0; a < n; ++a)
        if (m >> a & 1u) total += inst.items[a].sizes[i];
      if (total > inst.capacities[i]) return false;
    }
  }
  return true;
}

inline bool brute_check_property_P(const KpInstance& inst) { return brute_check_property_Pd(as_dkp(inst)); }

/// Profit-maximal feasible subset; ties go to the canonically smallest set.
inline Solution brute_solve_dkp(const DkpInstance& inst) {
  inst.validate();
  const std::size_t n = inst.size();
  const std::size_t d = inst.dimensions();
  detail::guard(n, kMaxInstanceSize, "brute_solve_dkp");

  // Depth-first over feasible subsets in increasing index order; feasibility
  // is closed under removal, so infeasible branches are cut.
  std::vector<Vertex> current;
  std::vector<Rational> load(d, Rational(0));
  VertexSet best;
  Rational best_profit = 0;
  Rational profit = 0;

  auto visit = [&](auto&& self, std::size_t next) -> void {
    VertexSet cand(current);
    if (profit > best_profit || (profit == best_profit && canonical_less(cand, best))) {
      best = cand;
      best_profit = profit;
    }
    for (std::size_t j = next; j < n; ++j) {
      bool fits = true;
      for (std::size_t i = 0; i < d && fits; ++i) fits = load[i] + inst.items[j].sizes[i] <= inst.capacities[i];
      if (!fits) continue;
      for (std::size_t i = 0; i < d; ++i) load[i] += inst.items[j].sizes[i];
      profit += inst.items[j].profit;
      current.push_back(static_cast<Vertex>(j) + 1);
      self(self, j + 1);
      current.pop_back();
      profit -= inst.items[j].profit;
      for (std::size_t i = 0; i < d; ++i) load[i] -= inst.items[j].sizes[i];
    }
  };
  visit(visit, 0);
  return make_solution(inst, best);
}

inline Solution brute_solve_kp(const KpInstance& inst) { return brute_solve_dkp(as_dkp(inst)); }

namespace detail {

/// Fewest bins covering all items, given which item subsets fit in one bin.
inline std::size_t min_bins(std::size_t n, const std::vector<bool>& fits) {
  const Mask full = (Mask{1} << n) - 1;
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best(std::size_t{1} << n, kInf);
  best[0] = 0;
  for (Mask m = 1; m <= full; ++m) {
    const Mask low = m & (~m + 1);
    const Mask rest = m ^ low;
    // Bins containing the lowest remaining item: low + any submask of rest.
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask bin = sub | low;
      if (fits[bin] && best[m ^ bin] != kInf) best[m] = std::min(best[m], best[m ^ bin] + 1);
      if (sub == 0) break;
    }
  }
  return best[full];
}

/// Can the boxes (rows of `sizes`, one per item) be placed without overlap,
/// axis-parallel and unrotated, inside the unit cube? Exhaustive over a
/// separating axis and order for every pair.
inline bool boxes_fit(const std::vector<std::vector<Rational>>& sizes) {
  const std::size_t k = sizes.size();
  if (k == 0) return true;
  const std::size_t d = sizes.front().size();
  for (const auto& s : sizes)
    for (const auto& x : s)
      if (x > 1) return false;
  if (k == 1) return true;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) pairs.emplace_back(a, b);

  const std::size_t choices = 2 * d;
  std::vector<std::size_t> pick(pairs.size(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t axis = 0; axis < d && ok; ++axis) {
      // Earliest start of each box along this axis under the chosen orders.
      std::vector<Rational> start(k, Rational(0));
      bool changed = true;
      for (std::size_t pass = 0; pass <= k && changed; ++pass) {
        changed = false;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          if (pick[p] / 2 != axis) continue;
          auto [first, second] = pairs[p];
          if (pick[p] % 2 == 1) std::swap(first, second);
          if (start[second] < start[first] + sizes[first][axis]) {
            start[second] = start[first] + sizes[first][axis];
            changed = true;
          }
        }
      }
      if (changed) ok = false;  // cyclic order
      for (std::size_t b = 0; b < k && ok; ++b) ok = start[b] + sizes[b][axis] <= 1;
    }
    if (ok) return true;

    std::size_t p = 0;
    while (p < pick.size() && ++pick[p] == choices) pick[p++] = 0;
    if (p == pick.size()) return false;
  }
}

}  // namespace detail

/// Minimum number of unit bins for one-dimensional sizes.
inline std::size_t brute_bin_packing_opt(const BpInstance& inst) {
  inst.validate();
  const std::size_t n = inst.size();
  detail::guard(n, kMaxPackingSize, "brute_bin_packing_opt");
  std::vector<Rational> load(std::size_t{1} << n, Rational(0));
  std::vector<bool> fits(load.size(), true);
  for (detail::Mask m = 1; m < load.size(); ++m) {
    const int low = detail::lowest(m);
    load[m] = load[m & (m - 1)] + inst.sizes[static_cast<std::size_t>(low)];
    fits[m] = load[m] <= 1;
  }
  return detail::min_bins(n, fits);
}

/// Minimum number of unit vector bins: a bin is feasible when each
/// coordinate of its summed size vector is at most 1.
inline std::size_t brute_vector_packing_opt(const DkpInstance& inst) {
  inst.validate();
  const std::size_t n = inst.size();
  detail::guard(n, kMaxPackingSize, "brute_vector_packing_opt");
  const std::size_t d = inst.dimensions();
  std::vector<std::vector<Rational>> load(std::size_t{1} << n, std::vector<Rational>(d, Rational(0)));
  std::vector<bool> fits(load.size(), true);
  for (detail::Mask m = 1; m < load.size(); ++m) {
    const auto low = static_cast<std::size_t>(detail::lowest(m));
    for (std::size_t i = 0; i < d; ++i) {
      load[m][i] = load[m & (m - 1)][i] + inst.items[low].sizes[i];
      if (load[m][i] > 1) fits[m] = false;
    }
  }
  return detail::min_bins(n, fits);
}

/// Minimum number of unit cubes for geometric d-dimensional packing. Bin
/// feasibility is decided exactly for at most three items; a larger bin whose
/// items are pairwise separable and whose volume fits is outside the oracle's
/// envelope and raises CapacityError.
inline std::size_t brute_geometric_packing_opt(const DkpInstance& inst) {
  inst.validate();
  const std::size_t n = inst.size();
  detail::guard(n, kMaxPackingSize, "brute_geometric_packing_opt");
  const std::size_t d = inst.dimensions();

  auto separable = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < d; ++i)
      if (inst.items[a].sizes[i] + inst.items[b].sizes[i] <= 1) return true;
    return false;
  };

  std::vector<bool> fits(std::size_t{1} << n, false);
  fits[0] = true;
  for (detail::Mask m = 1; m < fits.size(); ++m) {
    std::vector<std::size_t> members;
    for (std::size_t a = 0; a < n; ++a)
      if (m >> a & 1u) members.push_back(a);

    if (members.size() <= kMaxGeometricBinItems) {
      std::vector<std::vector<Rational>> boxes;
      for (std::size_t a : members) boxes.push_back(inst.items[a].sizes);
      fits[m] = detail::boxes_fit(boxes);
      continue;
    }
    // Feasibility is closed under removal; smaller masks are already decided.
    bool subsets_fit = true;
    for (std::size_t a : members) subsets_fit = subsets_fit && fits[m & ~(detail::Mask{1} << a)];
    if (!subsets_fit) continue;
    bool pairwise = true;
    for (std::size_t x = 0; x < members.size() && pairwise; ++x)
      for (std::size_t y = x + 1; y < members.size() && pairwise; ++y) pairwise = separable(members[x], members[y]);
    if (!pairwise) continue;
    Rational volume = 0;
    for (std::size_t a : members) {
      Rational v = 1;
      for (const auto& s : inst.items[a].sizes) v *= s;
      volume += v;
    }
    if (volume > 1) continue;
    throw CapacityError("brute_geometric_packing_opt: a bin of " + std::to_string(members.size()) +
                        " items needs an exact placement test");
  }
  return detail::min_bins(n, fits);
}

}  // namespace tkit::oracle
