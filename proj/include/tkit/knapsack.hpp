#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tkit/errors.hpp"
#include "tkit/graph.hpp"
#include "tkit/instance.hpp"
#include "tkit/kthreshold.hpp"
#include "tkit/threshold.hpp"

namespace tkit {

struct EquivalenceReport {
  bool equivalent = false;
  Graph conflict_graph;
  /// Pairwise-compatible item set that is infeasible; set only when not equivalent.
  std::optional<VertexSet> witness;
};

/// Items j, j' conflict iff s_j + s_j' > c. Always a threshold graph.
inline Graph conflict_graph_kp(const KpInstance& inst) {
  const std::size_t n = inst.size();
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (inst.items[i].size + inst.items[j].size > inst.capacity)
        g.add_edge(static_cast<Vertex>(i) + 1, static_cast<Vertex>(j) + 1);
  return g;
}

namespace detail {

inline CreationSequence threshold_sequence(const Graph& g) {
  auto r = recognize_threshold(g);
  if (!std::holds_alternative<CreationSequence>(r)) throw ContractError("conflict graph is not threshold");
  return std::get<CreationSequence>(std::move(r));
}

/// Drops items one at a time while the rest stays infeasible.
template <typename Instance>
VertexSet minimize_infeasible(const Instance& inst, VertexSet set) {
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (Vertex v : set) {
      std::vector<Vertex> rest;
      for (Vertex w : set)
        if (w != v) rest.push_back(w);
      VertexSet smaller(std::move(rest));
      if (!is_feasible(inst, smaller)) {
        set = std::move(smaller);
        shrunk = true;
        break;
      }
    }
  }
  return set;
}

/// Equivalence holds iff every maximal independent set is feasible, since
/// feasibility is closed under taking subsets.
template <typename Instance>
EquivalenceReport report_from_family(const Instance& inst, Graph g, const SetFamily& mis) {
  EquivalenceReport report{true, std::move(g), std::nullopt};
  for (const VertexSet& m : mis)
    if (!is_feasible(inst, m)) {
      report.equivalent = false;
      report.witness = minimize_infeasible(inst, m);
      break;
    }
  return report;
}

/// Among the best maximal independent sets, keeps only positive-profit items
/// and returns the canonically smallest result.
template <typename Instance>
Solution best_of(const Instance& inst, const SetFamily& mis, const std::vector<Rational>& profit) {
  std::optional<VertexSet> best;
  Rational best_profit = 0;
  for (const VertexSet& m : mis) {
    std::vector<Vertex> positive;
    Rational p = 0;
    for (Vertex v : m)
      if (profit[static_cast<std::size_t>(v - 1)] > 0) {
        positive.push_back(v);
        p += profit[static_cast<std::size_t>(v - 1)];
      }
    VertexSet s(std::move(positive));
    if (!best || p > best_profit || (p == best_profit && canonical_less(s, *best))) {
      best = std::move(s);
      best_profit = p;
    }
  }
  return make_solution(inst, best.value_or(VertexSet{}));
}

template <typename Instance>
std::vector<Rational> profits_of(const Instance& inst) {
  std::vector<Rational> p;
  for (const auto& it : inst.items) p.push_back(it.profit);
  return p;
}

}  // namespace detail

inline EquivalenceReport check_equivalence_kp(const KpInstance& inst) {
  Graph g = conflict_graph_kp(inst);
  const SetFamily mis = inst.size() == 0 ? SetFamily{} : enumerate_mis(detail::threshold_sequence(g));
  return detail::report_from_family(inst, std::move(g), mis);
}

/// Optimum over the at most omega maximal independent sets of the conflict graph.
inline Solution solve_kp_equivalent(const KpInstance& inst) {
  inst.validate();
  const EquivalenceReport report = check_equivalence_kp(inst);
  if (!report.equivalent)
    throw PreconditionError("instance has no equivalent graph", report.witness->members());
  const SetFamily mis = inst.size() == 0 ? SetFamily{} : enumerate_mis(detail::threshold_sequence(report.conflict_graph));
  return detail::best_of(inst, mis, detail::profits_of(inst));
}

inline std::vector<KpInstance> per_dimension_instances(const DkpInstance& inst) {
  std::vector<KpInstance> out;
  for (std::size_t i = 0; i < inst.dimensions(); ++i) out.push_back(dimension_view(inst, i));
  return out;
}

/// One member per dimension: the conflict graph of that dimension.
inline ThresholdCover conflict_cover_dkp(const DkpInstance& inst) {
  std::vector<CreationSequence> members;
  for (const KpInstance& kp : per_dimension_instances(inst))
    members.push_back(inst.size() == 0 ? CreationSequence{} : detail::threshold_sequence(conflict_graph_kp(kp)));
  return ThresholdCover(inst.size(), std::move(members));
}

/// Union of the per-dimension conflict graphs.
inline Graph conflict_graph_dkp(const DkpInstance& inst) {
  std::vector<Graph> graphs;
  for (const KpInstance& kp : per_dimension_instances(inst)) graphs.push_back(conflict_graph_kp(kp));
  if (graphs.empty()) return Graph(inst.size());
  return union_graphs(graphs);
}

namespace detail {

inline SetFamily dkp_mis(const DkpInstance& inst, const Graph& g) {
  if (inst.size() == 0) return {};
  auto r = recognize_threshold(g);
  if (auto* cs = std::get_if<CreationSequence>(&r)) return enumerate_mis(*cs);
  return enumerate_mis_k(conflict_cover_dkp(inst));
}

}  // namespace detail

inline EquivalenceReport check_equivalence_dkp(const DkpInstance& inst) {
  inst.validate();
  Graph g = conflict_graph_dkp(inst);
  const SetFamily mis = detail::dkp_mis(inst, g);
  return detail::report_from_family(inst, std::move(g), mis);
}

/// Optimum over the maximal independent sets of the union conflict graph.
/// When that graph is itself threshold its creation sequence is used directly.
inline Solution solve_dkp_equivalent(const DkpInstance& inst) {
  const EquivalenceReport report = check_equivalence_dkp(inst);
  if (!report.equivalent)
    throw PreconditionError("instance has no equivalent graph", report.witness->members());
  return detail::best_of(inst, detail::dkp_mis(inst, report.conflict_graph), detail::profits_of(inst));
}

/// omega of the conflict graph of the unit-capacity view.
inline std::size_t bp_lower_bound(const BpInstance& inst) {
  inst.validate();
  const KpInstance kp = as_kp(inst);
  const EquivalenceReport report = check_equivalence_kp(kp);
  if (!report.equivalent)
    throw PreconditionError("bin packing instance has no equivalent graph", report.witness->members());
  if (kp.size() == 0) return 0;
  return detail::threshold_sequence(report.conflict_graph).ones();
}

namespace detail {

inline void require_packing_dimensions(const DkpInstance& inst) {
  inst.validate();
  for (std::size_t i = 0; i < inst.dimensions(); ++i) {
    const std::string dim = "dimension " + std::to_string(i + 1);
    if (inst.capacities[i] != 1) throw PreconditionError(dim + " has capacity " + to_string(inst.capacities[i]) + ", expected 1");
    const EquivalenceReport r = check_equivalence_kp(dimension_view(inst, i));
    if (!r.equivalent) throw PreconditionError(dim + " has no equivalent graph", r.witness->members());
  }
}

}  // namespace detail

/// omega of the union of the per-dimension conflict graphs.
inline std::size_t dvp_lower_bound(const DkpInstance& inst) {
  detail::require_packing_dimensions(inst);
  if (inst.size() == 0) return 0;
  const Graph g = conflict_graph_dkp(inst);
  auto r = recognize_threshold(g);
  if (auto* cs = std::get_if<CreationSequence>(&r)) return cs->ones();
  return clique_number(g);
}

/// omega of the intersection of the per-dimension conflict graphs.
inline std::size_t dbp_lower_bound(const DkpInstance& inst) {
  detail::require_packing_dimensions(inst);
  if (inst.size() == 0) return 0;
  return omega_intersection(conflict_cover_dkp(inst));
}

}  // namespace tkit
