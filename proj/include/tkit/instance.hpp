#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tkit/errors.hpp"
#include "tkit/graph.hpp"
#include "tkit/rational.hpp"

namespace tkit {

struct KpItem {
  std::string id;
  Rational profit;
  Rational size;
};

/// One-dimensional knapsack instance. Item j (1-based) corresponds to vertex j.
struct KpInstance {
  std::vector<KpItem> items;
  Rational capacity;

  std::size_t size() const noexcept { return items.size(); }

  void validate() const {
    if (capacity < 0) throw FormatError("negative capacity");
    for (const auto& it : items)
      if (it.size < 0 || it.profit < 0) throw FormatError("item " + it.id + " has a negative value");
  }
};

struct DkpItem {
  std::string id;
  Rational profit;
  std::vector<Rational> sizes;
};

/// d-dimensional knapsack instance; `capacities.size()` is the dimension d.
struct DkpInstance {
  std::vector<DkpItem> items;
  std::vector<Rational> capacities;

  std::size_t size() const noexcept { return items.size(); }
  std::size_t dimensions() const noexcept { return capacities.size(); }

  void validate() const {
    if (capacities.empty()) throw ShapeError("instance needs at least one dimension");
    for (const auto& c : capacities)
      if (c < 0) throw FormatError("negative capacity");
    for (const auto& it : items) {
      if (it.sizes.size() != capacities.size())
        throw ShapeError("item " + it.id + " has " + std::to_string(it.sizes.size()) + " sizes, expected " +
                         std::to_string(capacities.size()));
      if (it.profit < 0) throw FormatError("item " + it.id + " has a negative profit");
      for (const auto& s : it.sizes)
        if (s < 0) throw FormatError("item " + it.id + " has a negative size");
    }
  }
};

/// Bin packing instance with implicit unit capacity; sizes lie in (0,1].
struct BpInstance {
  std::vector<Rational> sizes;

  std::size_t size() const noexcept { return sizes.size(); }

  void validate() const {
    for (const auto& s : sizes)
      if (s <= 0 || s > 1) throw FormatError("bin packing size " + to_string(s) + " outside (0,1]");
  }
};

struct Solution {
  VertexSet chosen;  // 1-based item indices
  Rational profit;
  std::vector<Rational> dimension_totals;

  friend bool operator==(const Solution&, const Solution&) = default;
};

inline std::string default_item_id(std::size_t j) { return "a" + std::to_string(j); }

inline DkpInstance as_dkp(const KpInstance& kp) {
  DkpInstance d;
  d.capacities = {kp.capacity};
  for (const auto& it : kp.items) d.items.push_back({it.id, it.profit, {it.size}});
  return d;
}

/// The instance restricted to dimension `dim` (0-based), keeping ids and profits.
inline KpInstance dimension_view(const DkpInstance& inst, std::size_t dim) {
  if (dim >= inst.dimensions()) throw RangeError("dimension " + std::to_string(dim + 1) + " out of range");
  KpInstance kp;
  kp.capacity = inst.capacities[dim];
  for (const auto& it : inst.items) kp.items.push_back({it.id, it.profit, it.sizes.at(dim)});
  return kp;
}

/// KP view of a bin packing instance: capacity 1, unit profits.
inline KpInstance as_kp(const BpInstance& bp) {
  KpInstance kp;
  kp.capacity = 1;
  for (std::size_t j = 0; j < bp.size(); ++j) kp.items.push_back({default_item_id(j + 1), 1, bp.sizes[j]});
  return kp;
}

inline Rational total_profit(const KpInstance& inst, const VertexSet& chosen) {
  Rational p = 0;
  for (Vertex j : chosen) p += inst.items.at(static_cast<std::size_t>(j - 1)).profit;
  return p;
}

inline Solution make_solution(const DkpInstance& inst, const VertexSet& chosen) {
  Solution s;
  s.chosen = chosen;
  s.profit = 0;
  s.dimension_totals.assign(inst.dimensions(), Rational(0));
  for (Vertex j : chosen) {
    const auto& it = inst.items.at(static_cast<std::size_t>(j - 1));
    s.profit += it.profit;
    for (std::size_t i = 0; i < inst.dimensions(); ++i) s.dimension_totals[i] += it.sizes[i];
  }
  return s;
}

inline Solution make_solution(const KpInstance& inst, const VertexSet& chosen) {
  return make_solution(as_dkp(inst), chosen);
}

inline bool is_feasible(const DkpInstance& inst, const VertexSet& chosen) {
  for (std::size_t i = 0; i < inst.dimensions(); ++i) {
    Rational total = 0;
    for (Vertex j : chosen) total += inst.items.at(static_cast<std::size_t>(j - 1)).sizes[i];
    if (total > inst.capacities[i]) return false;
  }
  return true;
}

inline bool is_feasible(const KpInstance& inst, const VertexSet& chosen) {
  Rational total = 0;
  for (Vertex j : chosen) total += inst.items.at(static_cast<std::size_t>(j - 1)).size;
  return total <= inst.capacity;
}

}  // namespace tkit
