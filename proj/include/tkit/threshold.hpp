#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tkit/bitset.hpp"
#include "tkit/errors.hpp"
#include "tkit/graph.hpp"
#include "tkit/instance.hpp"
#include "tkit/rational.hpp"

namespace tkit {

/// Binary creation sequence t_1..t_n with vertex map v(1..n).
///
/// Position i holds the vertex v(i). A 1 means v(i) dominated the graph
/// induced by v(1..i) when added, a 0 means it was isolated. t_1 is always 1.
/// The empty sequence describes the graph on zero vertices.
class CreationSequence {
 public:
  CreationSequence() = default;

  /// Sequence from a '0'/'1' string with the identity vertex map.
  explicit CreationSequence(std::string_view bits) : CreationSequence(bits, {}) {}

  CreationSequence(std::string_view bits, std::vector<Vertex> vmap) {
    bits_.reserve(bits.size());
    for (char c : bits) {
      if (c != '0' && c != '1') throw FormatError("creation sequence contains '" + std::string(1, c) + "'");
      bits_.push_back(c == '1');
    }
    if (vmap.empty()) vmap = all_vertices(bits_.size()).members();
    vmap_ = std::move(vmap);
    validate();
  }

  CreationSequence(std::vector<bool> bits, std::vector<Vertex> vmap) : bits_(std::move(bits)), vmap_(std::move(vmap)) {
    validate();
  }

  std::size_t size() const noexcept { return bits_.size(); }

  /// t_i for 1-based position i.
  bool bit(std::size_t i) const { return bits_.at(i - 1); }
  /// v(i) for 1-based position i.
  Vertex vertex(std::size_t i) const { return vmap_.at(i - 1); }

  const std::vector<bool>& bits() const noexcept { return bits_; }
  const std::vector<Vertex>& vmap() const noexcept { return vmap_; }

  std::string bit_string() const {
    std::string s;
    for (bool b : bits_) s.push_back(b ? '1' : '0');
    return s;
  }

  std::size_t ones() const noexcept { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }
  std::size_t zeros() const noexcept { return bits_.size() - ones(); }

  friend bool operator==(const CreationSequence&, const CreationSequence&) = default;

 private:
  void validate() const {
    if (vmap_.size() != bits_.size()) throw FormatError("vertex map length differs from sequence length");
    if (!bits_.empty() && !bits_.front()) throw FormatError("creation sequence must start with 1");
    std::vector<bool> seen(bits_.size() + 1, false);
    for (Vertex v : vmap_) {
      if (v < 1 || static_cast<std::size_t>(v) > bits_.size() || seen[static_cast<std::size_t>(v)])
        throw FormatError("vertex map is not a permutation of 1.." + std::to_string(bits_.size()));
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  std::vector<bool> bits_;
  std::vector<Vertex> vmap_;
};

enum class ForbiddenTag { TwoK2, P4, C4, C5 };

inline std::string to_string(ForbiddenTag tag) {
  switch (tag) {
    case ForbiddenTag::TwoK2: return "2K2";
    case ForbiddenTag::P4: return "P4";
    case ForbiddenTag::C4: return "C4";
    case ForbiddenTag::C5: return "C5";
  }
  return "?";
}

struct ForbiddenSubgraph {
  VertexSet vertices;
  ForbiddenTag tag;
};

struct RecognitionFailure {
  /// Vertices left when no isolated or dominating vertex remained.
  VertexSet residual;
  /// Induced 2K2, P4 or C4, present only when requested.
  std::optional<ForbiddenSubgraph> witness;
};

struct RecognizeOptions {
  /// Search the residual graph for a forbidden induced subgraph (O(n^4)).
  bool witness = false;
};

using ThresholdRecognition = std::variant<CreationSequence, RecognitionFailure>;

/// Clique side K and independent side S of a split graph.
struct SplitPartition {
  VertexSet clique;
  VertexSet independent;

  friend bool operator==(const SplitPartition&, const SplitPartition&) = default;
};

enum class SplitMode { CliqueMax, IndependentMax };

struct AlphaOmega {
  std::size_t alpha;
  std::size_t omega;
};

namespace detail {

/// Classifies the graph induced by four vertices, if it is 2K2, P4 or C4.
inline std::optional<ForbiddenTag> classify_four(const Graph& g, const std::array<Vertex, 4>& q) {
  int edges = 0;
  std::array<int, 4> deg{};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (g.adjacent(q[static_cast<std::size_t>(a)], q[static_cast<std::size_t>(b)])) {
        ++edges;
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
      }
  std::sort(deg.begin(), deg.end());
  if (edges == 2 && deg == std::array<int, 4>{1, 1, 1, 1}) return ForbiddenTag::TwoK2;
  if (edges == 3 && deg == std::array<int, 4>{1, 1, 2, 2}) return ForbiddenTag::P4;
  if (edges == 4 && deg == std::array<int, 4>{2, 2, 2, 2}) return ForbiddenTag::C4;
  return std::nullopt;
}

}  // namespace detail

/// First induced 2K2, P4 or C4 among 4-subsets of `within`, in lexicographic order.
inline std::optional<ForbiddenSubgraph> find_threshold_obstruction(const Graph& g, const VertexSet& within) {
  const auto& v = within.members();
  const std::size_t k = v.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (std::size_t c = b + 1; c < k; ++c)
        for (std::size_t d = c + 1; d < k; ++d) {
          const std::array<Vertex, 4> q{v[a], v[b], v[c], v[d]};
          if (auto tag = detail::classify_four(g, q)) return ForbiddenSubgraph{VertexSet{q[0], q[1], q[2], q[3]}, *tag};
        }
  return std::nullopt;
}

/// Recognizes a threshold graph by peeling isolated or dominating vertices.
///
/// The current degree of a remaining vertex is its original degree minus the
/// number of dominating vertices removed so far, so vertices are bucketed once
/// by original degree and each step inspects two buckets. On success the
/// recorded bits are reversed into a creation sequence; the last vertex left
/// is recorded as 1.
inline ThresholdRecognition recognize_threshold(const Graph& g, RecognizeOptions options = {}) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> bucket(n == 0 ? 1 : n);
  for (Vertex v = static_cast<Vertex>(n); v >= 1; --v) bucket[g.degree(v)].push_back(v);

  std::vector<bool> peel_bits;
  std::vector<Vertex> peel_order;
  peel_bits.reserve(n);
  peel_order.reserve(n);
  std::size_t dominating_removed = 0;
  std::size_t remaining = n;

  while (remaining > 0) {
    auto& isolated = bucket[dominating_removed];
    const std::size_t dom_degree = dominating_removed + remaining - 1;
    if (remaining == 1 || (isolated.empty() && dom_degree < n && !bucket[dom_degree].empty())) {
      auto& from = remaining == 1 ? isolated : bucket[dom_degree];
      peel_order.push_back(from.back());
      from.pop_back();
      peel_bits.push_back(true);
      ++dominating_removed;
    } else if (!isolated.empty()) {
      peel_order.push_back(isolated.back());
      isolated.pop_back();
      peel_bits.push_back(false);
    } else {
      std::vector<Vertex> rest;
      for (const auto& b : bucket) rest.insert(rest.end(), b.begin(), b.end());
      RecognitionFailure failure{VertexSet(std::move(rest)), std::nullopt};
      if (options.witness) failure.witness = find_threshold_obstruction(g, failure.residual);
      return failure;
    }
    --remaining;
  }

  std::reverse(peel_bits.begin(), peel_bits.end());
  std::reverse(peel_order.begin(), peel_order.end());
  return CreationSequence(std::move(peel_bits), std::move(peel_order));
}

inline bool is_threshold(const Graph& g) {
  return std::holds_alternative<CreationSequence>(recognize_threshold(g));
}

/// Builds the graph: for positions i < j, v(i) and v(j) are adjacent iff t_j = 1.
inline Graph creation_sequence_to_graph(const CreationSequence& cs) {
  const std::size_t n = cs.size();
  Graph g(n);
  for (std::size_t j = 2; j <= n; ++j)
    if (cs.bit(j))
      for (std::size_t i = 1; i < j; ++i) g.add_edge(cs.vertex(i), cs.vertex(j));
  return g;
}

/// Sequence of the complement graph: t'_1 = 1, t'_i = 1 - t_i otherwise.
inline CreationSequence complement_sequence(const CreationSequence& cs) {
  std::vector<bool> bits = cs.bits();
  for (std::size_t i = 1; i < bits.size(); ++i) bits[i] = !bits[i];
  return CreationSequence(std::move(bits), cs.vmap());
}

/// 0-positions go to S and 1-positions after the first to K; v(1) joins K
/// (|K| = omega) or S (|S| = alpha) depending on `mode`.
inline SplitPartition split_partition(const CreationSequence& cs, SplitMode mode) {
  std::vector<Vertex> clique, independent;
  for (std::size_t i = 1; i <= cs.size(); ++i) {
    const bool to_clique = i == 1 ? mode == SplitMode::CliqueMax : cs.bit(i);
    (to_clique ? clique : independent).push_back(cs.vertex(i));
  }
  return {VertexSet(std::move(clique)), VertexSet(std::move(independent))};
}

inline AlphaOmega alpha_omega(const CreationSequence& cs) {
  if (cs.size() == 0) return {0, 0};
  return {1 + cs.zeros(), cs.ones()};
}

namespace detail {

/// Maximal independent sets as bitsets, in the scan order of the algorithm.
inline std::vector<Bitset> mis_bitsets(const CreationSequence& cs) {
  const std::size_t n = cs.size();
  std::vector<Bitset> out;
  Bitset zeros_seen(n);
  for (std::size_t i = n; i >= 1; --i) {
    const auto v = static_cast<std::size_t>(cs.vertex(i) - 1);
    if (cs.bit(i)) {
      Bitset s = zeros_seen;
      s.set(v);
      out.push_back(std::move(s));
    } else {
      zeros_seen.set(v);
    }
  }
  return out;
}

inline std::vector<Bitset> is_bitsets(const CreationSequence& cs) {
  const std::size_t n = cs.size();
  std::vector<Bitset> family;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto v = static_cast<std::size_t>(cs.vertex(i) - 1);
    if (!cs.bit(i)) {
      const std::size_t existing = family.size();
      for (std::size_t k = 0; k < existing; ++k) {
        Bitset s = family[k];
        s.set(v);
        family.push_back(std::move(s));
      }
    }
    Bitset single(n);
    single.set(v);
    family.push_back(std::move(single));
  }
  return family;
}

}  // namespace detail

/// All maximal independent sets: scanning positions n..1, every 1-position
/// emits {v(i)} plus the 0-positions already seen. There are exactly omega.
inline SetFamily enumerate_mis(const CreationSequence& cs) { return SetFamily::from_bitsets(detail::mis_bitsets(cs)); }

inline std::size_t count_mis(const CreationSequence& cs) { return cs.ones(); }

/// All maximum independent sets: the 0-positions plus one vertex from the
/// leading run of 1s.
inline SetFamily enumerate_im(const CreationSequence& cs) {
  std::vector<Vertex> zeros;
  for (std::size_t i = 1; i <= cs.size(); ++i)
    if (!cs.bit(i)) zeros.push_back(cs.vertex(i));
  std::vector<VertexSet> sets;
  for (std::size_t i = 1; i <= cs.size() && cs.bit(i); ++i) {
    std::vector<Vertex> s = zeros;
    s.push_back(cs.vertex(i));
    sets.emplace_back(std::move(s));
  }
  return SetFamily(std::move(sets));
}

/// Length of the leading run of 1s.
inline std::size_t count_im(const CreationSequence& cs) {
  std::size_t j = 0;
  while (j < cs.size() && cs.bits()[j]) ++j;
  return j;
}

inline constexpr std::size_t kMaxIndependentSetEnumeration = 24;

/// All nonempty independent sets, built position by position.
inline SetFamily enumerate_is(const CreationSequence& cs) {
  if (cs.size() > kMaxIndependentSetEnumeration)
    throw CapacityError("enumerate_is: " + std::to_string(cs.size()) + " vertices exceeds limit " +
                        std::to_string(kMaxIndependentSetEnumeration));
  return SetFamily::from_bitsets(detail::is_bitsets(cs));
}

/// Number of nonempty independent sets: i(G_1) = 1, then i -> i + 1 on a 1
/// and i -> 2i + 1 on a 0.
inline BigInt count_is(const CreationSequence& cs) {
  BigInt count = 0;
  for (std::size_t i = 1; i <= cs.size(); ++i) {
    if (i == 1)
      count = 1;
    else if (cs.bit(i))
      count += 1;
    else
      count = 2 * count + 1;
  }
  return count;
}

inline SetFamily enumerate_max_cliques(const CreationSequence& cs) { return enumerate_mis(complement_sequence(cs)); }

inline std::size_t count_mc(const CreationSequence& cs) { return alpha_omega(cs).alpha; }

/// Knapsack instance whose feasible sets are the independent sets: start
/// with c = 1, s_1 = 1; a 0 gets size 1, doubles every earlier size and sets
/// c = 2c + 1; a 1 gets size c. Item j corresponds to vertex j. Profits are
/// indexed by vertex and default to 1.
inline KpInstance threshold_to_kp(const CreationSequence& cs, const std::vector<Rational>& profits = {}) {
  const std::size_t n = cs.size();
  if (!profits.empty() && profits.size() != n)
    throw ShapeError("expected " + std::to_string(n) + " profits, got " + std::to_string(profits.size()));

  std::vector<BigInt> size(n);
  BigInt capacity = 1;
  if (n > 0) size[0] = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (!cs.bit(i)) {
      size[i - 1] = 1;
      capacity = 2 * capacity + 1;
      for (std::size_t j = 0; j + 1 < i; ++j) size[j] *= 2;
    } else {
      size[i - 1] = capacity;
    }
  }

  KpInstance kp;
  kp.capacity = Rational(capacity);
  kp.items.resize(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto item = static_cast<std::size_t>(cs.vertex(i) - 1);
    kp.items[item].id = default_item_id(item + 1);
    kp.items[item].size = Rational(size[i - 1]);
    kp.items[item].profit = profits.empty() ? Rational(1) : profits[item];
  }
  return kp;
}

}  // namespace tkit
