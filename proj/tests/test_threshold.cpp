#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "tkit/tkit.hpp"

using namespace tkit;

namespace {

Graph paw() { return Graph::from_edges(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}}); }
Graph p4() { return Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}}); }

VertexSet vs(const CreationSequence& cs, std::initializer_list<std::size_t> positions) {
  std::vector<Vertex> out;
  for (std::size_t p : positions) out.push_back(cs.vertex(p));
  return VertexSet(std::move(out));
}

std::vector<Rational> sizes_of(const KpInstance& kp) {
  std::vector<Rational> s;
  for (const auto& it : kp.items) s.push_back(it.size);
  return s;
}

std::vector<Rational> ints(std::initializer_list<long long> xs) {
  std::vector<Rational> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(CreationSequence, Validation) {
  EXPECT_THROW(CreationSequence("0101"), FormatError);
  EXPECT_THROW(CreationSequence("1021"), FormatError);
  EXPECT_THROW(CreationSequence("110", {1, 1, 2}), FormatError);
  EXPECT_THROW(CreationSequence("110", {1, 2}), FormatError);
  EXPECT_NO_THROW(CreationSequence(""));
  const CreationSequence cs("1101", {4, 2, 1, 3});
  EXPECT_EQ(cs.vertex(1), 4);
  EXPECT_TRUE(cs.bit(4));
  EXPECT_EQ(cs.ones(), 3u);
  EXPECT_EQ(cs.bit_string(), "1101");
}

TEST(Recognize, PawIs1101) {
  const auto r = recognize_threshold(paw());
  ASSERT_TRUE(std::holds_alternative<CreationSequence>(r));
  const auto& cs = std::get<CreationSequence>(r);
  EXPECT_EQ(cs.bit_string(), "1101");
  EXPECT_EQ(creation_sequence_to_graph(cs), paw());
}

TEST(Recognize, P4FailsWithP4Witness) {
  const auto r = recognize_threshold(p4(), {true});
  ASSERT_TRUE(std::holds_alternative<RecognitionFailure>(r));
  const auto& f = std::get<RecognitionFailure>(r);
  ASSERT_TRUE(f.witness.has_value());
  EXPECT_EQ(f.witness->tag, ForbiddenTag::P4);
  EXPECT_EQ(f.witness->vertices, (VertexSet{1, 2, 3, 4}));
  EXPECT_FALSE(std::get<RecognitionFailure>(recognize_threshold(p4())).witness.has_value());
}

TEST(Recognize, WitnessTags) {
  const auto tag_of = [](const Graph& g) {
    return std::get<RecognitionFailure>(recognize_threshold(g, {true})).witness->tag;
  };
  EXPECT_EQ(tag_of(Graph::from_edges(4, {{1, 2}, {3, 4}})), ForbiddenTag::TwoK2);
  EXPECT_EQ(tag_of(Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})), ForbiddenTag::C4);
}

TEST(Recognize, EmptyAndSingleVertex) {
  EXPECT_EQ(std::get<CreationSequence>(recognize_threshold(Graph(0))).size(), 0u);
  EXPECT_EQ(std::get<CreationSequence>(recognize_threshold(Graph(1))).bit_string(), "1");
}

TEST(Recognize, RoundTripRandomSequences) {
  gen::Rng rng(1);
  for (int t = 0; t < 500; ++t) {
    const CreationSequence cs = gen::random_sequence(rng, gen::between(rng, 1, 12));
    const Graph g = creation_sequence_to_graph(cs);
    const auto r = recognize_threshold(g);
    ASSERT_TRUE(std::holds_alternative<CreationSequence>(r));
    EXPECT_EQ(creation_sequence_to_graph(std::get<CreationSequence>(r)), g);
    EXPECT_EQ(std::get<CreationSequence>(r).bit_string(), cs.bit_string());
  }
}

TEST(Recognize, AgreesWithForbiddenSubgraphs) {
  gen::Rng rng(2);
  for (int t = 0; t < 400; ++t) {
    const Graph g = gen::random_graph(rng, gen::between(rng, 1, 8), 0.5);
    const auto r = recognize_threshold(g, {true});
    const bool has_obstruction = find_threshold_obstruction(g, all_vertices(g.order())).has_value();
    EXPECT_EQ(std::holds_alternative<CreationSequence>(r), !has_obstruction);
    if (const auto* f = std::get_if<RecognitionFailure>(&r)) {
      ASSERT_TRUE(f->witness.has_value());
      EXPECT_EQ(f->witness->vertices.size(), 4u);
    }
  }
}

TEST(SequenceToGraph, TableGraphs) {
  EXPECT_EQ(creation_sequence_to_graph(CreationSequence("1000")), Graph(4));
  EXPECT_EQ(creation_sequence_to_graph(CreationSequence("1111")), Graph::complete(4));
  EXPECT_EQ(creation_sequence_to_graph(CreationSequence("1001")), Graph::from_edges(4, {{1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(creation_sequence_to_graph(CreationSequence("1011")),
            Graph::from_edges(4, {{1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}}));
}

TEST(ComplementSequence, Examples) {
  EXPECT_EQ(complement_sequence(CreationSequence("1000")).bit_string(), "1111");
  EXPECT_EQ(complement_sequence(CreationSequence("1101")).bit_string(), "1010");
}

TEST(ComplementSequence, MatchesGraphComplementAndIsInvolution) {
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& cs : gen::all_sequences(n)) {
      const CreationSequence co = complement_sequence(cs);
      ASSERT_EQ(creation_sequence_to_graph(co), complement(creation_sequence_to_graph(cs)));
      ASSERT_EQ(complement_sequence(co), cs);
    }
}

TEST(SplitPartition, Examples) {
  const CreationSequence paw_cs("1101");
  const SplitPartition p = split_partition(paw_cs, SplitMode::CliqueMax);
  EXPECT_EQ(p.clique, vs(paw_cs, {1, 2, 4}));
  EXPECT_EQ(p.independent, vs(paw_cs, {3}));
  const SplitPartition e = split_partition(CreationSequence("1000"), SplitMode::IndependentMax);
  EXPECT_TRUE(e.clique.empty());
  EXPECT_EQ(e.independent, (VertexSet{1, 2, 3, 4}));
}

TEST(SplitPartition, ValidForAllSmallSequences) {
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& cs : gen::all_sequences(n)) {
      const Graph g = creation_sequence_to_graph(cs);
      for (SplitMode mode : {SplitMode::CliqueMax, SplitMode::IndependentMax}) {
        const SplitPartition p = split_partition(cs, mode);
        ASSERT_TRUE(is_valid_split_partition(g, p));
        const AlphaOmega ao = alpha_omega(cs);
        if (mode == SplitMode::CliqueMax) {
          ASSERT_EQ(p.clique.size(), ao.omega);
        } else {
          ASSERT_EQ(p.independent.size(), ao.alpha);
        }
      }
    }
}

TEST(AlphaOmega, Examples) {
  EXPECT_EQ(alpha_omega(CreationSequence("1101")).alpha, 2u);
  EXPECT_EQ(alpha_omega(CreationSequence("1101")).omega, 3u);
  EXPECT_EQ(alpha_omega(CreationSequence("1111")).alpha, 1u);
  EXPECT_EQ(alpha_omega(CreationSequence("1111")).omega, 4u);
  EXPECT_EQ(alpha_omega(CreationSequence("1000")).alpha, 4u);
  EXPECT_EQ(alpha_omega(CreationSequence("1000")).omega, 1u);
}

TEST(EnumerateMis, PawHasThree) {
  const CreationSequence cs("1101", {3, 1, 4, 2});
  EXPECT_EQ(enumerate_mis(cs), (SetFamily{vs(cs, {4}), vs(cs, {2, 3}), vs(cs, {1, 3})}));
  EXPECT_EQ(count_mis(cs), 3u);
  EXPECT_EQ(enumerate_mis(CreationSequence("1111")), (SetFamily{{1}, {2}, {3}, {4}}));
}

TEST(EnumerateIm, Examples) {
  const CreationSequence cs("1101");
  EXPECT_EQ(enumerate_im(cs), (SetFamily{vs(cs, {1, 3}), vs(cs, {2, 3})}));
  EXPECT_EQ(count_im(cs), 2u);
  EXPECT_EQ(count_im(CreationSequence("1111")), 4u);
  EXPECT_EQ(enumerate_im(CreationSequence("1111")).size(), 4u);
}

TEST(EnumerateIs, Examples) {
  EXPECT_EQ(count_is(CreationSequence("1000")), 15);
  EXPECT_EQ(count_is(CreationSequence("1101")), 6);
  EXPECT_EQ(count_is(CreationSequence("1111")), 4);
  EXPECT_EQ(enumerate_is(CreationSequence("1101")).size(), 6u);
  EXPECT_EQ(count_is(CreationSequence(std::string(100, '1'))), 100);
  EXPECT_EQ(count_is(CreationSequence("1" + std::string(80, '0'))), (BigInt(1) << 81) - 1);
  EXPECT_THROW(enumerate_is(CreationSequence(std::string(kMaxIndependentSetEnumeration + 1, '1'))), CapacityError);
}

TEST(EnumerateMaxCliques, Examples) {
  const CreationSequence cs("1101");
  EXPECT_EQ(enumerate_max_cliques(cs), (SetFamily{vs(cs, {1, 2, 4}), vs(cs, {3, 4})}));
  EXPECT_EQ(count_mc(cs), 2u);
  EXPECT_EQ(enumerate_max_cliques(CreationSequence("1111")), (SetFamily{{1, 2, 3, 4}}));
  EXPECT_EQ(count_mc(CreationSequence("1111")), 1u);
}

TEST(Enumerators, MatchOracleOnAllSmallSequences) {
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& cs : gen::all_sequences(n)) {
      const Graph g = creation_sequence_to_graph(cs);
      ASSERT_EQ(enumerate_mis(cs), oracle::brute_maximal_independent_sets(g)) << cs.bit_string();
      ASSERT_EQ(enumerate_im(cs), oracle::brute_maximum_independent_sets(g)) << cs.bit_string();
      ASSERT_EQ(enumerate_max_cliques(cs), oracle::brute_maximal_cliques(g)) << cs.bit_string();
      ASSERT_EQ(count_is(cs), oracle::brute_independent_set_count(g)) << cs.bit_string();
      ASSERT_EQ(count_mc(cs), enumerate_max_cliques(cs).size());
    }
}

TEST(Enumerators, RandomVertexMaps) {
  gen::Rng rng(9);
  for (int t = 0; t < 300; ++t) {
    const CreationSequence cs = gen::random_sequence(rng, gen::between(rng, 1, 11));
    const Graph g = creation_sequence_to_graph(cs);
    ASSERT_EQ(enumerate_mis(cs), oracle::brute_maximal_independent_sets(g));
    ASSERT_EQ(enumerate_im(cs), oracle::brute_maximum_independent_sets(g));
    ASSERT_EQ(enumerate_is(cs), oracle::brute_independent_sets(g));
  }
}

TEST(ThresholdToKp, Examples) {
  const KpInstance claw = threshold_to_kp(CreationSequence("1001"));
  EXPECT_EQ(sizes_of(claw), ints({4, 2, 1, 7}));
  EXPECT_EQ(claw.capacity, 7);
  EXPECT_EQ(claw.items[0].id, "a1");
  EXPECT_EQ(claw.items[0].profit, 1);
  const KpInstance k4 = threshold_to_kp(CreationSequence("1111"));
  EXPECT_EQ(sizes_of(k4), ints({1, 1, 1, 1}));
  EXPECT_EQ(k4.capacity, 1);
  EXPECT_THROW(threshold_to_kp(CreationSequence("11"), ints({1})), ShapeError);
}

TEST(ThresholdToKp, ItemsFollowVertexLabels) {
  const CreationSequence cs("1001", {2, 3, 4, 1});
  const KpInstance kp = threshold_to_kp(cs, ints({9, 8, 7, 6}));
  EXPECT_EQ(sizes_of(kp), ints({7, 4, 2, 1}));
  EXPECT_EQ(kp.items[0].profit, 9);
  EXPECT_EQ(conflict_graph_kp(kp), creation_sequence_to_graph(cs));
}

TEST(ThresholdToKp, RoundTripAllSmallSequences) {
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& cs : gen::all_sequences(n)) {
      const KpInstance kp = threshold_to_kp(cs);
      ASSERT_EQ(conflict_graph_kp(kp), creation_sequence_to_graph(cs)) << cs.bit_string();
      ASSERT_TRUE(check_equivalence_kp(kp).equivalent) << cs.bit_string();
    }
}
