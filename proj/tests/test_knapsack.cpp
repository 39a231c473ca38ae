#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "tkit/tkit.hpp"

using namespace tkit;

namespace {

KpInstance kp(std::vector<long long> sizes, long long c, std::vector<long long> profits = {}) {
  KpInstance inst;
  inst.capacity = c;
  for (std::size_t j = 0; j < sizes.size(); ++j)
    inst.items.push_back({default_item_id(j + 1), Rational(profits.empty() ? 1 : profits[j]), Rational(sizes[j])});
  return inst;
}

DkpInstance dkp2(std::vector<long long> s1, long long c1, std::vector<long long> s2, long long c2,
                 std::vector<long long> profits = {}) {
  DkpInstance inst;
  inst.capacities = {Rational(c1), Rational(c2)};
  for (std::size_t j = 0; j < s1.size(); ++j)
    inst.items.push_back(
        {default_item_id(j + 1), Rational(profits.empty() ? 1 : profits[j]), {Rational(s1[j]), Rational(s2[j])}});
  return inst;
}

DkpInstance ex_i2() { return dkp2({12, 10, 11, 8, 9}, 26, {2, 1, 2, 4, 5}, 5); }
DkpInstance ex_i3(std::vector<long long> profits = {}) {
  return dkp2({3, 1, 2, 4, 5}, 5, {5, 5, 5, 1, 1}, 5, std::move(profits));
}
DkpInstance ex_i4() { return dkp2({3, 1, 2, 5, 5, 5}, 5, {5, 5, 5, 3, 1, 2}, 5); }
DkpInstance ex_i4n() { return dkp2({3, 1, 2, 5, 5, 5}, 5, {3, 1, 2, 3, 1, 2}, 5); }

DkpInstance unit_vectors(std::vector<std::vector<Rational>> rows) {
  DkpInstance inst;
  inst.capacities.assign(rows.front().size(), Rational(1));
  for (std::size_t j = 0; j < rows.size(); ++j) inst.items.push_back({default_item_id(j + 1), 1, rows[j]});
  return inst;
}

bool violates_property(const DkpInstance& inst, const VertexSet& w) {
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (!is_feasible(inst, VertexSet{w[a], w[b]})) return false;
  return !is_feasible(inst, w);
}

}  // namespace

TEST(ConflictGraphKp, Examples) {
  EXPECT_EQ(conflict_graph_kp(kp({12, 10, 11, 8, 9}, 26)), Graph(5));
  EXPECT_EQ(conflict_graph_kp(kp({1, 1, 1, 1}, 1)), Graph::complete(4));
  // Strict inequality: 3 + 2 = 5 is not a conflict.
  EXPECT_EQ(conflict_graph_kp(kp({3, 2}, 5)), Graph(2));
}

TEST(ConflictGraphKp, AlwaysThreshold) {
  gen::Rng rng(21);
  for (int t = 0; t < 300; ++t) EXPECT_TRUE(is_threshold(conflict_graph_kp(gen::random_kp(rng, gen::between(rng, 1, 14)))));
}

TEST(CheckEquivalenceKp, Examples) {
  const KpInstance bad = kp({12, 10, 11, 8, 9}, 26);
  const EquivalenceReport r = check_equivalence_kp(bad);
  EXPECT_FALSE(r.equivalent);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(violates_property(as_dkp(bad), *r.witness));
  EXPECT_TRUE(check_equivalence_kp(kp({4, 2, 1, 7}, 7)).equivalent);
  EXPECT_TRUE(check_equivalence_kp(kp({3}, 3)).equivalent);
  const EquivalenceReport big = check_equivalence_kp(kp({4}, 3));
  EXPECT_FALSE(big.equivalent);
  EXPECT_EQ(*big.witness, VertexSet{1});
  EXPECT_TRUE(check_equivalence_kp(KpInstance{{}, 0}).equivalent);
}

TEST(CheckEquivalenceKp, MatchesPropertyOracle) {
  gen::Rng rng(22);
  for (int t = 0; t < 400; ++t) {
    const KpInstance inst = gen::random_kp(rng, gen::between(rng, 1, 12));
    const EquivalenceReport r = check_equivalence_kp(inst);
    ASSERT_EQ(r.equivalent, oracle::brute_check_property_P(inst));
    if (!r.equivalent) {
      EXPECT_TRUE(violates_property(as_dkp(inst), *r.witness));
    }
  }
}

TEST(CheckEquivalenceKp, IndependentSetsOfEquivalentInstancesAreFeasible) {
  gen::Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const KpInstance inst = gen::random_equivalent_kp(rng, gen::between(rng, 1, 10));
    const Graph g = conflict_graph_kp(inst);
    for (const VertexSet& s : oracle::brute_independent_sets(g)) ASSERT_TRUE(is_feasible(inst, s));
  }
}

TEST(SolveKp, Examples) {
  const Solution s = solve_kp_equivalent(kp({4, 2, 1, 7}, 7, {1, 1, 1, 10}));
  EXPECT_EQ(s.chosen, VertexSet{4});
  EXPECT_EQ(s.profit, 10);
  EXPECT_EQ(s.dimension_totals, std::vector<Rational>{Rational(7)});
  const Solution zero = solve_kp_equivalent(kp({4, 2, 1, 7}, 7, {0, 0, 0, 0}));
  EXPECT_EQ(zero.profit, 0);
  EXPECT_TRUE(zero.chosen.empty());
}

TEST(SolveKp, NonEquivalentCarriesWitness) {
  try {
    solve_kp_equivalent(kp({12, 10, 11, 8, 9}, 26));
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_FALSE(e.witness().empty());
  }
}

TEST(SolveKp, MatchesOracle) {
  gen::Rng rng(24);
  for (int t = 0; t < 300; ++t) {
    const KpInstance inst = gen::random_equivalent_kp(rng, gen::between(rng, 1, 12), t % 3 == 0 ? 2 : 20);
    const Solution s = solve_kp_equivalent(inst);
    const Solution o = oracle::brute_solve_kp(inst);
    ASSERT_EQ(s.profit, o.profit);
    EXPECT_EQ(s, o);
    EXPECT_TRUE(is_feasible(inst, s.chosen));
  }
}

TEST(PerDimension, Examples) {
  const auto dims = per_dimension_instances(ex_i3());
  ASSERT_EQ(dims.size(), 2u);
  EXPECT_EQ(dims[0].capacity, 5);
  EXPECT_EQ(dims[0].items[0].size, 3);
  EXPECT_EQ(dims[0].items[4].size, 5);
  EXPECT_EQ(dims[1].items[0].size, 5);
  EXPECT_EQ(dims[1].items[3].size, 1);
  const KpInstance k = kp({4, 2, 1, 7}, 7);
  const auto one = per_dimension_instances(as_dkp(k));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].capacity, k.capacity);
  EXPECT_EQ(one[0].items[3].size, 7);
}

TEST(ConflictGraphDkp, Examples) {
  EXPECT_EQ(conflict_graph_dkp(ex_i3()), Graph::complete(5));
  EXPECT_EQ(conflict_graph_dkp(ex_i4()), Graph::complete(6));
  const KpInstance k = kp({4, 2, 1, 7}, 7);
  EXPECT_EQ(conflict_graph_dkp(as_dkp(k)), conflict_graph_kp(k));
  const ThresholdCover cover = conflict_cover_dkp(ex_i3());
  EXPECT_EQ(cover.k(), 2u);
  EXPECT_EQ(cover.covered(), Graph::complete(5));
}

TEST(CheckEquivalenceDkp, FixedExamples) {
  EXPECT_FALSE(check_equivalence_dkp(ex_i2()).equivalent);
  EXPECT_TRUE(check_equivalence_dkp(ex_i3()).equivalent);
  EXPECT_TRUE(check_equivalence_dkp(ex_i4()).equivalent);
  EXPECT_FALSE(check_equivalence_dkp(ex_i4n()).equivalent);
  EXPECT_FALSE(check_equivalence_kp(per_dimension_instances(ex_i3())[0]).equivalent);
  EXPECT_TRUE(check_equivalence_kp(per_dimension_instances(ex_i3())[1]).equivalent);
  const auto w = check_equivalence_dkp(ex_i2()).witness;
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(violates_property(ex_i2(), *w));
}

TEST(CheckEquivalenceDkp, MatchesPropertyOracle) {
  gen::Rng rng(25);
  for (int t = 0; t < 200; ++t) {
    const DkpInstance inst = gen::random_dkp(rng, gen::between(rng, 1, 9), gen::between(rng, 1, 3));
    ASSERT_EQ(check_equivalence_dkp(inst).equivalent, oracle::brute_check_property_Pd(inst));
  }
}

TEST(CheckEquivalenceDkp, PerDimensionEquivalenceSuffices) {
  gen::Rng rng(26);
  for (int t = 0; t < 100; ++t)
    EXPECT_TRUE(check_equivalence_dkp(gen::random_equivalent_dkp(rng, gen::between(rng, 1, 10), gen::between(rng, 1, 3)))
                    .equivalent);
}

TEST(SolveDkp, Examples) {
  const Solution s = solve_dkp_equivalent(ex_i3({5, 4, 3, 2, 1}));
  EXPECT_EQ(s.chosen, VertexSet{1});
  EXPECT_EQ(s.profit, 5);
  const KpInstance k = kp({4, 2, 1, 7}, 7, {1, 1, 1, 10});
  EXPECT_EQ(solve_dkp_equivalent(as_dkp(k)), solve_kp_equivalent(k));
  EXPECT_THROW(solve_dkp_equivalent(ex_i2()), PreconditionError);
}

TEST(SolveDkp, MatchesOracle) {
  gen::Rng rng(27);
  for (int t = 0; t < 200; ++t) {
    const DkpInstance inst = gen::random_equivalent_dkp(rng, gen::between(rng, 1, 10), gen::between(rng, 1, 3));
    const Solution s = solve_dkp_equivalent(inst);
    ASSERT_EQ(s, oracle::brute_solve_dkp(inst));
  }
}

TEST(BpBound, Examples) {
  const Rational six(3, 5);
  EXPECT_EQ(bp_lower_bound(BpInstance{{six, six, six, six}}), 4u);
  EXPECT_EQ(bp_lower_bound(BpInstance{{six}}), 1u);
  EXPECT_THROW(bp_lower_bound(BpInstance{{Rational(2, 5), Rational(2, 5), Rational(2, 5)}}), PreconditionError);
}

TEST(BpBound, BelowOracle) {
  gen::Rng rng(28);
  int checked = 0;
  while (checked < 150) {
    const BpInstance bp = gen::random_bp(rng, gen::between(rng, 1, 9));
    if (!check_equivalence_kp(as_kp(bp)).equivalent) continue;
    ++checked;
    EXPECT_LE(bp_lower_bound(bp), oracle::brute_bin_packing_opt(bp));
  }
}

TEST(DvpBound, Examples) {
  const Rational a(6, 10), b(1, 10);
  const DkpInstance inst = unit_vectors({{a, b}, {a, b}, {b, a}, {b, a}});
  EXPECT_EQ(dvp_lower_bound(inst), 2u);
  EXPECT_EQ(oracle::brute_vector_packing_opt(inst), 2u);
  const Rational six(3, 5);
  EXPECT_EQ(dvp_lower_bound(unit_vectors({{six}, {six}, {six}})), bp_lower_bound(BpInstance{{six, six, six}}));
}

TEST(DvpBound, Preconditions) {
  const Rational f(2, 5);
  try {
    dvp_lower_bound(unit_vectors({{Rational(1, 10), f}, {Rational(1, 10), f}, {Rational(1, 10), f}}));
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("dimension 2"), std::string::npos);
  }
  DkpInstance cap = unit_vectors({{Rational(1, 2)}});
  cap.capacities = {Rational(2)};
  EXPECT_THROW(dvp_lower_bound(cap), PreconditionError);
  EXPECT_THROW(dbp_lower_bound(cap), PreconditionError);
}

TEST(DvpBound, NonThresholdUnionUsesCliqueSearch) {
  // Union of per-dimension conflict graphs is 2K2 here.
  const Rational h(6, 10), l(1, 10);
  const DkpInstance inst = unit_vectors({{h, l}, {h, l}, {l, h}, {l, h}});
  EXPECT_FALSE(is_threshold(conflict_graph_dkp(inst)));
  EXPECT_EQ(dvp_lower_bound(inst), oracle::brute_omega(conflict_graph_dkp(inst)));
}

TEST(DbpBound, Examples) {
  const Rational six(6, 10);
  EXPECT_EQ(dbp_lower_bound(unit_vectors({{six, six}, {six, six}, {six, six}})), 3u);
  EXPECT_EQ(dbp_lower_bound(unit_vectors({{six}, {six}, {six}, {six}})), bp_lower_bound(BpInstance{{six, six, six, six}}));
}

TEST(PackingBounds, BelowOracle) {
  gen::Rng rng(29);
  int vector_checked = 0, geometric_checked = 0;
  for (int t = 0; t < 3000 && (vector_checked < 80 || geometric_checked < 40); ++t) {
    const DkpInstance inst = gen::random_unit_vectors(rng, gen::between(rng, 1, 7), gen::between(rng, 1, 2));
    std::size_t dvp = 0, dbp = 0;
    try {
      dvp = dvp_lower_bound(inst);
      dbp = dbp_lower_bound(inst);
    } catch (const PreconditionError&) {
      continue;
    }
    EXPECT_LE(dbp, dvp);
    EXPECT_LE(dvp, oracle::brute_vector_packing_opt(inst));
    ++vector_checked;
    try {
      EXPECT_LE(dbp, oracle::brute_geometric_packing_opt(inst));
      ++geometric_checked;
    } catch (const CapacityError&) {
    }
  }
  EXPECT_GE(vector_checked, 80);
  EXPECT_GE(geometric_checked, 40);
}
