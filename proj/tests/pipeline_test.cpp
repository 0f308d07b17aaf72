// Copyright 2026 The polyskel Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"
#include "polyskel/error.hpp"
#include "polyskel/families.hpp"
#include "polyskel/oracles.hpp"
#include "polyskel/pipeline.hpp"
#include "polyskel/rhombus.hpp"
#include "test_util.hpp"

namespace polyskel {
namespace {

using ::polyskel::testing::is_edge_exact;
using ::polyskel::testing::make_set;

SkeletonConfig config_with(Method method, unsigned threads = 1) {
  SkeletonConfig c;
  c.method = method;
  c.threads = threads;
  return c;
}

std::string ledger_csv(const PairLedger& ledger) {
  std::ostringstream out;
  write_ledger_csv(out, ledger.records);
  return out.str();
}

TEST(ComputeSkeletonTest, UnitSquare) {
  const VertexSet sq = make_set({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const PairLedger ledger = compute_skeleton(sq, config_with(Method::kPipeline));
  using P = std::pair<std::uint32_t, std::uint32_t>;
  EXPECT_EQ(ledger.edges(), (std::vector<P>{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(ledger.count(PairStatus::kNonEdge), 2);
  EXPECT_EQ(ledger.count(PairStatus::kUnknown), 0);
}

TEST(ComputeSkeletonTest, BirkhoffThreeMatchesCycleRule) {
  const VertexSet v = birkhoff_vertices(3);
  const PairLedger ledger = compute_skeleton(v, config_with(Method::kPipeline));
  ASSERT_EQ(ledger.size(), 15);
  for (const PairRecord& r : ledger.records) {
    const bool oracle = birkhoff_edge(permutation_from_matrix(v.vertex(r.a), 3),
                                      permutation_from_matrix(v.vertex(r.b), 3));
    EXPECT_EQ(r.status == PairStatus::kEdge, oracle);
  }
}

TEST(ComputeSkeletonTest, CgpFourNonEdgesAllHaveWitnesses) {
  const VertexSet v = enum_cgp_vertices(4);
  const PairLedger ledger = compute_skeleton(v, config_with(Method::kPipeline, 2));
  for (const PairRecord& r : ledger.records) {
    ASSERT_NE(r.status, PairStatus::kUnknown);
    if (r.status == PairStatus::kNonEdge) EXPECT_TRUE(r.has_witness());
  }
  EXPECT_TRUE(fulfillment_from_ledger(ledger).fulfills);
}

std::vector<std::pair<std::string, VertexSet>> small_instances() {
  std::vector<std::pair<std::string, VertexSet>> out = {
      {"spanning-tree 4", spanning_tree_vertices(4)},
      {"spanning-tree 5", spanning_tree_vertices(5)},
      {"birkhoff 4", birkhoff_vertices(4)},
      {"birkhoff 5", birkhoff_vertices(5)},
      {"cgp 4", enum_cgp_vertices(4)},
      {"cim 3", enum_cim_vertices(3)},
      {"cim 4", enum_cim_vertices(4)},
      {"cimtree 4", enum_cimtree_vertices(4)},
      {"cube 4", cube_vertices(4)},
      {"cube 6", cube_vertices(6)},
      {"cross 4", cross_polytope_vertices(4)},
      {"permutohedron 4", permutohedron_vertices(4)},
      {"permutohedron 5", permutohedron_vertices(5)},
      {"k-assignment 3 3 2", k_assignment_vertices(3, 3, 2)},
      {"k-assignment 4 4 3", k_assignment_vertices(4, 4, 3)},
      {"stab C5", stab_vertices(UGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}))},
  };
  return out;
}

TEST(ComputeSkeletonTest, AgreesWithExactOracleOnSmallFamilies) {
  for (const auto& [name, v] : small_instances()) {
    ASSERT_LE(v.size(), 200u) << name;
    const PairLedger pipeline = compute_skeleton(v, config_with(Method::kPipeline, 4));
    const PairLedger exact = compute_skeleton(v, config_with(Method::kExact, 4));
    for (std::size_t i = 0; i < pipeline.size(); ++i) {
      const PairRecord& r = pipeline.records[i];
      const bool edge = is_edge_exact(v, r.a, r.b);
      EXPECT_EQ(r.status == PairStatus::kEdge, edge) << name << ' ' << r.a << ' ' << r.b;
      EXPECT_EQ(exact.records[i].status, r.status) << name;
    }
  }
}

TEST(ComputeSkeletonTest, IndependentOfThreadCount) {
  const VertexSet v = enum_cim_vertices(4);
  const std::string one = ledger_csv(compute_skeleton(v, config_with(Method::kPipeline, 1)));
  for (unsigned threads : {2u, 3u, 8u})
    EXPECT_EQ(ledger_csv(compute_skeleton(v, config_with(Method::kPipeline, threads))), one);
}

TEST(ComputeSkeletonTest, NumericMethodLeavesHardPairsUnknown) {
  const VertexSet hexagon = permutohedron_vertices(3);
  SkeletonStats stats;
  const PairLedger ledger = compute_skeleton(hexagon, config_with(Method::kNumeric), &stats);
  EXPECT_EQ(ledger.count(PairStatus::kEdge), 6);
  EXPECT_EQ(ledger.count(PairStatus::kUnknown), 6);
  EXPECT_EQ(stats.unresolved, 6);
}

TEST(ComputeSkeletonTest, BudgetIsEnforced) {
  SkeletonConfig c = config_with(Method::kPipeline);
  c.memory_budget = 5;
  EXPECT_THROW(compute_skeleton(cube_vertices(2), c), BudgetExceeded);
  c.memory_budget = 6;
  EXPECT_NO_THROW(compute_skeleton(cube_vertices(2), c));
  EXPECT_THROW(compute_skeleton(make_set({{1}}), c), DomainError);
}

TEST(ComputeSkeletonTest, BudgetFromEnvironment) {
  ::setenv("POLYSKEL_MEM_BUDGET", "1234", 1);
  EXPECT_EQ(memory_budget_from_env(), 1234u);
  ::setenv("POLYSKEL_MEM_BUDGET", "junk", 1);
  EXPECT_EQ(memory_budget_from_env(77), 77u);
  ::unsetenv("POLYSKEL_MEM_BUDGET");
  EXPECT_EQ(memory_budget_from_env(), kDefaultMemoryBudget);
}

TEST(ShardedSkeletonTest, SameLedgerAsInMemory) {
  const auto dir = std::filesystem::temp_directory_path() / "polyskel-shard-test";
  for (const VertexSet& v : {enum_cgp_vertices(4), permutohedron_vertices(4)}) {
    const PairLedger reference = compute_skeleton(v, config_with(Method::kPipeline));
    const std::string expected = ledger_csv(reference);
    for (std::size_t shards : {1u, 3u, 7u}) {
      std::ostringstream csv;
      const ShardedResult res =
          compute_skeleton_sharded(v, config_with(Method::kPipeline, 2), shards, dir, &csv);
      EXPECT_EQ(csv.str(), expected) << shards << " shards";
      EXPECT_EQ(res.edges, reference.edges());
      EXPECT_EQ(res.stats.scan.pairs, reference.size());
    }
  }
  std::filesystem::remove_all(dir);
}

TEST(ShardedSkeletonTest, PerShardBudget) {
  SkeletonConfig c = config_with(Method::kPipeline);
  c.memory_budget = 100;
  const auto dir = std::filesystem::temp_directory_path() / "polyskel-shard-budget";
  // 61 vertices give 1830 pairs; 40 shards keep each one well under 100.
  EXPECT_NO_THROW(compute_skeleton_sharded(enum_cgp_vertices(4), c, 40, dir));
  EXPECT_THROW(compute_skeleton_sharded(enum_cgp_vertices(4), c, 2, dir), BudgetExceeded);
  std::filesystem::remove_all(dir);
}

TEST(PairSeedTest, DependsOnAllInputs) {
  EXPECT_NE(pair_seed(1, 0, 1), pair_seed(2, 0, 1));
  EXPECT_NE(pair_seed(1, 0, 1), pair_seed(1, 1, 0));
  EXPECT_EQ(pair_seed(5, 3, 9), pair_seed(5, 3, 9));
}

TEST(MethodTest, ParseRoundTrip) {
  for (Method m : {Method::kPipeline, Method::kExact, Method::kNumeric})
    EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_THROW(parse_method("simplex"), DomainError);
}

}  // namespace
}  // namespace polyskel
