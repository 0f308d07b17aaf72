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

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "polyskel/error.hpp"
#include "polyskel/families.hpp"
#include "polyskel/oracles.hpp"
#include "polyskel/pipeline.hpp"
#include "test_util.hpp"

namespace polyskel {
namespace {

using ::polyskel::testing::all_graphs;
using ::polyskel::testing::is_edge_exact;

// Every verdict in an exact-method ledger carries a checked certificate.
PairLedger lp_ledger(const VertexSet& v) {
  SkeletonConfig c;
  c.method = Method::kExact;
  return compute_skeleton(v, c);
}

TEST(SpanningTreeEdgeTest, Examples) {
  const UGraph path(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_TRUE(spanning_tree_edge(path, UGraph(4, {{0, 1}, {1, 2}, {1, 3}})));
  EXPECT_FALSE(spanning_tree_edge(path, UGraph(4, {{0, 2}, {1, 3}, {0, 3}})));
  EXPECT_THROW(spanning_tree_edge(path, path), DomainError);
  EXPECT_THROW(spanning_tree_edge(path, UGraph(4, {{0, 1}, {1, 2}, {0, 2}})), DomainError);
}

TEST(SpanningTreeEdgeTest, MatchesLpAndIsSymmetric) {
  for (int n = 3; n <= 6; ++n) {
    const VertexSet v = spanning_tree_vertices(n);
    const PairLedger lp = lp_ledger(v);
    for (const PairRecord& r : lp.records) {
      const UGraph t1 = graph_from_edge_vector(v.vertex(r.a), n);
      const UGraph t2 = graph_from_edge_vector(v.vertex(r.b), n);
      ASSERT_EQ(spanning_tree_edge(t1, t2), r.status == PairStatus::kEdge) << n;
      ASSERT_EQ(spanning_tree_edge(t2, t1), spanning_tree_edge(t1, t2));
    }
  }
}

TEST(BirkhoffEdgeTest, Examples) {
  const std::vector<int> id = {0, 1, 2, 3};
  EXPECT_TRUE(birkhoff_edge(id, {1, 0, 2, 3}));
  EXPECT_FALSE(birkhoff_edge(id, {1, 0, 3, 2}));
  EXPECT_TRUE(birkhoff_edge(id, {1, 2, 0, 3}));
  EXPECT_THROW(birkhoff_edge(id, {1, 0, 2}), DomainError);

  const auto w = birkhoff_witnesses(id, {1, 0, 3, 2});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->first, (std::vector<int>{1, 0, 2, 3}));
  EXPECT_EQ(w->second, (std::vector<int>{0, 1, 3, 2}));
  EXPECT_FALSE(birkhoff_witnesses(id, {1, 0, 2, 3}).has_value());
}

TEST(BirkhoffEdgeTest, MatchesLpWithWitnessSums) {
  for (int n = 2; n <= 5; ++n) {
    const VertexSet v = birkhoff_vertices(n);
    const PairLedger lp = lp_ledger(v);
    for (const PairRecord& r : lp.records) {
      const auto s = permutation_from_matrix(v.vertex(r.a), n);
      const auto o = permutation_from_matrix(v.vertex(r.b), n);
      const bool edge = birkhoff_edge(s, o);
      ASSERT_EQ(edge, r.status == PairStatus::kEdge) << n;
      const auto w = birkhoff_witnesses(s, o);
      ASSERT_EQ(w.has_value(), !edge);
      if (w) {
        EXPECT_EQ(sum_key(permutation_matrix(w->first), permutation_matrix(w->second)),
                  sum_key(v, r.a, r.b));
      }
    }
  }
}

TEST(BirkhoffEdgeTest, InvariantUnderLeftMultiplication) {
  std::mt19937_64 rng(11);
  std::vector<int> s(7), o(7), t(7);
  std::iota(s.begin(), s.end(), 0);
  o = t = s;
  auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[q[i]];
    return out;
  };
  for (int trial = 0; trial < 500; ++trial) {
    std::shuffle(s.begin(), s.end(), rng);
    std::shuffle(o.begin(), o.end(), rng);
    std::shuffle(t.begin(), t.end(), rng);
    if (s == o) continue;
    EXPECT_EQ(birkhoff_edge(compose(t, s), compose(t, o)), birkhoff_edge(s, o));
  }
}

TEST(KAssignmentEdgeTest, Examples) {
  EXPECT_TRUE(k_assignment_edge(Matching(2, 2, {{0, 0}}), Matching(2, 2, {{1, 1}})));
  // Both perfect matchings of K_{2,2}: the polytope is a segment, so the
  // 4-cycle pair is an edge here.
  EXPECT_TRUE(
      k_assignment_edge(Matching(2, 2, {{0, 0}, {1, 1}}), Matching(2, 2, {{0, 1}, {1, 0}})));
  EXPECT_TRUE(is_edge_exact(k_assignment_vertices(2, 2, 2), 0, 1));
  EXPECT_FALSE(k_assignment_edge(Matching(4, 4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}}),
                                 Matching(4, 4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}})));
  EXPECT_THROW(k_assignment_edge(Matching(2, 2, {{0, 0}}), Matching(2, 2, {{0, 0}})),
               DomainError);
  EXPECT_THROW(Matching(2, 2, {{0, 0}, {0, 1}}), DomainError);
}

TEST(KAssignmentEdgeTest, MatchesLp) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = m; n <= 4; ++n) {
      for (int k = 1; k <= m; ++k) {
        const VertexSet v = k_assignment_vertices(m, n, k);
        if (v.size() < 2) continue;
        const PairLedger lp = lp_ledger(v);
        for (const PairRecord& r : lp.records) {
          const Matching a = matching_from_vector(v.vertex(r.a), m, n);
          const Matching b = matching_from_vector(v.vertex(r.b), m, n);
          ASSERT_EQ(k_assignment_edge(a, b), r.status == PairStatus::kEdge)
              << m << ' ' << n << ' ' << k;
        }
      }
    }
  }
}

TEST(StabEdgeTest, Examples) {
  EXPECT_TRUE(stab_edge(UGraph(2, {{0, 1}}), 0b01, 0b10));
  const UGraph path(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(stab_edge(path, 0b001, 0b100));
  const auto w = stab_witnesses(path, 0b001, 0b100);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(std::minmax(w->first, w->second), std::minmax(NodeMask{0}, NodeMask{0b101}));
  EXPECT_FALSE(stab_edge(UGraph(2), 0b01, 0b10));
  EXPECT_THROW(stab_edge(path, 0b011, 0b100), DomainError);
  EXPECT_THROW(stab_edge(path, 0b001, 0b001), DomainError);
}

TEST(StabEdgeTest, MatchesLpOnAllGraphsUpToFiveNodes) {
  for (int n = 2; n <= 5; ++n) {
    for (const UGraph& g : all_graphs(n)) {
      const VertexSet v = stab_vertices(g);
      const PairLedger lp = lp_ledger(v);
      for (const PairRecord& r : lp.records) {
        const NodeMask a = nodes_from_incidence(v.vertex(r.a));
        const NodeMask b = nodes_from_incidence(v.vertex(r.b));
        const bool edge = stab_edge(g, a, b);
        ASSERT_EQ(edge, r.status == PairStatus::kEdge);
        const auto w = stab_witnesses(g, a, b);
        ASSERT_EQ(w.has_value(), !edge);
        if (!w) continue;
        EXPECT_TRUE(g.is_independent(w->first));
        EXPECT_TRUE(g.is_independent(w->second));
        EXPECT_EQ(sum_key(incidence_vector(w->first, n), incidence_vector(w->second, n)),
                  sum_key(v, r.a, r.b));
      }
    }
  }
}

// Representative DAGs for every vertex of CIMTree_n, and one
// v-structure-free DAG per labeled tree.
struct CimTreeCase {
  VertexSet vertices;
  std::map<std::size_t, Dag> representative;
  std::vector<Dag> free_dags;
};

CimTreeCase cimtree_case(int n) {
  CimTreeCase c{enum_cimtree_vertices(n), {}, {}};
  for (const UGraph& t : labeled_trees(n)) {
    const auto edges = t.edges();
    for (unsigned o = 0; o < (1u << edges.size()); ++o) {
      Dag d(n);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [u, w] = edges[e];
        if ((o >> e) & 1) {
          d.add_arc(w, u);
        } else {
          d.add_arc(u, w);
        }
      }
      const auto idx = c.vertices.find(char_imset(d));
      EXPECT_TRUE(idx.has_value());
      c.representative.emplace(*idx, d);
      if (o == 0) {
        // Orienting away from node 0 never creates a collider.
        Dag away(n);
        std::vector<int> queue = {0};
        NodeMask seen = 1;
        for (std::size_t q = 0; q < queue.size(); ++q) {
          for (int w = 0; w < n; ++w) {
            if (t.has_edge(queue[q], w) && !((seen >> w) & 1)) {
              seen |= NodeMask{1} << w;
              away.add_arc(queue[q], w);
              queue.push_back(w);
            }
          }
        }
        c.free_dags.push_back(away);
      }
    }
  }
  return c;
}

TEST(CimTreeNeighborTest, Examples) {
  // A new v-structure on the same skeleton.
  EXPECT_TRUE(cimtree_neighbor_test(Dag(3, {{0, 1}, {1, 2}}), Dag(3, {{0, 1}, {2, 1}})));
  // One tree-edge swap between v-structure-free DAGs.
  EXPECT_TRUE(cimtree_neighbor_test(Dag(4, {{0, 1}, {1, 2}, {2, 3}}),
                                    Dag(4, {{0, 1}, {1, 2}, {1, 3}})));
  // Triangle exception: g has j - l, h drops it and adds j -> i, keeping
  // l -> i, so i gets the two parents j, l adjacent in g.
  const Dag tri_g(4, {{1, 0}, {1, 2}, {2, 3}});
  const Dag tri_h(4, {{1, 0}, {2, 0}, {2, 3}});
  EXPECT_FALSE(cimtree_neighbor_test(tri_g, tri_h));
  // Colliders at two different nodes.
  EXPECT_FALSE(cimtree_neighbor_test(Dag(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}),
                                     Dag(5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}})));
  EXPECT_THROW(cimtree_neighbor_test(Dag(3, {{0, 1}, {2, 1}}), Dag(3, {{0, 1}, {1, 2}})),
               DomainError);
  EXPECT_THROW(cimtree_neighbor_test(Dag(3, {{0, 1}, {1, 2}}), Dag(3, {{2, 1}, {1, 0}})),
               DomainError);
}

TEST(CimTreeNeighborTest, MatchesLpUpToFiveNodes) {
  for (int n = 3; n <= 5; ++n) {
    const CimTreeCase c = cimtree_case(n);
    ASSERT_EQ(c.representative.size(), c.vertices.size());
    const PairLedger lp = lp_ledger(c.vertices);
    int checked = 0;
    for (const Dag& g : c.free_dags) {
      const std::size_t gi = *c.vertices.find(char_imset(g));
      for (const auto& [hi, h] : c.representative) {
        if (hi == gi) continue;
        const bool edge = lp.at(std::min(gi, hi), std::max(gi, hi)).status == PairStatus::kEdge;
        ASSERT_EQ(cimtree_neighbor_test(g, h), edge) << n << ' ' << gi << ' ' << hi;
        ++checked;
      }
    }
    EXPECT_GT(checked, 0);
  }
}

}  // namespace
}  // namespace polyskel
