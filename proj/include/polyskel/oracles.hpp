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

// Closed-form adjacency tests for the polytope families with a known
// combinatorial description of their edges. They serve as independent
// checks of the LP engine.

#ifndef POLYSKEL_ORACLES_HPP_
#define POLYSKEL_ORACLES_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "polyskel/graphs.hpp"

namespace polyskel {

// Spanning tree polytope: adjacent iff the trees differ by a single edge
// exchange. Throws DomainError for non-trees, differing n or T1 == T2.
bool spanning_tree_edge(const UGraph& t1, const UGraph& t2);

// Birkhoff polytope, permutations in one-line notation (i -> perm[i]):
// adjacent iff sigma^-1 omega is one cycle on its non-fixed points.
bool birkhoff_edge(const std::vector<int>& sigma, const std::vector<int>& omega);
// For non-adjacent permutations, sigma pi1 and sigma pi2 where pi1 is the
// first cycle of sigma^-1 omega and pi2 the rest; P_sigma + P_omega equals
// the sum of their matrices. nullopt for adjacent pairs.
std::optional<std::pair<std::vector<int>, std::vector<int>>> birkhoff_witnesses(
    const std::vector<int>& sigma, const std::vector<int>& omega);

// k-assignment polytope: adjacent iff the symmetric difference is a single
// alternating cycle or path, or two alternating paths of odd length (one
// with an extra edge from each matching).
bool k_assignment_edge(const Matching& m1, const Matching& m2);

// Stable set polytope: adjacent iff A xor B induces a connected subgraph.
bool stab_edge(const UGraph& g, NodeMask a, NodeMask b);
// For non-adjacent stable sets, swap one component C of g[A xor B]:
// A' = (A \ C) | (B & C), B' = (B \ C) | (A & C). nullopt for adjacent pairs.
std::optional<std::pair<NodeMask, NodeMask>> stab_witnesses(const UGraph& g, NodeMask a,
                                                            NodeMask b);

// Neighbors of a v-structure-free tree DAG g in CIMTree_n: an edge exchange
// without v-structures, v-structures at a single node i on the same tree, or
// new edges all pointing into that node i, minus the triangle exception
// (i has exactly two parents j, l in h and j - l is an edge of g).
// Experimental; the test suite checks it against the exact LP.
// Throws DomainError when g has v-structures, a skeleton is not a spanning
// tree, or the two DAGs have the same characteristic imset.
bool cimtree_neighbor_test(const Dag& g, const Dag& h);

}  // namespace polyskel

#endif  // POLYSKEL_ORACLES_HPP_
