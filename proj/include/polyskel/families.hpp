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

// Vertex-set generators for the polytope families, plus the maps between
// combinatorial objects (DAGs, graphs, trees, permutations, matchings,
// stable sets) and their 0/1 vectors. Every generator returns vertices in
// lexicographic order.

#ifndef POLYSKEL_FAMILIES_HPP_
#define POLYSKEL_FAMILIES_HPP_

#include <vector>

#include "polyskel/core.hpp"
#include "polyskel/graphs.hpp"

namespace polyskel {

// Characteristic imset: coordinate S is 1 iff some i in S has
// S \ {i} contained in pa(i). Length 2^n - n - 1, canonical subset order.
IntVertex char_imset(const Dag& g);
// Coordinate S is 1 iff S is a clique of g.
IntVertex chordal_imset(const UGraph& g);
// The graph read off the pair coordinates of an imset-shaped vector.
UGraph imset_pairs_graph(const IntVertex& imset, int n);

// Distinct characteristic imsets of all DAGs on n labeled nodes, 2 <= n <= 5.
VertexSet enum_cim_vertices(int n);
// Same, restricted to DAGs whose skeleton is a spanning tree; 3 <= n <= 6.
VertexSet enum_cimtree_vertices(int n);
// Imsets of all labeled chordal graphs, 2 <= n <= 6.
VertexSet enum_cgp_vertices(int n);

// All labeled spanning trees of K_n via Prufer sequences, n >= 2.
std::vector<UGraph> labeled_trees(int n);
// Edge-incidence vector of length C(n,2), pair order (0,1),(0,2),...
IntVertex edge_vector(const UGraph& g);
UGraph graph_from_edge_vector(const IntVertex& v, int n);
VertexSet spanning_tree_vertices(int n);

// Row-major flattening of the permutation matrix with P[i][perm[i]] = 1.
IntVertex permutation_matrix(const std::vector<int>& perm);
std::vector<int> permutation_from_matrix(const IntVertex& v, int n);
VertexSet birkhoff_vertices(int n);

IntVertex matching_vector(const Matching& m);
Matching matching_from_vector(const IntVertex& v, int m, int n);
VertexSet k_assignment_vertices(int m, int n, int k);

IntVertex incidence_vector(NodeMask nodes, int n);
NodeMask nodes_from_incidence(const IntVertex& v);
VertexSet stab_vertices(const UGraph& g);

VertexSet product_vertices(const VertexSet& first, const VertexSet& second);
VertexSet cross_polytope_vertices(int n);
VertexSet permutohedron_vertices(int n);
VertexSet cube_vertices(int d);

}  // namespace polyskel

#endif  // POLYSKEL_FAMILIES_HPP_
