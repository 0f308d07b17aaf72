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

#include "polyskel/families.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "polyskel/chordal.hpp"
#include "polyskel/error.hpp"
#include "polyskel/subsets.hpp"

namespace polyskel {
namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError(msg);
}

std::string tag(const std::string& family, const std::string& params) {
  return family + " " + params;
}

IntVertex imset_from_parents(const std::vector<NodeMask>& parents, int n) {
  const auto& subsets = canonical_subsets(static_cast<unsigned>(n));
  IntVertex out(subsets.size());
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    const NodeMask s = subsets[k];
    for (NodeMask rest = s; rest; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      if (((s & ~(NodeMask{1} << i)) & ~parents[i]) == 0) {
        out[k] = 1;
        break;
      }
    }
  }
  return out;
}

// Orientation code per pair: 0 absent, 1 i->j, 2 j->i.
template <typename Visit>
void for_each_dag(int n, Visit&& visit) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<int> code(pairs.size(), 0);
  std::vector<NodeMask> parents(n);
  while (true) {
    std::fill(parents.begin(), parents.end(), 0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto [i, j] = pairs[p];
      if (code[p] == 1) parents[j] |= NodeMask{1} << i;
      if (code[p] == 2) parents[i] |= NodeMask{1} << j;
    }
    if (is_acyclic(parents)) visit(parents);
    std::size_t p = 0;
    while (p < code.size() && code[p] == 2) code[p++] = 0;
    if (p == code.size()) break;
    ++code[p];
  }
}

}  // namespace

IntVertex char_imset(const Dag& g) {
  require(g.n() >= 2, "char_imset needs at least 2 nodes");
  std::vector<NodeMask> parents(g.n());
  for (int v = 0; v < g.n(); ++v) parents[v] = g.parents(v);
  return imset_from_parents(parents, g.n());
}

IntVertex chordal_imset(const UGraph& g) {
  require(g.n() >= 2, "chordal_imset needs at least 2 nodes");
  const auto& subsets = canonical_subsets(static_cast<unsigned>(g.n()));
  IntVertex out(subsets.size());
  for (std::size_t k = 0; k < subsets.size(); ++k) out[k] = g.is_clique(subsets[k]) ? 1 : 0;
  return out;
}

UGraph imset_pairs_graph(const IntVertex& imset, int n) {
  require(n >= 2 && imset.dim() == imset_dim(static_cast<unsigned>(n)),
          "imset length does not match n");
  UGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (imset[pair_index(i, j, n)] == 1) g.add_edge(i, j);
    }
  }
  return g;
}

VertexSet enum_cim_vertices(int n) {
  require(n >= 2 && n <= 5, "enum_cim_vertices supports 2 <= n <= 5, got " + std::to_string(n));
  std::vector<IntVertex> out;
  for_each_dag(n, [&](const std::vector<NodeMask>& parents) {
    out.push_back(imset_from_parents(parents, n));
  });
  return VertexSet::sorted_unique(std::move(out), imset_dim(n),
                                  tag("cim", "n=" + std::to_string(n) + " subsets=size-lex"));
}

std::vector<UGraph> labeled_trees(int n) {
  require(n >= 2 && n <= kMaxGraphNodes, "labeled_trees needs 2 <= n <= 64");
  std::vector<UGraph> out;
  if (n == 2) {
    out.emplace_back(2, std::vector<Edge>{{0, 1}});
    return out;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    // Prufer decoding: repeatedly attach the smallest current leaf.
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    UGraph t(n);
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      t.add_edge(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) {
        if (u < 0) u = v;
        else t.add_edge(u, v);
      }
    }
    out.push_back(std::move(t));
    std::size_t p = 0;
    while (p < seq.size() && seq[p] == n - 1) seq[p++] = 0;
    if (p == seq.size()) break;
    ++seq[p];
  }
  return out;
}

VertexSet enum_cimtree_vertices(int n) {
  require(n >= 3 && n <= 6, "enum_cimtree_vertices supports 3 <= n <= 6, got " +
                                std::to_string(n));
  std::vector<IntVertex> out;
  for (const UGraph& tree : labeled_trees(n)) {
    const auto edges = tree.edges();
    for (std::uint32_t orient = 0; orient < (1u << edges.size()); ++orient) {
      std::vector<NodeMask> parents(n, 0);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        if ((orient >> e) & 1) parents[u] |= NodeMask{1} << v;
        else parents[v] |= NodeMask{1} << u;
      }
      out.push_back(imset_from_parents(parents, n));
    }
  }
  return VertexSet::sorted_unique(std::move(out), imset_dim(n),
                                  tag("cimtree", "n=" + std::to_string(n) + " subsets=size-lex"));
}

VertexSet enum_cgp_vertices(int n) {
  require(n >= 2 && n <= 6, "enum_cgp_vertices supports 2 <= n <= 6, got " + std::to_string(n));
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<IntVertex> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs.size()); ++code) {
    UGraph g(n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if ((code >> p) & 1) g.add_edge(pairs[p].first, pairs[p].second);
    }
    if (is_chordal(g)) out.push_back(chordal_imset(g));
  }
  return VertexSet::sorted_unique(std::move(out), imset_dim(n),
                                  tag("cgp", "n=" + std::to_string(n) + " subsets=size-lex"));
}

IntVertex edge_vector(const UGraph& g) {
  const int n = g.n();
  IntVertex out(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (auto [u, v] : g.edges()) out[pair_index(u, v, n)] = 1;
  return out;
}

UGraph graph_from_edge_vector(const IntVertex& v, int n) {
  require(v.dim() == static_cast<std::size_t>(n) * (n - 1) / 2, "edge vector length mismatch");
  UGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (v[pair_index(i, j, n)] != 0) g.add_edge(i, j);
    }
  }
  return g;
}

VertexSet spanning_tree_vertices(int n) {
  require(n >= 2, "spanning_tree_vertices needs n >= 2");
  std::vector<IntVertex> out;
  for (const UGraph& t : labeled_trees(n)) out.push_back(edge_vector(t));
  return VertexSet::sorted_unique(std::move(out), static_cast<std::size_t>(n) * (n - 1) / 2,
                                  tag("spanning-tree", "n=" + std::to_string(n)));
}

IntVertex permutation_matrix(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  IntVertex out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    require(perm[i] >= 0 && perm[i] < n, "permutation entry out of range");
    out[static_cast<std::size_t>(i) * n + perm[i]] = 1;
  }
  return out;
}

std::vector<int> permutation_from_matrix(const IntVertex& v, int n) {
  require(v.dim() == static_cast<std::size_t>(n) * n, "matrix size mismatch");
  std::vector<int> perm(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (v[static_cast<std::size_t>(i) * n + j] == 1) {
        require(perm[i] < 0, "row with more than one 1");
        perm[i] = j;
      }
    }
    require(perm[i] >= 0, "row without a 1");
  }
  return perm;
}

VertexSet birkhoff_vertices(int n) {
  require(n >= 1 && n <= 10, "birkhoff_vertices supports 1 <= n <= 10");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<IntVertex> out;
  do {
    out.push_back(permutation_matrix(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return VertexSet::sorted_unique(std::move(out), static_cast<std::size_t>(n) * n,
                                  tag("birkhoff", "n=" + std::to_string(n)));
}

IntVertex matching_vector(const Matching& m) {
  IntVertex out(static_cast<std::size_t>(m.rows()) * m.cols());
  for (auto [r, c] : m.pairs()) out[static_cast<std::size_t>(r) * m.cols() + c] = 1;
  return out;
}

Matching matching_from_vector(const IntVertex& v, int m, int n) {
  require(v.dim() == static_cast<std::size_t>(m) * n, "matching vector size mismatch");
  std::vector<Edge> pairs;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      if (v[static_cast<std::size_t>(r) * n + c] == 1) pairs.emplace_back(r, c);
    }
  }
  return Matching(m, n, std::move(pairs));
}

VertexSet k_assignment_vertices(int m, int n, int k) {
  require(m >= 1 && n >= 1 && m * n <= 64, "k_assignment_vertices needs m, n >= 1, m*n <= 64");
  require(k >= 1 && k <= std::min(m, n), "k must satisfy 1 <= k <= min(m, n), got " +
                                             std::to_string(k));
  std::vector<IntVertex> out;
  IntVertex cur(static_cast<std::size_t>(m) * n);
  std::vector<char> col_used(n, 0);
  // Each row either stays empty or takes an unused column.
  auto rec = [&](auto&& self, int row, int placed) -> void {
    if (placed == k) {
      out.push_back(cur);
      return;
    }
    if (m - row < k - placed) return;
    self(self, row + 1, placed);
    for (int c = 0; c < n; ++c) {
      if (col_used[c]) continue;
      col_used[c] = 1;
      cur[static_cast<std::size_t>(row) * n + c] = 1;
      self(self, row + 1, placed + 1);
      cur[static_cast<std::size_t>(row) * n + c] = 0;
      col_used[c] = 0;
    }
  };
  rec(rec, 0, 0);
  return VertexSet::sorted_unique(std::move(out), static_cast<std::size_t>(m) * n,
                                  tag("k-assignment", "m=" + std::to_string(m) + " n=" +
                                                          std::to_string(n) + " k=" +
                                                          std::to_string(k)));
}

IntVertex incidence_vector(NodeMask nodes, int n) {
  IntVertex out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = (nodes >> i) & 1;
  return out;
}

NodeMask nodes_from_incidence(const IntVertex& v) {
  NodeMask out = 0;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i] != 0) out |= NodeMask{1} << i;
  }
  return out;
}

VertexSet stab_vertices(const UGraph& g) {
  require(g.n() >= 1 && g.n() <= 24, "stab_vertices supports 1 <= n <= 24");
  std::vector<IntVertex> out;
  for (NodeMask a = 0; a < (NodeMask{1} << g.n()); ++a) {
    if (g.is_independent(a)) out.push_back(incidence_vector(a, g.n()));
  }
  return VertexSet::sorted_unique(std::move(out), static_cast<std::size_t>(g.n()),
                                  tag("stab", "n=" + std::to_string(g.n())));
}

VertexSet product_vertices(const VertexSet& first, const VertexSet& second) {
  const std::size_t d = first.dim() + second.dim();
  std::vector<IntVertex> out;
  out.reserve(first.size() * second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    for (std::size_t j = 0; j < second.size(); ++j) {
      std::vector<Coord> c(first[i].begin(), first[i].end());
      c.insert(c.end(), second[j].begin(), second[j].end());
      out.emplace_back(std::move(c));
    }
  }
  return VertexSet::from_vertices(out, d, "product");
}

VertexSet cross_polytope_vertices(int n) {
  require(n >= 1, "cross_polytope_vertices needs n >= 1");
  std::vector<IntVertex> out;
  for (int i = 0; i < n; ++i) {
    for (Coord s : {1, -1}) {
      IntVertex v(static_cast<std::size_t>(n));
      v[i] = s;
      out.push_back(std::move(v));
    }
  }
  return VertexSet::sorted_unique(std::move(out), static_cast<std::size_t>(n),
                                  tag("cross", "n=" + std::to_string(n)));
}

VertexSet permutohedron_vertices(int n) {
  require(n >= 2 && n <= 10, "permutohedron_vertices supports 2 <= n <= 10");
  std::vector<Coord> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<IntVertex> out;
  do {
    out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return VertexSet::sorted_unique(std::move(out), static_cast<std::size_t>(n),
                                  tag("permutohedron", "n=" + std::to_string(n)));
}

VertexSet cube_vertices(int d) {
  require(d >= 1 && d <= 24, "cube_vertices supports 1 <= d <= 24");
  std::vector<IntVertex> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) {
    // Bit d-1-i is coordinate i so that counting order is lexicographic.
    IntVertex v(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) v[i] = (m >> (d - 1 - i)) & 1;
    out.push_back(std::move(v));
  }
  return VertexSet::sorted_unique(std::move(out), static_cast<std::size_t>(d),
                                  tag("cube", "d=" + std::to_string(d)));
}

}  // namespace polyskel
