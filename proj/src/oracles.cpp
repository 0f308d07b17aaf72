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

#include "polyskel/oracles.hpp"

#include <bit>
#include <string>

#include "polyskel/error.hpp"

namespace polyskel {
namespace {

std::vector<int> checked_inverse(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size(), -1);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const int j = perm[i];
    if (j < 0 || static_cast<std::size_t>(j) >= perm.size() || inv[j] != -1) {
      throw DomainError("not a permutation of 0.." + std::to_string(perm.size() - 1));
    }
    inv[j] = static_cast<int>(i);
  }
  return inv;
}

// Cycles of length >= 2 of sigma^-1 omega.
std::vector<std::vector<int>> quotient_cycles(const std::vector<int>& sigma,
                                              const std::vector<int>& omega) {
  if (sigma.size() != omega.size()) throw DomainError("permutations of different size");
  const std::vector<int> inv = checked_inverse(sigma);
  checked_inverse(omega);
  if (sigma == omega) throw DomainError("the two permutations coincide");
  const std::size_t n = sigma.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> cycles;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int i = static_cast<int>(start); !seen[i]; i = inv[omega[i]]) {
      seen[i] = true;
      cycle.push_back(i);
    }
    if (cycle.size() >= 2) cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

bool spanning_tree_edge(const UGraph& t1, const UGraph& t2) {
  if (t1.n() != t2.n()) throw DomainError("trees on different node sets");
  if (!t1.is_tree() || !t2.is_tree()) throw DomainError("spanning_tree_edge needs two trees");
  if (t1 == t2) throw DomainError("the two trees coincide");
  std::size_t diff = 0;
  for (int v = 0; v < t1.n(); ++v) diff += std::popcount(t1.neighbors(v) ^ t2.neighbors(v));
  return diff / 2 == 2;
}

bool birkhoff_edge(const std::vector<int>& sigma, const std::vector<int>& omega) {
  return quotient_cycles(sigma, omega).size() == 1;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> birkhoff_witnesses(
    const std::vector<int>& sigma, const std::vector<int>& omega) {
  const auto cycles = quotient_cycles(sigma, omega);
  if (cycles.size() == 1) return std::nullopt;
  // sigma pi agrees with omega on the rows moved by pi and with sigma elsewhere.
  std::vector<int> first = sigma;
  std::vector<int> rest = omega;
  for (int i : cycles.front()) {
    first[i] = omega[i];
    rest[i] = sigma[i];
  }
  return std::make_pair(std::move(first), std::move(rest));
}

bool k_assignment_edge(const Matching& m1, const Matching& m2) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols() || m1.size() != m2.size()) {
    throw DomainError("matchings of different (m, n, k)");
  }
  if (m1 == m2) throw DomainError("the two matchings coincide");
  // Symmetric difference on rows 0..m-1 and columns m..m+n-1; every node
  // has degree at most 2, so components are paths or cycles.
  const int m = m1.rows();
  const int nodes = m + m1.cols();
  UGraph diff(nodes);
  auto toggle = [&](const Matching& mm) {
    for (const auto& [r, c] : mm.pairs()) {
      if (diff.has_edge(r, m + c)) diff.remove_edge(r, m + c);
      else diff.add_edge(r, m + c);
    }
  };
  toggle(m1);
  toggle(m2);
  std::vector<bool> seen(nodes, false);
  int components = 0;
  int odd_paths = 0;
  bool cycle = false;
  for (int s = 0; s < nodes; ++s) {
    if (seen[s] || diff.neighbors(s) == 0) continue;
    ++components;
    std::size_t vertices = 0, degree_sum = 0;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++vertices;
      NodeMask nb = diff.neighbors(v);
      degree_sum += std::popcount(nb);
      for (; nb; nb &= nb - 1) {
        const int w = std::countr_zero(nb);
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    const std::size_t edges = degree_sum / 2;
    if (edges == vertices) cycle = true;
    else if (edges % 2 == 1) ++odd_paths;
  }
  if (components == 1) return true;
  return components == 2 && !cycle && odd_paths == 2;
}

namespace {

void check_stable_pair(const UGraph& g, NodeMask a, NodeMask b) {
  const NodeMask all = g.all_nodes();
  if ((a & ~all) || (b & ~all)) throw DomainError("node set outside the graph");
  if (!g.is_independent(a) || !g.is_independent(b)) {
    throw DomainError("stab_edge needs two stable sets");
  }
  if (a == b) throw DomainError("the two stable sets coincide");
}

// The component of g[nodes] containing the lowest node.
NodeMask first_component(const UGraph& g, NodeMask nodes) {
  NodeMask comp = nodes & (~nodes + 1);
  NodeMask frontier = comp;
  while (frontier) {
    NodeMask next = 0;
    for (NodeMask f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    next &= nodes & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

}  // namespace

bool stab_edge(const UGraph& g, NodeMask a, NodeMask b) {
  check_stable_pair(g, a, b);
  const NodeMask diff = a ^ b;
  return first_component(g, diff) == diff;
}

std::optional<std::pair<NodeMask, NodeMask>> stab_witnesses(const UGraph& g, NodeMask a,
                                                            NodeMask b) {
  check_stable_pair(g, a, b);
  const NodeMask diff = a ^ b;
  const NodeMask comp = first_component(g, diff);
  if (comp == diff) return std::nullopt;
  return std::make_pair((a & ~comp) | (b & comp), (b & ~comp) | (a & comp));
}

bool cimtree_neighbor_test(const Dag& g, const Dag& h) {
  if (g.n() != h.n()) throw DomainError("DAGs on different node sets");
  const UGraph gs = g.skeleton();
  const UGraph hs = h.skeleton();
  if (!gs.is_tree() || !hs.is_tree()) throw DomainError("skeletons must be spanning trees");
  if (g.has_v_structure()) throw DomainError("g must be free of v-structures");
  const NodeMask colliders = h.colliders();
  if (gs == hs && colliders == 0) throw DomainError("g and h have the same imset");

  const int n = g.n();
  std::vector<Edge> added;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (hs.has_edge(u, v) && !gs.has_edge(u, v)) added.emplace_back(u, v);
    }
  }
  if (colliders == 0) return added.size() == 1;
  if (std::popcount(colliders) != 1) return false;
  const int i = std::countr_zero(colliders);
  const NodeMask pa = h.parents(i);
  if (added.empty()) return true;
  for (const auto& [u, v] : added) {
    const int other = u == i ? v : (v == i ? u : -1);
    if (other < 0 || !((pa >> other) & 1)) return false;
  }
  if (std::popcount(pa) == 2) {
    // Triangle exception, j -> i <- l with j - l in g. The triple {i, j, l}
    // can then be a v-structure centered at j or l instead, which gives
    // rhombus witnesses. The stated exception adds one edge (j -> i, with
    // i - l - j in g); adding both parent edges behaves the same way.
    const int j = std::countr_zero(pa);
    const int l = std::countr_zero(pa & (pa - 1));
    if (gs.has_edge(j, l)) return false;
  }
  return true;
}

}  // namespace polyskel
