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

#include "polyskel/chordal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "polyskel/error.hpp"
#include "polyskel/families.hpp"
#include "polyskel/subsets.hpp"

namespace polyskel {

bool is_chordal(const UGraph& g) {
  const int n = g.n();
  std::vector<int> weight(n, 0);
  std::vector<int> position(n, -1);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (position[v] < 0 && (best < 0 || weight[v] > weight[best])) best = v;
    }
    position[best] = step;
    order.push_back(best);
    for (NodeMask nb = g.neighbors(best); nb; nb &= nb - 1) ++weight[std::countr_zero(nb)];
  }
  // Reverse MCS order is a perfect elimination ordering iff g is chordal:
  // the earlier-numbered neighbours of v, minus the latest of them (u), must
  // all be adjacent to u.
  for (int v : order) {
    NodeMask earlier = 0;
    int latest = -1;
    for (NodeMask nb = g.neighbors(v); nb; nb &= nb - 1) {
      const int u = std::countr_zero(nb);
      if (position[u] < position[v]) {
        earlier |= NodeMask{1} << u;
        if (latest < 0 || position[u] > position[latest]) latest = u;
      }
    }
    if (latest < 0) continue;
    earlier &= ~(NodeMask{1} << latest);
    if ((earlier & ~g.neighbors(latest)) != 0) return false;
  }
  return true;
}

namespace {

std::vector<int> elements(NodeMask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

void check_small(const UGraph& g) {
  if (g.n() < 2 || g.n() > kMaxChordalNodes) {
    throw DomainError("chordal machinery supports 2 <= n <= 16 nodes");
  }
}

}  // namespace

std::optional<SplitPartition> split_partition(const UGraph& g) {
  if (g.n() > 20) throw DomainError("split_partition supports n <= 20");
  std::optional<SplitPartition> best;
  const NodeMask all = g.all_nodes();
  for (NodeMask k = 0; k <= all; ++k) {
    if (!g.is_clique(k) || !g.is_independent(all & ~k)) continue;
    if (best) {
      const int cur = std::popcount(best->clique);
      const int cand = std::popcount(k);
      if (cand < cur) continue;
      if (cand == cur && !(elements(k) < elements(best->clique))) continue;
    }
    best = SplitPartition{k, all & ~k};
  }
  return best;
}

DeltaGraph::DeltaGraph(const UGraph& g, const UGraph& h) : n_(g.n()) {
  check_small(g);
  if (h.n() != g.n()) throw DomainError("delta graph needs graphs on the same node set");
  const auto& subsets = canonical_subsets(static_cast<unsigned>(n_));
  member_.assign(std::size_t{1} << n_, 0);
  std::vector<char> g_value;
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    const bool cg = g.is_clique(subsets[k]);
    if (cg != h.is_clique(subsets[k])) {
      nodes_.push_back(subsets[k]);
      coords_.push_back(k);
      g_value.push_back(cg ? 1 : 0);
      member_[subsets[k]] = 1;
    }
  }
  // Union-find over the adjacency relation.
  std::vector<std::size_t> parent(nodes_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
      if (adjacent(i, j)) parent[find(i)] = find(j);
    }
  }
  component_.assign(nodes_.size(), -1);
  std::vector<int> id(nodes_.size(), -1);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const std::size_t r = find(i);
    if (id[r] < 0) {
      id[r] = component_count_++;
      in_g_.push_back(g_value[i]);
    }
    component_[i] = id[r];
  }
}

std::uint64_t DeltaGraph::g_selection_mask() const {
  std::uint64_t mask = 0;
  for (int c = 0; c < component_count_; ++c) {
    if (in_g_[c]) mask |= std::uint64_t{1} << c;
  }
  return mask;
}

Selection Selection::from_mask(std::uint64_t mask) {
  Selection s;
  for (; mask; mask &= mask - 1) s.components.push_back(std::countr_zero(mask));
  return s;
}

std::uint64_t Selection::mask() const {
  std::uint64_t m = 0;
  for (int c : components) {
    if (c < 0 || c >= 64) throw DomainError("component id " + std::to_string(c) + " invalid");
    m |= std::uint64_t{1} << c;
  }
  return m;
}

IntVertex selection_imset(const UGraph& g, const DeltaGraph& delta, std::uint64_t chosen) {
  if ((chosen & ~delta.all_components_mask()) != 0) {
    throw DomainError("selection names a component the difference graph does not have");
  }
  IntVertex out = chordal_imset(g);
  for (std::size_t i = 0; i < delta.size(); ++i) {
    out[delta.coordinate(i)] = (chosen >> delta.component_of(i)) & 1;
  }
  return out;
}

IntVertex selection_imset(const UGraph& g, const UGraph& h, const Selection& sel) {
  const DeltaGraph delta(g, h);
  return selection_imset(g, delta, sel.mask());
}

const char* to_string(Compatibility c) {
  switch (c) {
    case Compatibility::kCompatible: return "compatible";
    case Compatibility::kNotChordal: return "not-chordal";
    case Compatibility::kExtraClique: return "extra-clique";
  }
  return "?";
}

CompatibilityResult chordally_compatible(const UGraph& g, const DeltaGraph& delta,
                                         std::uint64_t chosen) {
  const IntVertex c = selection_imset(g, delta, chosen);
  UGraph d = imset_pairs_graph(c, g.n());
  if (!is_chordal(d)) return {Compatibility::kNotChordal, std::move(d)};
  if (chordal_imset(d) != c) return {Compatibility::kExtraClique, std::move(d)};
  return {Compatibility::kCompatible, std::move(d)};
}

CompatibilityResult chordally_compatible(const UGraph& g, const UGraph& h, const Selection& sel) {
  if (!is_chordal(g) || !is_chordal(h)) {
    throw DomainError("chordally_compatible needs chordal inputs");
  }
  const DeltaGraph delta(g, h);
  return chordally_compatible(g, delta, sel.mask());
}

namespace {

DeltaGraph checked_delta(const UGraph& g, const UGraph& h, const WitnessSearchOptions& options) {
  if (!is_chordal(g) || !is_chordal(h)) throw DomainError("witness search needs chordal graphs");
  DeltaGraph delta(g, h);
  if (delta.empty()) throw DomainError("witness search needs graphs with distinct imsets");
  if (delta.component_count() > options.max_components ||
      delta.component_count() > 30) {
    throw IndeterminateError("difference graph has " +
                             std::to_string(delta.component_count()) +
                             " components, above the search cap of " +
                             std::to_string(options.max_components));
  }
  return delta;
}

}  // namespace

std::optional<std::pair<UGraph, UGraph>> find_chordal_witnesses(
    const UGraph& g, const UGraph& h, const WitnessSearchOptions& options) {
  const DeltaGraph delta = checked_delta(g, h, options);
  const std::uint64_t all = delta.all_components_mask();
  const std::uint64_t g_mask = delta.g_selection_mask();
  const std::uint64_t h_mask = all & ~g_mask;
  // 0 unknown, 1 compatible, 2 not.
  std::vector<std::int8_t> memo(std::size_t{1} << delta.component_count(), 0);
  auto compatible = [&](std::uint64_t mask) {
    if (memo[mask] == 0) {
      memo[mask] = chordally_compatible(g, delta, mask).verdict == Compatibility::kCompatible
                       ? 1
                       : 2;
    }
    return memo[mask] == 1;
  };
  for (std::uint64_t i = 0; i <= all; ++i) {
    const std::uint64_t mask = i ^ (i >> 1);  // Gray code
    const std::uint64_t rest = all & ~mask;
    if (mask == g_mask || mask == h_mask || mask > rest) continue;
    if (compatible(mask) && compatible(rest)) {
      return std::make_pair(chordally_compatible(g, delta, mask).graph,
                            chordally_compatible(g, delta, rest).graph);
    }
  }
  return std::nullopt;
}

VertexSet compatible_face_vertices(const UGraph& g, const UGraph& h,
                                   const WitnessSearchOptions& options) {
  const DeltaGraph delta = checked_delta(g, h, options);
  std::vector<IntVertex> out;
  for (std::uint64_t mask = 0; mask <= delta.all_components_mask(); ++mask) {
    if (chordally_compatible(g, delta, mask).verdict == Compatibility::kCompatible) {
      out.push_back(selection_imset(g, delta, mask));
    }
  }
  const std::size_t dim = imset_dim(static_cast<unsigned>(g.n()));
  return VertexSet::sorted_unique(std::move(out), dim, "cgp-compatible-face");
}

}  // namespace polyskel
