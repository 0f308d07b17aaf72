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

// Chordal-graph machinery for the chordal graph polytope: recognition, split
// partitions, the difference graph of two imsets and the selection imsets
// built from its components.

#ifndef POLYSKEL_CHORDAL_HPP_
#define POLYSKEL_CHORDAL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polyskel/core.hpp"
#include "polyskel/graphs.hpp"

namespace polyskel {

// Chordal machinery enumerates all subsets of the node set.
inline constexpr int kMaxChordalNodes = 16;

// Maximum cardinality search followed by a perfect elimination check.
bool is_chordal(const UGraph& g);

struct SplitPartition {
  NodeMask clique = 0;       // maximal clique
  NodeMask independent = 0;  // the remaining nodes, pairwise non-adjacent
};

// Of all (clique, independent) partitions, the one with the largest clique,
// ties broken by the lexicographically smallest sorted element list.
// nullopt when g is not split.
std::optional<SplitPartition> split_partition(const UGraph& g);

// Subsets S (|S| >= 2) where c_G(S) != c_H(S), adjacent when S & T is also a
// node. Nodes are kept in canonical subset order.
class DeltaGraph {
 public:
  DeltaGraph(const UGraph& g, const UGraph& h);

  int n() const { return n_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  NodeMask node(std::size_t i) const { return nodes_[i]; }
  std::size_t coordinate(std::size_t i) const { return coords_[i]; }
  bool contains(NodeMask s) const { return member_[s] != 0; }
  bool adjacent(std::size_t i, std::size_t j) const {
    return i != j && contains(nodes_[i] & nodes_[j]);
  }
  int component_of(std::size_t i) const { return component_[i]; }
  int component_count() const { return component_count_; }
  // c_G is constant on each component; this is that value.
  bool component_in_g(int c) const { return in_g_[c] != 0; }
  // Components where c_G = 1, as a bitmask over component ids.
  std::uint64_t g_selection_mask() const;
  std::uint64_t all_components_mask() const {
    return component_count_ == 64 ? ~std::uint64_t{0}
                                  : (std::uint64_t{1} << component_count_) - 1;
  }

 private:
  int n_;
  std::vector<NodeMask> nodes_;
  std::vector<std::size_t> coords_;
  std::vector<char> member_;  // indexed by mask
  std::vector<int> component_;
  std::vector<char> in_g_;
  int component_count_ = 0;
};

// A set of component ids of a DeltaGraph.
struct Selection {
  std::vector<int> components;

  static Selection from_mask(std::uint64_t mask);
  std::uint64_t mask() const;
};

// Agrees with c_G = c_H off the difference graph, 1 on chosen components and
// 0 on the others. Throws DomainError for invalid component ids.
IntVertex selection_imset(const UGraph& g, const UGraph& h, const Selection& sel);
IntVertex selection_imset(const UGraph& g, const DeltaGraph& delta, std::uint64_t chosen);

enum class Compatibility { kCompatible, kNotChordal, kExtraClique };
const char* to_string(Compatibility c);

struct CompatibilityResult {
  Compatibility verdict;
  UGraph graph;  // the graph induced by the selection's pair coordinates
};

// Throws DomainError when g or h is not chordal.
CompatibilityResult chordally_compatible(const UGraph& g, const UGraph& h, const Selection& sel);
CompatibilityResult chordally_compatible(const UGraph& g, const DeltaGraph& delta,
                                         std::uint64_t chosen);

struct WitnessSearchOptions {
  int max_components = 20;
};

// A selection S with S and its complement both chordally compatible, other
// than the two reproducing g and h; returns the two witness graphs.
// nullopt when none exists. Throws IndeterminateError past the component cap
// and DomainError when g, h are not chordal or have equal imsets.
std::optional<std::pair<UGraph, UGraph>> find_chordal_witnesses(
    const UGraph& g, const UGraph& h, const WitnessSearchOptions& options = {});

// Imsets of every chordally compatible selection. These are the vertices of
// a face of the chordal graph polytope containing c_g and c_h, so edge
// questions about the pair can be answered inside it. Same cap and errors
// as find_chordal_witnesses.
VertexSet compatible_face_vertices(const UGraph& g, const UGraph& h,
                                   const WitnessSearchOptions& options = {});

}  // namespace polyskel

#endif  // POLYSKEL_CHORDAL_HPP_
