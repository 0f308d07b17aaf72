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

// Small labeled graphs on nodes 0..n-1 (n <= 64), stored as adjacency /
// parent bitmasks.

#ifndef POLYSKEL_GRAPHS_HPP_
#define POLYSKEL_GRAPHS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <utility>
#include <vector>

#include "polyskel/subsets.hpp"

namespace polyskel {

using Edge = std::pair<int, int>;

inline constexpr int kMaxGraphNodes = 64;

class UGraph {
 public:
  UGraph() = default;
  explicit UGraph(int n);
  UGraph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  // Throws DomainError on self-loops, duplicates or labels out of range.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
  NodeMask neighbors(int v) const { return adj_[v]; }
  std::size_t edge_count() const;
  // Edges with u < v, sorted.
  std::vector<Edge> edges() const;
  bool is_clique(NodeMask nodes) const;
  bool is_independent(NodeMask nodes) const;
  bool is_tree() const;
  bool is_connected_on(NodeMask nodes) const;
  UGraph complement() const;
  UGraph induced(NodeMask nodes) const;  // same labels, edges outside dropped
  NodeMask all_nodes() const { return n_ == 64 ? ~NodeMask{0} : (NodeMask{1} << n_) - 1; }

  friend bool operator==(const UGraph&, const UGraph&) = default;
  friend auto operator<=>(const UGraph&, const UGraph&) = default;

 private:
  int n_ = 0;
  std::vector<NodeMask> adj_;
};

class Dag {
 public:
  Dag() = default;
  explicit Dag(int n);
  Dag(int n, const std::vector<Edge>& arcs);  // (parent, child)

  int n() const { return n_; }
  // Throws DomainError on self-loops, duplicate or reversed arcs, and arcs
  // that close a directed cycle.
  void add_arc(int parent, int child);
  NodeMask parents(int v) const { return parents_[v]; }
  bool has_arc(int parent, int child) const { return (parents_[child] >> parent) & 1; }
  std::vector<Edge> arcs() const;
  UGraph skeleton() const;
  // Nodes with two non-adjacent parents.
  NodeMask colliders() const;
  bool has_v_structure() const { return colliders() != 0; }

  friend bool operator==(const Dag&, const Dag&) = default;

 private:
  bool reaches(int from, int to) const;

  int n_ = 0;
  std::vector<NodeMask> parents_;
};

// Parent bitmasks describe a DAG iff some topological order exists.
bool is_acyclic(const std::vector<NodeMask>& parents);

// A k-matching in K_{m,n}: (row, column) pairs with no repeated row/column.
class Matching {
 public:
  Matching(int m, int n, std::vector<Edge> pairs);  // throws DomainError
  int rows() const { return m_; }
  int cols() const { return n_; }
  std::size_t size() const { return pairs_.size(); }
  const std::vector<Edge>& pairs() const { return pairs_; }
  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  int m_;
  int n_;
  std::vector<Edge> pairs_;  // sorted
};

// Graph files: line 1 "<n> <m>", then m lines "u v" (undirected) or
// "u -> v" (arc). '#' starts a comment.
UGraph read_ugraph(std::istream& in);
UGraph read_ugraph(const std::filesystem::path& path);
Dag read_dag(std::istream& in);
Dag read_dag(const std::filesystem::path& path);
void write_ugraph(std::ostream& out, const UGraph& g);
void write_dag(std::ostream& out, const Dag& g);

}  // namespace polyskel

#endif  // POLYSKEL_GRAPHS_HPP_
