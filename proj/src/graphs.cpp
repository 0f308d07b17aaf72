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

#include "polyskel/graphs.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "polyskel/error.hpp"

namespace polyskel {
namespace {

void check_node_count(int n) {
  if (n < 0 || n > kMaxGraphNodes) {
    throw DomainError("graphs support 0 <= n <= 64 nodes, got " + std::to_string(n));
  }
}

void check_label(int v, int n) {
  if (v < 0 || v >= n) {
    throw DomainError("node label " + std::to_string(v) + " outside {0.." +
                      std::to_string(n - 1) + "}");
  }
}

}  // namespace

UGraph::UGraph(int n) : n_(n) {
  check_node_count(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
}

UGraph::UGraph(int n, const std::vector<Edge>& edges) : UGraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void UGraph::add_edge(int u, int v) {
  check_label(u, n_);
  check_label(v, n_);
  if (u == v) throw DomainError("self-loop at node " + std::to_string(u));
  if (has_edge(u, v)) {
    throw DomainError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adj_[u] |= NodeMask{1} << v;
  adj_[v] |= NodeMask{1} << u;
}

void UGraph::remove_edge(int u, int v) {
  check_label(u, n_);
  check_label(v, n_);
  adj_[u] &= ~(NodeMask{1} << v);
  adj_[v] &= ~(NodeMask{1} << u);
}

std::size_t UGraph::edge_count() const {
  std::size_t twice = 0;
  for (NodeMask m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
  return twice / 2;
}

std::vector<Edge> UGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

bool UGraph::is_clique(NodeMask nodes) const {
  for (NodeMask rest = nodes; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if ((nodes & ~(NodeMask{1} << v) & ~adj_[v]) != 0) return false;
  }
  return true;
}

bool UGraph::is_independent(NodeMask nodes) const {
  for (NodeMask rest = nodes; rest; rest &= rest - 1) {
    if (adj_[std::countr_zero(rest)] & nodes) return false;
  }
  return true;
}

bool UGraph::is_connected_on(NodeMask nodes) const {
  if (nodes == 0) return true;
  NodeMask seen = nodes & (~nodes + 1);
  NodeMask frontier = seen;
  while (frontier) {
    NodeMask next = 0;
    for (NodeMask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
    next &= nodes & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == nodes;
}

bool UGraph::is_tree() const {
  return n_ >= 1 && edge_count() == static_cast<std::size_t>(n_ - 1) &&
         is_connected_on(all_nodes());
}

UGraph UGraph::complement() const {
  UGraph out(n_);
  for (int v = 0; v < n_; ++v) out.adj_[v] = all_nodes() & ~adj_[v] & ~(NodeMask{1} << v);
  return out;
}

UGraph UGraph::induced(NodeMask nodes) const {
  UGraph out(n_);
  for (int v = 0; v < n_; ++v) {
    if ((nodes >> v) & 1) out.adj_[v] = adj_[v] & nodes;
  }
  return out;
}

Dag::Dag(int n) : n_(n) {
  check_node_count(n);
  parents_.assign(static_cast<std::size_t>(n), 0);
}

Dag::Dag(int n, const std::vector<Edge>& arcs) : Dag(n) {
  for (auto [p, c] : arcs) add_arc(p, c);
}

bool Dag::reaches(int from, int to) const {
  // Walk parents backwards from `to`.
  NodeMask seen = NodeMask{1} << to;
  NodeMask frontier = seen;
  while (frontier) {
    NodeMask next = 0;
    for (NodeMask f = frontier; f; f &= f - 1) next |= parents_[std::countr_zero(f)];
    next &= ~seen;
    if ((next >> from) & 1) return true;
    seen |= next;
    frontier = next;
  }
  return from == to;
}

void Dag::add_arc(int parent, int child) {
  check_label(parent, n_);
  check_label(child, n_);
  if (parent == child) throw DomainError("self-loop at node " + std::to_string(parent));
  if (has_arc(parent, child) || has_arc(child, parent)) {
    throw DomainError("arc between " + std::to_string(parent) + " and " +
                      std::to_string(child) + " already present");
  }
  if (reaches(child, parent)) {
    throw DomainError("arc " + std::to_string(parent) + "->" + std::to_string(child) +
                      " closes a directed cycle");
  }
  parents_[child] |= NodeMask{1} << parent;
}

std::vector<Edge> Dag::arcs() const {
  std::vector<Edge> out;
  for (int c = 0; c < n_; ++c) {
    for (NodeMask p = parents_[c]; p; p &= p - 1) out.emplace_back(std::countr_zero(p), c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

UGraph Dag::skeleton() const {
  UGraph g(n_);
  for (auto [p, c] : arcs()) g.add_edge(p, c);
  return g;
}

NodeMask Dag::colliders() const {
  const UGraph skel = skeleton();
  NodeMask out = 0;
  for (int v = 0; v < n_; ++v) {
    if (std::popcount(parents_[v]) >= 2 && !skel.is_clique(parents_[v])) {
      out |= NodeMask{1} << v;
    }
  }
  return out;
}

bool is_acyclic(const std::vector<NodeMask>& parents) {
  const int n = static_cast<int>(parents.size());
  NodeMask placed = 0;
  const NodeMask all = n == 64 ? ~NodeMask{0} : (NodeMask{1} << n) - 1;
  while (placed != all) {
    NodeMask ready = 0;
    for (int v = 0; v < n; ++v) {
      if (!((placed >> v) & 1) && (parents[v] & ~placed) == 0) ready |= NodeMask{1} << v;
    }
    if (!ready) return false;
    placed |= ready;
  }
  return true;
}

Matching::Matching(int m, int n, std::vector<Edge> pairs) : m_(m), n_(n), pairs_(std::move(pairs)) {
  if (m < 1 || n < 1) throw DomainError("matching sides must be positive");
  std::vector<char> row(m, 0), col(n, 0);
  for (auto [r, c] : pairs_) {
    if (r < 0 || r >= m || c < 0 || c >= n) throw DomainError("matching pair out of range");
    if (row[r]++ || col[c]++) throw DomainError("matching repeats a row or column");
  }
  std::sort(pairs_.begin(), pairs_.end());
}

namespace {

struct GraphLines {
  int n = 0;
  std::vector<std::pair<Edge, bool>> items;  // (u,v), directed
};

int to_int(const std::string& tok, std::size_t line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected an integer, got '" + tok + "'", line_no);
  }
  return value;
}

GraphLines parse_graph(std::istream& in) {
  GraphLines out;
  std::string line;
  std::size_t line_no = 0;
  int expected = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    // "u->v" is accepted as well as "u -> v".
    for (std::size_t p = line.find("->"); p != std::string::npos; p = line.find("->", p + 4)) {
      line.replace(p, 2, " -> ");
    }
    std::istringstream ss(line);
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (expected < 0) {
      if (toks.size() != 2) throw ParseError("graph header must be '<n> <m>'", line_no);
      out.n = to_int(toks[0], line_no);
      expected = to_int(toks[1], line_no);
      if (out.n < 0 || out.n > kMaxGraphNodes || expected < 0) {
        throw ParseError("bad graph header", line_no);
      }
      continue;
    }
    if (toks.size() == 2) {
      out.items.push_back({{to_int(toks[0], line_no), to_int(toks[1], line_no)}, false});
    } else if (toks.size() == 3 && toks[1] == "->") {
      out.items.push_back({{to_int(toks[0], line_no), to_int(toks[2], line_no)}, true});
    } else {
      throw ParseError("edge line must be 'u v' or 'u -> v'", line_no);
    }
  }
  if (expected < 0) throw ParseError("missing graph header", line_no);
  if (static_cast<int>(out.items.size()) != expected) {
    throw ParseError("header promises " + std::to_string(expected) + " edges, found " +
                         std::to_string(out.items.size()),
                     line_no);
  }
  return out;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return in;
}

}  // namespace

UGraph read_ugraph(std::istream& in) {
  GraphLines lines = parse_graph(in);
  UGraph g(lines.n);
  for (auto& [e, directed] : lines.items) {
    if (directed) throw ParseError("undirected graph file contains an arc", 0);
    g.add_edge(e.first, e.second);
  }
  return g;
}

UGraph read_ugraph(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_ugraph(in);
}

Dag read_dag(std::istream& in) {
  GraphLines lines = parse_graph(in);
  Dag g(lines.n);
  for (auto& [e, directed] : lines.items) {
    if (!directed) throw ParseError("DAG file lines must be 'u -> v'", 0);
    g.add_arc(e.first, e.second);
  }
  return g;
}

Dag read_dag(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_dag(in);
}

void write_ugraph(std::ostream& out, const UGraph& g) {
  auto edges = g.edges();
  out << g.n() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

void write_dag(std::ostream& out, const Dag& g) {
  auto arcs = g.arcs();
  out << g.n() << ' ' << arcs.size() << '\n';
  for (auto [p, c] : arcs) out << p << " -> " << c << '\n';
}

}  // namespace polyskel
