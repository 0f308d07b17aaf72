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

#include "polyskel/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "polyskel/chordal.hpp"
#include "polyskel/error.hpp"
#include "polyskel/faces.hpp"
#include "polyskel/families.hpp"
#include "polyskel/ledger.hpp"
#include "polyskel/oracles.hpp"
#include "polyskel/rhombus.hpp"
#include "polyskel/vertex_io.hpp"

namespace polyskel {

using json = nlohmann::json;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

VertexSet make_family(const FamilyRequest& r) {
  const std::string& f = r.name;
  if (f == "cim") return enum_cim_vertices(r.n);
  if (f == "cimtree") return enum_cimtree_vertices(r.n);
  if (f == "cgp") return enum_cgp_vertices(r.n);
  if (f == "spanning-tree") return spanning_tree_vertices(r.n);
  if (f == "birkhoff") return birkhoff_vertices(r.n);
  if (f == "k-assignment") return k_assignment_vertices(r.m, r.n, r.k);
  if (f == "cross") return cross_polytope_vertices(r.n);
  if (f == "permutohedron") return permutohedron_vertices(r.n);
  if (f == "cube") return cube_vertices(r.n);
  if (f == "stab") {
    require(!r.graph.empty(), "stab needs --graph FILE");
    return stab_vertices(read_ugraph(r.graph));
  }
  if (f == "product") {
    require(r.factors.size() == 2, "product needs exactly two --factor files");
    return product_vertices(read_vertices(r.factors[0]), read_vertices(r.factors[1]));
  }
  throw DomainError("unknown family '" + f + "'");
}

CimTreeFixture fixture_cimtree6() {
  // One DAG per essential graph; undirected edges of the essential graphs
  // are oriented away from a source so no v-structure is added.
  const std::vector<std::vector<Edge>> arcs = {
      {{2, 1}, {5, 1}, {3, 0}, {4, 0}, {2, 3}},
      {{0, 1}, {0, 5}, {2, 5}, {1, 4}, {3, 4}},
      {{0, 5}, {2, 5}, {1, 4}, {3, 4}, {2, 3}},
      {{1, 0}, {1, 4}, {3, 4}, {2, 1}, {5, 1}},
      {{0, 1}, {0, 5}, {2, 5}, {3, 0}, {4, 0}},
  };
  CimTreeFixture fx;
  std::vector<IntVertex> imsets;
  for (const auto& a : arcs) {
    fx.graphs.emplace_back(6, a);
    imsets.push_back(char_imset(fx.graphs.back()));
  }
  fx.vertices = VertexSet::from_vertices(imsets, imset_dim(6), "cimtree n=6 fixture");
  return fx;
}

CimTreeFixtureAudit audit_fixture_cimtree6() {
  const CimTreeFixture fx = fixture_cimtree6();
  CimTreeFixtureAudit audit;
  audit.distinct = fx.vertices.size() == fx.graphs.size();
  audit.affine_dimension = affine_dimension(fx.vertices);

  const VertexSet all = enum_cimtree_vertices(6);
  audit.cimtree6_vertices = all.size();
  const auto a = all.find(fx.vertices[fx.top_a]);
  const auto b = all.find(fx.vertices[fx.top_b]);
  require(a && b, "fixture imsets are not CIMTree_6 vertices");
  const std::vector<std::size_t> face = restrict_face(all, *a, *b);
  audit.face_vertices = face.size();
  const VertexSet sub = all.subset(face);
  const std::size_t la = std::lower_bound(face.begin(), face.end(), *a) - face.begin();
  const std::size_t lb = std::lower_bound(face.begin(), face.end(), *b) - face.begin();
  const EdgeVerdict verdict = exact_edge_test(sub, la, lb);
  audit.top_status = verdict.status;
  audit.certificate_checked = certificate_holds(sub, la, lb, verdict);
  audit.top_has_witness = find_witness(all, *a, *b).has_value();
  return audit;
}

std::vector<TimingRow> timing_report(const std::vector<std::pair<std::string, VertexSet>>& instances,
                                     const SkeletonConfig& config) {
  std::vector<TimingRow> rows;
  for (const auto& [name, vertices] : instances) {
    SkeletonStats stats;
    const PairLedger ledger = compute_skeleton(vertices, config, &stats);
    rows.push_back({name, vertices.size(), ledger.count(PairStatus::kEdge), stats.timings});
  }
  return rows;
}

void write_timing_table(std::ostream& out, const std::vector<TimingRow>& rows) {
  out << std::left << std::setw(16) << "instance" << std::right << std::setw(10) << "vertices"
      << std::setw(12) << "edges" << std::setw(12) << "total" << std::setw(12) << "ledger"
      << std::setw(12) << "rhombus" << std::setw(12) << "verify" << '\n';
  out << std::fixed << std::setprecision(4);
  for (const TimingRow& r : rows) {
    out << std::left << std::setw(16) << r.instance << std::right << std::setw(10) << r.vertices
        << std::setw(12) << r.edges << std::setw(12) << r.timings.total << std::setw(12)
        << r.timings.ledger << std::setw(12) << r.timings.rhombus << std::setw(12)
        << r.timings.verify << '\n';
  }
  out << std::defaultfloat;
}

namespace {

// Marker for "ran fine, but the answer is inconclusive".
struct Indeterminate {
  std::string message;
};

json cost_json(const ExactCost& c) {
  json arr = json::array();
  for (const BigInt& x : c) arr.push_back(x.get_str());
  return arr;
}

json verdict_json(const EdgeVerdict& v) {
  json j;
  j["status"] = to_string(v.status);
  if (v.separating_cost) j["certificate"] = {{"cost", cost_json(*v.separating_cost)}};
  if (v.combination) {
    json w = json::array();
    for (const auto& [idx, x] : v.combination->weights) w.push_back({idx, x.get_str()});
    j["certificate"] = {{"alpha_weight", v.combination->alpha_weight.get_str()},
                        {"weights", w}};
  }
  return j;
}

json graph_json(const UGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", edges}};
}

std::vector<int> parse_ints(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> out;
  int x;
  while (in >> x) out.push_back(x);
  if (!in.eof()) throw DomainError("expected integers, got '" + text + "'");
  return out;
}

NodeMask parse_node_set(const std::string& text, int n) {
  NodeMask mask = 0;
  for (int v : parse_ints(text)) {
    require(v >= 0 && v < n, "node " + std::to_string(v) + " out of range");
    mask |= NodeMask{1} << v;
  }
  return mask;
}

Matching parse_matching(const std::string& text, int m, int n) {
  const std::vector<int> xs = parse_ints(text);
  require(xs.size() % 2 == 0, "a matching is a list of row column pairs");
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < xs.size(); i += 2) pairs.emplace_back(xs[i], xs[i + 1]);
  return Matching(m, n, pairs);
}

class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw ParseError("cannot write " + path, 0);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct Options {
  FamilyRequest family;
  std::string input;
  std::string output;
  std::string ledger;
  std::string method = "pipeline";
  unsigned threads = 0;
  std::uint64_t seed = 1;
  int max_iter = 100;
  std::size_t shards = 0;
  std::string work_dir;
  std::vector<std::size_t> pair;
  std::string g_file;
  std::string h_file;
  int max_components = 20;
  // oracle arguments
  std::string oracle_name;
  std::string first;
  std::string second;
  std::string instances = "birkhoff:4,birkhoff:5,birkhoff:6";
};

SkeletonConfig make_config(const Options& o) {
  SkeletonConfig c;
  c.method = parse_method(o.method);
  c.threads = o.threads;
  c.seed = o.seed;
  c.max_iter = o.max_iter;
  c.memory_budget = memory_budget_from_env();
  return c;
}

void add_family_flags(CLI::App* app, Options& o) {
  app->add_option("--n", o.family.n, "size parameter (nodes, dimension, permutation size)");
  app->add_option("--m", o.family.m, "rows (k-assignment)");
  app->add_option("--k", o.family.k, "matching size (k-assignment)");
  app->add_option("--graph", o.family.graph, "graph file (stab)");
  app->add_option("--factor", o.family.factors, "vertex file of a product factor (twice)");
}

int cmd_gen(const Options& o, std::ostream& out) {
  const VertexSet v = make_family(o.family);
  OutputTarget target(o.output, out);
  write_vertices(target.get(), v);
  return kExitOk;
}

int cmd_skeleton(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<std::string> warnings;
  const VertexSet v = read_vertices(o.input, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  const SkeletonConfig config = make_config(o);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  SkeletonStats stats;
  std::size_t non_edges = 0;
  if (o.shards > 0) {
    const std::filesystem::path dir =
        o.work_dir.empty() ? std::filesystem::temp_directory_path() / "polyskel-shards"
                           : std::filesystem::path(o.work_dir);
    std::ofstream ledger_file;
    if (!o.ledger.empty()) {
      ledger_file.open(o.ledger);
      if (!ledger_file) throw ParseError("cannot write " + o.ledger, 0);
    }
    ShardedResult res = compute_skeleton_sharded(v, config, o.shards, dir,
                                                 o.ledger.empty() ? nullptr : &ledger_file);
    edges = std::move(res.edges);
    stats = res.stats;
    non_edges = stats.scan.marked_nonedge + stats.exact_nonedges;
  } else {
    const PairLedger ledger = compute_skeleton(v, config, &stats);
    edges = ledger.edges();
    non_edges = ledger.count(PairStatus::kNonEdge);
    if (!o.ledger.empty()) write_ledger_csv(o.ledger, ledger);
  }
  json j;
  j["dim"] = v.dim();
  j["vertices"] = v.size();
  j["pairs"] = v.size() * (v.size() - 1) / 2;
  j["method"] = o.method;
  j["edges"] = edges;
  j["non_edges"] = non_edges;
  j["unresolved"] = stats.unresolved;
  j["stats"] = {{"rhombus_marked", stats.scan.marked_nonedge},
                {"numeric_edges", stats.numeric_edges},
                {"exact_edges", stats.exact_edges},
                {"exact_nonedges", stats.exact_nonedges},
                {"seconds",
                 {{"total", stats.timings.total},
                  {"ledger", stats.timings.ledger},
                  {"rhombus", stats.timings.rhombus},
                  {"verify", stats.timings.verify}}}};
  OutputTarget target(o.output, out);
  target.get() << j.dump(2) << '\n';
  if (stats.unresolved > 0) {
    err << stats.unresolved << " pairs left unresolved by the numeric method\n";
    return kExitIndeterminate;
  }
  return kExitOk;
}

int cmd_rhombus(const Options& o, std::ostream& out) {
  const VertexSet v = read_vertices(o.input);
  PairLedger ledger = make_ledger(v, true);
  const RhombusScanStats s = rhombus_scan_in_place(ledger, v);
  if (!o.ledger.empty()) write_ledger_csv(o.ledger, ledger);
  json j = {{"pairs", s.pairs}, {"marked_nonedge", s.marked_nonedge}, {"groups", s.groups}};
  OutputTarget target(o.output, out);
  target.get() << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const VertexSet v = read_vertices(o.input);
  require(o.pair.size() == 2, "--pair takes two indices");
  const std::size_t a = o.pair[0], b = o.pair[1];
  require(a < v.size() && b < v.size(), "pair index out of range");
  const Method method = parse_method(o.method);
  json j;
  j["pair"] = {a, b};
  j["method"] = o.method;
  int code = kExitOk;
  if (method == Method::kNumeric) {
    NumericOptions opts;
    opts.max_iter = o.max_iter;
    opts.seed = pair_seed(o.seed, a, b);
    const NumericOutcome res = verify_edge_numeric(v, a, b, opts);
    j["status"] = res.verified ? "edge" : "indeterminate";
    j["iterations"] = res.iterations;
    if (res.certificate) j["certificate"] = {{"cost", cost_json(*res.certificate)}};
    if (!res.verified) code = kExitIndeterminate;
  } else {
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    if (method == Method::kPipeline) witness = find_witness(v, a, b);
    if (witness) {
      j["status"] = to_string(EdgeStatus::kNonEdge);
      j["witness"] = {witness->first, witness->second};
    } else {
      j.update(verdict_json(exact_edge_test(v, a, b)));
    }
  }
  out << j.dump(2) << '\n';
  return code;
}

int cmd_chordal_witness(const Options& o, std::ostream& out) {
  const UGraph g = read_ugraph(o.g_file);
  const UGraph h = read_ugraph(o.h_file);
  WitnessSearchOptions opts;
  opts.max_components = o.max_components;
  json j;
  try {
    if (auto w = find_chordal_witnesses(g, h, opts)) {
      j["verdict"] = "witnesses";
      j["witnesses"] = {graph_json(w->first), graph_json(w->second)};
    } else {
      // No witness pair; decide the pair inside the compatible face.
      const VertexSet face = compatible_face_vertices(g, h, opts);
      const auto a = face.find(chordal_imset(g));
      const auto b = face.find(chordal_imset(h));
      require(a && b, "compatible face misses g or h");
      const EdgeVerdict verdict = exact_edge_test(face, *a, *b);
      j["verdict"] = verdict.status == EdgeStatus::kEdge ? "edge" : "non-edge";
    }
  } catch (const IndeterminateError& e) {
    j["verdict"] = "indeterminate";
    j["reason"] = e.what();
    out << j.dump(2) << '\n';
    return kExitIndeterminate;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  json j;
  j["oracle"] = o.oracle_name;
  bool edge = false;
  if (o.oracle_name == "spanning-tree") {
    edge = spanning_tree_edge(read_ugraph(o.first), read_ugraph(o.second));
  } else if (o.oracle_name == "birkhoff") {
    const std::vector<int> s = parse_ints(o.first), w = parse_ints(o.second);
    edge = birkhoff_edge(s, w);
    if (auto wit = birkhoff_witnesses(s, w)) j["witnesses"] = {wit->first, wit->second};
  } else if (o.oracle_name == "k-assignment") {
    edge = k_assignment_edge(parse_matching(o.first, o.family.m, o.family.n),
                             parse_matching(o.second, o.family.m, o.family.n));
  } else if (o.oracle_name == "stab") {
    require(!o.family.graph.empty(), "stab needs --graph FILE");
    const UGraph g = read_ugraph(o.family.graph);
    const NodeMask a = parse_node_set(o.first, g.n()), b = parse_node_set(o.second, g.n());
    edge = stab_edge(g, a, b);
    if (auto wit = stab_witnesses(g, a, b)) {
      auto nodes = [&](NodeMask m) {
        std::vector<int> v;
        for (int i = 0; i < g.n(); ++i)
          if ((m >> i) & 1) v.push_back(i);
        return v;
      };
      j["witnesses"] = {nodes(wit->first), nodes(wit->second)};
    }
  } else if (o.oracle_name == "cimtree") {
    edge = cimtree_neighbor_test(read_dag(o.first), read_dag(o.second));
  } else {
    throw DomainError("unknown oracle '" + o.oracle_name +
                      "' (spanning-tree, birkhoff, k-assignment, stab, cimtree)");
  }
  j["verdict"] = edge ? "edge" : "non-edge";
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_audit_rhombus(const Options& o, std::ostream& out) {
  const VertexSet v = make_family(o.family);
  SkeletonConfig config = make_config(o);
  if (config.method == Method::kNumeric) throw DomainError("audits need a complete verdict");
  const PairLedger ledger = compute_skeleton(v, config);
  const FulfillmentReport report = fulfillment_from_ledger(ledger);
  out << "family: " << o.family.name << '\n'
      << "vertices: " << v.size() << '\n'
      << "pairs: " << ledger.size() << '\n'
      << "edges: " << ledger.count(PairStatus::kEdge) << '\n'
      << "non-edges with witness: " << report.scan.marked_nonedge << '\n'
      << "violations: " << report.violations.size() << '\n';
  for (std::size_t i = 0; i < std::min<std::size_t>(report.violations.size(), 10); ++i) {
    out << "  " << report.violations[i].first << ' ' << report.violations[i].second << '\n';
  }
  out << "fulfills: " << (report.fulfills ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_audit_timing(const Options& o, std::ostream& out) {
  std::vector<std::pair<std::string, VertexSet>> instances;
  std::istringstream list(o.instances);
  std::string item;
  while (std::getline(list, item, ',')) {
    const auto colon = item.find(':');
    require(colon != std::string::npos, "instances look like family:n, got '" + item + "'");
    FamilyRequest r;
    r.name = item.substr(0, colon);
    r.n = std::stoi(item.substr(colon + 1));
    instances.emplace_back(item, make_family(r));
  }
  write_timing_table(out, timing_report(instances, make_config(o)));
  return kExitOk;
}

int cmd_audit_fixture(std::ostream& out) {
  const CimTreeFixtureAudit a = audit_fixture_cimtree6();
  out << "imsets distinct: " << (a.distinct ? "true" : "false") << '\n'
      << "affine dimension: " << a.affine_dimension << '\n'
      << "CIMTree_6 vertices: " << a.cimtree6_vertices << '\n'
      << "face vertices: " << a.face_vertices << '\n'
      << "top pair: " << to_string(a.top_status)
      << (a.certificate_checked ? " (certificate checked)" : "") << '\n'
      << "top pair has witness: " << (a.top_has_witness ? "true" : "false") << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge skeletons of 0/1 polytopes", "polyskel"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "write the vertices of a polytope family");
  gen->add_option("family", o.family.name, "family name")->required();
  add_family_flags(gen, o);
  gen->add_option("-o,--output", o.output, "vertex file (default stdout)");

  auto* skel = app.add_subcommand("skeleton", "compute every edge of conv(V)");
  skel->add_option("-i,--input", o.input, "vertex file")->required();
  skel->add_option("--method", o.method, "pipeline, exact or numeric");
  skel->add_option("--threads", o.threads, "worker threads (0: all cores)");
  skel->add_option("--seed", o.seed, "root random seed");
  skel->add_option("--max-iter", o.max_iter, "iterations of the numeric search");
  skel->add_option("--shards", o.shards, "out-of-core mode with this many shards");
  skel->add_option("--work-dir", o.work_dir, "spill directory for --shards");
  skel->add_option("-o,--output", o.output, "edges JSON (default stdout)");
  skel->add_option("--ledger", o.ledger, "also write the resolved ledger CSV");

  auto* rh = app.add_subcommand("rhombus", "run only the rhombus prefilter");
  rh->add_option("-i,--input", o.input, "vertex file")->required();
  rh->add_option("-o,--output", o.output, "report JSON (default stdout)");
  rh->add_option("--ledger", o.ledger, "ledger CSV after the scan");

  auto* ver = app.add_subcommand("verify", "decide one pair with a certificate");
  ver->add_option("-i,--input", o.input, "vertex file")->required();
  ver->add_option("--pair", o.pair, "two vertex indices")->required()->expected(2);
  ver->add_option("--method", o.method, "pipeline, exact or numeric");
  ver->add_option("--seed", o.seed, "root random seed");
  ver->add_option("--max-iter", o.max_iter, "iterations of the numeric search");

  auto* cw = app.add_subcommand("chordal-witness", "rhombus witnesses for two chordal graphs");
  cw->set_help_flag("--help", "Print this help message and exit");
  cw->add_option("--g", o.g_file, "graph file")->required();
  cw->add_option("--h", o.h_file, "graph file")->required();
  cw->add_option("--max-components", o.max_components, "give up past this many components");

  auto* orc = app.add_subcommand("oracle", "closed-form adjacency test");
  orc->add_option("name", o.oracle_name, "spanning-tree, birkhoff, k-assignment, stab, cimtree")
      ->required();
  orc->add_option("--first", o.first,
                  "first object: graph/DAG file, permutation, matching or node list")
      ->required();
  orc->add_option("--second", o.second, "second object, same form")->required();
  orc->add_option("--m", o.family.m, "rows (k-assignment)");
  orc->add_option("--n", o.family.n, "columns (k-assignment)");
  orc->add_option("--graph", o.family.graph, "graph file (stab)");

  auto* audit = app.add_subcommand("audit", "reproducibility audits");
  audit->require_subcommand(1);
  auto* ar = audit->add_subcommand("rhombus", "does a family fulfill the rhombus criterion");
  ar->add_option("--family", o.family.name, "family name")->required();
  add_family_flags(ar, o);
  ar->add_option("--method", o.method, "pipeline or exact");
  ar->add_option("--threads", o.threads, "worker threads");
  ar->add_option("--seed", o.seed, "root random seed");
  auto* at = audit->add_subcommand("timing", "per-stage wall-clock table");
  at->add_option("--instances", o.instances, "comma list of family:n");
  at->add_option("--threads", o.threads, "worker threads");
  at->add_option("--seed", o.seed, "root random seed");
  auto* af = audit->add_subcommand("fixture-cimtree6", "the CIMTree_6 counterexample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*skel) return cmd_skeleton(o, out, err);
    if (*rh) return cmd_rhombus(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*cw) return cmd_chordal_witness(o, out);
    if (*orc) return cmd_oracle(o, out);
    if (*ar) return cmd_audit_rhombus(o, out);
    if (*at) return cmd_audit_timing(o, out);
    if (*af) return cmd_audit_fixture(out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const IndeterminateError& e) {
    err << "indeterminate: " << e.what() << '\n';
    return kExitIndeterminate;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace polyskel
