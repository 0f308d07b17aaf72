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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria. "--long" adds the CIM_5 fulfillment audit.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polyskel/chordal.hpp"
#include "polyskel/cli.hpp"
#include "polyskel/core.hpp"
#include "polyskel/edgecheck.hpp"
#include "polyskel/families.hpp"
#include "polyskel/ledger.hpp"
#include "polyskel/oracles.hpp"
#include "polyskel/pipeline.hpp"
#include "polyskel/rhombus.hpp"
#include "test_util.hpp"

namespace polyskel {
namespace {

using ::polyskel::testing::all_graphs;
using Clock = std::chrono::steady_clock;

// Pinned tolerances and limits.
constexpr double kCostTolerance = 1e-9;
constexpr double kScalingFactor = 3.0;
constexpr double kMinTimingWindow = 0.25;  // seconds per timed measurement
constexpr int kMinTimingRuns = 5;
constexpr double kCim5Seconds = 300;
constexpr double kOracleSeconds = 1800;
constexpr double kCgp5Seconds = 900;
constexpr int kRandomBirkhoffPairs = 1000;
constexpr int kNumericTrials = 10000;
constexpr int kCostUpdateTrials = 1000;
constexpr int kProductPairs = 20;

double dot(const std::vector<double>& c, const IntVertex& v) {
  double s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * static_cast<double>(v[i]);
  return s;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failures of one criterion with a short note each.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += !ok;
  }
  bool ok() const { return failed_ == 0; }
  std::string failures() const {
    std::string s;
    for (const auto& f : failures_) s += "\n    " + f;
    return s;
  }
  std::size_t checks() const { return checks_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

PairLedger pipeline_ledger(const VertexSet& v, Method method = Method::kPipeline) {
  SkeletonConfig c;
  c.method = method;
  return compute_skeleton(v, c);
}

bool fulfills(const VertexSet& v) {
  return fulfillment_from_ledger(pipeline_ledger(v)).fulfills;
}

bool lp_edge(const VertexSet& v, std::size_t a, std::size_t b) {
  return exact_edge_test(v, a, b).status == EdgeStatus::kEdge;
}

std::string num(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

// 1. Vertex counts.
std::string criterion1(Check& check) {
  const auto start = Clock::now();
  const VertexSet cim5 = enum_cim_vertices(5);
  const double cim5_seconds = seconds_since(start);
  check.expect(cim5.size() == 8782, "CIM_5 has " + std::to_string(cim5.size()) + " vertices");
  const int dim = affine_dimension(cim5);
  check.expect(dim == 26, "CIM_5 is not 26-dimensional");
  check.expect(cim5_seconds < kCim5Seconds, "CIM_5 took " + num(cim5_seconds) + " s");
  check.expect(enum_cgp_vertices(4).size() == 61, "CGP_4 count");
  std::size_t factorial = 1;
  for (int n = 2; n <= 6; ++n) {
    std::size_t trees = 1;
    for (int i = 0; i < n - 2; ++i) trees *= n;
    check.expect(spanning_tree_vertices(n).size() == trees, "spanning trees n=" + std::to_string(n));
    factorial *= n;
    check.expect(birkhoff_vertices(n).size() == factorial, "Birkhoff n=" + std::to_string(n));
  }
  return "CIM_5: " + std::to_string(cim5.size()) + " vertices, affine dimension " +
         std::to_string(dim) + ", " + num(cim5_seconds) + " s";
}

// 2. Closed-form oracles agree with the exact LP.
std::string criterion2(Check& check) {
  const auto start = Clock::now();
  std::size_t pairs = 0;
  for (int n = 2; n <= 5; ++n) {
    const VertexSet v = spanning_tree_vertices(n);
    for (std::size_t a = 0; a < v.size(); ++a) {
      for (std::size_t b = a + 1; b < v.size(); ++b, ++pairs) {
        check.expect(spanning_tree_edge(graph_from_edge_vector(v.vertex(a), n),
                                        graph_from_edge_vector(v.vertex(b), n)) ==
                         lp_edge(v, a, b),
                     "spanning tree n=" + std::to_string(n));
      }
    }
  }
  for (int n = 2; n <= 4; ++n) {
    const VertexSet v = birkhoff_vertices(n);
    for (std::size_t a = 0; a < v.size(); ++a) {
      for (std::size_t b = a + 1; b < v.size(); ++b, ++pairs) {
        check.expect(birkhoff_edge(permutation_from_matrix(v.vertex(a), n),
                                   permutation_from_matrix(v.vertex(b), n)) == lp_edge(v, a, b),
                     "Birkhoff n=" + std::to_string(n));
      }
    }
  }
  {
    const VertexSet v = birkhoff_vertices(5);
    std::mt19937_64 rng(5);
    for (int i = 0; i < kRandomBirkhoffPairs; ++i, ++pairs) {
      const std::size_t a = rng() % v.size();
      const std::size_t b = (a + 1 + rng() % (v.size() - 1)) % v.size();
      check.expect(birkhoff_edge(permutation_from_matrix(v.vertex(a), 5),
                                 permutation_from_matrix(v.vertex(b), 5)) ==
                       lp_edge(v, std::min(a, b), std::max(a, b)),
                   "Birkhoff n=5");
    }
  }
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      for (int k = 1; k <= std::min(m, n); ++k) {
        const VertexSet v = k_assignment_vertices(m, n, k);
        for (std::size_t a = 0; a < v.size(); ++a) {
          for (std::size_t b = a + 1; b < v.size(); ++b, ++pairs) {
            check.expect(k_assignment_edge(matching_from_vector(v.vertex(a), m, n),
                                           matching_from_vector(v.vertex(b), m, n)) ==
                             lp_edge(v, a, b),
                         "k-assignment");
          }
        }
      }
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (const UGraph& g : all_graphs(n)) {
      const VertexSet v = stab_vertices(g);
      for (std::size_t a = 0; a < v.size(); ++a) {
        for (std::size_t b = a + 1; b < v.size(); ++b, ++pairs) {
          check.expect(stab_edge(g, nodes_from_incidence(v.vertex(a)),
                                 nodes_from_incidence(v.vertex(b))) == lp_edge(v, a, b),
                       "stab n=" + std::to_string(n));
        }
      }
    }
  }
  const double secs = seconds_since(start);
  check.expect(secs < kOracleSeconds, "oracle checks took " + num(secs) + " s");
  return std::to_string(pairs) + " pairs, " + num(secs) + " s";
}

// 3. Rhombus fulfillment audits.
std::string criterion3(Check& check) {
  std::vector<std::pair<std::string, std::function<VertexSet()>>> instances;
  for (int n = 3; n <= 6; ++n)
    instances.emplace_back("spanning-tree " + std::to_string(n), [n] { return spanning_tree_vertices(n); });
  for (int d = 1; d <= 6; ++d)
    instances.emplace_back("cube " + std::to_string(d), [d] { return cube_vertices(d); });
  for (int n = 1; n <= 5; ++n)
    instances.emplace_back("cross " + std::to_string(n), [n] { return cross_polytope_vertices(n); });
  for (int n = 2; n <= 4; ++n)
    instances.emplace_back("birkhoff " + std::to_string(n), [n] { return birkhoff_vertices(n); });
  for (int m = 1; m <= 4; ++m) {
    for (int n = m; n <= 4; ++n) {
      for (int k = 1; k <= m; ++k) {
        if (k_assignment_vertices(m, n, k).size() < 2) continue;
        instances.emplace_back("k-assignment " + std::to_string(m) + " " + std::to_string(n) +
                                   " " + std::to_string(k),
                               [m, n, k] { return k_assignment_vertices(m, n, k); });
      }
    }
  }
  for (int n = 2; n <= 4; ++n)
    instances.emplace_back("cim " + std::to_string(n), [n] { return enum_cim_vertices(n); });
  for (int n = 2; n <= 5; ++n)
    instances.emplace_back("cgp " + std::to_string(n), [n] { return enum_cgp_vertices(n); });

  double cgp5_seconds = 0;
  for (const auto& [name, make] : instances) {
    const auto start = Clock::now();
    check.expect(fulfills(make()), name + " does not fulfill");
    if (name == "cgp 5") cgp5_seconds = seconds_since(start);
  }
  std::size_t graphs = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const UGraph& g : all_graphs(n)) {
      const VertexSet v = stab_vertices(g);
      ++graphs;
      check.expect(fulfills(v), "stab of a graph on " + std::to_string(n) + " nodes");
    }
  }
  check.expect(cgp5_seconds < kCgp5Seconds, "CGP_5 took " + num(cgp5_seconds) + " s");
  return std::to_string(instances.size()) + " family instances and " + std::to_string(graphs) +
         " stable set polytopes; CGP_5 in " + num(cgp5_seconds) + " s";
}

// 4. Counterexamples.
std::string criterion4(Check& check) {
  check.expect(!fulfills(permutohedron_vertices(3)), "the hexagon fulfills");
  const CimTreeFixtureAudit a = audit_fixture_cimtree6();
  check.expect(a.distinct, "fixture imsets are not distinct");
  check.expect(a.affine_dimension == 3,
               "fixture affine dimension " + std::to_string(a.affine_dimension));
  check.expect(a.top_status == EdgeStatus::kNonEdge, "top pair is not a non-edge");
  check.expect(a.certificate_checked, "top pair certificate not checked");
  check.expect(!a.top_has_witness, "top pair has a witness in CIMTree_6");
  return "hexagon fails; fixture dimension " + std::to_string(a.affine_dimension) + ", top pair " +
         to_string(a.top_status) + ", witness " + (a.top_has_witness ? "found" : "none") +
         " among " + std::to_string(a.cimtree6_vertices) + " CIMTree_6 vertices";
}

// 5. Product law.
std::string criterion5(Check& check) {
  std::mt19937_64 rng(55);
  std::vector<VertexSet> pool = {cube_vertices(2), permutohedron_vertices(3),
                                 birkhoff_vertices(3), cross_polytope_vertices(3),
                                 cube_vertices(3), spanning_tree_vertices(4)};
  pool.erase(std::remove_if(pool.begin(), pool.end(),
                            [](const VertexSet& v) { return v.size() > 12; }),
             pool.end());
  auto random_set = [&]() -> VertexSet {
    if (rng() % 2 == 0) return pool[rng() % pool.size()];
    // A random 0/1 point set in dimension 2 to 4, 3 to 12 points.
    for (;;) {
      const int d = 2 + static_cast<int>(rng() % 3);
      const std::size_t count = 3 + rng() % 10;
      std::vector<IntVertex> rows;
      for (std::size_t i = 0; i < count; ++i) {
        IntVertex x(d);
        for (int j = 0; j < d; ++j) x[j] = static_cast<Coord>(rng() & 1);
        rows.push_back(x);
      }
      VertexSet v = VertexSet::sorted_unique(std::move(rows), d, "random");
      if (v.size() >= 3) return v;
    }
  };
  int false_cases = 0;
  for (int i = 0; i < kProductPairs; ++i) {
    const VertexSet p = random_set();
    const VertexSet q = random_set();
    const bool expected = fulfills(p) && fulfills(q);
    false_cases += !expected;
    check.expect(fulfills(product_vertices(p, q)) == expected,
                 "product of " + std::to_string(p.size()) + " and " + std::to_string(q.size()) +
                     " vertices");
  }
  return std::to_string(kProductPairs) + " products, " + std::to_string(false_cases) +
         " with a non-fulfilling factor";
}

// 6. Chordal machinery.
std::string criterion6(Check& check) {
  std::size_t subset_pairs = 0;
  std::size_t split_nonedges = 0;
  for (int n = 2; n <= 5; ++n) {
    std::vector<UGraph> chordal;
    for (const UGraph& g : all_graphs(n))
      if (is_chordal(g)) chordal.push_back(g);
    for (const UGraph& g : chordal) {
      for (const UGraph& h : chordal) {
        bool subset = true;
        for (const auto& [u, w] : g.edges()) subset = subset && h.has_edge(u, w);
        if (!subset) continue;
        ++subset_pairs;
        const DeltaGraph d(g, h);
        for (std::uint64_t s = 0; s <= d.all_components_mask(); ++s) {
          check.expect(chordally_compatible(g, d, s).verdict == Compatibility::kCompatible,
                       "incompatible selection under inclusion");
        }
      }
    }
  }
  for (int n = 3; n <= 5; ++n) {
    const VertexSet v = enum_cgp_vertices(n);
    const PairLedger ledger = pipeline_ledger(v, Method::kExact);
    std::vector<UGraph> graphs;
    for (std::size_t i = 0; i < v.size(); ++i) graphs.push_back(imset_pairs_graph(v.vertex(i), n));
    std::vector<std::vector<char>> adj(v.size(), std::vector<char>(v.size(), 0));
    for (const PairRecord& r : ledger.records) {
      if (r.status == PairStatus::kEdge) {
        adj[r.a][r.b] = adj[r.b][r.a] = 1;
        continue;
      }
      check.expect(r.status == PairStatus::kNonEdge, "unresolved CGP pair");
      if (!split_partition(graphs[r.a]) || !split_partition(graphs[r.b])) continue;
      ++split_nonedges;
      const bool witnessed = find_chordal_witnesses(graphs[r.a], graphs[r.b]).has_value() ||
                             find_witness(v, r.a, r.b).has_value();
      check.expect(witnessed, "split non-edge without witness, n=" + std::to_string(n));
    }
    UGraph kn(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) kn.add_edge(i, j);
    const std::size_t top = *v.find(chordal_imset(kn));
    bool diameter_two = true;
    for (std::size_t a = 0; a < v.size(); ++a) {
      if (a != top) check.expect(adj[a][top], "K_n not adjacent to vertex " + std::to_string(a));
      for (std::size_t b = a + 1; b < v.size() && diameter_two; ++b) {
        bool close = adj[a][b];
        for (std::size_t m = 0; m < v.size() && !close; ++m) close = adj[a][m] && adj[m][b];
        diameter_two = close;
      }
    }
    check.expect(diameter_two, "CGP_" + std::to_string(n) + " diameter above 2");
  }
  return std::to_string(subset_pairs) + " nested chordal pairs, " +
         std::to_string(split_nonedges) + " split non-edges, diameter 2 for n = 3..5";
}

// 7. The numeric path never verifies a non-edge.
std::string criterion7(Check& check) {
  std::vector<std::pair<std::string, VertexSet>> families = {
      {"cube 4", cube_vertices(4)},
      {"cross 4", cross_polytope_vertices(4)},
      {"birkhoff 4", birkhoff_vertices(4)},
      {"spanning-tree 5", spanning_tree_vertices(5)},
      {"k-assignment 3 4 2", k_assignment_vertices(3, 4, 2)},
      {"stab C6", stab_vertices(UGraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}))},
      {"cim 3", enum_cim_vertices(3)},
      {"cimtree 4", enum_cimtree_vertices(4)},
      {"cgp 4", enum_cgp_vertices(4)},
      {"permutohedron 4", permutohedron_vertices(4)},
      {"product", product_vertices(permutohedron_vertices(3), cube_vertices(2))},
  };
  std::vector<PairLedger> truth;
  std::vector<std::vector<std::size_t>> nonedges;
  for (const auto& [name, v] : families) {
    truth.push_back(pipeline_ledger(v, Method::kExact));
    nonedges.emplace_back();
    for (std::size_t i = 0; i < truth.back().size(); ++i)
      if (truth.back().records[i].status == PairStatus::kNonEdge) nonedges.back().push_back(i);
  }
  std::mt19937_64 rng(77);
  int verified = 0, nonedge_trials = 0;
  for (int trial = 0; trial < kNumericTrials; ++trial) {
    const std::size_t f = trial % families.size();
    const VertexSet& v = families[f].second;
    const PairLedger& ledger = truth[f];
    // Half the trials aim at known non-edges.
    const std::size_t pos = (trial / families.size()) % 2 == 0 && !nonedges[f].empty()
                                ? nonedges[f][rng() % nonedges[f].size()]
                                : rng() % ledger.size();
    const PairRecord& r = ledger.records[pos];
    NumericOptions opts;
    opts.seed = rng();
    const NumericOutcome out = verify_edge_numeric(v, r.a, r.b, opts);
    nonedge_trials += r.status == PairStatus::kNonEdge;
    if (!out.verified) continue;
    ++verified;
    check.expect(r.status == PairStatus::kEdge, "TRUE on a non-edge of " + families[f].first);
    check.expect(out.certificate && separates(v, r.a, r.b, *out.certificate),
                 "certificate of " + families[f].first + " does not separate");
  }
  return std::to_string(kNumericTrials) + " trials (" + std::to_string(nonedge_trials) +
         " on non-edges), " + std::to_string(verified) + " verified";
}

// 8. cost_update keeps alpha and beta level and drops mu below them.
std::string criterion8(Check& check) {
  const std::vector<VertexSet> sets = {birkhoff_vertices(4), enum_cgp_vertices(4),
                                       cube_vertices(5), spanning_tree_vertices(5),
                                       enum_cim_vertices(3)};
  std::mt19937_64 rng(88);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  double worst_gap = 0;
  int done = 0;
  while (done < kCostUpdateTrials) {
    const VertexSet& v = sets[done % sets.size()];
    const std::size_t a = rng() % v.size();
    const std::size_t b = (a + 1 + rng() % (v.size() - 1)) % v.size();
    const IntVertex alpha = v.vertex(a), beta = v.vertex(b);
    const std::size_t d = v.dim();
    std::vector<double> c(d), delta(d);
    double dd = 0, cd = 0;
    for (std::size_t i = 0; i < d; ++i) {
      delta[i] = static_cast<double>(alpha[i] - beta[i]);
      c[i] = coord(rng);
      dd += delta[i] * delta[i];
      cd += c[i] * delta[i];
    }
    for (std::size_t i = 0; i < d; ++i) c[i] -= cd / dd * delta[i];
    // mu: a vertex scoring strictly above alpha.
    std::vector<std::size_t> above;
    for (std::size_t m = 0; m < v.size(); ++m)
      if (dot(c, v.vertex(m)) > dot(c, alpha) + 1e-6) above.push_back(m);
    if (above.empty()) continue;
    const IntVertex mu = v.vertex(above[rng() % above.size()]);
    const CostFunction out = cost_update(CostFunction{c}, alpha, beta, mu, 1e-6);
    const double gap = std::abs(dot(out.weights, alpha) - dot(out.weights, beta));
    worst_gap = std::max(worst_gap, gap);
    check.expect(gap <= kCostTolerance, "alpha and beta scores differ by " + num(gap));
    check.expect(dot(out.weights, mu) < dot(out.weights, alpha), "mu not below alpha");
    ++done;
  }
  return std::to_string(done) + " instances, worst |<c',alpha> - <c',beta>| = " + num(worst_gap);
}

// Minimum wall-clock of run() over repeated runs covering kMinTimingWindow;
// setup() runs untimed before each one.
template <typename Setup, typename Run>
double min_seconds(Setup setup, Run run) {
  double best = 1e300, spent = 0;
  int runs = 0;
  while (spent < kMinTimingWindow || runs < kMinTimingRuns) {
    setup();
    const auto start = Clock::now();
    run();
    const double s = seconds_since(start);
    best = std::min(best, s);
    spent += s;
    ++runs;
  }
  return best;
}

// 9. Scaling shape.
std::string criterion9(Check& check) {
  std::vector<double> ratios;
  std::string detail;
  for (int n = 4; n <= 6; ++n) {
    const VertexSet v = birkhoff_vertices(n);
    // Ledger creation is its own pipeline stage; only the scan is timed.
    const PairLedger fresh = make_ledger(v, true);
    PairLedger ledger;
    const double t = min_seconds([&] { ledger = fresh; },
                                 [&] { rhombus_scan_in_place(ledger, v); });
    const double size = static_cast<double>(v.size());
    ratios.push_back(t / (size * size * std::log(size)));
    detail += "B_" + std::to_string(n) + " scan " + num(t * 1e3) + " ms; ";
  }
  const double spread = *std::max_element(ratios.begin(), ratios.end()) /
                        *std::min_element(ratios.begin(), ratios.end());
  check.expect(spread <= kScalingFactor, "scan time / (v^2 log v) varies by " + num(spread));

  const VertexSet b5 = birkhoff_vertices(5);
  double verify_share = 0;
  for (int run = 0; run < 3; ++run) {
    SkeletonConfig config;
    config.threads = 1;
    SkeletonStats stats;
    compute_skeleton(b5, config, &stats);
    verify_share = std::max(verify_share, stats.timings.verify / stats.timings.total);
  }
  check.expect(verify_share > 0.5, "verification is " + num(verify_share) + " of B_5 time");
  return detail + "spread " + num(spread) + "; verify share on B_5 " + num(verify_share);
}

std::string criterion_cim5(Check& check) {
  const auto start = Clock::now();
  const VertexSet v = enum_cim_vertices(5);
  SkeletonConfig config;
  SkeletonStats stats;
  const PairLedger ledger = compute_skeleton(v, config, &stats);
  const FulfillmentReport report = fulfillment_from_ledger(ledger);
  check.expect(report.fulfills, std::to_string(report.violations.size()) + " violations");
  return std::to_string(ledger.count(PairStatus::kEdge)) + " edges, " +
         num(seconds_since(start)) + " s";
}

}  // namespace
}  // namespace polyskel

int main(int argc, char** argv) {
  using namespace polyskel;
  bool long_jobs = false;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long") == 0) {
      long_jobs = true;
    } else {
      only.push_back(std::atoi(argv[i]));
    }
  }
  const std::vector<std::pair<std::string, std::function<std::string(Check&)>>> criteria = {
      {"vertex counts", criterion1},
      {"oracles agree with the exact LP", criterion2},
      {"rhombus fulfillment audits", criterion3},
      {"counterexamples reproduce", criterion4},
      {"product law", criterion5},
      {"chordal machinery", criterion6},
      {"numeric path soundness", criterion7},
      {"cost_update contract", criterion8},
      {"scaling shape", criterion9},
  };
  int failed = 0;
  auto report = [&](const std::string& label, const std::function<std::string(Check&)>& fn) {
    Check check;
    const auto start = Clock::now();
    std::string detail;
    try {
      detail = fn(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    failed += !check.ok();
    std::printf("%s %s: %s (%zu checks, %.1f s)%s\n", check.ok() ? "PASS" : "FAIL", label.c_str(),
                detail.c_str(), check.checks(), seconds_since(start), check.failures().c_str());
    std::fflush(stdout);
  };
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    report("criterion " + std::to_string(id) + " " + criteria[i].first, criteria[i].second);
  }
  if (long_jobs) report("long: CIM_5 fulfills the rhombus criterion", criterion_cim5);
  return failed;
}
