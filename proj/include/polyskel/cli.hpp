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

// Command-line front end and the reports it prints: family construction by
// name, the CIMTree_6 counterexample fixture and per-stage timings.

#ifndef POLYSKEL_CLI_HPP_
#define POLYSKEL_CLI_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "polyskel/core.hpp"
#include "polyskel/edgecheck.hpp"
#include "polyskel/graphs.hpp"
#include "polyskel/pipeline.hpp"

namespace polyskel {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitIndeterminate = 2;
inline constexpr int kExitUsage = 64;

// Parses argv and dispatches to a subcommand; output goes to out, errors and
// usage text to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct FamilyRequest {
  std::string name;  // cim, cimtree, cgp, spanning-tree, birkhoff, k-assignment,
                     // stab, cross, permutohedron, cube, product
  int n = 0;
  int m = 0;
  int k = 0;
  std::filesystem::path graph;                 // stab
  std::vector<std::filesystem::path> factors;  // product: exactly two vertex files
};

// Throws DomainError for unknown names or missing parameters.
VertexSet make_family(const FamilyRequest& request);

// The five graphs spanning a face of CIMTree_6 that breaks the rhombus
// criterion. vertices holds their imsets in that order; the top pair is
// (0, 1).
struct CimTreeFixture {
  std::vector<Dag> graphs;
  VertexSet vertices;
  std::size_t top_a = 0;
  std::size_t top_b = 1;
};
CimTreeFixture fixture_cimtree6();

struct CimTreeFixtureAudit {
  bool distinct = false;
  int affine_dimension = -1;
  std::size_t cimtree6_vertices = 0;
  std::size_t face_vertices = 0;      // |F_{alpha,beta}| inside CIMTree_6
  EdgeStatus top_status = EdgeStatus::kIndeterminate;  // exact LP on that face
  bool certificate_checked = false;
  bool top_has_witness = true;        // exhaustive scan over CIMTree_6
};
CimTreeFixtureAudit audit_fixture_cimtree6();

struct TimingRow {
  std::string instance;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  StageTimings timings;
};
// Runs the pipeline on each instance and records per-stage wall-clock.
std::vector<TimingRow> timing_report(const std::vector<std::pair<std::string, VertexSet>>& instances,
                                     const SkeletonConfig& config);
// Columns: instance, vertices, edges, total, ledger, rhombus, verify.
void write_timing_table(std::ostream& out, const std::vector<TimingRow>& rows);

}  // namespace polyskel

#endif  // POLYSKEL_CLI_HPP_
