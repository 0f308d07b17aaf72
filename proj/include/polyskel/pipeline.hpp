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

// The full edge pipeline: ledger, rhombus prefilter, then per-pair face
// restriction, numeric verification and the exact LP for what is left.

#ifndef POLYSKEL_PIPELINE_HPP_
#define POLYSKEL_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "polyskel/core.hpp"
#include "polyskel/edgecheck.hpp"
#include "polyskel/ledger.hpp"
#include "polyskel/rhombus.hpp"

namespace polyskel {

enum class Method { kPipeline, kExact, kNumeric };

const char* to_string(Method m);
// "pipeline", "exact" or "numeric"; DomainError otherwise.
Method parse_method(const std::string& name);

inline constexpr std::size_t kDefaultMemoryBudget = 100'000'000;  // ledger records

// POLYSKEL_MEM_BUDGET when set to a positive integer, else the fallback.
std::size_t memory_budget_from_env(std::size_t fallback = kDefaultMemoryBudget);

struct SkeletonConfig {
  Method method = Method::kPipeline;
  unsigned threads = 0;  // 0: hardware concurrency
  std::uint64_t seed = 1;
  int max_iter = 100;
  std::size_t memory_budget = kDefaultMemoryBudget;
  // Restrict each pair to its face F_{alpha,beta} first (0/1 input only).
  bool face_restriction = true;
};

struct StageTimings {
  double ledger = 0;
  double rhombus = 0;
  double verify = 0;
  double total = 0;
};

struct SkeletonStats {
  RhombusScanStats scan;
  std::size_t numeric_edges = 0;
  std::size_t exact_edges = 0;
  std::size_t exact_nonedges = 0;
  std::size_t unresolved = 0;  // only with Method::kNumeric
  StageTimings timings;
};

enum class Resolution { kNumeric, kExactEdge, kExactNonEdge, kUnresolved };

// Per-pair part of the pipeline; the random seed is derived from
// (config.seed, a, b) so the result does not depend on scheduling.
Resolution resolve_pair(const VertexSet& vertices, std::size_t a, std::size_t b,
                        const SkeletonConfig& config);
PairStatus status_of(Resolution r);

std::uint64_t pair_seed(std::uint64_t root, std::size_t a, std::size_t b);

// Every record ends Edge or NonEdge (Unknown only for Method::kNumeric, whose
// failures are inconclusive). Throws BudgetExceeded when v(v-1)/2 exceeds
// config.memory_budget; compute_skeleton_sharded handles those inputs.
PairLedger compute_skeleton(const VertexSet& vertices, const SkeletonConfig& config,
                            SkeletonStats* stats = nullptr);

struct ShardedResult {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  SkeletonStats stats;
};

// Out-of-core variant. Pairs are split by a hash of their sum key, so every
// rhombus group lands in a single shard; each shard is scanned, resolved and
// spilled to work_dir, then the shards are merged back in (a,b) order. The
// ledger CSV, when requested, is identical to the in-memory one.
ShardedResult compute_skeleton_sharded(const VertexSet& vertices, const SkeletonConfig& config,
                                       std::size_t shards, const std::filesystem::path& work_dir,
                                       std::ostream* ledger_csv = nullptr);

}  // namespace polyskel

#endif  // POLYSKEL_PIPELINE_HPP_
