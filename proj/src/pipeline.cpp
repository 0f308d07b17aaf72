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

#include "polyskel/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <mutex>
#include <queue>
#include <thread>

#include "polyskel/error.hpp"
#include "polyskel/faces.hpp"

namespace polyskel {

const char* to_string(Method m) {
  switch (m) {
    case Method::kPipeline:
      return "pipeline";
    case Method::kExact:
      return "exact";
    case Method::kNumeric:
      return "numeric";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  if (name == "pipeline") return Method::kPipeline;
  if (name == "exact") return Method::kExact;
  if (name == "numeric") return Method::kNumeric;
  throw DomainError("unknown method '" + name + "' (expected pipeline, exact or numeric)");
}

std::size_t memory_budget_from_env(std::size_t fallback) {
  const char* env = std::getenv("POLYSKEL_MEM_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || value == 0) return fallback;
  return static_cast<std::size_t>(value);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

unsigned thread_count(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs body(i) for i in [0, n) on a small pool. The first exception thrown
// by any worker is rethrown here.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body body) {
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (;;) {
        if (failed.load(std::memory_order_relaxed)) return;
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= n) return;
        body(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      failed = true;
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void tally(Resolution r, SkeletonStats& stats) {
  switch (r) {
    case Resolution::kNumeric:
      ++stats.numeric_edges;
      break;
    case Resolution::kExactEdge:
      ++stats.exact_edges;
      break;
    case Resolution::kExactNonEdge:
      ++stats.exact_nonedges;
      break;
    case Resolution::kUnresolved:
      ++stats.unresolved;
      break;
  }
}

// Resolves every Unknown record of the ledger in place.
void resolve_unknown(PairLedger& ledger, const VertexSet& vertices, const SkeletonConfig& config,
                     SkeletonStats& stats) {
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < ledger.size(); ++i) {
    if (ledger.records[i].status == PairStatus::kUnknown) pending.push_back(i);
  }
  std::vector<Resolution> results(pending.size());
  parallel_for(pending.size(), thread_count(config.threads), [&](std::size_t k) {
    const PairRecord& r = ledger.records[pending[k]];
    results[k] = resolve_pair(vertices, r.a, r.b, config);
  });
  for (std::size_t k = 0; k < pending.size(); ++k) {
    PairRecord& r = ledger.records[pending[k]];
    r.status = status_of(results[k]);
    r.exact_certificate =
        results[k] == Resolution::kExactEdge || results[k] == Resolution::kExactNonEdge;
    tally(results[k], stats);
  }
}

std::uint64_t sum_key_hash(const VertexSet& vertices, std::size_t a, std::size_t b) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto va = vertices[a];
  const auto vb = vertices[b];
  for (std::size_t i = 0; i < va.size(); ++i) {
    h ^= static_cast<std::uint32_t>(va[i] + vb[i]);
    h *= 0x100000001b3ULL;
  }
  return splitmix64(h);
}

}  // namespace

std::uint64_t pair_seed(std::uint64_t root, std::size_t a, std::size_t b) {
  return splitmix64(root ^ splitmix64((static_cast<std::uint64_t>(a) << 32) ^ b));
}

PairStatus status_of(Resolution r) {
  switch (r) {
    case Resolution::kNumeric:
    case Resolution::kExactEdge:
      return PairStatus::kEdge;
    case Resolution::kExactNonEdge:
      return PairStatus::kNonEdge;
    case Resolution::kUnresolved:
      return PairStatus::kUnknown;
  }
  return PairStatus::kUnknown;
}

Resolution resolve_pair(const VertexSet& vertices, std::size_t a, std::size_t b,
                        const SkeletonConfig& config) {
  const VertexSet* work = &vertices;
  VertexSet face;
  std::size_t la = a;
  std::size_t lb = b;
  if (config.face_restriction && vertices.is_binary()) {
    const std::vector<std::size_t> idx = restrict_face(vertices, a, b);
    face = vertices.subset(idx);
    la = static_cast<std::size_t>(std::lower_bound(idx.begin(), idx.end(), a) - idx.begin());
    lb = static_cast<std::size_t>(std::lower_bound(idx.begin(), idx.end(), b) - idx.begin());
    work = &face;
  }
  if (config.method != Method::kExact) {
    NumericOptions options;
    options.max_iter = config.max_iter;
    options.seed = pair_seed(config.seed, a, b);
    if (verify_edge_numeric(*work, la, lb, options).verified) return Resolution::kNumeric;
    if (config.method == Method::kNumeric) return Resolution::kUnresolved;
  }
  const EdgeVerdict verdict = exact_edge_test(*work, la, lb);
  return verdict.status == EdgeStatus::kEdge ? Resolution::kExactEdge
                                             : Resolution::kExactNonEdge;
}

PairLedger compute_skeleton(const VertexSet& vertices, const SkeletonConfig& config,
                            SkeletonStats* stats_out) {
  if (vertices.size() < 2) throw DomainError("compute_skeleton needs at least 2 vertices");
  const std::size_t pairs = vertices.size() * (vertices.size() - 1) / 2;
  if (pairs > config.memory_budget) {
    throw BudgetExceeded("ledger of " + std::to_string(pairs) + " pairs exceeds the budget of " +
                         std::to_string(config.memory_budget) +
                         " records; rerun in sharded mode (--shards) or raise "
                         "POLYSKEL_MEM_BUDGET");
  }
  SkeletonStats stats;
  const auto start = Clock::now();
  PairLedger ledger = make_ledger(vertices, true);
  stats.timings.ledger = seconds_since(start);

  const auto scan_start = Clock::now();
  stats.scan = rhombus_scan_in_place(ledger, vertices);
  stats.timings.rhombus = seconds_since(scan_start);

  const auto verify_start = Clock::now();
  resolve_unknown(ledger, vertices, config, stats);
  stats.timings.verify = seconds_since(verify_start);
  stats.timings.total = seconds_since(start);
  if (stats_out) *stats_out = stats;
  return ledger;
}

ShardedResult compute_skeleton_sharded(const VertexSet& vertices, const SkeletonConfig& config,
                                       std::size_t shards, const std::filesystem::path& work_dir,
                                       std::ostream* ledger_csv) {
  if (vertices.size() < 2) throw DomainError("compute_skeleton needs at least 2 vertices");
  if (vertices.size() > kNoIndex) throw DomainError("too many vertices for 32-bit indices");
  if (shards == 0) throw DomainError("shard count must be positive");
  std::filesystem::create_directories(work_dir);
  const auto v = static_cast<std::uint32_t>(vertices.size());
  const SumKeyPacker packer(vertices);

  ShardedResult result;
  SkeletonStats& stats = result.stats;
  const auto start = Clock::now();
  std::vector<std::filesystem::path> files;
  for (std::size_t s = 0; s < shards; ++s) {
    auto t0 = Clock::now();
    PairLedger shard;
    shard.vertex_count = v;
    shard.keys_exact = packer.exact();
    for (std::uint32_t a = 0; a + 1 < v; ++a) {
      for (std::uint32_t b = a + 1; b < v; ++b) {
        if (sum_key_hash(vertices, a, b) % shards != s) continue;
        PairRecord r;
        r.a = a;
        r.b = b;
        shard.records.push_back(r);
        shard.packed_keys.push_back(packer.pack(a, b));
      }
    }
    if (shard.size() > config.memory_budget) {
      throw BudgetExceeded("shard " + std::to_string(s) + " holds " +
                           std::to_string(shard.size()) + " pairs, above the budget of " +
                           std::to_string(config.memory_budget) + "; use more shards");
    }
    stats.timings.ledger += seconds_since(t0);

    t0 = Clock::now();
    const RhombusScanStats scan = rhombus_scan_in_place(shard, vertices);
    stats.scan.pairs += scan.pairs;
    stats.scan.marked_nonedge += scan.marked_nonedge;
    stats.scan.groups += scan.groups;
    stats.timings.rhombus += seconds_since(t0);

    t0 = Clock::now();
    resolve_unknown(shard, vertices, config, stats);
    stats.timings.verify += seconds_since(t0);

    files.push_back(work_dir / ("shard-" + std::to_string(s) + ".bin"));
    std::ofstream out(files.back(), std::ios::binary);
    if (!out) throw ParseError("cannot write " + files.back().string(), 0);
    out.write(reinterpret_cast<const char*>(shard.records.data()),
              static_cast<std::streamsize>(shard.records.size() * sizeof(PairRecord)));
    if (!out) throw ParseError("short write to " + files.back().string(), 0);
  }

  // k-way merge back into (a,b) order.
  std::vector<std::ifstream> inputs;
  for (const auto& f : files) inputs.emplace_back(f, std::ios::binary);
  using Head = std::pair<std::pair<std::uint32_t, std::uint32_t>, std::size_t>;
  std::priority_queue<Head, std::vector<Head>, std::greater<>> heap;
  std::vector<PairRecord> current(files.size());
  auto advance = [&](std::size_t s) {
    if (inputs[s].read(reinterpret_cast<char*>(&current[s]), sizeof(PairRecord))) {
      heap.push({{current[s].a, current[s].b}, s});
    }
  };
  for (std::size_t s = 0; s < files.size(); ++s) advance(s);
  if (ledger_csv) *ledger_csv << "a,b,status,witness_a,witness_b\n";
  while (!heap.empty()) {
    const std::size_t s = heap.top().second;
    heap.pop();
    const PairRecord& r = current[s];
    if (r.status == PairStatus::kEdge) result.edges.emplace_back(r.a, r.b);
    if (ledger_csv) write_ledger_csv_row(*ledger_csv, r);
    advance(s);
  }
  inputs.clear();
  for (const auto& f : files) std::filesystem::remove(f);
  stats.timings.total = seconds_since(start);
  return result;
}

}  // namespace polyskel
