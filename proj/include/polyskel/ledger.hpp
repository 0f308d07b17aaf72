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

#ifndef POLYSKEL_LEDGER_HPP_
#define POLYSKEL_LEDGER_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "polyskel/core.hpp"

namespace polyskel {

enum class PairStatus : std::int8_t { kNonEdge = -1, kUnknown = 0, kEdge = 1 };

const char* to_string(PairStatus s);

struct PairRecord {
  std::uint32_t a = 0;
  std::uint32_t b = 0;  // a < b
  std::uint32_t witness_a = kNoIndex;
  std::uint32_t witness_b = kNoIndex;
  PairStatus status = PairStatus::kUnknown;
  // Set when the status was decided by the exact LP rather than a witness.
  bool exact_certificate = false;

  bool has_witness() const { return witness_a != kNoIndex; }
  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

// Order-preserving packing of the sum key alpha + beta. Leading coordinates
// are packed into one 64-bit mixed-radix word (first coordinate most
// significant) for as long as they fit; exact() says whether every coordinate
// made it, otherwise ties on the packed word must be broken by comparing the
// remaining sums.
class SumKeyPacker {
 public:
  explicit SumKeyPacker(const VertexSet& vertices);
  std::uint64_t pack(std::size_t a, std::size_t b) const;
  bool exact() const { return packed_coords_ == vertices_->dim(); }
  std::size_t packed_coords() const { return packed_coords_; }
  // Lexicographic comparison of the full keys; <0, 0, >0.
  int compare(std::size_t a1, std::size_t b1, std::size_t a2, std::size_t b2) const;

 private:
  const VertexSet* vertices_;
  std::vector<Coord> low_;
  std::vector<std::uint64_t> weight_;
  std::size_t packed_coords_ = 0;
};

// The list of all unordered vertex pairs with their status. When fully
// materialized, records are in canonical order: (0,1), (0,2), ..., (v-2,v-1).
struct PairLedger {
  std::vector<PairRecord> records;
  std::size_t vertex_count = 0;
  // Parallel to records when keyed; see SumKeyPacker.
  std::vector<std::uint64_t> packed_keys;
  bool keys_exact = false;

  bool has_keys() const { return packed_keys.size() == records.size() && !records.empty(); }
  std::size_t size() const { return records.size(); }

  // Position of {a,b} in a fully materialized ledger.
  static std::size_t canonical_position(std::size_t a, std::size_t b, std::size_t v);
  PairRecord& at(std::size_t a, std::size_t b);
  const PairRecord& at(std::size_t a, std::size_t b) const;

  std::size_t count(PairStatus s) const;
  // Sorted (a,b) pairs with status Edge.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
};

// alpha + beta, coordinate-wise.
IntVertex sum_key(const IntVertex& a, const IntVertex& b);
IntVertex sum_key(const VertexSet& vertices, std::size_t a, std::size_t b);

// One Unknown record per unordered pair. Throws DomainError when |V| < 2.
PairLedger make_ledger(const VertexSet& vertices, bool with_keys);

// CSV with header "a,b,status,witness_a,witness_b"; witness fields empty when
// absent. status is -1, 0 or 1.
void write_ledger_csv(std::ostream& out, std::span<const PairRecord> records);
// One data line, no header.
void write_ledger_csv_row(std::ostream& out, const PairRecord& r);
void write_ledger_csv(const std::filesystem::path& path, const PairLedger& ledger);
PairLedger read_ledger_csv(std::istream& in);

// {"dim": d, "vertices": v, "edges": [[i,j], ...]}, edges sorted.
void write_skeleton_json(std::ostream& out, std::size_t dim, std::size_t vertices,
                         std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

}  // namespace polyskel

#endif  // POLYSKEL_LEDGER_HPP_
