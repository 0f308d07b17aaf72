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

// Rhombus-criterion prefilter. Two pairs with equal sums alpha + beta =
// alpha' + beta' certify each other as non-edges; sorting the ledger by the
// sum key puts such pairs next to each other.

#ifndef POLYSKEL_RHOMBUS_HPP_
#define POLYSKEL_RHOMBUS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "polyskel/core.hpp"
#include "polyskel/ledger.hpp"

namespace polyskel {

struct RhombusScanStats {
  std::size_t pairs = 0;
  std::size_t marked_nonedge = 0;
  std::size_t groups = 0;  // sum-key groups with at least two pairs
};

// Sorts by sum key (lexicographic, ties by (a, b)) and marks every record in
// a group of size >= 2 as NonEdge. Witnesses are assigned in pairs within a
// group, (0,1), (2,3), ...; a leftover last record takes the first record's
// pair. Other records are left untouched. Builds keys if the ledger has none.
RhombusScanStats rhombus_scan_in_place(PairLedger& ledger, const VertexSet& vertices);
PairLedger rhombus_scan(PairLedger ledger, const VertexSet& vertices,
                        RhombusScanStats* stats = nullptr);

// Exhaustive witness lookup for one pair: some other pair {c, d} with
// c + d = a + b, or nullopt. O(v d log v).
std::optional<std::pair<std::size_t, std::size_t>> find_witness(const VertexSet& vertices,
                                                                 std::size_t a, std::size_t b);

using EdgeOracle = std::function<PairStatus(std::size_t, std::size_t)>;

struct FulfillmentReport {
  bool fulfills = true;
  // Non-edges without a witness pair in the vertex set.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> violations;
  RhombusScanStats scan;
};

// A pair violates when the oracle calls it a non-edge and no witness exists.
// The oracle is only asked about pairs the scan leaves Unknown.
FulfillmentReport check_fulfillment(const VertexSet& vertices, const EdgeOracle& oracle);
// Same audit over a fully resolved ledger: NonEdge records without witnesses.
FulfillmentReport fulfillment_from_ledger(const PairLedger& resolved);

}  // namespace polyskel

#endif  // POLYSKEL_RHOMBUS_HPP_
