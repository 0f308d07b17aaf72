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

#include "polyskel/rhombus.hpp"

#include <algorithm>

#include "polyskel/error.hpp"

namespace polyskel {

RhombusScanStats rhombus_scan_in_place(PairLedger& ledger, const VertexSet& vertices) {
  RhombusScanStats stats;
  stats.pairs = ledger.size();
  if (ledger.records.empty()) return stats;
  const SumKeyPacker packer(vertices);
  if (!ledger.has_keys()) {
    ledger.packed_keys.resize(ledger.size());
    for (std::size_t i = 0; i < ledger.size(); ++i) {
      ledger.packed_keys[i] = packer.pack(ledger.records[i].a, ledger.records[i].b);
    }
    ledger.keys_exact = packer.exact();
  }

  // Records are in (a,b) order, so the position doubles as the tie-break.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> order(ledger.size());
  for (std::size_t i = 0; i < ledger.size(); ++i) {
    order[i] = {ledger.packed_keys[i], static_cast<std::uint32_t>(i)};
  }
  const auto& recs = ledger.records;
  auto full_compare = [&](std::uint32_t x, std::uint32_t y) {
    return packer.compare(recs[x].a, recs[x].b, recs[y].a, recs[y].b);
  };
  if (ledger.keys_exact) {
    std::sort(order.begin(), order.end());
  } else {
    std::sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first < y.first;
      const int c = full_compare(x.second, y.second);
      return c != 0 ? c < 0 : x.second < y.second;
    });
  }

  auto same_key = [&](std::size_t i, std::size_t j) {
    if (order[i].first != order[j].first) return false;
    return ledger.keys_exact || full_compare(order[i].second, order[j].second) == 0;
  };
  std::size_t begin = 0;
  while (begin < order.size()) {
    std::size_t end = begin + 1;
    while (end < order.size() && same_key(begin, end)) ++end;
    const std::size_t size = end - begin;
    if (size >= 2) {
      ++stats.groups;
      auto rec = [&](std::size_t k) -> PairRecord& {
        return ledger.records[order[begin + k].second];
      };
      for (std::size_t k = 0; k < size; ++k) {
        // Partner: the other half of the (2j, 2j+1) pair, or record 0 for a
        // trailing odd record.
        const std::size_t partner = (k + 1 == size && size % 2 == 1) ? 0 : (k ^ 1);
        PairRecord& r = rec(k);
        const PairRecord& w = rec(partner);
        r.status = PairStatus::kNonEdge;
        r.witness_a = w.a;
        r.witness_b = w.b;
        ++stats.marked_nonedge;
      }
    }
    begin = end;
  }
  return stats;
}

PairLedger rhombus_scan(PairLedger ledger, const VertexSet& vertices, RhombusScanStats* stats) {
  RhombusScanStats s = rhombus_scan_in_place(ledger, vertices);
  if (stats) *stats = s;
  return ledger;
}

std::optional<std::pair<std::size_t, std::size_t>> find_witness(const VertexSet& vertices,
                                                                 std::size_t a, std::size_t b) {
  if (a >= vertices.size() || b >= vertices.size() || a == b) {
    throw DomainError("find_witness needs two distinct valid indices");
  }
  const std::size_t d = vertices.dim();
  std::vector<Coord> target(d);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (v == a || v == b) continue;
    for (std::size_t i = 0; i < d; ++i) target[i] = vertices[a][i] + vertices[b][i] - vertices[v][i];
    auto other = vertices.find(target);
    if (other && *other != a && *other != b && *other != v) {
      return std::make_pair(std::min(v, *other), std::max(v, *other));
    }
  }
  return std::nullopt;
}

FulfillmentReport check_fulfillment(const VertexSet& vertices, const EdgeOracle& oracle) {
  PairLedger ledger = make_ledger(vertices, true);
  FulfillmentReport report;
  report.scan = rhombus_scan_in_place(ledger, vertices);
  for (PairRecord& r : ledger.records) {
    if (r.status != PairStatus::kUnknown) continue;
    r.status = oracle(r.a, r.b);
    if (r.status == PairStatus::kNonEdge) report.violations.emplace_back(r.a, r.b);
  }
  report.fulfills = report.violations.empty();
  return report;
}

FulfillmentReport fulfillment_from_ledger(const PairLedger& resolved) {
  FulfillmentReport report;
  report.scan.pairs = resolved.size();
  for (const PairRecord& r : resolved.records) {
    if (r.status == PairStatus::kUnknown) {
      throw DomainError("fulfillment audit needs a fully resolved ledger");
    }
    if (r.status == PairStatus::kNonEdge) {
      if (r.has_witness()) ++report.scan.marked_nonedge;
      else report.violations.emplace_back(r.a, r.b);
    }
  }
  std::sort(report.violations.begin(), report.violations.end());
  report.fulfills = report.violations.empty();
  return report;
}

}  // namespace polyskel
