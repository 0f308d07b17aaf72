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

#include "polyskel/ledger.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "polyskel/error.hpp"

namespace polyskel {

const char* to_string(PairStatus s) {
  switch (s) {
    case PairStatus::kNonEdge: return "non-edge";
    case PairStatus::kUnknown: return "unknown";
    case PairStatus::kEdge: return "edge";
  }
  return "?";
}

SumKeyPacker::SumKeyPacker(const VertexSet& vertices) : vertices_(&vertices) {
  const std::size_t d = vertices.dim();
  low_.assign(d, 0);
  weight_.assign(d, 0);
  std::vector<std::uint64_t> radix(d, 1);
  for (std::size_t j = 0; j < d; ++j) {
    Coord lo = vertices.empty() ? 0 : vertices[0][j];
    Coord hi = lo;
    for (std::size_t v = 1; v < vertices.size(); ++v) {
      lo = std::min(lo, vertices[v][j]);
      hi = std::max(hi, vertices[v][j]);
    }
    low_[j] = 2 * lo;
    radix[j] = static_cast<std::uint64_t>(2 * (std::int64_t{hi} - lo)) + 1;
  }
  // Mixed radix: a 0/1 coordinate sum takes three values, so 40 of them fit
  // where a bit layout would stop at 32.
  unsigned __int128 capacity = 1;
  const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 64;
  while (packed_coords_ < d && capacity * radix[packed_coords_] <= limit) {
    capacity *= radix[packed_coords_];
    ++packed_coords_;
  }
  // First coordinate most significant.
  std::uint64_t w = 1;
  for (std::size_t j = packed_coords_; j-- > 0;) {
    weight_[j] = w;
    w *= radix[j];  // wraps only after the last (most significant) coordinate
  }
}

std::uint64_t SumKeyPacker::pack(std::size_t a, std::size_t b) const {
  auto va = (*vertices_)[a];
  auto vb = (*vertices_)[b];
  std::uint64_t key = 0;
  for (std::size_t j = 0; j < packed_coords_; ++j) {
    key += static_cast<std::uint64_t>(std::int64_t{va[j]} + vb[j] - low_[j]) * weight_[j];
  }
  return key;
}

int SumKeyPacker::compare(std::size_t a1, std::size_t b1, std::size_t a2,
                          std::size_t b2) const {
  auto x1 = (*vertices_)[a1];
  auto y1 = (*vertices_)[b1];
  auto x2 = (*vertices_)[a2];
  auto y2 = (*vertices_)[b2];
  for (std::size_t j = 0; j < vertices_->dim(); ++j) {
    const std::int64_t s1 = std::int64_t{x1[j]} + y1[j];
    const std::int64_t s2 = std::int64_t{x2[j]} + y2[j];
    if (s1 != s2) return s1 < s2 ? -1 : 1;
  }
  return 0;
}

std::size_t PairLedger::canonical_position(std::size_t a, std::size_t b, std::size_t v) {
  if (a > b) std::swap(a, b);
  // Records before row a: sum_{r<a} (v-1-r) = a*(2v-a-1)/2.
  return a * (2 * v - a - 1) / 2 + (b - a - 1);
}

PairRecord& PairLedger::at(std::size_t a, std::size_t b) {
  return records.at(canonical_position(a, b, vertex_count));
}

const PairRecord& PairLedger::at(std::size_t a, std::size_t b) const {
  return records.at(canonical_position(a, b, vertex_count));
}

std::size_t PairLedger::count(PairStatus s) const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [s](const PairRecord& r) { return r.status == s; }));
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> PairLedger::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const PairRecord& r : records) {
    if (r.status == PairStatus::kEdge) out.emplace_back(r.a, r.b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntVertex sum_key(const IntVertex& a, const IntVertex& b) {
  if (a.dim() != b.dim()) {
    throw DomainError("sum_key: dimension mismatch " + std::to_string(a.dim()) + " vs " +
                      std::to_string(b.dim()));
  }
  IntVertex out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVertex sum_key(const VertexSet& vertices, std::size_t a, std::size_t b) {
  return sum_key(vertices.vertex(a), vertices.vertex(b));
}

PairLedger make_ledger(const VertexSet& vertices, bool with_keys) {
  const std::size_t v = vertices.size();
  if (v < 2) throw DomainError("a ledger needs at least 2 vertices, got " + std::to_string(v));
  if (v > kNoIndex) throw DomainError("too many vertices for 32-bit indices");
  PairLedger ledger;
  ledger.vertex_count = v;
  const std::size_t n = v * (v - 1) / 2;
  ledger.records.resize(n);
  std::size_t pos = 0;
  for (std::uint32_t a = 0; a + 1 < v; ++a) {
    for (std::uint32_t b = a + 1; b < v; ++b) {
      PairRecord& r = ledger.records[pos++];
      r.a = a;
      r.b = b;
    }
  }
  if (with_keys) {
    SumKeyPacker packer(vertices);
    ledger.keys_exact = packer.exact();
    ledger.packed_keys.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      ledger.packed_keys[i] = packer.pack(ledger.records[i].a, ledger.records[i].b);
    }
  }
  return ledger;
}

void write_ledger_csv_row(std::ostream& out, const PairRecord& r) {
  out << r.a << ',' << r.b << ',' << static_cast<int>(r.status) << ',';
  if (r.has_witness()) out << r.witness_a << ',' << r.witness_b;
  else out << ',';
  out << '\n';
}

void write_ledger_csv(std::ostream& out, std::span<const PairRecord> records) {
  out << "a,b,status,witness_a,witness_b\n";
  for (const PairRecord& r : records) write_ledger_csv_row(out, r);
}

void write_ledger_csv(const std::filesystem::path& path, const PairLedger& ledger) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string(), 0);
  write_ledger_csv(out, ledger.records);
}

namespace {

std::uint32_t parse_field(const std::string& field, std::size_t line_no) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError("bad ledger field '" + field + "'", line_no);
  }
  return value;
}

}  // namespace

PairLedger read_ledger_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || line != "a,b,status,witness_a,witness_b") {
    throw ParseError("missing ledger header", 1);
  }
  PairLedger ledger;
  std::size_t max_index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) f.push_back(field);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 5) throw ParseError("ledger row needs 5 fields", line_no);
    PairRecord r;
    r.a = parse_field(f[0], line_no);
    r.b = parse_field(f[1], line_no);
    if (f[2] == "-1") r.status = PairStatus::kNonEdge;
    else if (f[2] == "0") r.status = PairStatus::kUnknown;
    else if (f[2] == "1") r.status = PairStatus::kEdge;
    else throw ParseError("bad status '" + f[2] + "'", line_no);
    if (f[3].empty() != f[4].empty()) throw ParseError("half-empty witness", line_no);
    if (!f[3].empty()) {
      r.witness_a = parse_field(f[3], line_no);
      r.witness_b = parse_field(f[4], line_no);
    }
    max_index = std::max<std::size_t>(max_index, std::max(r.a, r.b));
    ledger.records.push_back(r);
  }
  ledger.vertex_count = ledger.records.empty() ? 0 : max_index + 1;
  return ledger;
}

void write_skeleton_json(std::ostream& out, std::size_t dim, std::size_t vertices,
                         std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
  out << "{\"dim\": " << dim << ", \"vertices\": " << vertices << ", \"edges\": [";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << (i ? ", " : "") << '[' << edges[i].first << ", " << edges[i].second << ']';
  }
  out << "]}\n";
}

}  // namespace polyskel
