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

#include "polyskel/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "polyskel/error.hpp"

namespace polyskel {

std::string to_string(const IntVertex& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

namespace {

bool lex_less(std::span<const Coord> a, std::span<const Coord> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

VertexSet VertexSet::from_vertices(std::span<const IntVertex> vertices,
                                   std::size_t dim, std::string family_tag) {
  if (dim == 0) throw DomainError("vertex set dimension must be positive");
  VertexSet raw;
  raw.dim_ = dim;
  raw.data_.reserve(vertices.size() * dim);
  for (const IntVertex& v : vertices) {
    if (v.dim() != dim) {
      throw DomainError("vertex " + to_string(v) + " has dimension " +
                        std::to_string(v.dim()) + ", expected " + std::to_string(dim));
    }
    raw.data_.insert(raw.data_.end(), v.coords().begin(), v.coords().end());
  }
  raw.count_ = vertices.size();

  // Stable sort keeps the first occurrence at the front of each run.
  std::vector<std::uint32_t> order(raw.count_);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return lex_less(raw[a], raw[b]);
  });
  std::vector<char> keep(raw.count_, 1);
  for (std::size_t k = 1; k < order.size(); ++k) {
    auto prev = raw[order[k - 1]];
    auto cur = raw[order[k]];
    if (std::equal(prev.begin(), prev.end(), cur.begin())) {
      keep[order[k]] = 0;
      order[k] = order[k - 1];  // the run representative
    }
  }

  VertexSet out;
  out.dim_ = dim;
  out.tag_ = std::move(family_tag);
  for (std::size_t i = 0; i < raw.count_; ++i) {
    if (!keep[i]) {
      ++out.dropped_;
      continue;
    }
    auto row = raw[i];
    out.data_.insert(out.data_.end(), row.begin(), row.end());
  }
  out.count_ = out.data_.size() / dim;
  out.finalize();
  return out;
}

VertexSet VertexSet::sorted_unique(std::vector<IntVertex> vertices, std::size_t dim,
                                   std::string family_tag) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return from_vertices(vertices, dim, std::move(family_tag));
}

void VertexSet::finalize() {
  sorted_.resize(count_);
  std::iota(sorted_.begin(), sorted_.end(), 0u);
  std::sort(sorted_.begin(), sorted_.end(), [&](std::uint32_t a, std::uint32_t b) {
    return lex_less((*this)[a], (*this)[b]);
  });
  binary_ = count_ > 0 && std::all_of(data_.begin(), data_.end(),
                                      [](Coord c) { return c == 0 || c == 1; });
  words_ = (dim_ + 63) / 64;
  bits_.assign(binary_ ? count_ * words_ : 0, 0);
  if (binary_) {
    for (std::size_t v = 0; v < count_; ++v) {
      auto row = (*this)[v];
      for (std::size_t i = 0; i < dim_; ++i) {
        if (row[i]) bits_[v * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
}

std::vector<IntVertex> VertexSet::vertices() const {
  std::vector<IntVertex> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) out.push_back(vertex(i));
  return out;
}

std::optional<std::size_t> VertexSet::find(std::span<const Coord> coords) const {
  if (coords.size() != dim_) return std::nullopt;
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), coords,
                             [&](std::uint32_t idx, std::span<const Coord> key) {
                               return lex_less((*this)[idx], key);
                             });
  if (it == sorted_.end()) return std::nullopt;
  auto row = (*this)[*it];
  if (!std::equal(row.begin(), row.end(), coords.begin())) return std::nullopt;
  return *it;
}

VertexSet VertexSet::subset(std::span<const std::size_t> indices) const {
  VertexSet out;
  out.dim_ = dim_;
  out.tag_ = tag_;
  out.data_.reserve(indices.size() * dim_);
  for (std::size_t i : indices) {
    if (i >= count_) throw DomainError("subset index out of range");
    auto row = (*this)[i];
    out.data_.insert(out.data_.end(), row.begin(), row.end());
  }
  out.count_ = indices.size();
  out.finalize();
  return out;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    const std::uint64_t g = std::gcd(r, std::uint64_t{i});
    r = (r / g) * ((n - k + i) / (i / g));
  }
  return r;
}

int affine_dimension(const VertexSet& vertices) {
  if (vertices.empty()) return -1;
  const std::size_t d = vertices.dim();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t v = 1; v < vertices.size(); ++v) {
    std::vector<Rational> row(d);
    for (std::size_t i = 0; i < d; ++i) row[i] = vertices[v][i] - vertices[0][i];
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (std::size_t col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t i = col; i < d; ++i) rows[r][i] -= f * rows[rank][i];
    }
    ++rank;
  }
  return rank;
}

}  // namespace polyskel
