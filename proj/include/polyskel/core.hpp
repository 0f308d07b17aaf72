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

// Foundational value types shared by every module: integer vertices, the
// immutable indexed vertex set, exact scalars and cost vectors.

#ifndef POLYSKEL_CORE_HPP_
#define POLYSKEL_CORE_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polyskel {

using Coord = std::int32_t;
using BigInt = mpz_class;
using Rational = mpq_class;  // always canonical: gcd 1, positive denominator

inline constexpr std::uint32_t kNoIndex = 0xffffffffu;

// Dense integer coordinate vector. Most families are 0/1 but the cross
// polytope and permutohedron are not, so coordinates are signed.
class IntVertex {
 public:
  IntVertex() = default;
  explicit IntVertex(std::size_t dim) : coords_(dim, 0) {}
  explicit IntVertex(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  IntVertex(std::initializer_list<Coord> coords) : coords_(coords) {}
  explicit IntVertex(std::span<const Coord> coords)
      : coords_(coords.begin(), coords.end()) {}

  std::size_t dim() const { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Coord> coords() const { return coords_; }
  const std::vector<Coord>& vec() const { return coords_; }

  friend bool operator==(const IntVertex&, const IntVertex&) = default;
  friend auto operator<=>(const IntVertex& a, const IntVertex& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::vector<Coord> coords_;
};

std::string to_string(const IntVertex& v);

// Immutable, deduplicated, indexed collection of vertices of common
// dimension. Indices are stable: they are the row order of the input after
// dropping later duplicates.
class VertexSet {
 public:
  VertexSet() = default;

  // Keeps the first occurrence of every coordinate vector. Throws DomainError
  // when a vertex has the wrong dimension or dim is 0.
  static VertexSet from_vertices(std::span<const IntVertex> vertices,
                                 std::size_t dim, std::string family_tag = {});
  // Sorts lexicographically and deduplicates; generators use this so their
  // indices are reproducible.
  static VertexSet sorted_unique(std::vector<IntVertex> vertices, std::size_t dim,
                                 std::string family_tag = {});

  std::size_t size() const { return count_; }
  std::size_t dim() const { return dim_; }
  bool empty() const { return count_ == 0; }
  const std::string& family_tag() const { return tag_; }
  void set_family_tag(std::string tag) { tag_ = std::move(tag); }
  std::size_t duplicates_dropped() const { return dropped_; }

  std::span<const Coord> operator[](std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }
  IntVertex vertex(std::size_t i) const { return IntVertex((*this)[i]); }
  std::vector<IntVertex> vertices() const;

  // Index of an exact coordinate match, if present. O(d log v).
  std::optional<std::size_t> find(std::span<const Coord> coords) const;
  std::optional<std::size_t> find(const IntVertex& v) const { return find(v.coords()); }

  // True when every coordinate of every vertex is 0 or 1.
  bool is_binary() const { return binary_; }
  // Packed bit rows (only meaningful when is_binary()); coordinate i of
  // vertex v is bit (i % 64) of word i / 64.
  std::size_t words() const { return words_; }
  std::span<const std::uint64_t> bits(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }

  // Vertices at the given indices, in that order. No deduplication needed
  // since the parent set is already unique.
  VertexSet subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.dim_ == b.dim_ && a.count_ == b.count_ && a.data_ == b.data_;
  }

 private:
  void finalize();

  std::vector<Coord> data_;
  std::vector<std::uint32_t> sorted_;  // indices in lexicographic order
  std::vector<std::uint64_t> bits_;
  std::size_t dim_ = 0;
  std::size_t count_ = 0;
  std::size_t words_ = 0;
  std::size_t dropped_ = 0;
  bool binary_ = false;
  std::string tag_;
};

// Linear objective over R^d. Exact mode uses integer weights (any positive
// rescaling of a rational cost is the same cost).
struct CostFunction {
  std::vector<double> weights;
};
using ExactCost = std::vector<BigInt>;

std::uint64_t binomial(unsigned n, unsigned k);

// Dimension of the affine hull (exact); -1 for an empty set.
int affine_dimension(const VertexSet& vertices);

}  // namespace polyskel

#endif  // POLYSKEL_CORE_HPP_
