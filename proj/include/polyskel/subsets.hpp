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

// Canonical coordinate order for imset vectors: subsets S of {0..n-1} with
// |S| >= 2, ascending by cardinality, then lexicographic on the sorted
// element list. For n = 3: {0,1} {0,2} {1,2} {0,1,2}.

#ifndef POLYSKEL_SUBSETS_HPP_
#define POLYSKEL_SUBSETS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace polyskel {

using NodeMask = std::uint64_t;

inline constexpr unsigned kMaxSubsetNodes = 62;

// 2^n - n - 1.
std::size_t imset_dim(unsigned n);

std::size_t subset_index(std::span<const int> subset, unsigned n);
std::size_t subset_index(NodeMask subset, unsigned n);
std::vector<int> index_subset(std::size_t index, unsigned n);
NodeMask index_subset_mask(std::size_t index, unsigned n);

// All coordinate subsets as masks, position = coordinate index. Cached per n
// (n <= 20).
const std::vector<NodeMask>& canonical_subsets(unsigned n);

// Index of the pair {i,j} among 2-subsets; equals subset_index({i,j}, n).
inline std::size_t pair_index(unsigned i, unsigned j, unsigned n) {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
}

}  // namespace polyskel

#endif  // POLYSKEL_SUBSETS_HPP_
