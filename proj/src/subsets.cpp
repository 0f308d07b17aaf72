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

#include "polyskel/subsets.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <string>
#include <utility>

#include "polyskel/core.hpp"
#include "polyskel/error.hpp"

namespace polyskel {
namespace {

void check_n(unsigned n) {
  if (n < 2 || n > kMaxSubsetNodes) {
    throw DomainError("subset indexing needs 2 <= n <= " +
                      std::to_string(kMaxSubsetNodes) + ", got n=" + std::to_string(n));
  }
}

// Number of coordinates before the first k-subset.
std::uint64_t offset_of_size(unsigned k, unsigned n) {
  std::uint64_t off = 0;
  for (unsigned s = 2; s < k; ++s) off += binomial(n, s);
  return off;
}

}  // namespace

std::size_t imset_dim(unsigned n) {
  check_n(n);
  return static_cast<std::size_t>((std::uint64_t{1} << n) - n - 1);
}

std::size_t subset_index(NodeMask subset, unsigned n) {
  check_n(n);
  if (n < 64 && (subset >> n) != 0) {
    throw DomainError("subset contains a node outside {0.." + std::to_string(n - 1) + "}");
  }
  const unsigned k = static_cast<unsigned>(std::popcount(subset));
  if (k < 2) throw DomainError("subset must have at least 2 elements");
  // Lexicographic rank among k-subsets: for each chosen element, count the
  // subsets that place a smaller element at that position.
  std::uint64_t rank = 0;
  unsigned pos = 0;
  int prev = -1;
  for (int e = 0; e < static_cast<int>(n); ++e) {
    if (!((subset >> e) & 1)) continue;
    for (int skipped = prev + 1; skipped < e; ++skipped) {
      rank += binomial(n - 1 - skipped, k - pos - 1);
    }
    prev = e;
    ++pos;
  }
  return static_cast<std::size_t>(offset_of_size(k, n) + rank);
}

std::size_t subset_index(std::span<const int> subset, unsigned n) {
  NodeMask mask = 0;
  for (int e : subset) {
    if (e < 0 || e >= static_cast<int>(n) || n > kMaxSubsetNodes) {
      throw DomainError("node label " + std::to_string(e) + " outside {0.." +
                        std::to_string(static_cast<int>(n) - 1) + "}");
    }
    if ((mask >> e) & 1) throw DomainError("repeated node label in subset");
    mask |= NodeMask{1} << e;
  }
  return subset_index(mask, n);
}

NodeMask index_subset_mask(std::size_t index, unsigned n) {
  check_n(n);
  std::uint64_t rem = index;
  unsigned k = 2;
  for (; k <= n; ++k) {
    const std::uint64_t c = binomial(n, k);
    if (rem < c) break;
    rem -= c;
  }
  if (k > n) throw DomainError("subset index " + std::to_string(index) + " out of range");
  NodeMask mask = 0;
  int e = 0;
  for (unsigned pos = 0; pos < k; ++pos) {
    for (;; ++e) {
      const std::uint64_t c = binomial(n - 1 - e, k - pos - 1);
      if (rem < c) break;
      rem -= c;
    }
    mask |= NodeMask{1} << e;
    ++e;
  }
  return mask;
}

std::vector<int> index_subset(std::size_t index, unsigned n) {
  const NodeMask mask = index_subset_mask(index, n);
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(n); ++e) {
    if ((mask >> e) & 1) out.push_back(e);
  }
  return out;
}

const std::vector<NodeMask>& canonical_subsets(unsigned n) {
  constexpr unsigned kCached = 20;
  if (n < 2 || n > kCached) {
    throw DomainError("canonical subset table supports 2 <= n <= 20");
  }
  static std::array<std::vector<NodeMask>, kCached + 1> tables;
  static std::array<std::once_flag, kCached + 1> once;
  std::call_once(once[n], [n] {
    std::vector<NodeMask>& t = tables[n];
    t.reserve(imset_dim(n));
    // Enumerating k-subsets in lexicographic order of element lists equals
    // descending order of the bit-reversed masks; simplest is to sort.
    for (unsigned k = 2; k <= n; ++k) {
      std::vector<std::pair<std::vector<int>, NodeMask>> block;
      for (NodeMask m = 0; m < (NodeMask{1} << n); ++m) {
        if (static_cast<unsigned>(std::popcount(m)) != k) continue;
        std::vector<int> elems;
        for (int e = 0; e < static_cast<int>(n); ++e) {
          if ((m >> e) & 1) elems.push_back(e);
        }
        block.emplace_back(std::move(elems), m);
      }
      std::sort(block.begin(), block.end());
      for (auto& [elems, m] : block) t.push_back(m);
    }
  });
  return tables[n];
}

}  // namespace polyskel
