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

// Face restriction for 0/1 polytopes: the vertices agreeing with alpha and
// beta on every coordinate where alpha and beta agree span a face.

#ifndef POLYSKEL_FACES_HPP_
#define POLYSKEL_FACES_HPP_

#include <cstddef>
#include <vector>

#include "polyskel/core.hpp"

namespace polyskel {

// +1 where a_i = b_i = 1, -1 where a_i = b_i = 0, 0 elsewhere. Throws
// DomainError for non-0/1 input or mismatched dimensions.
CostFunction face_cost(const IntVertex& a, const IntVertex& b);

// Indices v with v_i = a_i wherever a_i = b_i, ascending; always contains a
// and b. Throws DomainError when the set is not 0/1 or a == b.
std::vector<std::size_t> restrict_face(const VertexSet& vertices, std::size_t a, std::size_t b);

}  // namespace polyskel

#endif  // POLYSKEL_FACES_HPP_
