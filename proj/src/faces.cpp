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

#include "polyskel/faces.hpp"

#include <string>

#include "polyskel/error.hpp"

namespace polyskel {

CostFunction face_cost(const IntVertex& a, const IntVertex& b) {
  if (a.dim() != b.dim()) throw DomainError("face_cost: dimension mismatch");
  CostFunction c;
  c.weights.resize(a.dim(), 0.0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if ((a[i] != 0 && a[i] != 1) || (b[i] != 0 && b[i] != 1)) {
      throw DomainError("face_cost needs 0/1 vectors");
    }
    if (a[i] == b[i]) c.weights[i] = a[i] == 1 ? 1.0 : -1.0;
  }
  return c;
}

std::vector<std::size_t> restrict_face(const VertexSet& vertices, std::size_t a, std::size_t b) {
  if (!vertices.is_binary()) throw DomainError("restrict_face needs a 0/1 vertex set");
  if (a >= vertices.size() || b >= vertices.size()) {
    throw DomainError("restrict_face: index out of range");
  }
  if (a == b) throw DomainError("restrict_face needs two distinct vertices");
  const std::size_t w = vertices.words();
  auto va = vertices.bits(a);
  auto vb = vertices.bits(b);
  std::vector<std::uint64_t> agree(w);
  for (std::size_t k = 0; k < w; ++k) {
    agree[k] = ~(va[k] ^ vb[k]);
    if (k + 1 == w && vertices.dim() % 64 != 0) {
      agree[k] &= (std::uint64_t{1} << (vertices.dim() % 64)) - 1;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    auto vv = vertices.bits(v);
    bool inside = true;
    for (std::size_t k = 0; k < w && inside; ++k) inside = ((vv[k] ^ va[k]) & agree[k]) == 0;
    if (inside) out.push_back(v);
  }
  return out;
}

}  // namespace polyskel
