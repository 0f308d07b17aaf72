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

// Plain-text vertex files:
//
//   <v> <d>
//   # family: <tag>        (optional; '#' comments may appear on any line)
//   <d integers>           (v rows)
//
// The first "# family:" comment sets the family tag. The writer puts the
// header first and the tag right after it.
// Reading deduplicates rows, keeping first-occurrence order.

#ifndef POLYSKEL_VERTEX_IO_HPP_
#define POLYSKEL_VERTEX_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "polyskel/core.hpp"

namespace polyskel {

// Throws ParseError (with line number) on ragged rows, non-integer tokens or
// a row count that does not match the header. Dropped duplicates are
// reported through `warnings` when given.
VertexSet read_vertices(std::istream& in, std::vector<std::string>* warnings = nullptr);
VertexSet read_vertices(const std::filesystem::path& path,
                        std::vector<std::string>* warnings = nullptr);

void write_vertices(std::ostream& out, const VertexSet& vertices);
void write_vertices(const std::filesystem::path& path, const VertexSet& vertices);

}  // namespace polyskel

#endif  // POLYSKEL_VERTEX_IO_HPP_
