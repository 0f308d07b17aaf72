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

#include "polyskel/vertex_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "polyskel/error.hpp"

namespace polyskel {
namespace {

// Splits a line on whitespace, dropping anything after '#'.
std::vector<std::string_view> tokens(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected an integer, got '" + std::string(tok) + "'", line_no);
  }
  return value;
}

}  // namespace

VertexSet read_vertices(std::istream& in, std::vector<std::string>* warnings) {
  std::string line;
  std::size_t line_no = 0;
  std::string tag;
  long long count = -1;
  long long dim = -1;
  std::vector<IntVertex> rows;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (auto first = view.find_first_not_of(" \t"); first != std::string_view::npos &&
                                                     view[first] == '#') {
      constexpr std::string_view kTag = "family:";
      auto body = view.substr(first + 1);
      body.remove_prefix(std::min(body.find_first_not_of(' '), body.size()));
      if (body.starts_with(kTag) && tag.empty()) {
        body.remove_prefix(kTag.size());
        body.remove_prefix(std::min(body.find_first_not_of(' '), body.size()));
        tag = std::string(body);
      }
      continue;
    }
    auto toks = tokens(view);
    if (toks.empty()) continue;
    if (count < 0) {
      if (toks.size() != 2) throw ParseError("header must be '<v> <d>'", line_no);
      count = parse_int(toks[0], line_no);
      dim = parse_int(toks[1], line_no);
      if (count < 0 || dim <= 0) throw ParseError("header needs v >= 0 and d > 0", line_no);
      rows.reserve(static_cast<std::size_t>(count));
      continue;
    }
    if (static_cast<long long>(toks.size()) != dim) {
      throw ParseError("row has " + std::to_string(toks.size()) + " entries, expected " +
                           std::to_string(dim),
                       line_no);
    }
    if (static_cast<long long>(rows.size()) == count) {
      throw ParseError("more rows than the header count " + std::to_string(count), line_no);
    }
    std::vector<Coord> coords;
    coords.reserve(toks.size());
    for (auto t : toks) {
      long long v = parse_int(t, line_no);
      if (v < std::numeric_limits<Coord>::min() || v > std::numeric_limits<Coord>::max()) {
        throw ParseError("coordinate out of range", line_no);
      }
      coords.push_back(static_cast<Coord>(v));
    }
    rows.emplace_back(std::move(coords));
  }
  if (count < 0) throw ParseError("missing '<v> <d>' header", line_no);
  if (static_cast<long long>(rows.size()) != count) {
    throw ParseError("header promises " + std::to_string(count) + " rows, found " +
                         std::to_string(rows.size()),
                     line_no);
  }
  VertexSet out = VertexSet::from_vertices(rows, static_cast<std::size_t>(dim), tag);
  if (out.duplicates_dropped() > 0 && warnings) {
    warnings->push_back("dropped " + std::to_string(out.duplicates_dropped()) +
                        " duplicate vertex row(s)");
  }
  return out;
}

VertexSet read_vertices(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return read_vertices(in, warnings);
}

void write_vertices(std::ostream& out, const VertexSet& vertices) {
  out << vertices.size() << ' ' << vertices.dim() << '\n';
  if (!vertices.family_tag().empty()) out << "# family: " << vertices.family_tag() << '\n';
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    auto row = vertices[v];
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
}

void write_vertices(const std::filesystem::path& path, const VertexSet& vertices) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string(), 0);
  write_vertices(out, vertices);
}

}  // namespace polyskel
