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

// Exact feasibility of { A x = b, x >= 0 } for integer A, b by phase-1
// simplex with Bland's rule. The tableau is kept fraction-free: every entry
// is an integer over one shared positive denominator (the current basis
// determinant), so pivots need only exact integer division. A 64-bit run is
// tried first and restarted over GMP integers on overflow.

#ifndef POLYSKEL_EXACT_LP_HPP_
#define POLYSKEL_EXACT_LP_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polyskel/core.hpp"

namespace polyskel {

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

struct FeasibilityResult {
  bool feasible = false;
  // feasible: value of every column (zero for nonbasic ones).
  std::vector<Rational> x;
  // infeasible: integer y with y^T A <= 0 and y^T b > 0.
  std::vector<BigInt> farkas;
  std::size_t pivots = 0;
  bool used_bigint = false;
};

FeasibilityResult solve_feasibility(const IntMatrix& a, const std::vector<std::int64_t>& b);

}  // namespace polyskel

#endif  // POLYSKEL_EXACT_LP_HPP_
