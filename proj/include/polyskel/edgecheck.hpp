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

// Edge decisions for a single vertex pair: the exact LP oracle, the cost
// update step and the randomized cost-function search built on it.

#ifndef POLYSKEL_EDGECHECK_HPP_
#define POLYSKEL_EDGECHECK_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "polyskel/core.hpp"

namespace polyskel {

enum class EdgeStatus { kEdge, kNonEdge, kIndeterminate };

const char* to_string(EdgeStatus s);

// alpha_weight * alpha + (1 - alpha_weight) * beta = sum_i weight_i * v_i,
// weights nonnegative and summing to 1. alpha_weight = 1 + t for the point
// alpha + t (alpha - beta); it may lie outside [0, 1].
struct ConvexCombination {
  std::vector<std::pair<std::size_t, Rational>> weights;  // (vertex index, weight > 0)
  Rational alpha_weight;
};

struct EdgeVerdict {
  EdgeStatus status = EdgeStatus::kIndeterminate;
  // Edge: integer cost c with <c,v> < <c,alpha> = <c,beta> for every other v.
  std::optional<ExactCost> separating_cost;
  // NonEdge: a point of the line through alpha and beta written with the
  // remaining vertices.
  std::optional<ConvexCombination> combination;
};

// Decides the pair exactly. Feasibility of
//   x >= 0, sum x_i = 1, sum x_i v_i = alpha + t (alpha - beta), t free,
// over v_i in V \ {alpha, beta} means NonEdge; otherwise a Farkas vector of
// the system is returned as the separating cost. Throws DomainError for
// a == b or an index out of range.
EdgeVerdict exact_edge_test(const VertexSet& vertices, std::size_t a, std::size_t b);

// Exact recheck of whichever certificate the verdict carries.
bool certificate_holds(const VertexSet& vertices, std::size_t a, std::size_t b,
                       const EdgeVerdict& verdict);
bool separates(const VertexSet& vertices, std::size_t a, std::size_t b, const ExactCost& cost);

struct CostUpdateOptions {
  int max_nudges = 16;
  std::mt19937_64* rng = nullptr;  // nudges use a fixed-seed generator when null
};

// c' = c - (<c, alpha-mu> / <p, alpha-mu> + eps') p, where p is c_mu made
// orthogonal to delta = alpha - beta. c_mu is 2 mu - 1 for 0/1 input and
// mu - (alpha + beta) / 2 otherwise, nudged by r with max |r_i| < 1/d while
// <p, alpha-mu> vanishes. eps' has magnitude |eps| and the sign opposite to
// <p, alpha-mu>, which is what makes <c', mu> < <c', alpha>.
// Throws NumericError if the nudges never produce a usable p.
CostFunction cost_update(const CostFunction& c, const IntVertex& alpha, const IntVertex& beta,
                         const IntVertex& mu, double eps, const CostUpdateOptions& options = {});

// The bare update with a caller-chosen direction source c_mu and signed eps.
CostFunction cost_update_with(const CostFunction& c, const IntVertex& alpha,
                              const IntVertex& beta, const IntVertex& mu,
                              const std::vector<double>& c_mu, double signed_eps);

struct NumericOptions {
  int max_iter = 100;
  double epsilon = 1e-6;
  double tie_tolerance = 1e-9;
  std::uint64_t seed = 0;
};

struct NumericOutcome {
  bool verified = false;
  int iterations = 0;
  // Set when verified; strictly separates on exact recheck.
  std::optional<ExactCost> certificate;
};

// Randomized search for a cost vector orthogonal to delta that is maximized
// exactly by alpha and beta. Each round either pushes the best vertex above
// alpha back down with cost_update or, when none is above, shrinks the
// working set to the maximizers of an integer version of the cost. The
// integer costs found along the way are combined lexicographically into one
// certificate, and TRUE is reported only if it separates exactly.
// FALSE means "not verified", never "not an edge".
NumericOutcome verify_edge_numeric(const VertexSet& vertices, std::size_t a, std::size_t b,
                                   const NumericOptions& options = {});

}  // namespace polyskel

#endif  // POLYSKEL_EDGECHECK_HPP_
