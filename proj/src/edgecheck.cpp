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

#include "polyskel/edgecheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "polyskel/error.hpp"
#include "polyskel/exact_lp.hpp"

namespace polyskel {

const char* to_string(EdgeStatus s) {
  switch (s) {
    case EdgeStatus::kEdge:
      return "edge";
    case EdgeStatus::kNonEdge:
      return "non-edge";
    case EdgeStatus::kIndeterminate:
      return "indeterminate";
  }
  return "?";
}

namespace {

void check_pair(const VertexSet& vertices, std::size_t a, std::size_t b, const char* who) {
  if (a >= vertices.size() || b >= vertices.size()) {
    throw DomainError(std::string(who) + ": vertex index out of range");
  }
  if (a == b) throw DomainError(std::string(who) + ": the two indices must differ");
}

BigInt dot(const ExactCost& c, std::span<const Coord> v) {
  BigInt s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) s += c[i] * static_cast<long>(v[i]);
  }
  return s;
}

double dot(const std::vector<double>& c, std::span<const Coord> v) {
  double s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += c[i] * v[i];
  return s;
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

bool is_binary(const IntVertex& v) {
  return std::all_of(v.vec().begin(), v.vec().end(), [](Coord x) { return x == 0 || x == 1; });
}

}  // namespace

bool separates(const VertexSet& vertices, std::size_t a, std::size_t b, const ExactCost& cost) {
  if (cost.size() != vertices.dim()) return false;
  const BigInt top = dot(cost, vertices[a]);
  if (dot(cost, vertices[b]) != top) return false;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i == a || i == b) continue;
    if (dot(cost, vertices[i]) >= top) return false;
  }
  return true;
}

bool certificate_holds(const VertexSet& vertices, std::size_t a, std::size_t b,
                       const EdgeVerdict& verdict) {
  switch (verdict.status) {
    case EdgeStatus::kEdge:
      return verdict.separating_cost && separates(vertices, a, b, *verdict.separating_cost);
    case EdgeStatus::kNonEdge: {
      if (!verdict.combination) return false;
      const ConvexCombination& comb = *verdict.combination;
      const std::size_t d = vertices.dim();
      std::vector<Rational> point(d, Rational(0));
      Rational total = 0;
      for (const auto& [idx, w] : comb.weights) {
        if (idx >= vertices.size() || idx == a || idx == b || sgn(w) < 0) return false;
        total += w;
        const auto v = vertices[idx];
        for (std::size_t k = 0; k < d; ++k) point[k] += w * v[k];
      }
      if (total != 1) return false;
      const auto va = vertices[a];
      const auto vb = vertices[b];
      const Rational beta_weight = 1 - comb.alpha_weight;
      for (std::size_t k = 0; k < d; ++k) {
        if (point[k] != comb.alpha_weight * va[k] + beta_weight * vb[k]) return false;
      }
      return true;
    }
    case EdgeStatus::kIndeterminate:
      return false;
  }
  return false;
}

EdgeVerdict exact_edge_test(const VertexSet& vertices, std::size_t a, std::size_t b) {
  check_pair(vertices, a, b, "exact_edge_test");
  const std::size_t d = vertices.dim();
  const auto va = vertices[a];
  const auto vb = vertices[b];

  std::vector<std::size_t> others;
  others.reserve(vertices.size() - 2);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i != a && i != b) others.push_back(i);
  }

  EdgeVerdict verdict;
  if (others.empty()) {
    verdict.status = EdgeStatus::kEdge;
    verdict.separating_cost = ExactCost(d, BigInt(0));
    return verdict;
  }

  // A coordinate row is redundant when every column agrees with alpha there
  // and delta vanishes: it is then alpha_k times the sum row.
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < d; ++k) {
    bool redundant = va[k] == vb[k];
    for (std::size_t i = 0; redundant && i < others.size(); ++i) {
      redundant = vertices[others[i]][k] == va[k];
    }
    if (!redundant) kept.push_back(k);
  }

  const std::size_t n = others.size();
  IntMatrix lp(kept.size() + 1, n + 2);
  std::vector<std::int64_t> rhs(kept.size() + 1);
  for (std::size_t r = 0; r < kept.size(); ++r) {
    const std::size_t k = kept[r];
    for (std::size_t i = 0; i < n; ++i) lp(r, i) = vertices[others[i]][k];
    const std::int64_t delta = static_cast<std::int64_t>(va[k]) - vb[k];
    lp(r, n) = -delta;     // t+
    lp(r, n + 1) = delta;  // t-
    rhs[r] = va[k];
  }
  for (std::size_t i = 0; i < n; ++i) lp(kept.size(), i) = 1;
  rhs[kept.size()] = 1;

  const FeasibilityResult res = solve_feasibility(lp, rhs);
  if (res.feasible) {
    ConvexCombination comb;
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(res.x[i]) > 0) comb.weights.emplace_back(others[i], res.x[i]);
    }
    comb.alpha_weight = 1 + res.x[n] - res.x[n + 1];
    verdict.status = EdgeStatus::kNonEdge;
    verdict.combination = std::move(comb);
  } else {
    ExactCost cost(d, BigInt(0));
    for (std::size_t r = 0; r < kept.size(); ++r) cost[kept[r]] = res.farkas[r];
    verdict.status = EdgeStatus::kEdge;
    verdict.separating_cost = std::move(cost);
  }
  if (!certificate_holds(vertices, a, b, verdict)) {
    throw std::logic_error("exact_edge_test: certificate failed its recheck");
  }
  return verdict;
}

CostFunction cost_update_with(const CostFunction& c, const IntVertex& alpha,
                              const IntVertex& beta, const IntVertex& mu,
                              const std::vector<double>& c_mu, double signed_eps) {
  const std::size_t d = alpha.dim();
  std::vector<double> delta(d), gap(d);
  for (std::size_t i = 0; i < d; ++i) {
    delta[i] = static_cast<double>(alpha[i]) - beta[i];
    gap[i] = static_cast<double>(alpha[i]) - mu[i];
  }
  const double dd = dot(delta, delta);
  const double along = dot(delta, c_mu) / dd;
  std::vector<double> p(d);
  for (std::size_t i = 0; i < d; ++i) p[i] = c_mu[i] - along * delta[i];
  const double p_gap = dot(p, gap);
  const double step = dot(c.weights, gap) / p_gap + signed_eps;
  CostFunction out{c.weights};
  for (std::size_t i = 0; i < d; ++i) out.weights[i] -= step * p[i];
  return out;
}

CostFunction cost_update(const CostFunction& c, const IntVertex& alpha, const IntVertex& beta,
                         const IntVertex& mu, double eps, const CostUpdateOptions& options) {
  const std::size_t d = alpha.dim();
  if (beta.dim() != d || mu.dim() != d || c.weights.size() != d) {
    throw DomainError("cost_update: dimension mismatch");
  }
  if (alpha == beta) throw DomainError("cost_update: alpha and beta coincide");

  std::vector<double> c_mu(d);
  if (is_binary(alpha) && is_binary(beta) && is_binary(mu)) {
    for (std::size_t i = 0; i < d; ++i) c_mu[i] = 2.0 * mu[i] - 1.0;
  } else {
    for (std::size_t i = 0; i < d; ++i) c_mu[i] = mu[i] - 0.5 * (alpha[i] + beta[i]);
  }

  std::vector<double> delta(d), gap(d);
  for (std::size_t i = 0; i < d; ++i) {
    delta[i] = static_cast<double>(alpha[i]) - beta[i];
    gap[i] = static_cast<double>(alpha[i]) - mu[i];
  }
  const double dd = dot(delta, delta);
  auto p_gap = [&](const std::vector<double>& cm) {
    const double along = dot(delta, cm) / dd;
    double s = 0;
    for (std::size_t i = 0; i < d; ++i) s += (cm[i] - along * delta[i]) * gap[i];
    return s;
  };

  std::mt19937_64 fallback(0x5eedc0de);
  std::mt19937_64& rng = options.rng ? *options.rng : fallback;
  const double bound = 0.99 / static_cast<double>(d);
  std::uniform_real_distribution<double> nudge(-bound, bound);
  std::vector<double> base = c_mu;
  double pg = p_gap(c_mu);
  for (int attempt = 0; std::abs(pg) < 1e-9; ++attempt) {
    if (attempt >= options.max_nudges) {
      throw NumericError("cost_update: <p, alpha - mu> stays zero after nudging");
    }
    for (std::size_t i = 0; i < d; ++i) c_mu[i] = base[i] + nudge(rng);
    pg = p_gap(c_mu);
  }
  const double signed_eps = pg > 0 ? -std::abs(eps) : std::abs(eps);
  return cost_update_with(c, alpha, beta, mu, c_mu, signed_eps);
}

namespace {

// Random unit vector orthogonal to delta; nullopt when delta spans R^d.
std::optional<std::vector<double>> random_orthogonal(const std::vector<double>& delta,
                                                     std::mt19937_64& rng) {
  const std::size_t d = delta.size();
  const double dd = dot(delta, delta);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<double> c(d);
    for (auto& x : c) x = coord(rng);
    const double along = dot(c, delta) / dd;
    for (std::size_t i = 0; i < d; ++i) c[i] -= along * delta[i];
    const double norm = std::sqrt(dot(c, c));
    if (norm < 1e-6) continue;
    for (auto& x : c) x /= norm;
    return c;
  }
  return std::nullopt;
}

bool normalize(std::vector<double>& c) {
  const double norm = std::sqrt(dot(c, c));
  if (!std::isfinite(norm) || norm < 1e-300) return false;
  for (auto& x : c) x /= norm;
  return true;
}

// |delta|^2 ci - <ci, delta> delta for the rounded cost ci; exactly
// orthogonal to delta. nullopt if the entries would not fit comfortably.
std::optional<std::vector<std::int64_t>> integer_orthogonal(const std::vector<double>& c,
                                                            std::span<const Coord> delta) {
  double top = 0;
  for (double x : c) top = std::max(top, std::abs(x));
  if (!(top > 0) || !std::isfinite(top)) return std::nullopt;
  const double scale = static_cast<double>(1 << 20) / top;
  const std::size_t d = c.size();
  std::vector<__int128> ci(d);
  __int128 dd = 0, cd = 0;
  for (std::size_t i = 0; i < d; ++i) {
    ci[i] = static_cast<__int128>(std::llround(c[i] * scale));
    dd += static_cast<__int128>(delta[i]) * delta[i];
    cd += ci[i] * delta[i];
  }
  constexpr __int128 kLimit = static_cast<__int128>(1) << 60;
  std::vector<std::int64_t> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    const __int128 v = dd * ci[i] - cd * delta[i];
    if (v > kLimit || v < -kLimit) return std::nullopt;
    out[i] = static_cast<std::int64_t>(v);
  }
  return out;
}

// Exact score; the caller keeps |coords| * |entries| * d well inside 2^127.
__int128 score(const std::vector<std::int64_t>& c, std::span<const Coord> v) {
  __int128 s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += static_cast<__int128>(c[i]) * v[i];
  return s;
}

}  // namespace

NumericOutcome verify_edge_numeric(const VertexSet& vertices, std::size_t a, std::size_t b,
                                   const NumericOptions& options) {
  check_pair(vertices, a, b, "verify_edge_numeric");
  NumericOutcome outcome;
  const std::size_t d = vertices.dim();
  const IntVertex alpha = vertices.vertex(a);
  const IntVertex beta = vertices.vertex(b);
  std::vector<Coord> delta_int(d);
  std::vector<double> delta(d);
  Coord max_abs = 0;
  for (std::size_t i = 0; i < d; ++i) {
    delta_int[i] = alpha[i] - beta[i];
    delta[i] = delta_int[i];
  }
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (Coord x : vertices[v]) max_abs = std::max<Coord>(max_abs, x < 0 ? -x : x);
  }
  // Scores are sums of d products of entries below 2^60 with coordinates;
  // keep them inside __int128.
  if (static_cast<double>(max_abs) * static_cast<double>(d) > std::ldexp(1.0, 60)) {
    return outcome;
  }

  std::mt19937_64 rng(options.seed);
  CostUpdateOptions update_options;
  update_options.rng = &rng;

  std::vector<std::size_t> working(vertices.size());
  for (std::size_t i = 0; i < working.size(); ++i) working[i] = i;
  // Lexicographic chain: level j's cost and the vertices it pushed strictly
  // below alpha.
  std::vector<std::vector<std::int64_t>> chain;
  std::vector<std::vector<std::size_t>> removed;

  std::vector<double> c;
  bool need_fresh = true;
  bool done = working.size() <= 3;
  while (!done && outcome.iterations < options.max_iter) {
    ++outcome.iterations;
    if (need_fresh) {
      auto fresh = random_orthogonal(delta, rng);
      if (!fresh) return outcome;
      c = std::move(*fresh);
      need_fresh = false;
    }
    const double top = dot(c, vertices[a]);
    std::size_t mu = kNoIndex;
    double best = top + options.tie_tolerance;
    for (std::size_t v : working) {
      const double s = dot(c, vertices[v]);
      if (s > best) {
        best = s;
        mu = v;
      }
    }
    if (mu == kNoIndex) {
      // Nothing visibly above alpha: settle the maximizers exactly.
      auto ce = integer_orthogonal(c, delta_int);
      if (!ce) {
        need_fresh = true;
        continue;
      }
      const __int128 exact_top = score(*ce, vertices[a]);
      __int128 exact_best = exact_top;
      for (std::size_t v : working) {
        const __int128 s = score(*ce, vertices[v]);
        if (s > exact_best) {
          exact_best = s;
          mu = v;
        }
      }
      if (mu == kNoIndex) {
        std::vector<std::size_t> keep, drop;
        for (std::size_t v : working) {
          (score(*ce, vertices[v]) == exact_top ? keep : drop).push_back(v);
        }
        if (!drop.empty()) {
          chain.push_back(std::move(*ce));
          removed.push_back(std::move(drop));
          working = std::move(keep);
        }
        done = working.size() <= 3;
        // The current cost is now constant on the working set; a new
        // direction is needed to make further progress.
        need_fresh = true;
        continue;
      }
    }
    try {
      CostFunction next = cost_update(CostFunction{c}, alpha, beta, vertices.vertex(mu),
                                      options.epsilon, update_options);
      c = std::move(next.weights);
      if (!normalize(c)) need_fresh = true;
    } catch (const NumericError&) {
      need_fresh = true;
    }
  }
  if (!done) return outcome;

  // At most one vertex gamma besides alpha and beta is left; three distinct
  // points of a face in convex position form a triangle, and
  // -(|delta|^2 g - <g,delta> delta), g = gamma - alpha, cuts gamma off.
  for (std::size_t v : working) {
    if (v == a || v == b) continue;
    std::vector<std::int64_t> g(d), cut(d);
    std::int64_t dd = 0, gd = 0;
    for (std::size_t i = 0; i < d; ++i) {
      g[i] = static_cast<std::int64_t>(vertices[v][i]) - alpha[i];
      dd += static_cast<std::int64_t>(delta_int[i]) * delta_int[i];
      gd += g[i] * delta_int[i];
    }
    for (std::size_t i = 0; i < d; ++i) cut[i] = -(dd * g[i] - gd * delta_int[i]);
    chain.push_back(std::move(cut));
    removed.push_back({v});
  }

  // Fold the chain from the last level up: cur <- M c_j + cur with M large
  // enough to keep level j's removed vertices strictly below alpha.
  ExactCost cur(d, BigInt(0));
  for (std::size_t j = chain.size(); j-- > 0;) {
    const BigInt cur_top = dot(cur, vertices[a]);
    BigInt m = 0;
    for (std::size_t v : removed[j]) m = std::max<BigInt>(m, dot(cur, vertices[v]) - cur_top);
    m += 1;
    for (std::size_t i = 0; i < d; ++i) {
      BigInt level;
      mpz_set_si(level.get_mpz_t(), chain[j][i]);
      cur[i] = m * level + cur[i];
    }
  }
  if (separates(vertices, a, b, cur)) {
    outcome.verified = true;
    outcome.certificate = std::move(cur);
  }
  return outcome;
}

}  // namespace polyskel
