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

#include "polyskel/exact_lp.hpp"

#include <stdexcept>
#include <utility>

#include "polyskel/error.hpp"

namespace polyskel {
namespace {

struct Overflow {};

// out = (a * p - c * e) / denom, exact.
inline void fused(std::int64_t& out, std::int64_t a, std::int64_t p, std::int64_t c,
                  std::int64_t e, std::int64_t denom) {
  const __int128 num = static_cast<__int128>(a) * p - static_cast<__int128>(c) * e;
  const __int128 q = num / denom;
  if (q > INT64_MAX || q < INT64_MIN) throw Overflow{};
  out = static_cast<std::int64_t>(q);
}

inline void fused(BigInt& out, const BigInt& a, const BigInt& p, const BigInt& c,
                  const BigInt& e, const BigInt& denom) {
  thread_local BigInt tmp;
  mpz_mul(tmp.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  mpz_submul(tmp.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t());
  mpz_divexact(out.get_mpz_t(), tmp.get_mpz_t(), denom.get_mpz_t());
}

inline int sign(std::int64_t v) { return (v > 0) - (v < 0); }
inline int sign(const BigInt& v) { return sgn(v); }

// a1/b1 < a2/b2 for positive b1, b2.
inline bool ratio_less(std::int64_t a1, std::int64_t b1, std::int64_t a2, std::int64_t b2) {
  return static_cast<__int128>(a1) * b2 < static_cast<__int128>(a2) * b1;
}
inline bool ratio_equal(std::int64_t a1, std::int64_t b1, std::int64_t a2, std::int64_t b2) {
  return static_cast<__int128>(a1) * b2 == static_cast<__int128>(a2) * b1;
}
inline bool ratio_less(const BigInt& a1, const BigInt& b1, const BigInt& a2, const BigInt& b2) {
  return a1 * b2 < a2 * b1;
}
inline bool ratio_equal(const BigInt& a1, const BigInt& b1, const BigInt& a2, const BigInt& b2) {
  return a1 * b2 == a2 * b1;
}

inline BigInt to_big(std::int64_t v) {
  BigInt out;
  mpz_set_si(out.get_mpz_t(), v);
  return out;
}
inline BigInt to_big(const BigInt& v) { return v; }

template <typename S>
class Tableau {
 public:
  Tableau(const IntMatrix& a, const std::vector<std::int64_t>& b)
      : m_(a.rows), n_(a.cols), width_(a.cols + a.rows + 1), t_((m_ + 1) * width_, S(0)),
        basic_(m_), denom_(1) {
    for (std::size_t i = 0; i < m_; ++i) {
      // Flip rows so the right-hand side is nonnegative.
      const std::int64_t s = b[i] < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = S(s * a(i, j));
      at(i, n_ + i) = S(1);
      at(i, rhs()) = S(s * b[i]);
      basic_[i] = n_ + i;
      row_sign_.push_back(s);
    }
    for (std::size_t j = 0; j < n_; ++j) {
      S sum(0);
      for (std::size_t i = 0; i < m_; ++i) sum -= at(i, j);
      at(m_, j) = sum;
    }
    S total(0);
    for (std::size_t i = 0; i < m_; ++i) total -= at(i, rhs());
    at(m_, rhs()) = total;
  }

  FeasibilityResult run() {
    FeasibilityResult out;
    while (sign(at(m_, rhs())) != 0) {
      std::size_t enter = width_;
      for (std::size_t j = 0; j + 1 < width_; ++j) {
        if (sign(at(m_, j)) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == width_) break;  // optimal with positive infeasibility
      std::size_t leave = m_;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sign(at(i, enter)) <= 0) continue;
        if (leave == m_) {
          leave = i;
          continue;
        }
        const auto& ri = at(i, rhs());
        const auto& ci = at(i, enter);
        const auto& rl = at(leave, rhs());
        const auto& cl = at(leave, enter);
        if (ratio_less(ri, ci, rl, cl) ||
            (ratio_equal(ri, ci, rl, cl) && basic_[i] < basic_[leave])) {
          leave = i;
        }
      }
      if (leave == m_) throw std::logic_error("phase-1 simplex unbounded");
      pivot(leave, enter);
      ++out.pivots;
    }
    out.feasible = sign(at(m_, rhs())) == 0;
    const BigInt denom = to_big(denom_);
    if (out.feasible) {
      out.x.assign(n_, Rational(0));
      for (std::size_t i = 0; i < m_; ++i) {
        if (basic_[i] < n_) {
          out.x[basic_[i]] = Rational(to_big(at(i, rhs())), denom);
          out.x[basic_[i]].canonicalize();
        }
      }
    } else {
      // y_i = 1 - (reduced cost of artificial i); scaled by the denominator.
      out.farkas.resize(m_);
      for (std::size_t i = 0; i < m_; ++i) {
        out.farkas[i] = (denom - to_big(at(m_, n_ + i))) * row_sign_[i];
      }
    }
    return out;
  }

 private:
  std::size_t rhs() const { return width_ - 1; }
  S& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }

  void pivot(std::size_t r, std::size_t s) {
    const S piv = at(r, s);
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const S factor = at(i, s);
      S* row = &t_[i * width_];
      const S* prow = &t_[r * width_];
      for (std::size_t j = 0; j < width_; ++j) fused(row[j], row[j], piv, factor, prow[j], denom_);
    }
    denom_ = piv;
    basic_[r] = s;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<S> t_;
  std::vector<std::size_t> basic_;
  std::vector<int> row_sign_;
  S denom_;
};

}  // namespace

FeasibilityResult solve_feasibility(const IntMatrix& a, const std::vector<std::int64_t>& b) {
  if (b.size() != a.rows) throw DomainError("solve_feasibility: rhs length mismatch");
  try {
    Tableau<std::int64_t> small(a, b);
    return small.run();
  } catch (const Overflow&) {
  }
  Tableau<BigInt> big(a, b);
  FeasibilityResult out = big.run();
  out.used_bigint = true;
  return out;
}

}  // namespace polyskel
