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

#ifndef POLYSKEL_ERROR_HPP_
#define POLYSKEL_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyskel {

// Precondition violated by the caller (bad index, wrong family, etc.).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Malformed input file. line() is 1-based; 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A search gave up before reaching a verdict (e.g. the selection cap was hit).
class IndeterminateError : public std::runtime_error {
 public:
  explicit IndeterminateError(const std::string& what) : std::runtime_error(what) {}
};

// Floating-point path could not make progress (degenerate update direction).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// The in-memory ledger would exceed the configured record budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polyskel

#endif  // POLYSKEL_ERROR_HPP_
