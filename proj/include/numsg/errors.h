// Copyright 2026 The numsg Authors
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

#ifndef NUMSG_ERRORS_H_
#define NUMSG_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace numsg {

// Every error raised by the library derives from Error. The kind maps onto
// the command-line exit codes.
enum class ErrorKind {
  kInvalidInput,        // bad arguments, empty or duplicated sequences
  kNotNumericalSemigroup,
  kOverflow,
  kInvariantViolation,  // a closed form or certificate failed its own check
  kSearchLimit,
  kReducedEmbedding,    // closed form not available below the full dimension
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& what)
      : Error(ErrorKind::kInvalidInput, what) {}
};

// Raised whenever the generators share a common divisor d > 1.
class NotNumericalSemigroupError : public Error {
 public:
  explicit NotNumericalSemigroupError(std::int64_t d)
      : Error(ErrorKind::kNotNumericalSemigroup,
              "not a numerical semigroup (gcd " + std::to_string(d) + " > 1)"),
        gcd_(d) {}
  std::int64_t gcd() const { return gcd_; }

 private:
  std::int64_t gcd_;
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what)
      : Error(ErrorKind::kOverflow, "integer overflow: " + what) {}
};

class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what)
      : Error(ErrorKind::kInvariantViolation, "invariant violation: " + what) {}
};

class SearchLimitError : public Error {
 public:
  explicit SearchLimitError(const std::string& what)
      : Error(ErrorKind::kSearchLimit, what) {}
};

class ReducedEmbeddingError : public Error {
 public:
  explicit ReducedEmbeddingError(const std::string& what)
      : Error(ErrorKind::kReducedEmbedding,
              what + ": reduced embedding dimension; use generic machinery") {}
};

}  // namespace numsg

#endif  // NUMSG_ERRORS_H_
