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

// Per-instance cross-checks of every closed form against the generic
// machinery. Each check records a verdict instead of throwing, so a sweep
// always runs to completion and can report the first counterexample.

#ifndef NUMSG_VERIFICATION_H_
#define NUMSG_VERIFICATION_H_

#include <optional>
#include <string>
#include <vector>

#include "numsg/arith.h"

namespace numsg {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CaseReport {
  std::string family;
  Int n = 0;
  std::vector<CheckResult> checks;

  bool Passed() const;
  // Empty when everything passed.
  std::string FirstFailure() const;
};

struct VerifyOptions {
  // Betti sets are compared with the brute-force oracle only up to these
  // indices; above them the comparison is against the free-semigroup form.
  Int triangular_betti_oracle_max = 12;
  Int tetrahedral_betti_oracle_max = 8;
  std::optional<Int> betti_bound;
};

CaseReport VerifyTriangular(Int n, const VerifyOptions& options = {});
CaseReport VerifyTetrahedral(Int n, const VerifyOptions& options = {});
CaseReport VerifyChoose4(Int n);
// Every run length 2 <= k <= n starting at n.
CaseReport VerifyArithmetic(Int n);
CaseReport VerifyChoose5Permutations();

}  // namespace numsg

#endif  // NUMSG_VERIFICATION_H_
