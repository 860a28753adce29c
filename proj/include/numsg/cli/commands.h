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

// Subcommands of the numsg tool. RunCli is the whole program minus the
// process boundary, so tests can drive it with in-memory streams.

#ifndef NUMSG_CLI_COMMANDS_H_
#define NUMSG_CLI_COMMANDS_H_

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "numsg/arith.h"
#include "numsg/cli/record.h"

namespace numsg::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCounterexample = 1,
  kExitInvalidInput = 2,
  kExitOverflow = 3,
  kExitIo = 4,
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InputFamily { kGens, kTriangular, kTetrahedral, kArith, kChoose4 };

struct InputSpec {
  InputFamily family = InputFamily::kGens;
  std::vector<Int> generators;  // kGens only, order preserved
  Int n = 0;
  Int k = 0;  // kArith only
};

// Comma-separated positive integers; duplicates are rejected. Values past
// the 64-bit range raise OverflowError.
std::vector<Int> ParseGeneratorList(const std::string& text);
// "a..b" or a single "a".
std::pair<Int, Int> ParseRange(const std::string& text);

// Generators of the input in natural (ascending family) order.
std::vector<Int> InputGenerators(const InputSpec& spec);
InputDescriptor Describe(const InputSpec& spec);

OutputRecord CmdFrobenius(const InputSpec& spec, bool cross_check);

struct AnalyzeOptions {
  bool cross_check = false;
  bool full_apery = false;
  std::optional<Int> betti_bound;
};

OutputRecord CmdAnalyze(const InputSpec& spec, const AnalyzeOptions& options);

// Rows for --family over [first, last]; for arith, n is fixed and the range
// runs over k. Rows come back in ascending order whatever `threads` is.
std::vector<TableRow> BuildTable(const std::string& family, Int first, Int last,
                                 std::optional<Int> arith_n, int threads);

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace numsg::cli

#endif  // NUMSG_CLI_COMMANDS_H_
