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

// Machine-readable records emitted by the command-line tool. Every record
// carries "schema": "1" and survives a JSON round trip unchanged.

#ifndef NUMSG_CLI_RECORD_H_
#define NUMSG_CLI_RECORD_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "numsg/arith.h"

namespace numsg::cli {

inline constexpr const char* kSchemaVersion = "1";

struct InputDescriptor {
  std::string family;  // gens, triangular, tetrahedral, arith, choose4
  std::optional<Int> n;
  std::optional<Int> k;
  std::vector<Int> generators;

  bool operator==(const InputDescriptor&) const = default;
};

struct MethodAgreement {
  std::string method;
  Int value = 0;
  bool agrees = false;

  bool operator==(const MethodAgreement&) const = default;
};

struct AperySummary {
  Int anchor = 0;
  Int size = 0;
  Int max = 0;
  std::vector<Int> smallest;
  std::vector<Int> largest;
  std::optional<std::vector<Int>> elements;  // only with --full

  bool operator==(const AperySummary&) const = default;
};

struct RelationRecord {
  std::vector<Int> lhs;
  std::vector<Int> rhs;

  bool operator==(const RelationRecord&) const = default;
};

struct OutputRecord {
  std::string schema = kSchemaVersion;
  std::string command;
  InputDescriptor input;
  std::optional<Int> frobenius;
  std::string provenance;  // closed-form, oracle or reduction
  std::vector<MethodAgreement> agreement;
  std::optional<std::vector<Int>> minimal_generators;
  std::optional<Int> embedding_dimension;
  std::optional<std::vector<std::string>> telescopic_directions;
  std::optional<std::string> direction;
  std::optional<std::vector<Int>> arrangement;
  std::optional<std::vector<Int>> cstar;
  std::optional<bool> free;
  std::optional<std::vector<RelationRecord>> presentation;
  std::optional<std::vector<Int>> betti;
  std::optional<AperySummary> apery;
  std::vector<std::string> notes;

  bool AllAgree() const;
  bool operator==(const OutputRecord&) const = default;
};

struct VerifyRecord {
  std::string schema = kSchemaVersion;
  std::string family;
  Int n = 0;
  bool pass = false;
  Int checks = 0;
  std::string first_failure;

  bool operator==(const VerifyRecord&) const = default;
};

struct TableRow {
  std::string schema = kSchemaVersion;
  std::string family;
  Int n = 0;
  std::optional<Int> k;
  std::vector<Int> generators;
  Int frobenius = 0;
  std::optional<std::vector<Int>> cstar;
  std::optional<std::vector<Int>> betti;
  std::optional<std::string> direction;

  bool operator==(const TableRow&) const = default;
};

struct PermutationRecord {
  std::string schema = kSchemaVersion;
  std::vector<Int> generators;
  Int total = 0;
  Int telescopic = 0;
  std::vector<std::vector<Int>> telescopic_orderings;

  bool operator==(const PermutationRecord&) const = default;
};

void to_json(nlohmann::json& j, const InputDescriptor& v);
void from_json(const nlohmann::json& j, InputDescriptor& v);
void to_json(nlohmann::json& j, const MethodAgreement& v);
void from_json(const nlohmann::json& j, MethodAgreement& v);
void to_json(nlohmann::json& j, const AperySummary& v);
void from_json(const nlohmann::json& j, AperySummary& v);
void to_json(nlohmann::json& j, const RelationRecord& v);
void from_json(const nlohmann::json& j, RelationRecord& v);
void to_json(nlohmann::json& j, const OutputRecord& v);
void from_json(const nlohmann::json& j, OutputRecord& v);
void to_json(nlohmann::json& j, const VerifyRecord& v);
void from_json(const nlohmann::json& j, VerifyRecord& v);
void to_json(nlohmann::json& j, const TableRow& v);
void from_json(const nlohmann::json& j, TableRow& v);
void to_json(nlohmann::json& j, const PermutationRecord& v);
void from_json(const nlohmann::json& j, PermutationRecord& v);

// Summary of an Apery set: three smallest and three largest elements,
// plus the full sorted list when `full` is set.
AperySummary SummarizeApery(Int anchor, std::vector<Int> elements, bool full);

// CSV helpers: header plus one line per row, LF endings.
std::string TableCsvHeader();
std::string ToCsv(const TableRow& row);

}  // namespace numsg::cli

#endif  // NUMSG_CLI_RECORD_H_
