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

#include "numsg/cli/record.h"

#include <algorithm>
#include <sstream>

namespace numsg::cli {

using nlohmann::json;

namespace {

template <typename T>
void PutOptional(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
void GetOptional(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j.at(key).is_null()) {
    v = j.at(key).get<T>();
  } else {
    v.reset();
  }
}

void CheckSchema(const json& j) {
  const auto schema = j.at("schema").get<std::string>();
  if (schema != kSchemaVersion) {
    throw json::other_error::create(501, "unsupported schema " + schema, &j);
  }
}

std::string JoinSemicolon(const std::vector<Int>& xs) {
  std::ostringstream out;
  for (size_t i = 0; i < xs.size(); ++i) out << (i ? ";" : "") << xs[i];
  return out.str();
}

}  // namespace

bool OutputRecord::AllAgree() const {
  return std::all_of(agreement.begin(), agreement.end(),
                     [](const MethodAgreement& a) { return a.agrees; });
}

void to_json(json& j, const InputDescriptor& v) {
  j = json{{"family", v.family}, {"generators", v.generators}};
  PutOptional(j, "n", v.n);
  PutOptional(j, "k", v.k);
}

void from_json(const json& j, InputDescriptor& v) {
  j.at("family").get_to(v.family);
  j.at("generators").get_to(v.generators);
  GetOptional(j, "n", v.n);
  GetOptional(j, "k", v.k);
}

void to_json(json& j, const MethodAgreement& v) {
  j = json{{"method", v.method}, {"value", v.value}, {"agrees", v.agrees}};
}

void from_json(const json& j, MethodAgreement& v) {
  j.at("method").get_to(v.method);
  j.at("value").get_to(v.value);
  j.at("agrees").get_to(v.agrees);
}

void to_json(json& j, const AperySummary& v) {
  j = json{{"anchor", v.anchor},     {"size", v.size},
           {"max", v.max},           {"smallest", v.smallest},
           {"largest", v.largest}};
  PutOptional(j, "elements", v.elements);
}

void from_json(const json& j, AperySummary& v) {
  j.at("anchor").get_to(v.anchor);
  j.at("size").get_to(v.size);
  j.at("max").get_to(v.max);
  j.at("smallest").get_to(v.smallest);
  j.at("largest").get_to(v.largest);
  GetOptional(j, "elements", v.elements);
}

void to_json(json& j, const RelationRecord& v) {
  j = json{{"lhs", v.lhs}, {"rhs", v.rhs}};
}

void from_json(const json& j, RelationRecord& v) {
  j.at("lhs").get_to(v.lhs);
  j.at("rhs").get_to(v.rhs);
}

void to_json(json& j, const OutputRecord& v) {
  j = json{{"schema", v.schema},
           {"command", v.command},
           {"input", v.input},
           {"provenance", v.provenance},
           {"agreement", v.agreement},
           {"notes", v.notes}};
  PutOptional(j, "frobenius", v.frobenius);
  PutOptional(j, "minimal_generators", v.minimal_generators);
  PutOptional(j, "embedding_dimension", v.embedding_dimension);
  PutOptional(j, "telescopic_directions", v.telescopic_directions);
  PutOptional(j, "direction", v.direction);
  PutOptional(j, "arrangement", v.arrangement);
  PutOptional(j, "cstar", v.cstar);
  PutOptional(j, "free", v.free);
  PutOptional(j, "presentation", v.presentation);
  PutOptional(j, "betti", v.betti);
  PutOptional(j, "apery", v.apery);
}

void from_json(const json& j, OutputRecord& v) {
  CheckSchema(j);
  j.at("schema").get_to(v.schema);
  j.at("command").get_to(v.command);
  j.at("input").get_to(v.input);
  j.at("provenance").get_to(v.provenance);
  j.at("agreement").get_to(v.agreement);
  j.at("notes").get_to(v.notes);
  GetOptional(j, "frobenius", v.frobenius);
  GetOptional(j, "minimal_generators", v.minimal_generators);
  GetOptional(j, "embedding_dimension", v.embedding_dimension);
  GetOptional(j, "telescopic_directions", v.telescopic_directions);
  GetOptional(j, "direction", v.direction);
  GetOptional(j, "arrangement", v.arrangement);
  GetOptional(j, "cstar", v.cstar);
  GetOptional(j, "free", v.free);
  GetOptional(j, "presentation", v.presentation);
  GetOptional(j, "betti", v.betti);
  GetOptional(j, "apery", v.apery);
}

void to_json(json& j, const VerifyRecord& v) {
  j = json{{"schema", v.schema}, {"family", v.family},
           {"n", v.n},           {"pass", v.pass},
           {"checks", v.checks}, {"first_failure", v.first_failure}};
}

void from_json(const json& j, VerifyRecord& v) {
  CheckSchema(j);
  j.at("schema").get_to(v.schema);
  j.at("family").get_to(v.family);
  j.at("n").get_to(v.n);
  j.at("pass").get_to(v.pass);
  j.at("checks").get_to(v.checks);
  j.at("first_failure").get_to(v.first_failure);
}

void to_json(json& j, const TableRow& v) {
  j = json{{"schema", v.schema},
           {"family", v.family},
           {"n", v.n},
           {"generators", v.generators},
           {"frobenius", v.frobenius}};
  PutOptional(j, "k", v.k);
  PutOptional(j, "cstar", v.cstar);
  PutOptional(j, "betti", v.betti);
  PutOptional(j, "direction", v.direction);
}

void from_json(const json& j, TableRow& v) {
  CheckSchema(j);
  j.at("schema").get_to(v.schema);
  j.at("family").get_to(v.family);
  j.at("n").get_to(v.n);
  j.at("generators").get_to(v.generators);
  j.at("frobenius").get_to(v.frobenius);
  GetOptional(j, "k", v.k);
  GetOptional(j, "cstar", v.cstar);
  GetOptional(j, "betti", v.betti);
  GetOptional(j, "direction", v.direction);
}

void to_json(json& j, const PermutationRecord& v) {
  j = json{{"schema", v.schema},
           {"generators", v.generators},
           {"total", v.total},
           {"telescopic", v.telescopic},
           {"telescopic_orderings", v.telescopic_orderings}};
}

void from_json(const json& j, PermutationRecord& v) {
  CheckSchema(j);
  j.at("schema").get_to(v.schema);
  j.at("generators").get_to(v.generators);
  j.at("total").get_to(v.total);
  j.at("telescopic").get_to(v.telescopic);
  j.at("telescopic_orderings").get_to(v.telescopic_orderings);
}

AperySummary SummarizeApery(Int anchor, std::vector<Int> elements, bool full) {
  std::sort(elements.begin(), elements.end());
  AperySummary s;
  s.anchor = anchor;
  s.size = static_cast<Int>(elements.size());
  s.max = elements.empty() ? 0 : elements.back();
  const size_t head = std::min<size_t>(3, elements.size());
  s.smallest.assign(elements.begin(), elements.begin() + head);
  s.largest.assign(elements.end() - head, elements.end());
  if (full) s.elements = std::move(elements);
  return s;
}

std::string TableCsvHeader() {
  return "family,n,k,generators,frobenius,cstar,betti,direction\n";
}

std::string ToCsv(const TableRow& row) {
  std::ostringstream out;
  out << row.family << ',' << row.n << ',';
  if (row.k) out << *row.k;
  out << ',' << JoinSemicolon(row.generators) << ',' << row.frobenius << ',';
  if (row.cstar) out << JoinSemicolon(*row.cstar);
  out << ',';
  if (row.betti) out << JoinSemicolon(*row.betti);
  out << ',';
  if (row.direction) out << *row.direction;
  out << '\n';
  return out.str();
}

}  // namespace numsg::cli
