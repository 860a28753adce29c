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

#include "numsg/cli/commands.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "numsg/errors.h"
#include "numsg/figurate.h"
#include "numsg/semigroup.h"
#include "numsg/telescopic.h"
#include "numsg/verification.h"

namespace numsg::cli {

using nlohmann::json;

namespace {

Int ParseInt(std::string_view text) {
  if (text.empty()) throw InvalidInputError("empty number");
  Int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw OverflowError("'" + std::string(text) + "' exceeds 64 bits");
  }
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidInputError("'" + std::string(text) + "' is not an integer");
  }
  return value;
}

std::vector<Int> Iota(Int first, Int count) {
  std::vector<Int> xs;
  for (Int i = 0; i < count; ++i) xs.push_back(CheckedAdd(first, i));
  return xs;
}

std::vector<Int> ToVector(const std::set<Int>& s) { return {s.begin(), s.end()}; }

std::vector<RelationRecord> ToRecords(const Presentation& p) {
  std::vector<RelationRecord> out;
  for (const Relation& r : p) out.push_back({r.lhs, r.rhs});
  return out;
}

std::string Join(const std::vector<Int>& xs, const char* sep = ",") {
  std::ostringstream out;
  for (size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
  return out.str();
}

// Runs fn(i) for i in [0, count) on up to `threads` workers.
void ParallelFor(size_t count, int threads,
                 const std::function<void(size_t)>& fn) {
  const size_t workers =
      std::min<size_t>(count, static_cast<size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

class Methods {
 public:
  explicit Methods(OutputRecord& record) : record_(record) {}

  void Primary(Int value, std::string provenance) {
    record_.frobenius = value;
    record_.provenance = std::move(provenance);
  }

  void Compare(std::string method, const std::function<Int()>& compute) {
    const Int value = compute();
    record_.agreement.push_back(
        {std::move(method), value, value == *record_.frobenius});
  }

 private:
  OutputRecord& record_;
};

bool StructuralClosedForm(const InputSpec& spec) {
  return (spec.family == InputFamily::kTriangular && spec.n >= 3) ||
         (spec.family == InputFamily::kTetrahedral && spec.n >= 4);
}

void FillFrobenius(const InputSpec& spec, bool cross_check, OutputRecord& r) {
  const std::vector<Int> gens = InputGenerators(spec);
  const GeneratorSequence seq(gens);
  Methods m(r);
  switch (spec.family) {
    case InputFamily::kGens: {
      const auto s = NumericalSemigroup::FromGenerators(seq);
      const auto minimal = s.generators();
      if (minimal.size() == 2) {
        const Int a = minimal[0], b = minimal[1];
        m.Primary(CheckedSub(CheckedSub(CheckedMul(a, b), a), b), "closed-form");
        if (cross_check) m.Compare("oracle", [&] { return FrobeniusOracle(minimal); });
      } else {
        m.Primary(FrobeniusOracle(minimal), "oracle");
      }
      if (cross_check && gens.size() >= 2) {
        m.Compare("reduction", [&] { return BrauerShockleyFrobenius(seq); });
      }
      break;
    }
    case InputFamily::kTriangular:
      m.Primary(FrobeniusTriangular(spec.n), "closed-form");
      if (cross_check) {
        m.Compare("baker", [&] { return BakerA(spec.n); });
        m.Compare("oracle", [&] { return FrobeniusOracle(seq); });
        m.Compare("reduction", [&] { return BrauerShockleyFrobenius(seq); });
      }
      break;
    case InputFamily::kTetrahedral:
      m.Primary(FrobeniusTetrahedral(spec.n), "closed-form");
      if (cross_check) {
        m.Compare("oracle", [&] { return FrobeniusOracle(seq); });
        m.Compare("reduction", [&] { return BrauerShockleyFrobenius(seq); });
      }
      break;
    case InputFamily::kArith:
      m.Primary(BrauerArithmeticFrobenius(spec.n, spec.k), "closed-form");
      if (cross_check) {
        m.Compare("oracle", [&] { return FrobeniusOracle(seq); });
        m.Compare("reduction", [&] { return BrauerShockleyFrobenius(seq); });
      }
      break;
    case InputFamily::kChoose4:
      m.Primary(BrauerShockleyFrobenius(seq), "reduction");
      if (cross_check) m.Compare("oracle", [&] { return FrobeniusOracle(seq); });
      break;
  }
}

std::vector<std::string> TelescopicDirections(const GeneratorSequence& seq) {
  std::vector<std::string> dirs;
  if (seq.size() < 2) return dirs;
  if (Telescopic(IsTelescopic(seq))) dirs.emplace_back("forward");
  if (Telescopic(IsTelescopic(seq.Reversed()))) dirs.emplace_back("reverse");
  return dirs;
}

struct ClosedStructure {
  ClosedFormCStar cstar;
  Presentation presentation;
  std::set<Int> betti;
  ClosedFormApery apery;
  Direction direction;
};

ClosedStructure ClosedStructureFor(const InputSpec& spec) {
  if (spec.family == InputFamily::kTriangular) {
    return {TriangularCStar(spec.n), TriangularPresentation(spec.n),
            TriangularBetti(spec.n), TriangularApery(spec.n),
            TriangularDirection(spec.n)};
  }
  return {TetrahedralCStar(spec.n), TetrahedralPresentation(spec.n),
          TetrahedralBetti(spec.n), TetrahedralApery(spec.n),
          TetrahedralDirection(spec.n)};
}

// Input order with redundant generators removed.
std::vector<Int> MinimalInInputOrder(const std::vector<Int>& gens,
                                     std::span<const Int> minimal) {
  std::vector<Int> out;
  for (Int g : gens) {
    if (std::find(minimal.begin(), minimal.end(), g) != minimal.end() &&
        std::find(out.begin(), out.end(), g) == out.end()) {
      out.push_back(g);
    }
  }
  return out;
}

void FillGenericStructure(const std::vector<Int>& gens,
                          const NumericalSemigroup& s,
                          const AnalyzeOptions& options, OutputRecord& r) {
  const GeneratorSequence arrangement(
      MinimalInInputOrder(gens, s.generators()));
  if (arrangement.vec() != gens) {
    r.notes.push_back("redundant generators removed from the arrangement");
  }
  r.arrangement = arrangement.vec();
  if (arrangement.size() < 2) {
    r.free = true;
    r.cstar = std::vector<Int>{};
    r.presentation = std::vector<RelationRecord>{};
    r.betti = std::vector<Int>{};
    return;
  }
  const FreenessResult freeness = IsFree(arrangement);
  if (const auto* fd = std::get_if<FreeDecomposition>(&freeness)) {
    r.cstar = fd->cstars;
    r.free = true;
    r.presentation = ToRecords(FreePresentation(*fd));
    r.betti = ToVector(FreeBetti(*fd));
    r.agreement.push_back({"free", FreeFrobenius(*fd), false});
    r.agreement.back().agrees = r.agreement.back().value == *r.frobenius;
    if (options.cross_check && s.embedding_dimension() <= kMaxBettiDimension) {
      const auto oracle = ToVector(BettiOracle(s, options.betti_bound));
      r.agreement.push_back({"betti-oracle", static_cast<Int>(oracle.size()),
                             oracle == *r.betti});
    }
    return;
  }
  const auto& nf = std::get<NotFree>(freeness);
  r.cstar = nf.cstars;
  r.free = false;
  if (s.embedding_dimension() <= kMaxBettiDimension) {
    r.presentation = ToRecords(MinimalPresentationOracle(s, options.betti_bound));
    r.betti = ToVector(BettiOracle(s, options.betti_bound));
    r.notes.push_back("presentation is over the sorted minimal generators");
  } else {
    r.notes.push_back("presentation and Betti elements skipped above embedding "
                      "dimension " + std::to_string(kMaxBettiDimension));
  }
}

void FillClosedStructure(const InputSpec& spec, const NumericalSemigroup& s,
                         const AnalyzeOptions& options, OutputRecord& r) {
  const ClosedStructure c = ClosedStructureFor(spec);
  const auto generic = ComputeCStar(c.cstar.arrangement).cstars;
  if (generic != c.cstar.cstars) {
    throw InvariantViolation("closed-form c* " + Join(c.cstar.cstars) +
                             " differs from search " + Join(generic));
  }
  r.direction = std::string(ToString(c.direction));
  r.arrangement = c.cstar.arrangement.vec();
  r.cstar = c.cstar.cstars;
  const FreenessResult freeness = IsFree(c.cstar.arrangement);
  const auto* fd = std::get_if<FreeDecomposition>(&freeness);
  r.free = fd != nullptr;
  r.presentation = ToRecords(c.presentation);
  r.betti = ToVector(c.betti);
  if (fd == nullptr) {
    throw InvariantViolation("canonical arrangement is not free");
  }
  auto add = [&](std::string method, Int value) {
    r.agreement.push_back({std::move(method), value, value == *r.frobenius});
  };
  add("free", FreeFrobenius(*fd));
  add("apery-closed-form", c.apery.by_residue.Max() - c.apery.anchor);
  if (ToVector(FreeBetti(*fd)) != *r.betti) {
    throw InvariantViolation("closed-form Betti set differs from the free form");
  }
  if (options.cross_check) {
    const auto oracle = ToVector(BettiOracle(s, options.betti_bound));
    r.agreement.push_back({"betti-oracle", static_cast<Int>(oracle.size()),
                           oracle == *r.betti});
  }
}

std::string FamilyName(InputFamily f) {
  switch (f) {
    case InputFamily::kGens: return "gens";
    case InputFamily::kTriangular: return "triangular";
    case InputFamily::kTetrahedral: return "tetrahedral";
    case InputFamily::kArith: return "arith";
    case InputFamily::kChoose4: return "choose4";
  }
  return "";
}

TableRow MakeRow(const std::string& family, Int n, std::optional<Int> k) {
  TableRow row;
  row.family = family;
  row.n = n;
  row.k = k;
  if (family == "triangular") {
    row.generators = TriangularTriple::Make(n).Sequence().vec();
    row.frobenius = FrobeniusTriangular(n);
    if (n >= 3) {
      row.cstar = TriangularCStar(n).cstars;
      row.betti = ToVector(TriangularBetti(n));
      row.direction = std::string(ToString(TriangularDirection(n)));
    }
  } else if (family == "tetrahedral") {
    row.generators = TetrahedralQuadruple::Make(n).Sequence().vec();
    row.frobenius = FrobeniusTetrahedral(n);
    if (n >= 4) {
      row.cstar = TetrahedralCStar(n).cstars;
      row.betti = ToVector(TetrahedralBetti(n));
      row.direction = std::string(ToString(TetrahedralDirection(n)));
    }
  } else if (family == "arith") {
    row.generators = Iota(n, *k);
    row.frobenius = BrauerArithmeticFrobenius(n, *k);
  } else if (family == "choose4") {
    const Choose4Report rep = Choose4Family(n);
    row.generators = rep.sequence.vec();
    row.frobenius = BrauerShockleyFrobenius(rep.sequence);
    row.direction = std::string(ToString(rep.classification()));
  } else {
    throw InvalidInputError("unknown table family '" + family + "'");
  }
  return row;
}

std::string TextRow(const TableRow& row) {
  std::ostringstream out;
  out << row.family << " n=" << row.n;
  if (row.k) out << " k=" << *row.k;
  out << " gens=" << Join(row.generators) << " F=" << row.frobenius;
  if (row.cstar) out << " c*=" << Join(*row.cstar);
  if (row.betti) out << " betti=" << Join(*row.betti);
  if (row.direction) out << " direction=" << *row.direction;
  return out.str();
}

std::string TextRecord(const OutputRecord& r) {
  std::ostringstream out;
  out << "input: " << r.input.family;
  if (r.input.n) out << " n=" << *r.input.n;
  if (r.input.k) out << " k=" << *r.input.k;
  out << " generators=" << Join(r.input.generators) << "\n";
  if (r.frobenius) {
    out << "frobenius: " << *r.frobenius << " (" << r.provenance << ")\n";
  }
  for (const auto& a : r.agreement) {
    out << "  " << a.method << ": " << a.value
        << (a.agrees ? " agrees" : " DISAGREES") << "\n";
  }
  if (r.minimal_generators) {
    out << "minimal generators: " << Join(*r.minimal_generators) << "\n";
  }
  if (r.embedding_dimension) {
    out << "embedding dimension: " << *r.embedding_dimension << "\n";
  }
  if (r.telescopic_directions) {
    out << "telescopic:";
    if (r.telescopic_directions->empty()) out << " none";
    for (const auto& d : *r.telescopic_directions) out << " " << d;
    out << "\n";
  }
  if (r.direction) out << "direction: " << *r.direction << "\n";
  if (r.arrangement) out << "arrangement: " << Join(*r.arrangement) << "\n";
  if (r.cstar) out << "c*: " << Join(*r.cstar) << "\n";
  if (r.free) out << "free: " << (*r.free ? "true" : "false") << "\n";
  if (r.presentation) {
    out << "presentation:\n";
    for (const auto& rel : *r.presentation) {
      out << "  (" << Join(rel.lhs) << ") ~ (" << Join(rel.rhs) << ")\n";
    }
  }
  if (r.betti) out << "betti: " << Join(*r.betti) << "\n";
  if (r.apery) {
    const auto& a = *r.apery;
    out << "apery(" << a.anchor << "): size=" << a.size << " max=" << a.max
        << " smallest=" << Join(a.smallest) << " largest=" << Join(a.largest)
        << "\n";
    if (a.elements) out << "  elements: " << Join(*a.elements) << "\n";
  }
  for (const auto& note : r.notes) out << "note: " << note << "\n";
  return out.str();
}

std::string CsvRecord(const OutputRecord& r) {
  std::ostringstream out;
  out << "family,n,k,generators,frobenius,provenance,agree\n"
      << r.input.family << ',';
  if (r.input.n) out << *r.input.n;
  out << ',';
  if (r.input.k) out << *r.input.k;
  out << ',' << Join(r.input.generators, ";") << ',';
  if (r.frobenius) out << *r.frobenius;
  out << ',' << r.provenance << ',' << (r.AllAgree() ? "true" : "false") << '\n';
  return out.str();
}

CaseReport RunVerification(const std::string& family, Int n) {
  if (family == "triangular") return VerifyTriangular(n);
  if (family == "tetrahedral") return VerifyTetrahedral(n);
  if (family == "choose4") return VerifyChoose4(n);
  if (family == "arith") return VerifyArithmetic(n);
  throw InvalidInputError("unknown verify family '" + family + "'");
}

// Sends `text` to --out when given, else to `out`.
void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("write to '" + path + "' failed");
}

struct CommonFlags {
  std::string format = "text";
  std::string out_path;
  int threads = 1;
};

void AddCommon(CLI::App* app, CommonFlags& f) {
  app->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app->add_option("--out", f.out_path, "Write output to this path");
  app->add_option("--threads", f.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
}

struct InputFlags {
  std::string gens;
  std::optional<Int> triangular;
  std::optional<Int> tetrahedral;
  std::vector<Int> arith;
  std::optional<Int> choose4;
};

void AddInput(CLI::App* app, InputFlags& f) {
  auto* group = app->add_option_group("input");
  group->add_option("--gens", f.gens, "Comma-separated generators");
  group->add_option("--triangular", f.triangular, "Triangular index n");
  group->add_option("--tetrahedral", f.tetrahedral, "Tetrahedral index n");
  group->add_option("--arith", f.arith, "Run start and length: n,k")
      ->delimiter(',')
      ->expected(2);
  group->add_option("--choose4", f.choose4, "C(n+3,4), ..., C(n+7,4)");
  group->require_option(1);
}

InputSpec ToSpec(const InputFlags& f) {
  InputSpec spec;
  if (!f.gens.empty()) {
    spec.family = InputFamily::kGens;
    spec.generators = ParseGeneratorList(f.gens);
  } else if (f.triangular) {
    spec.family = InputFamily::kTriangular;
    spec.n = *f.triangular;
  } else if (f.tetrahedral) {
    spec.family = InputFamily::kTetrahedral;
    spec.n = *f.tetrahedral;
  } else if (f.arith.size() == 2) {
    spec.family = InputFamily::kArith;
    spec.n = f.arith[0];
    spec.k = f.arith[1];
  } else if (f.choose4) {
    spec.family = InputFamily::kChoose4;
    spec.n = *f.choose4;
  } else {
    throw InvalidInputError("no input given");
  }
  return spec;
}

int EmitRecord(const OutputRecord& r, const CommonFlags& flags,
               std::ostream& out, std::ostream& err) {
  std::string text;
  if (flags.format == "json") {
    text = json(r).dump(2) + "\n";
  } else if (flags.format == "csv") {
    text = CsvRecord(r);
  } else {
    text = TextRecord(r);
  }
  Emit(text, flags.out_path, out);
  if (!r.AllAgree()) {
    err << "error: methods disagree\n";
    return kExitCounterexample;
  }
  return kExitOk;
}

int RunVerify(const std::string& family, const std::string& range,
              const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  std::vector<VerifyRecord> records;
  std::string summary;
  if (family == "choose5perms") {
    const CaseReport report = VerifyChoose5Permutations();
    const PermutationReport perms = Choose5Counterexample();
    records.push_back({kSchemaVersion, family, 0, report.Passed(),
                       static_cast<Int>(report.checks.size()),
                       report.FirstFailure()});
    summary = "choose5perms: " + std::to_string(perms.telescopic_count) + "/" +
              std::to_string(perms.total) + " telescopic, " +
              (report.Passed() ? "pass" : "FAIL");
  } else {
    if (range.empty()) throw InvalidInputError("verify needs --range a..b");
    const auto [first, last] = ParseRange(range);
    std::vector<CaseReport> reports(static_cast<size_t>(last - first + 1));
    ParallelFor(reports.size(), flags.threads, [&](size_t i) {
      reports[i] = RunVerification(family, first + static_cast<Int>(i));
    });
    size_t passed = 0;
    for (const CaseReport& rep : reports) {
      passed += rep.Passed() ? 1 : 0;
      records.push_back({kSchemaVersion, family, rep.n, rep.Passed(),
                         static_cast<Int>(rep.checks.size()),
                         rep.FirstFailure()});
    }
    summary = family + " " + std::to_string(first) + ".." +
              std::to_string(last) + ": " + std::to_string(passed) + "/" +
              std::to_string(reports.size()) + " pass";
  }

  std::ostringstream text;
  if (flags.format == "json") {
    text << json(records).dump(2) << "\n";
  } else if (flags.format == "csv") {
    text << "family,n,pass,checks,first_failure\n";
    for (const auto& r : records) {
      text << r.family << ',' << r.n << ',' << (r.pass ? "true" : "false")
           << ',' << r.checks << ",\"" << r.first_failure << "\"\n";
    }
  } else {
    for (const auto& r : records) {
      text << r.family << " n=" << r.n << ": "
           << (r.pass ? "pass" : "FAIL") << " (" << r.checks << " checks)";
      if (!r.pass) text << " " << r.first_failure;
      text << "\n";
    }
    text << summary << "\n";
  }
  Emit(text.str(), flags.out_path, out);

  for (const auto& r : records) {
    if (!r.pass) {
      err << "first counterexample: " << r.family << " n=" << r.n << ": "
          << r.first_failure << "\n";
      return kExitCounterexample;
    }
  }
  return kExitOk;
}

int RunTable(const std::string& family, const std::string& range,
             std::optional<Int> arith_n, const std::string& k_range,
             const CommonFlags& flags, std::ostream& out) {
  std::pair<Int, Int> bounds;
  if (family == "arith") {
    if (!arith_n) throw InvalidInputError("table --family arith needs --n");
    bounds = ParseRange(k_range.empty() ? "2.." + std::to_string(*arith_n)
                                        : k_range);
  } else {
    if (range.empty()) throw InvalidInputError("table needs --range a..b");
    bounds = ParseRange(range);
  }
  const auto rows =
      BuildTable(family, bounds.first, bounds.second, arith_n, flags.threads);
  std::ostringstream text;
  if (flags.format == "json") {
    text << json(rows).dump(2) << "\n";
  } else if (flags.format == "csv") {
    text << TableCsvHeader();
    for (const auto& row : rows) text << ToCsv(row);
  } else {
    for (const auto& row : rows) text << TextRow(row) << "\n";
  }
  Emit(text.str(), flags.out_path, out);
  return kExitOk;
}

int RunPerms(const std::string& gens, const CommonFlags& flags,
             std::ostream& out) {
  const GeneratorSequence seq =
      gens.empty() ? Choose5Sequence() : GeneratorSequence(ParseGeneratorList(gens));
  const PermutationReport report = TelescopicPermutations(seq);
  PermutationRecord rec;
  rec.generators = seq.vec();
  rec.total = static_cast<Int>(report.total);
  rec.telescopic = static_cast<Int>(report.telescopic_count);
  for (const auto& o : report.outcomes) {
    if (o.telescopic) rec.telescopic_orderings.push_back(o.permutation);
  }
  std::ostringstream text;
  if (flags.format == "json") {
    text << json(rec).dump(2) << "\n";
  } else if (flags.format == "csv") {
    text << "permutation,telescopic,failing_index\n";
    for (const auto& o : report.outcomes) {
      text << Join(o.permutation, ";") << ',' << (o.telescopic ? "true" : "false")
           << ',' << o.failing_index << '\n';
    }
  } else {
    for (const auto& o : report.outcomes) {
      if (o.telescopic) text << "telescopic: " << Join(o.permutation) << "\n";
    }
    text << rec.telescopic << "/" << rec.total << " orderings of "
         << Join(rec.generators) << " are telescopic\n";
  }
  Emit(text.str(), flags.out_path, out);
  return kExitOk;
}

}  // namespace

std::vector<Int> ParseGeneratorList(const std::string& text) {
  std::vector<Int> out;
  std::string_view rest = text;
  while (true) {
    const size_t comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    const Int value = ParseInt(token);
    if (value < 1) {
      throw InvalidInputError("generators must be positive, got " +
                              std::to_string(value));
    }
    if (std::find(out.begin(), out.end(), value) != out.end()) {
      throw InvalidInputError("duplicate generator " + std::to_string(value));
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::pair<Int, Int> ParseRange(const std::string& text) {
  const size_t dots = text.find("..");
  Int first = 0, last = 0;
  if (dots == std::string::npos) {
    first = last = ParseInt(text);
  } else {
    first = ParseInt(std::string_view(text).substr(0, dots));
    last = ParseInt(std::string_view(text).substr(dots + 2));
  }
  if (first < 1 || last < first) {
    throw InvalidInputError("bad range '" + text + "'");
  }
  return {first, last};
}

std::vector<Int> InputGenerators(const InputSpec& spec) {
  switch (spec.family) {
    case InputFamily::kGens:
      if (spec.generators.empty()) throw InvalidInputError("empty sequence");
      return spec.generators;
    case InputFamily::kTriangular:
      return TriangularTriple::Make(spec.n).Sequence().vec();
    case InputFamily::kTetrahedral:
      return TetrahedralQuadruple::Make(spec.n).Sequence().vec();
    case InputFamily::kArith:
      if (spec.n < 2 || spec.k < 2 || spec.k > spec.n) {
        throw InvalidInputError("arith needs 2 <= k <= n");
      }
      return Iota(spec.n, spec.k);
    case InputFamily::kChoose4:
      return Choose4Sequence(spec.n).vec();
  }
  return {};
}

InputDescriptor Describe(const InputSpec& spec) {
  InputDescriptor d;
  d.family = FamilyName(spec.family);
  if (spec.family != InputFamily::kGens) d.n = spec.n;
  if (spec.family == InputFamily::kArith) d.k = spec.k;
  d.generators = InputGenerators(spec);
  return d;
}

OutputRecord CmdFrobenius(const InputSpec& spec, bool cross_check) {
  OutputRecord r;
  r.command = "frobenius";
  r.input = Describe(spec);
  FillFrobenius(spec, cross_check, r);
  return r;
}

OutputRecord CmdAnalyze(const InputSpec& spec, const AnalyzeOptions& options) {
  OutputRecord r;
  r.command = "analyze";
  r.input = Describe(spec);
  FillFrobenius(spec, options.cross_check, r);

  const GeneratorSequence seq(r.input.generators);
  const auto s = NumericalSemigroup::FromGenerators(seq);
  r.minimal_generators = std::vector<Int>(s.generators().begin(),
                                          s.generators().end());
  r.embedding_dimension = s.embedding_dimension();
  r.telescopic_directions = TelescopicDirections(seq);

  const AperySet& ap = s.AperyOfMultiplicity();
  r.apery = SummarizeApery(ap.anchor, ap.elements, options.full_apery);
  r.agreement.push_back({"apery", ap.Max() - ap.anchor,
                         ap.Max() - ap.anchor == *r.frobenius});

  if (StructuralClosedForm(spec)) {
    FillClosedStructure(spec, s, options, r);
  } else {
    if (spec.family == InputFamily::kTriangular ||
        spec.family == InputFamily::kTetrahedral) {
      r.notes.push_back("reduced embedding dimension; generic machinery used");
    }
    const auto& dirs = *r.telescopic_directions;
    if (!dirs.empty()) r.direction = dirs.front();
    FillGenericStructure(r.input.generators, s, options, r);
  }
  return r;
}

std::vector<TableRow> BuildTable(const std::string& family, Int first, Int last,
                                 std::optional<Int> arith_n, int threads) {
  if (first < 1 || last < first) throw InvalidInputError("bad range");
  std::vector<TableRow> rows(static_cast<size_t>(last - first + 1));
  std::vector<std::exception_ptr> errors(rows.size());
  ParallelFor(rows.size(), threads, [&](size_t i) {
    const Int x = first + static_cast<Int>(i);
    try {
      rows[i] = family == "arith" ? MakeRow(family, *arith_n, x)
                                  : MakeRow(family, x, std::nullopt);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact computations on numerical semigroups", "numsg"};
  app.require_subcommand(1);

  CommonFlags common;
  InputFlags input;
  bool cross_check = false;
  bool full = false;
  std::optional<Int> betti_bound;
  std::string family;
  std::string range;
  std::optional<Int> arith_n;
  std::string k_range;
  std::string perm_gens;

  auto* frob = app.add_subcommand("frobenius", "Frobenius number");
  AddInput(frob, input);
  AddCommon(frob, common);
  frob->add_flag("--cross-check", cross_check, "Run every applicable method");

  auto* analyze = app.add_subcommand("analyze", "Structure of a semigroup");
  AddInput(analyze, input);
  AddCommon(analyze, common);
  analyze->add_flag("--cross-check", cross_check, "Compare with the oracles");
  analyze->add_flag("--full", full, "List the whole Apery set");
  analyze->add_option("--betti-bound", betti_bound, "Betti search bound");

  const std::vector<std::string> verify_families = {
      "triangular", "tetrahedral", "choose4", "choose5perms", "arith"};
  auto* verify = app.add_subcommand("verify", "Check closed forms over a range");
  verify->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember(verify_families));
  verify->add_option("--range", range, "a..b");
  AddCommon(verify, common);

  auto* table = app.add_subcommand("table", "Tabulate a family");
  table->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"triangular", "tetrahedral", "choose4", "arith"}));
  table->add_option("--range", range, "a..b");
  table->add_option("--n", arith_n, "Run start for arith");
  table->add_option("--k", k_range, "Run lengths for arith, a..b");
  AddCommon(table, common);

  auto* perms = app.add_subcommand("perms", "Telescopic test on every ordering");
  perms->add_option("--gens", perm_gens, "Comma-separated generators");
  AddCommon(perms, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    if (frob->parsed()) {
      return EmitRecord(CmdFrobenius(ToSpec(input), cross_check), common, out,
                        err);
    }
    if (analyze->parsed()) {
      AnalyzeOptions options{cross_check, full, betti_bound};
      return EmitRecord(CmdAnalyze(ToSpec(input), options), common, out, err);
    }
    if (verify->parsed()) return RunVerify(family, range, common, out, err);
    if (table->parsed()) {
      return RunTable(family, range, arith_n, k_range, common, out);
    }
    if (perms->parsed()) return RunPerms(perm_gens, common, out);
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const InvariantViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitCounterexample;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitInvalidInput;
}

}  // namespace numsg::cli
