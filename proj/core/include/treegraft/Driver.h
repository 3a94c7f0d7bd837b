//===- Driver.h - Fuzzing loop orchestration ---------------------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef TREEGRAFT_DRIVER_H
#define TREEGRAFT_DRIVER_H

#include "treegraft/Corpus.h"
#include "treegraft/Coverage.h"
#include "treegraft/Match.h"
#include "treegraft/Passes.h"
#include "treegraft/Process.h"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace treegraft {

/// What one target invocation amounted to. Crash is decided by how the
/// process ended, never by diagnostics; the text categories apply in the
/// order InvalidOptions, GeneralMLIR, DialectSpecific.
enum class Outcome : uint8_t {
  Valid,
  DialectSpecific,
  GeneralMLIR,
  InvalidOptions,
  Crash,
};
inline constexpr size_t kOutcomeCount = 5;
const char *outcomeName(Outcome outcome);

Outcome classifyOutcome(const RunResult &raw);

struct FuzzConfig {
  std::string seedDir;
  std::string target = kBuiltinTarget;
  PassList passes;
  uint32_t passesPerRun = 5;
  MatchConfig match;
  /// Fixed iteration budget; used when timeBudgetSecs is 0.
  uint64_t iterations = 0;
  /// Wall-clock budget in seconds; nonzero wins over iterations.
  double timeBudgetSecs = 0;
  uint64_t rngSeed = 0;
  std::string outDir;
  bool parameterization = true;
  PassSelection passSelection = PassSelection::DialectHeuristic;
  /// Probability, in thousandths, that a selected pass gets an option.
  uint32_t optionPermille = 250;
  int64_t timeoutMs = 10000;
  /// At most this many matching sites are enumerated per pair before one
  /// is drawn, bounding per-iteration work on site-rich recipients.
  uint32_t siteWindow = 64;
  /// Worker threads for fixed-iteration runs. Any count produces the same
  /// report; 1 is the reference.
  uint32_t workers = 1;
  /// When set, progress lines are written here during the run.
  std::ostream *progress = nullptr;
};

struct FuzzCounters {
  uint64_t synthFailed = 0;  // donor had no eligible subtree
  uint64_t noSite = 0;       // context matched nowhere in the recipient
  uint64_t illegalGraft = 0; // site found, but the graft was inadmissible
  uint64_t preFiltered = 0;  // mutant violated generic constraints
  uint64_t byOutcome[kOutcomeCount] = {};

  uint64_t sent() const;
  /// Every iteration lands in exactly one bucket.
  uint64_t total() const;
};

struct FuzzReport {
  FuzzCounters counters;
  Coverage coverage;
  uint64_t iterationsRun = 0;
  size_t corpusSeeds = 0;
  size_t corpusFiles = 0;
  size_t corpusSkipped = 0;
  std::vector<std::string> crashFiles; // names under outDir/crashes
  std::vector<std::string> validFiles; // names under outDir/valid
  double elapsedSecs = 0;
};

/// Human-readable report, timing included.
std::string renderReportText(const FuzzReport &report,
                             const FuzzConfig &config);
/// Machine-readable report. Deliberately timing- and path-free so equal
/// configs and seeds give byte-identical files, whatever the machine,
/// worker count, or output directory.
std::string renderReportJson(const FuzzReport &report,
                             const FuzzConfig &config);

/// Runs the full loop: load seeds, mutate, invoke the target, classify,
/// persist crashes/ and valid/ cases, and write report.txt and report.json
/// under config.outDir. Per-iteration failures are counted, never fatal;
/// EmptyCorpus, SpawnError, and configuration errors propagate.
FuzzReport fuzzLoop(const FuzzConfig &config);

} // namespace treegraft

#endif // TREEGRAFT_DRIVER_H
