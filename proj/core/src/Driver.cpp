//===- Driver.cpp - Fuzzing loop orchestration --------------------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "treegraft/Driver.h"

#include "treegraft/Instantiate.h"
#include "treegraft/Mutation.h"
#include "treegraft/Print.h"

#include <nlohmann/json.hpp>

#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace treegraft {

namespace {

// Diagnostic substrings that mark a violation of MLIR-wide rules rather
// than a dialect's own verifier.
constexpr const char *kGeneralPatterns[] = {
    "use of undeclared SSA",
    "redefinition of SSA value",
    "undefined symbol",
    "syntax error",
};
constexpr const char *kInvalidOptionPattern = "no such option";

} // namespace

const char *outcomeName(Outcome outcome) {
  switch (outcome) {
  case Outcome::Valid:
    return "valid";
  case Outcome::DialectSpecific:
    return "dialectSpecific";
  case Outcome::GeneralMLIR:
    return "generalMLIR";
  case Outcome::InvalidOptions:
    return "invalidOptions";
  case Outcome::Crash:
    return "crash";
  }
  return "unknown";
}

Outcome classifyOutcome(const RunResult &raw) {
  if (raw.abnormal())
    return Outcome::Crash;
  if (raw.exited && raw.exitCode == 0)
    return Outcome::Valid;
  if (raw.stderrText.find(kInvalidOptionPattern) != std::string::npos)
    return Outcome::InvalidOptions;
  for (const char *pattern : kGeneralPatterns)
    if (raw.stderrText.find(pattern) != std::string::npos)
      return Outcome::GeneralMLIR;
  return Outcome::DialectSpecific;
}

uint64_t FuzzCounters::sent() const {
  uint64_t n = 0;
  for (uint64_t count : byOutcome)
    n += count;
  return n;
}

uint64_t FuzzCounters::total() const {
  return synthFailed + noSite + illegalGraft + preFiltered + sent();
}

namespace {

namespace fs = std::filesystem;

struct IterationRecord {
  enum class Stage : uint8_t {
    SynthFailed,
    NoSite,
    IllegalGraft,
    PreFiltered,
    Sent,
  };
  Stage stage = Stage::SynthFailed;
  Outcome outcome = Outcome::Valid;
  Coverage coverage;
  std::string donorId, recipientId;
  std::vector<std::string> pipelineFlags;
  // Persisted test-case text; kept only for crash and valid outcomes.
  std::string text;
  int exitCode = 0;
  bool signaled = false;
  int termSignal = 0;
  bool timedOut = false;
  std::string stderrHead;
};

ParameterBinding donorBinding(const ParameterizedMutation &pm) {
  ParameterBinding binding;
  binding.values.reserve(pm.params.size());
  for (const Parameter &param : pm.params)
    binding.values.push_back({param.donorValue, param.kind, std::nullopt});
  return binding;
}

IterationRecord runIteration(uint64_t iteration, const FuzzConfig &config,
                             const Corpus &corpus, const Rng &rootRng,
                             const std::string &tmpDir) {
  IterationRecord rec;
  Rng rng = rootRng.fork(iteration);

  const Seed &donor = corpus.seeds[rng.uniformInt(corpus.seeds.size())];
  const Seed &recipient = corpus.seeds[rng.uniformInt(corpus.seeds.size())];
  rec.donorId = donor.id;
  rec.recipientId = recipient.id;

  ParameterizedMutation pm;
  try {
    pm = synthesizeMutation(donor.tree, rng);
  } catch (const MutationError &) {
    rec.stage = IterationRecord::Stage::SynthFailed;
    return rec;
  }

  SiteEnumerator enumerator(pm, recipient.tree, config.match);
  std::vector<MutationSite> sites = enumerator.take(config.siteWindow);
  if (sites.empty()) {
    rec.stage = IterationRecord::Stage::NoSite;
    return rec;
  }
  const MutationSite &site = sites[rng.uniformInt(sites.size())];

  ParameterBinding binding =
      config.parameterization
          ? bindParameters(pm, recipient.tree, site, config.match, rng)
          : donorBinding(pm);

  SyntaxTree grafted;
  try {
    grafted = graft(recipient.tree, site, *instantiate(pm, binding));
  } catch (const GraftError &) {
    rec.stage = IterationRecord::Stage::IllegalGraft;
    return rec;
  }

  if (config.parameterization && !checkGenericConstraints(grafted).empty()) {
    rec.stage = IterationRecord::Stage::PreFiltered;
    return rec;
  }

  std::string text = print(grafted);
  std::vector<PassInvocation> pipeline =
      selectPasses(grafted, config.passes, config.passesPerRun,
                   config.passSelection, config.optionPermille, rng);

  RunResult raw =
      runTarget(config.target, pipeline, text, tmpDir, config.timeoutMs);

  rec.stage = IterationRecord::Stage::Sent;
  rec.outcome = classifyOutcome(raw);
  rec.coverage = coverageOf(grafted);
  for (const PassInvocation &inv : pipeline)
    rec.pipelineFlags.push_back(inv.flag());
  rec.exitCode = raw.exitCode;
  rec.signaled = raw.signaled;
  rec.termSignal = raw.termSignal;
  rec.timedOut = raw.timedOut;
  rec.stderrHead = raw.stderrText.substr(0, 500);
  if (rec.outcome == Outcome::Crash || rec.outcome == Outcome::Valid)
    rec.text = std::move(text);
  return rec;
}

std::string iterName(uint64_t iteration) {
  std::ostringstream out;
  out << "iter-" << std::setfill('0') << std::setw(6) << iteration;
  return out.str();
}

void writeFile(const fs::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

// Folds one finished iteration into the report and persists its artifacts.
void collect(uint64_t iteration, const IterationRecord &rec,
             FuzzReport &report, const fs::path &outDir) {
  ++report.iterationsRun;
  switch (rec.stage) {
  case IterationRecord::Stage::SynthFailed:
    ++report.counters.synthFailed;
    return;
  case IterationRecord::Stage::NoSite:
    ++report.counters.noSite;
    return;
  case IterationRecord::Stage::IllegalGraft:
    ++report.counters.illegalGraft;
    return;
  case IterationRecord::Stage::PreFiltered:
    ++report.counters.preFiltered;
    return;
  case IterationRecord::Stage::Sent:
    break;
  }

  ++report.counters.byOutcome[static_cast<size_t>(rec.outcome)];
  report.coverage.merge(rec.coverage);

  bool isCrash = rec.outcome == Outcome::Crash;
  if (!isCrash && rec.outcome != Outcome::Valid)
    return;

  std::string stem = iterName(iteration);
  fs::path dir = outDir / (isCrash ? "crashes" : "valid");
  writeFile(dir / (stem + ".mlir"), rec.text);

  nlohmann::json meta;
  meta["category"] = outcomeName(rec.outcome);
  meta["donor"] = rec.donorId;
  meta["recipient"] = rec.recipientId;
  meta["iteration"] = iteration;
  meta["pipeline"] = rec.pipelineFlags;
  meta["exitCode"] = rec.exitCode;
  if (isCrash) {
    meta["signal"] = rec.termSignal;
    meta["timedOut"] = rec.timedOut;
    meta["stderr"] = rec.stderrHead;
  }
  writeFile(dir / (stem + ".json"), meta.dump(2) + "\n");

  (isCrash ? report.crashFiles : report.validFiles).push_back(stem + ".mlir");
}

} // namespace

std::string renderReportText(const FuzzReport &report,
                             const FuzzConfig &config) {
  const FuzzCounters &c = report.counters;
  std::ostringstream out;
  out << "fuzzing report\n";
  out << "==============\n";
  out << "corpus:       " << report.corpusSeeds << " seeds from "
      << report.corpusFiles << " files (" << report.corpusSkipped
      << " chunks skipped)\n";
  out << "target:       " << config.target << "\n";
  out << "iterations:   " << report.iterationsRun << "\n";
  out << "elapsed:      " << std::fixed << std::setprecision(2)
      << report.elapsedSecs << " s\n";
  out << "\n";
  out << "iteration buckets\n";
  out << "  synth failed:     " << c.synthFailed << "\n";
  out << "  no site:          " << c.noSite << "\n";
  out << "  illegal graft:    " << c.illegalGraft << "\n";
  out << "  pre-filtered:     " << c.preFiltered << "\n";
  out << "  sent to target:   " << c.sent() << "\n";
  out << "\n";
  out << "target outcomes\n";
  for (size_t i = 0; i < kOutcomeCount; ++i)
    out << "  " << std::left << std::setw(17)
        << (std::string(outcomeName(static_cast<Outcome>(i))) + ":")
        << c.byOutcome[i] << "\n";
  out << "\n";
  out << "coverage:     " << report.coverage.control.size()
      << " control pairs, " << report.coverage.data.size() << " data pairs\n";
  out << "saved:        " << report.crashFiles.size() << " crashes, "
      << report.validFiles.size() << " valid\n";
  return out.str();
}

std::string renderReportJson(const FuzzReport &report,
                             const FuzzConfig &config) {
  nlohmann::json j;

  nlohmann::json &cfg = j["config"];
  cfg["iterations"] = config.iterations;
  cfg["k"] = config.match.k;
  cfg["l"] = config.match.l;
  cfg["r"] = config.match.r;
  cfg["optionPermille"] = config.optionPermille;
  cfg["p"] = config.passesPerRun;
  cfg["parameterization"] = config.parameterization;
  cfg["passSelection"] = config.passSelection == PassSelection::Random
                             ? "random"
                             : "heuristic";
  cfg["rngSeed"] = config.rngSeed;
  cfg["siteWindow"] = config.siteWindow;
  cfg["target"] = config.target;
  cfg["timeoutMs"] = config.timeoutMs;

  nlohmann::json &corpus = j["corpus"];
  corpus["files"] = report.corpusFiles;
  corpus["seeds"] = report.corpusSeeds;
  corpus["skipped"] = report.corpusSkipped;

  const FuzzCounters &c = report.counters;
  nlohmann::json &counters = j["counters"];
  counters["iterations"] = report.iterationsRun;
  counters["synthFailed"] = c.synthFailed;
  counters["noSite"] = c.noSite;
  counters["illegalGraft"] = c.illegalGraft;
  counters["preFiltered"] = c.preFiltered;
  counters["sent"] = c.sent();
  for (size_t i = 0; i < kOutcomeCount; ++i)
    counters[outcomeName(static_cast<Outcome>(i))] = c.byOutcome[i];

  nlohmann::json &coverage = j["coverage"];
  coverage["control"] = nlohmann::json::array();
  for (const DialectPair &pair : report.coverage.control)
    coverage["control"].push_back({pair.first, pair.second});
  coverage["data"] = nlohmann::json::array();
  for (const DialectPair &pair : report.coverage.data)
    coverage["data"].push_back({pair.first, pair.second});
  coverage["total"] = report.coverage.total();

  j["crashes"] = report.crashFiles;
  j["valid"] = report.validFiles;

  return j.dump(2) + "\n";
}

FuzzReport fuzzLoop(const FuzzConfig &config) {
  if (config.passesPerRun < 1)
    throw std::invalid_argument("passes per run must be at least 1");
  if (config.workers < 1)
    throw std::invalid_argument("worker count must be at least 1");
  bool hasBudget = config.iterations > 0 || config.timeBudgetSecs > 0;
  if (hasBudget && config.passes.passes.empty())
    throw std::invalid_argument("pass list is empty");
  if (config.outDir.empty())
    throw std::invalid_argument("output directory is required");

  auto start = std::chrono::steady_clock::now();

  Corpus corpus = loadCorpus(config.seedDir);

  fs::path outDir(config.outDir);
  fs::create_directories(outDir / "crashes");
  fs::create_directories(outDir / "valid");
  fs::path tmpDir = outDir / "tmp";
  fs::create_directories(tmpDir);

  FuzzReport report;
  report.corpusSeeds = corpus.seeds.size();
  report.corpusFiles = corpus.fileCount;
  report.corpusSkipped = corpus.skipped.size();

  Rng rootRng(config.rngSeed);
  std::string tmp = tmpDir.string();

  auto progress = [&](uint64_t done, uint64_t planned) {
    if (!config.progress)
      return;
    *config.progress << "[" << done << "/"
                     << (planned ? std::to_string(planned) : "?") << "] sent "
                     << report.counters.sent() << ", crashes "
                     << report.crashFiles.size() << "\n";
  };

  if (config.timeBudgetSecs > 0) {
    auto deadline =
        start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(config.timeBudgetSecs));
    for (uint64_t i = 0; std::chrono::steady_clock::now() < deadline; ++i) {
      collect(i, runIteration(i, config, corpus, rootRng, tmp), report,
              outDir);
      if ((i + 1) % 1000 == 0)
        progress(i + 1, 0);
    }
  } else if (config.workers == 1) {
    uint64_t step = std::max<uint64_t>(1, config.iterations / 10);
    for (uint64_t i = 0; i < config.iterations; ++i) {
      collect(i, runIteration(i, config, corpus, rootRng, tmp), report,
              outDir);
      if ((i + 1) % step == 0)
        progress(i + 1, config.iterations);
    }
  } else {
    // Workers race through the iteration space; records are folded in by
    // index afterwards, so the report cannot depend on scheduling.
    std::vector<IterationRecord> records(config.iterations);
    std::atomic<uint64_t> next{0};
    std::mutex failureLock;
    std::exception_ptr failure;
    auto work = [&] {
      for (;;) {
        uint64_t i = next.fetch_add(1);
        if (i >= config.iterations)
          return;
        try {
          records[i] = runIteration(i, config, corpus, rootRng, tmp);
        } catch (...) {
          std::lock_guard<std::mutex> guard(failureLock);
          if (!failure)
            failure = std::current_exception();
          next.store(config.iterations);
          return;
        }
      }
    };
    std::vector<std::thread> threads;
    for (uint32_t w = 0; w < config.workers; ++w)
      threads.emplace_back(work);
    for (std::thread &thread : threads)
      thread.join();
    if (failure)
      std::rethrow_exception(failure);
    for (uint64_t i = 0; i < config.iterations; ++i)
      collect(i, records[i], report, outDir);
    progress(config.iterations, config.iterations);
  }

  report.elapsedSecs = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  writeFile(outDir / "report.txt", renderReportText(report, config));
  writeFile(outDir / "report.json", renderReportJson(report, config));

  std::error_code ec;
  fs::remove_all(tmpDir, ec);
  return report;
}

} // namespace treegraft
