//===- treegraft.cpp - Command line driver -----------------------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Subcommands:
//   fuzz     run the mutation fuzzing loop against a target
//   analyze  dialect pair coverage of a seed corpus
//   mutate   synthesize one mutation from a donor and graft it into a
//            recipient (the unit-scale workhorse)
//
//===----------------------------------------------------------------------===//

#include "treegraft/Driver.h"
#include "treegraft/Instantiate.h"
#include "treegraft/Mutation.h"
#include "treegraft/Parse.h"
#include "treegraft/Print.h"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace treegraft;

namespace {

std::string readWholeFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string pathString(const NodePath &path) {
  if (path.empty())
    return "/";
  std::string out;
  for (uint32_t index : path)
    out += "/" + std::to_string(index);
  return out;
}

//===----------------------------------------------------------------------===//
// fuzz
//===----------------------------------------------------------------------===//

struct FuzzArgs {
  std::string seeds, out, passesPath;
  std::string target = kBuiltinTarget;
  std::string passSelection = "heuristic";
  uint64_t iters = 0;
  double timeSecs = 0;
  uint64_t seed = 0;
  uint32_t p = 5, k = 4, l = 4, r = 4;
  uint32_t workers = 1, siteWindow = 64, optionPermille = 250;
  int64_t timeoutMs = 10000;
  bool noParameterization = false;
  bool quiet = false;
};

void addFuzz(CLI::App &app, FuzzArgs &args) {
  CLI::App *cmd = app.add_subcommand("fuzz", "Run the fuzzing loop");
  cmd->add_option("--seeds", args.seeds, "Directory of .mlir seed files")
      ->required();
  cmd->add_option("--target", args.target,
                  "Target executable, or builtin:reference");
  cmd->add_option("--passes", args.passesPath,
                  "Pass file: one name per line, tab-separated options "
                  "(defaults to the builtin table for builtin:reference)");
  cmd->add_option("--p", args.p, "Passes per invocation");
  cmd->add_option("--k", args.k, "Ancestors that must match");
  cmd->add_option("--l", args.l, "Left siblings that must match");
  cmd->add_option("--r", args.r, "Right siblings that must match");
  cmd->add_option("--iters", args.iters, "Iteration budget");
  cmd->add_option("--time", args.timeSecs, "Wall clock budget in seconds");
  cmd->add_option("--seed", args.seed, "RNG seed");
  cmd->add_option("--out", args.out, "Output directory")->required();
  cmd->add_flag("--no-parameterization", args.noParameterization,
                "Graft donor lexemes verbatim and skip the validity filter");
  cmd->add_option("--pass-selection", args.passSelection,
                  "Pass choice: heuristic (dialect-aware) or random")
      ->check(CLI::IsMember({"heuristic", "random"}));
  cmd->add_option("--workers", args.workers, "Worker threads");
  cmd->add_option("--timeout-ms", args.timeoutMs, "Per-invocation timeout");
  cmd->add_option("--option-permille", args.optionPermille,
                  "Probability (per thousand) of attaching a pass option");
  cmd->add_option("--site-window", args.siteWindow,
                  "Matching sites enumerated per pair before drawing");
  cmd->add_flag("--quiet", args.quiet, "Suppress progress lines");
}

int runFuzz(const FuzzArgs &args) {
  FuzzConfig config;
  config.seedDir = args.seeds;
  config.target = args.target;
  if (!args.passesPath.empty())
    config.passes = parsePassList(readWholeFile(args.passesPath));
  else if (args.target == kBuiltinTarget)
    config.passes = referencePassList();
  else
    throw std::runtime_error("--passes is required for external targets");
  config.passesPerRun = args.p;
  config.match = {args.k, args.l, args.r};
  config.iterations = args.iters;
  config.timeBudgetSecs = args.timeSecs;
  config.rngSeed = args.seed;
  config.outDir = args.out;
  config.parameterization = !args.noParameterization;
  config.passSelection = args.passSelection == "random"
                             ? PassSelection::Random
                             : PassSelection::DialectHeuristic;
  config.optionPermille = args.optionPermille;
  config.timeoutMs = args.timeoutMs;
  config.siteWindow = args.siteWindow;
  config.workers = args.workers;
  config.progress = args.quiet ? nullptr : &std::cerr;

  FuzzReport report = fuzzLoop(config);
  std::cout << renderReportText(report, config);
  return 0;
}

//===----------------------------------------------------------------------===//
// analyze
//===----------------------------------------------------------------------===//

int runAnalyze(const std::string &corpusDir) {
  Corpus corpus = loadCorpus(corpusDir);

  Coverage coverage;
  std::set<std::string> dialects;
  for (const Seed &seed : corpus.seeds) {
    coverage.merge(coverageOf(seed.tree));
    std::set<std::string> present = dialectsIn(seed.tree);
    dialects.insert(present.begin(), present.end());
  }

  std::cout << "corpus:  " << corpus.seeds.size() << " seeds from "
            << corpus.fileCount << " files (" << corpus.skipped.size()
            << " chunks skipped)\n";
  std::cout << "dialects (" << dialects.size() << "):";
  for (const std::string &dialect : dialects)
    std::cout << " " << dialect;
  std::cout << "\n";
  std::cout << "control pairs (" << coverage.control.size() << "):\n";
  for (const DialectPair &pair : coverage.control)
    std::cout << "  " << pair.first << " <-> " << pair.second << "\n";
  std::cout << "data pairs (" << coverage.data.size() << "):\n";
  for (const DialectPair &pair : coverage.data)
    std::cout << "  " << pair.first << " <-> " << pair.second << "\n";
  std::cout << "total: " << coverage.total() << "\n";
  for (const std::string &note : corpus.skipped)
    std::cerr << "skipped: " << note << "\n";
  return 0;
}

//===----------------------------------------------------------------------===//
// mutate
//===----------------------------------------------------------------------===//

struct MutateArgs {
  std::string donorPath, recipientPath;
  uint64_t seed = 0;
  uint32_t k = 4, l = 4, r = 4, siteWindow = 64;
  bool noParameterization = false;
  bool verbose = false;
};

void addMutate(CLI::App &app, MutateArgs &args) {
  CLI::App *cmd = app.add_subcommand(
      "mutate", "Graft one donor mutation into a recipient");
  cmd->add_option("--donor", args.donorPath, "Donor .mlir file")->required();
  cmd->add_option("--recipient", args.recipientPath, "Recipient .mlir file")
      ->required();
  cmd->add_option("--seed", args.seed, "RNG seed");
  cmd->add_option("--k", args.k, "Ancestors that must match");
  cmd->add_option("--l", args.l, "Left siblings that must match");
  cmd->add_option("--r", args.r, "Right siblings that must match");
  cmd->add_option("--site-window", args.siteWindow,
                  "Matching sites enumerated before drawing");
  cmd->add_flag("--no-parameterization", args.noParameterization,
                "Keep donor lexemes instead of rebinding them");
  cmd->add_flag("--verbose", args.verbose,
                "Describe the mutation, site, and binding on stderr");
}

int runMutate(const MutateArgs &args) {
  SyntaxTree donor = parse(readWholeFile(args.donorPath));
  SyntaxTree recipient = parse(readWholeFile(args.recipientPath));
  MatchConfig cfg{args.k, args.l, args.r};
  Rng rng(args.seed);

  ParameterizedMutation pm;
  try {
    pm = synthesizeMutation(donor, rng);
  } catch (const MutationError &err) {
    std::cerr << "no mutation: " << err.what() << "\n";
    return 2;
  }

  SiteEnumerator enumerator(pm, recipient, cfg);
  std::vector<MutationSite> sites = enumerator.take(args.siteWindow);
  if (sites.empty()) {
    std::cerr << "no matching site in the recipient; try another seed or "
                 "smaller --k/--l/--r\n";
    return 2;
  }
  const MutationSite &site = sites[rng.uniformInt(sites.size())];

  ParameterBinding binding;
  if (args.noParameterization) {
    for (const Parameter &param : pm.params)
      binding.values.push_back({param.donorValue, param.kind, std::nullopt});
  } else {
    binding = bindParameters(pm, recipient, site, cfg, rng);
  }

  SyntaxTree grafted;
  try {
    grafted = graft(recipient, site, *instantiate(pm, binding));
  } catch (const IllegalGraft &err) {
    std::cerr << "graft not admissible here: " << err.what()
              << "; try another seed\n";
    return 2;
  }

  if (args.verbose) {
    std::cerr << dumpMutation(pm);
    if (site.kind == MutationSite::Kind::Replace)
      std::cerr << "site: replace " << pathString(site.path) << "\n";
    else
      std::cerr << "site: insert " << pathString(site.path) << " pos "
                << site.childPos << "\n";
    for (size_t i = 0; i < binding.values.size(); ++i) {
      const BoundParameter &value = binding.values[i];
      std::cerr << "P" << i << " " << kindName(value.kind) << " "
                << value.lexeme << " ("
                << (value.provenance ? "recipient" : "donor") << ")\n";
    }
  }

  std::cout << print(grafted);
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Parse-tree mutation fuzzer for MLIR generic syntax"};
  app.require_subcommand(1);

  FuzzArgs fuzzArgs;
  addFuzz(app, fuzzArgs);
  std::string corpusDir;
  CLI::App *analyze =
      app.add_subcommand("analyze", "Dialect pair coverage of a corpus");
  analyze->add_option("--corpus", corpusDir, "Directory of .mlir seed files")
      ->required();
  MutateArgs mutateArgs;
  addMutate(app, mutateArgs);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("fuzz"))
      return runFuzz(fuzzArgs);
    if (app.got_subcommand("analyze"))
      return runAnalyze(corpusDir);
    return runMutate(mutateArgs);
  } catch (const SyntaxError &err) {
    std::cerr << "error: syntax error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception &err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
