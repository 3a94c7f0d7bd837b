//===- Benchmarks.cpp - Micro-benchmarks for the hot paths -----------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "treegraft/Instantiate.h"
#include "treegraft/Match.h"
#include "treegraft/Mutation.h"
#include "treegraft/Parse.h"
#include "treegraft/Print.h"
#include "treegraft/Random.h"

#include <benchmark/benchmark.h>

#include <sstream>
#include <string>

using namespace treegraft;

namespace {

/// A module body of `ops` single-result operations chained through their
/// operands, every fourth one carrying a nested region.
std::string syntheticProgram(int ops) {
  std::ostringstream os;
  os << "%v0 = \"hw.constant\"() {value = 1 : i8} : () -> i8\n";
  for (int i = 1; i < ops; ++i) {
    os << "%v" << i << " = \"comb.add\"(%v" << (i - 1) << ", %v" << (i - 1)
       << ")";
    if (i % 4 == 0)
      os << " ({\n  \"sv.verbatim\"() : () -> ()\n})";
    os << " : (i8, i8) -> i8\n";
  }
  return os.str();
}

void parseProgram(benchmark::State &state) {
  std::string text = syntheticProgram(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SyntaxTree tree = parse(text);
    benchmark::DoNotOptimize(tree.root);
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(text.size()));
}
BENCHMARK(parseProgram)->Arg(16)->Arg(128)->Arg(1024);

void printProgram(benchmark::State &state) {
  SyntaxTree tree = parse(syntheticProgram(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    std::string text = print(tree);
    benchmark::DoNotOptimize(text);
  }
}
BENCHMARK(printProgram)->Arg(16)->Arg(128)->Arg(1024);

void synthesize(benchmark::State &state) {
  SyntaxTree donor = parse(syntheticProgram(static_cast<int>(state.range(0))));
  Rng master(17);
  uint64_t salt = 0;
  for (auto _ : state) {
    Rng rng = master.fork(salt++);
    ParameterizedMutation pm = synthesizeMutation(donor, rng);
    benchmark::DoNotOptimize(pm.mutationRoot);
  }
}
BENCHMARK(synthesize)->Arg(16)->Arg(128)->Arg(1024);

void locateSites(benchmark::State &state) {
  SyntaxTree donor = parse(syntheticProgram(64));
  SyntaxTree recipient =
      parse(syntheticProgram(static_cast<int>(state.range(0))));
  Rng rng(17);
  ParameterizedMutation pm = synthesizeMutation(donor, rng);
  for (auto _ : state) {
    std::vector<MutationSite> sites = locate(pm, recipient, MatchConfig{});
    benchmark::DoNotOptimize(sites);
  }
}
BENCHMARK(locateSites)->Arg(16)->Arg(128)->Arg(1024);

void firstSitesThroughWindow(benchmark::State &state) {
  SyntaxTree donor = parse(syntheticProgram(64));
  SyntaxTree recipient = parse(syntheticProgram(1024));
  Rng rng(17);
  ParameterizedMutation pm = synthesizeMutation(donor, rng);
  for (auto _ : state) {
    SiteEnumerator enumerator(pm, recipient, MatchConfig{});
    std::vector<MutationSite> sites =
        enumerator.take(static_cast<size_t>(state.range(0)));
    benchmark::DoNotOptimize(sites);
  }
}
BENCHMARK(firstSitesThroughWindow)->Arg(1)->Arg(64);

void mutationPipeline(benchmark::State &state) {
  SyntaxTree donor = parse(syntheticProgram(static_cast<int>(state.range(0))));
  SyntaxTree recipient =
      parse(syntheticProgram(static_cast<int>(state.range(0))));
  Rng master(17);
  uint64_t salt = 0;
  uint64_t grafts = 0;
  for (auto _ : state) {
    Rng rng = master.fork(salt++);
    ParameterizedMutation pm = synthesizeMutation(donor, rng);
    SiteEnumerator enumerator(pm, recipient, MatchConfig{});
    std::vector<MutationSite> sites = enumerator.take(64);
    if (sites.empty())
      continue;
    const MutationSite &site = sites[rng.uniformInt(sites.size())];
    ParameterBinding binding =
        bindParameters(pm, recipient, site, MatchConfig{}, rng);
    try {
      SyntaxTree mutant = graft(recipient, site, *instantiate(pm, binding));
      benchmark::DoNotOptimize(mutant.root);
      ++grafts;
    } catch (const GraftError &) {
    }
  }
  state.counters["grafts"] =
      benchmark::Counter(static_cast<double>(grafts),
                         benchmark::Counter::kIsRate);
}
BENCHMARK(mutationPipeline)->Arg(16)->Arg(128)->Arg(1024);

void constraintCheck(benchmark::State &state) {
  SyntaxTree tree = parse(syntheticProgram(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    std::vector<Violation> violations = checkGenericConstraints(tree);
    benchmark::DoNotOptimize(violations);
  }
}
BENCHMARK(constraintCheck)->Arg(16)->Arg(128)->Arg(1024);

} // namespace

BENCHMARK_MAIN();
