//===- Passes.h - Pass list parsing and pipeline selection ------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef TREEGRAFT_PASSES_H
#define TREEGRAFT_PASSES_H

#include "treegraft/Random.h"
#include "treegraft/Syntax.h"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace treegraft {

struct PassInfo {
  std::string name;
  std::vector<std::string> options;
};

struct PassList {
  std::vector<PassInfo> passes;
  /// Union of every pass's options, in first-seen order. Option draws come
  /// from this global pool, so an option can land on a pass it is not
  /// legal for — that is what exercises a target's option rejection.
  std::vector<std::string> optionPool;
};

/// Parses the pass file format: one pass name per line, optionally
/// followed by tab-separated legal options. Blank lines are skipped.
PassList parsePassList(std::string_view text);

/// The bundled validator's own table, as a pass list.
PassList referencePassList();

enum class PassSelection : uint8_t { DialectHeuristic, Random };

struct PassInvocation {
  std::string name;
  std::optional<std::string> option;

  /// Flag shape the targets accept: --name or --name=option.
  std::string flag() const {
    return "--" + name + (option ? "=" + *option : "");
  }
};

/// Dialect prefixes of every operation in the tree.
std::set<std::string> dialectsIn(const SyntaxTree &tree);

/// Draws min(p, #passes) distinct passes. DialectHeuristic prefers passes
/// whose names contain a dialect present in the tree, padding with uniform
/// draws from the rest; Random draws uniformly without replacement. Each
/// drawn pass gets one option from the global pool with probability
/// optionPermille/1000.
std::vector<PassInvocation> selectPasses(const SyntaxTree &tree,
                                         const PassList &list, size_t p,
                                         PassSelection mode,
                                         uint32_t optionPermille, Rng &rng);

} // namespace treegraft

#endif // TREEGRAFT_PASSES_H
