//===- Coverage.h - Dialect pair coverage metrics --------------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef TREEGRAFT_COVERAGE_H
#define TREEGRAFT_COVERAGE_H

#include "treegraft/Syntax.h"

#include <set>
#include <string>
#include <string_view>
#include <utility>

namespace treegraft {

/// Dialects of an interacting pair of operations, lexicographically ordered
/// so that {a, b} and {b, a} collapse into one entry.
using DialectPair = std::pair<std::string, std::string>;

/// The dialect prefix of an operation name: the part before the first dot,
/// with surrounding quotes ignored. Names without a dot are their own
/// dialect.
std::string dialectOf(std::string_view opName);

struct Coverage {
  /// Distinct dialects of an operation and an operation nested anywhere
  /// inside its regions, however deep.
  std::set<DialectPair> control;
  /// Distinct dialects of a value's defining operation and an operation
  /// using that value, honoring block scoping and shadowing.
  std::set<DialectPair> data;

  void merge(const Coverage &other);
  size_t total() const { return control.size() + data.size(); }
  bool operator==(const Coverage &other) const = default;
};

Coverage coverageOf(const SyntaxTree &tree);

} // namespace treegraft

#endif // TREEGRAFT_COVERAGE_H
