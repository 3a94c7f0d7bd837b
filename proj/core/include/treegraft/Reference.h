//===- Reference.h - Bundled opt-style validator ---------------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// A hermetic stand-in for a compiler's opt tool. It accepts the same flag
// shape the fuzz driver emits (--pass or --pass=option), validates the
// input's generic constraints, and enforces a small dialect signature
// table, so the whole pipeline can run and be tested without an external
// compiler build.
//
//===----------------------------------------------------------------------===//

#ifndef TREEGRAFT_REFERENCE_H
#define TREEGRAFT_REFERENCE_H

#include <string>
#include <string_view>
#include <vector>

namespace treegraft {

struct ReferenceVerdict {
  /// 0 exactly when diagnostics is empty.
  int exitCode = 0;
  std::vector<std::string> diagnostics;
};

/// A pass the validator knows, with the options that pass accepts.
struct ReferencePassInfo {
  std::string name;
  std::vector<std::string> options;
};

/// The built-in pass/option table, in a stable order. Bare pass flags are
/// always accepted; an =option is accepted only when this table lists it
/// for that pass.
const std::vector<ReferencePassInfo> &referencePasses();

/// Validates `text` as an opt tool would: reject unknown options, parse,
/// check def-use and redefinition, then apply the dialect signature table.
/// Each stage only runs when the previous ones were clean. Never throws.
ReferenceVerdict referenceValidate(std::string_view text,
                                   const std::vector<std::string> &flags);

} // namespace treegraft

#endif // TREEGRAFT_REFERENCE_H
