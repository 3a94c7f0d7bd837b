//===- Parse.h - Generic-form MLIR parser ---------------------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef TREEGRAFT_PARSE_H
#define TREEGRAFT_PARSE_H

#include "treegraft/Syntax.h"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace treegraft {

class SyntaxError : public std::runtime_error {
public:
  SyntaxError(size_t offset, std::string message,
              std::vector<std::string> expected = {});

  /// Byte offset into the input where parsing failed.
  size_t offset() const { return offset_; }
  /// Token spellings that would have been accepted at that point.
  const std::vector<std::string> &expected() const { return expected_; }

private:
  size_t offset_;
  std::vector<std::string> expected_;
};

/// Parses a module body in generic syntax. Accepts arbitrary bytes: the
/// only failure mode is a thrown SyntaxError. Comments (// to end of line)
/// are skipped. Types and attribute values are kept as opaque lexemes,
/// scanned with bracket balancing so nested <>, (), [], {} and string
/// literals pass through untouched.
SyntaxTree parse(std::string_view source);

} // namespace treegraft

#endif // TREEGRAFT_PARSE_H
