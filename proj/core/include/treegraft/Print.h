//===- Print.h - Canonical printer for syntax trees -----------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef TREEGRAFT_PRINT_H
#define TREEGRAFT_PRINT_H

#include "treegraft/Syntax.h"

#include <cstddef>
#include <map>
#include <string>

namespace treegraft {

/// Byte range a node occupies in the printed text.
struct PrintSpan {
  size_t begin = 0;
  size_t end = 0;
};

using PrintSpanMap = std::map<const SyntaxNode *, PrintSpan>;

struct PrintOptions {
  /// Render parameterized terminals as ⟨P0⟩, ⟨P1⟩, ... instead of their
  /// donor lexeme. Used by debug dumps; fuzzing always prints concrete text.
  bool renderParams = false;
};

/// Canonical form: one operation per line, two spaces of indentation per
/// region nesting level, block labels outdented one level, single spaces
/// around "=", ":" and "->". print(parse(s)) is a fixpoint and
/// parse(print(t)) reproduces t for every well-formed tree.
std::string print(const SyntaxNode &root, PrintOptions opts = {},
                  PrintSpanMap *spans = nullptr);

inline std::string print(const SyntaxTree &tree, PrintOptions opts = {},
                         PrintSpanMap *spans = nullptr) {
  return print(*tree.root, opts, spans);
}

} // namespace treegraft

#endif // TREEGRAFT_PRINT_H
