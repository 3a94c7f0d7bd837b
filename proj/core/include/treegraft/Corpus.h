//===- Corpus.h - Seed corpus loading --------------------------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef TREEGRAFT_CORPUS_H
#define TREEGRAFT_CORPUS_H

#include "treegraft/Syntax.h"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treegraft {

class EmptyCorpus : public std::runtime_error {
public:
  explicit EmptyCorpus(const std::string &what) : std::runtime_error(what) {}
};

/// One independent test case: a module holding a single top-level
/// operation, reprinted so its source and spans are self-consistent.
struct Seed {
  SyntaxTree tree;
  /// "<file>#<n>": origin file base name and the seed's index within it.
  std::string id;
};

struct Corpus {
  std::vector<Seed> seeds;
  /// One note per chunk that failed to parse; loading never aborts on them.
  std::vector<std::string> skipped;
  size_t fileCount = 0;
};

/// Splits file text at `// -----` marker lines (surrounding whitespace
/// tolerated), the conventional separator for stacking cases in one file.
std::vector<std::string> splitAtMarkers(std::string_view text);

/// Loads every .mlir file under seedDir (sorted by path), splits each at
/// marker lines, parses the chunks, and emits one seed per top-level
/// operation. Throws EmptyCorpus when nothing parses.
Corpus loadCorpus(const std::string &seedDir);

} // namespace treegraft

#endif // TREEGRAFT_CORPUS_H
