//===- Instantiate.h - Substitution, grafting, and validity checks --------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef TREEGRAFT_INSTANTIATE_H
#define TREEGRAFT_INSTANTIATE_H

#include "treegraft/Match.h"
#include "treegraft/Mutation.h"
#include "treegraft/Syntax.h"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace treegraft {

/// The site does not designate a position in the recipient.
class GraftError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The grammar does not admit the subtree at the site.
class IllegalGraft : public GraftError {
public:
  using GraftError::GraftError;
};

/// Copies the mutation subtree with every parameter occurrence replaced by
/// its bound lexeme. The copy carries no parameter marks.
std::unique_ptr<SyntaxNode> instantiate(const ParameterizedMutation &pm,
                                        const ParameterBinding &binding);

/// Returns a copy of the recipient with mutant spliced in at site: replaced
/// nodes must share the mutant's kind, and inserted nodes must fit the
/// parent's quantified child list (operations into op lists, blocks into
/// regions, regions next to existing regions, value uses into operand
/// lists, args into block labels). Any region left with an unlabeled block
/// after its first, or an unlabeled first block with no operations, is
/// rejected: such a tree would not survive printing and reparsing.
SyntaxTree graft(const SyntaxTree &recipient, const MutationSite &site,
                 const SyntaxNode &mutant);

enum class ViolationKind : uint8_t { UseBeforeDef, Redefinition };

struct Violation {
  ViolationKind kind;
  std::string valueName;  // lexeme as written at the offending terminal
  size_t begin = 0;       // byte span in the tree's canonical print
  size_t end = 0;
};

/// Flags every operand that names a value with no definition in scope and
/// every result or block argument that reuses a name already defined in the
/// same block. Scopes nest: a block sees its ancestors' definitions, never
/// its siblings'; an operation's regions run before its results exist.
/// Successor references and attributes are not value uses. Violations come
/// back ordered by their position in the canonical print.
std::vector<Violation> checkGenericConstraints(const SyntaxTree &tree);

} // namespace treegraft

#endif // TREEGRAFT_INSTANTIATE_H
