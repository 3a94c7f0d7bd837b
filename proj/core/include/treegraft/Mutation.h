//===- Mutation.h - Parameterized mutation synthesis ----------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef TREEGRAFT_MUTATION_H
#define TREEGRAFT_MUTATION_H

#include "treegraft/Random.h"
#include "treegraft/Syntax.h"

#include <stdexcept>
#include <string>
#include <vector>

namespace treegraft {

class MutationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Kinds a mutation can be rooted at.
bool isEligibleMutationRoot(NodeKind kind);

/// Terminal kinds that may become parameters: value ids, type tokens, and
/// integer literals.
bool isParameterizableKind(NodeKind kind);

struct Parameter {
  std::string donorValue;
  NodeKind kind;
  /// Occurrence paths, relative to the mutation root and the context root.
  std::vector<NodePath> mutationOccurrences;
  std::vector<NodePath> contextOccurrences;
};

/// A donor tree bisected at one subtree. The context is the donor with a
/// hole where the subtree was; the mutation is the subtree itself. Shared
/// terminals carry a paramIndex mark on both sides but keep their donor
/// lexeme, so printing with default options reproduces donor text.
struct ParameterizedMutation {
  SyntaxTree context;
  std::unique_ptr<SyntaxNode> mutationRoot;
  NodePath holePath;
  std::vector<Parameter> params;
};

/// Picks a mutation root uniformly among all eligible nodes of the donor.
/// Throws MutationError when the donor has none.
const SyntaxNode *selectMutationSubtree(const SyntaxTree &donor, Rng &rng);

/// Splits the donor at root. root must be a node of donor with an eligible
/// kind. No parameters yet; see parameterize.
ParameterizedMutation bisect(const SyntaxTree &donor, const SyntaxNode &root);

/// Introduces one parameter per terminal (of a parameterizable kind) whose
/// lexeme occurs in both the mutation and the context, marking every
/// occurrence on both sides. Parameters are numbered by first occurrence in
/// the mutation, visiting an operation's uses before its results.
void parameterize(ParameterizedMutation &pm);

/// select + bisect + parameterize in one step.
ParameterizedMutation synthesizeMutation(const SyntaxTree &donor, Rng &rng);

/// Human-readable dump with parameters rendered as ⟨P0⟩, ⟨P1⟩, ...
std::string dumpMutation(const ParameterizedMutation &pm);

} // namespace treegraft

#endif // TREEGRAFT_MUTATION_H
