//===- Syntax.h - Syntax trees for generic-form MLIR ----------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef TREEGRAFT_SYNTAX_H
#define TREEGRAFT_SYNTAX_H

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace treegraft {

/// Node labels. The first group are grammar rules (interior nodes), the
/// second group are token kinds (leaves). Leaves carry the lexeme verbatim;
/// punctuation and keywords are consumed during parsing and never stored.
enum class NodeKind : uint8_t {
  // Rules.
  ModuleBody,
  Operation,
  ResultList,
  OperandList,
  ValueUse,
  SuccessorList,
  Region,
  Block,
  BlockLabel,
  BlockArg,
  AttrDict,
  AttrEntry,
  FunctionType,
  TypeList,
  Type,
  // Tokens.
  OpName,
  ValueId,
  CaretId,
  SymbolRef,
  StringLit,
  IntLit,
  FloatLit,
  TypeToken,
  BareId,
  AttrValue,
};

bool isTerminal(NodeKind kind);

/// Stable lower-case name of a node kind, e.g. "operation" or "value-id".
/// Context matching compares nodes by this name.
std::string_view kindName(NodeKind kind);

struct SyntaxNode {
  NodeKind kind;
  /// Lexeme for terminals, empty for rule nodes. Op names keep their quotes.
  std::string text;
  std::vector<std::unique_ptr<SyntaxNode>> children;

  SyntaxNode *parent = nullptr;
  uint32_t indexInParent = 0;

  /// Byte span in the source this tree was parsed from. Zero for nodes
  /// produced by synthesis rather than parsing.
  uint32_t beginByte = 0;
  uint32_t endByte = 0;

  /// Index of the parameter this terminal was abstracted into, or -1 for a
  /// concrete terminal. Only meaningful inside parameterized mutations.
  int32_t paramIndex = -1;

  /// True for the placeholder left behind where a mutation was cut out.
  bool isHole = false;

  SyntaxNode(NodeKind kind, std::string text = {})
      : kind(kind), text(std::move(text)) {}

  SyntaxNode(const SyntaxNode &) = delete;
  SyntaxNode &operator=(const SyntaxNode &) = delete;

  void appendChild(std::unique_ptr<SyntaxNode> child);
  std::unique_ptr<SyntaxNode> clone() const;
};

/// An owned tree plus the source text it was parsed from (empty for
/// synthesized trees). Trees are never mutated in place; edits clone.
struct SyntaxTree {
  std::unique_ptr<SyntaxNode> root;
  std::string source;

  SyntaxTree() = default;
  SyntaxTree(std::unique_ptr<SyntaxNode> root, std::string source = {})
      : root(std::move(root)), source(std::move(source)) {}

  SyntaxTree clone() const { return SyntaxTree(root->clone(), source); }
};

/// Path from the root to a node as child indices. Paths survive cloning,
/// which makes them the stable way to name a node across tree copies.
using NodePath = std::vector<uint32_t>;

NodePath pathOf(const SyntaxNode &node);
const SyntaxNode *nodeAt(const SyntaxNode &root, const NodePath &path);
SyntaxNode *nodeAt(SyntaxNode &root, const NodePath &path);

const SyntaxNode *getParent(const SyntaxNode &node);
const SyntaxNode *getLeftSibling(const SyntaxNode &node);
const SyntaxNode *getRightSibling(const SyntaxNode &node);

/// All nodes in breadth-first order; parents precede children and siblings
/// stay left to right.
std::vector<const SyntaxNode *> walk(const SyntaxNode &root);

size_t countNodes(const SyntaxNode &root);

/// Compares labels, lexemes, and shape. Ignores spans and parameter marks.
bool structurallyEqual(const SyntaxNode &a, const SyntaxNode &b);

} // namespace treegraft

#endif // TREEGRAFT_SYNTAX_H
