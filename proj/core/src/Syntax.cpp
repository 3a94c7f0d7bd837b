//===- Syntax.cpp ----------------------------------------------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "treegraft/Syntax.h"

#include <algorithm>
#include <cassert>
#include <deque>

namespace treegraft {

bool isTerminal(NodeKind kind) {
  return kind >= NodeKind::OpName;
}

std::string_view kindName(NodeKind kind) {
  switch (kind) {
  case NodeKind::ModuleBody:
    return "module-body";
  case NodeKind::Operation:
    return "operation";
  case NodeKind::ResultList:
    return "result-list";
  case NodeKind::OperandList:
    return "operand-list";
  case NodeKind::ValueUse:
    return "value-use";
  case NodeKind::SuccessorList:
    return "successor-list";
  case NodeKind::Region:
    return "region";
  case NodeKind::Block:
    return "block";
  case NodeKind::BlockLabel:
    return "block-label";
  case NodeKind::BlockArg:
    return "block-arg";
  case NodeKind::AttrDict:
    return "attr-dict";
  case NodeKind::AttrEntry:
    return "attr-entry";
  case NodeKind::FunctionType:
    return "function-type";
  case NodeKind::TypeList:
    return "type-list";
  case NodeKind::Type:
    return "type";
  case NodeKind::OpName:
    return "op-name";
  case NodeKind::ValueId:
    return "value-id";
  case NodeKind::CaretId:
    return "caret-id";
  case NodeKind::SymbolRef:
    return "symbol-ref";
  case NodeKind::StringLit:
    return "string-lit";
  case NodeKind::IntLit:
    return "int-lit";
  case NodeKind::FloatLit:
    return "float-lit";
  case NodeKind::TypeToken:
    return "type-token";
  case NodeKind::BareId:
    return "bare-id";
  case NodeKind::AttrValue:
    return "attr-value";
  }
  return "unknown";
}

void SyntaxNode::appendChild(std::unique_ptr<SyntaxNode> child) {
  child->parent = this;
  child->indexInParent = static_cast<uint32_t>(children.size());
  children.push_back(std::move(child));
}

std::unique_ptr<SyntaxNode> SyntaxNode::clone() const {
  auto copy = std::make_unique<SyntaxNode>(kind, text);
  copy->beginByte = beginByte;
  copy->endByte = endByte;
  copy->paramIndex = paramIndex;
  copy->isHole = isHole;
  for (const auto &child : children)
    copy->appendChild(child->clone());
  return copy;
}

NodePath pathOf(const SyntaxNode &node) {
  NodePath path;
  for (const SyntaxNode *n = &node; n->parent; n = n->parent)
    path.push_back(n->indexInParent);
  std::reverse(path.begin(), path.end());
  return path;
}

const SyntaxNode *nodeAt(const SyntaxNode &root, const NodePath &path) {
  const SyntaxNode *n = &root;
  for (uint32_t index : path) {
    if (index >= n->children.size())
      return nullptr;
    n = n->children[index].get();
  }
  return n;
}

SyntaxNode *nodeAt(SyntaxNode &root, const NodePath &path) {
  return const_cast<SyntaxNode *>(
      nodeAt(static_cast<const SyntaxNode &>(root), path));
}

const SyntaxNode *getParent(const SyntaxNode &node) { return node.parent; }

const SyntaxNode *getLeftSibling(const SyntaxNode &node) {
  if (!node.parent || node.indexInParent == 0)
    return nullptr;
  return node.parent->children[node.indexInParent - 1].get();
}

const SyntaxNode *getRightSibling(const SyntaxNode &node) {
  if (!node.parent)
    return nullptr;
  uint32_t next = node.indexInParent + 1;
  if (next >= node.parent->children.size())
    return nullptr;
  return node.parent->children[next].get();
}

std::vector<const SyntaxNode *> walk(const SyntaxNode &root) {
  std::vector<const SyntaxNode *> order;
  std::deque<const SyntaxNode *> queue{&root};
  while (!queue.empty()) {
    const SyntaxNode *n = queue.front();
    queue.pop_front();
    order.push_back(n);
    for (const auto &child : n->children)
      queue.push_back(child.get());
  }
  return order;
}

size_t countNodes(const SyntaxNode &root) {
  size_t count = 1;
  for (const auto &child : root.children)
    count += countNodes(*child);
  return count;
}

bool structurallyEqual(const SyntaxNode &a, const SyntaxNode &b) {
  if (a.kind != b.kind || a.text != b.text || a.isHole != b.isHole ||
      a.children.size() != b.children.size())
    return false;
  for (size_t i = 0; i < a.children.size(); ++i)
    if (!structurallyEqual(*a.children[i], *b.children[i]))
      return false;
  return true;
}

} // namespace treegraft
