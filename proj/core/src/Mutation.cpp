//===- Mutation.cpp ----------------------------------------------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "treegraft/Mutation.h"

#include "treegraft/Print.h"

#include <cassert>
#include <map>

namespace treegraft {

bool isEligibleMutationRoot(NodeKind kind) {
  switch (kind) {
  case NodeKind::Operation:
  case NodeKind::Region:
  case NodeKind::Block:
  case NodeKind::ValueUse:
  case NodeKind::Type:
  case NodeKind::AttrEntry:
    return true;
  default:
    return false;
  }
}

bool isParameterizableKind(NodeKind kind) {
  return kind == NodeKind::ValueId || kind == NodeKind::TypeToken ||
         kind == NodeKind::IntLit;
}

const SyntaxNode *selectMutationSubtree(const SyntaxTree &donor, Rng &rng) {
  std::vector<const SyntaxNode *> eligible;
  for (const SyntaxNode *n : walk(*donor.root))
    if (isEligibleMutationRoot(n->kind) && !n->isHole)
      eligible.push_back(n);
  if (eligible.empty())
    throw MutationError("donor has no eligible mutation root");
  return eligible[rng.uniformInt(eligible.size())];
}

ParameterizedMutation bisect(const SyntaxTree &donor, const SyntaxNode &root) {
  assert(isEligibleMutationRoot(root.kind));
  ParameterizedMutation pm;
  pm.holePath = pathOf(root);
  pm.mutationRoot = root.clone();
  pm.context = donor.clone();

  auto hole = std::make_unique<SyntaxNode>(root.kind);
  hole->isHole = true;
  if (pm.holePath.empty()) {
    pm.context.root = std::move(hole);
  } else {
    NodePath parentPath(pm.holePath.begin(), pm.holePath.end() - 1);
    SyntaxNode *parent = nodeAt(*pm.context.root, parentPath);
    assert(parent);
    uint32_t index = pm.holePath.back();
    hole->parent = parent;
    hole->indexInParent = index;
    parent->children[index] = std::move(hole);
  }
  return pm;
}

namespace {

// Visits terminals with an operation's result list deferred after its other
// children, so values read by an operation rank before values it defines.
template <typename Fn>
void visitUsesFirst(SyntaxNode &node, Fn &&fn) {
  if (isTerminal(node.kind)) {
    fn(node);
    return;
  }
  if (node.kind == NodeKind::Operation) {
    for (auto &child : node.children)
      if (child->kind != NodeKind::ResultList)
        visitUsesFirst(*child, fn);
    for (auto &child : node.children)
      if (child->kind == NodeKind::ResultList)
        visitUsesFirst(*child, fn);
    return;
  }
  for (auto &child : node.children)
    visitUsesFirst(*child, fn);
}

using TerminalKey = std::pair<NodeKind, std::string>;

} // namespace

void parameterize(ParameterizedMutation &pm) {
  std::map<TerminalKey, std::vector<SyntaxNode *>> inMutation, inContext;
  std::vector<TerminalKey> mutationOrder;

  visitUsesFirst(*pm.mutationRoot, [&](SyntaxNode &t) {
    if (!isParameterizableKind(t.kind))
      return;
    TerminalKey key{t.kind, t.text};
    auto [it, fresh] = inMutation.try_emplace(key);
    if (fresh)
      mutationOrder.push_back(key);
    it->second.push_back(&t);
  });
  visitUsesFirst(*pm.context.root, [&](SyntaxNode &t) {
    if (!isParameterizableKind(t.kind))
      return;
    inContext[{t.kind, t.text}].push_back(&t);
  });

  pm.params.clear();
  for (const TerminalKey &key : mutationOrder) {
    auto ctxIt = inContext.find(key);
    if (ctxIt == inContext.end())
      continue;
    int32_t index = static_cast<int32_t>(pm.params.size());
    Parameter param;
    param.kind = key.first;
    param.donorValue = key.second;
    for (SyntaxNode *t : inMutation[key]) {
      t->paramIndex = index;
      param.mutationOccurrences.push_back(pathOf(*t));
    }
    for (SyntaxNode *t : ctxIt->second) {
      t->paramIndex = index;
      param.contextOccurrences.push_back(pathOf(*t));
    }
    pm.params.push_back(std::move(param));
  }
}

ParameterizedMutation synthesizeMutation(const SyntaxTree &donor, Rng &rng) {
  const SyntaxNode *root = selectMutationSubtree(donor, rng);
  ParameterizedMutation pm = bisect(donor, *root);
  parameterize(pm);
  return pm;
}

std::string dumpMutation(const ParameterizedMutation &pm) {
  PrintOptions opts;
  opts.renderParams = true;
  std::string out = "context:\n";
  out += print(*pm.context.root, opts);
  out += "mutation:\n";
  out += print(*pm.mutationRoot, opts);
  out += "parameters:\n";
  for (size_t i = 0; i < pm.params.size(); ++i) {
    out += "P" + std::to_string(i) + " ";
    out += kindName(pm.params[i].kind);
    out += " ";
    out += pm.params[i].donorValue;
    out += "\n";
  }
  return out;
}

} // namespace treegraft
