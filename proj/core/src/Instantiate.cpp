//===- Instantiate.cpp - Substitution, grafting, and validity checks ------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "treegraft/Instantiate.h"

#include "treegraft/Print.h"

#include <algorithm>
#include <cassert>
#include <set>

namespace treegraft {

std::unique_ptr<SyntaxNode> instantiate(const ParameterizedMutation &pm,
                                        const ParameterBinding &binding) {
  assert(binding.values.size() == pm.params.size());
  std::unique_ptr<SyntaxNode> concrete = pm.mutationRoot->clone();
  std::vector<SyntaxNode *> stack{concrete.get()};
  while (!stack.empty()) {
    SyntaxNode *node = stack.back();
    stack.pop_back();
    if (node->paramIndex >= 0) {
      node->text = binding.values[static_cast<size_t>(node->paramIndex)].lexeme;
      node->paramIndex = -1;
    }
    for (auto &child : node->children)
      stack.push_back(child.get());
  }
  return concrete;
}

namespace {

// Rebuilds the indexInParent bookkeeping after a child list changed.
void renumberChildren(SyntaxNode &parent) {
  for (size_t i = 0; i < parent.children.size(); ++i) {
    parent.children[i]->parent = &parent;
    parent.children[i]->indexInParent = static_cast<uint32_t>(i);
  }
}

bool insertionFits(const SyntaxNode &parent, uint32_t pos, NodeKind kind) {
  size_t n = parent.children.size();
  if (pos > n)
    return false;
  switch (parent.kind) {
  case NodeKind::ModuleBody:
    return kind == NodeKind::Operation;
  case NodeKind::Block: {
    bool labeled = n > 0 && parent.children[0]->kind == NodeKind::BlockLabel;
    return kind == NodeKind::Operation && (!labeled || pos >= 1);
  }
  case NodeKind::Region:
    return kind == NodeKind::Block;
  case NodeKind::Operation: {
    if (kind != NodeKind::Region)
      return false;
    // Regions must stay one contiguous list, so the op needs one already
    // and the position has to touch that list.
    size_t first = n, last = 0;
    for (size_t i = 0; i < n; ++i) {
      if (parent.children[i]->kind == NodeKind::Region) {
        first = std::min(first, i);
        last = i;
      }
    }
    return first != n && pos >= first && pos <= last + 1;
  }
  case NodeKind::OperandList:
    return kind == NodeKind::ValueUse;
  case NodeKind::BlockLabel:
    return kind == NodeKind::BlockArg && pos >= 1;
  default:
    return false;
  }
}

// A tree whose regions hide block boundaries would not survive a print and
// reparse; grafts that create one are rejected.
void requirePrintableBlocks(const SyntaxNode &root) {
  std::vector<const SyntaxNode *> stack{&root};
  while (!stack.empty()) {
    const SyntaxNode *node = stack.back();
    stack.pop_back();
    if (node->kind == NodeKind::Region) {
      for (size_t i = 0; i < node->children.size(); ++i) {
        const SyntaxNode &block = *node->children[i];
        bool labeled = !block.children.empty() &&
                       block.children[0]->kind == NodeKind::BlockLabel;
        if (!labeled && i > 0)
          throw IllegalGraft("unlabeled block after the first");
        if (!labeled && block.children.empty())
          throw IllegalGraft("unlabeled block with no operations");
      }
    }
    for (const auto &child : node->children)
      stack.push_back(child.get());
  }
}

} // namespace

SyntaxTree graft(const SyntaxTree &recipient, const MutationSite &site,
                 const SyntaxNode &mutant) {
  SyntaxTree out = recipient.clone();

  if (site.kind == MutationSite::Kind::Replace) {
    SyntaxNode *target = nodeAt(*out.root, site.path);
    if (!target)
      throw GraftError("replace site points outside the recipient");
    if (target->kind != mutant.kind)
      throw IllegalGraft("replacement changes the node's grammar label");
    std::unique_ptr<SyntaxNode> copy = mutant.clone();
    if (SyntaxNode *parent = target->parent) {
      copy->parent = parent;
      copy->indexInParent = target->indexInParent;
      parent->children[target->indexInParent] = std::move(copy);
    } else {
      copy->parent = nullptr;
      copy->indexInParent = 0;
      out.root = std::move(copy);
    }
  } else {
    SyntaxNode *parent = nodeAt(*out.root, site.path);
    if (!parent)
      throw GraftError("insert site points outside the recipient");
    if (site.childPos > parent->children.size())
      throw GraftError("insert position runs past the child list");
    if (!insertionFits(*parent, site.childPos, mutant.kind))
      throw IllegalGraft("grammar does not admit the subtree at this slot");
    parent->children.insert(parent->children.begin() + site.childPos,
                            mutant.clone());
    renumberChildren(*parent);
  }

  requirePrintableBlocks(*out.root);
  return out;
}

namespace {

class ConstraintChecker {
public:
  explicit ConstraintChecker(const PrintSpanMap &spans) : spans_(spans) {}

  void run(const SyntaxNode &root) {
    if (root.kind == NodeKind::Operation) {
      std::set<std::string> visible, local;
      runOp(root, visible, local);
    } else {
      runScope(root.children, {});
    }
  }

  std::vector<Violation> take() {
    std::stable_sort(out_.begin(), out_.end(),
                     [](const Violation &a, const Violation &b) {
                       return a.begin < b.begin;
                     });
    return std::move(out_);
  }

private:
  const PrintSpanMap &spans_;
  std::vector<Violation> out_;

  void runScope(const std::vector<std::unique_ptr<SyntaxNode>> &children,
                std::set<std::string> visible) {
    std::set<std::string> local;
    for (const auto &child : children) {
      if (child->kind == NodeKind::BlockLabel)
        defineBlockArgs(*child, visible, local);
      else if (child->kind == NodeKind::Operation)
        runOp(*child, visible, local);
    }
  }

  // A use of %2#1 refers to the definition of %2.
  static std::string baseName(const std::string &text) {
    size_t hash = text.find('#');
    return hash == std::string::npos ? text : text.substr(0, hash);
  }

  void report(ViolationKind kind, const SyntaxNode &at) {
    Violation violation{kind, at.text, 0, 0};
    auto it = spans_.find(&at);
    if (it != spans_.end()) {
      violation.begin = it->second.begin;
      violation.end = it->second.end;
    }
    out_.push_back(std::move(violation));
  }

  void define(const SyntaxNode &id, std::set<std::string> &visible,
              std::set<std::string> &local) {
    if (!local.insert(id.text).second) {
      report(ViolationKind::Redefinition, id);
      return;
    }
    visible.insert(id.text);
  }

  void defineBlockArgs(const SyntaxNode &label, std::set<std::string> &visible,
                       std::set<std::string> &local) {
    for (const auto &child : label.children)
      if (child->kind == NodeKind::BlockArg && !child->children.empty() &&
          child->children[0]->kind == NodeKind::ValueId)
        define(*child->children[0], visible, local);
  }

  void runOp(const SyntaxNode &op, std::set<std::string> &visible,
             std::set<std::string> &local) {
    for (const auto &child : op.children) {
      if (child->kind != NodeKind::OperandList)
        continue;
      for (const auto &use : child->children)
        if (use->kind == NodeKind::ValueUse && !use->children.empty() &&
            use->children[0]->kind == NodeKind::ValueId &&
            !visible.count(baseName(use->children[0]->text)))
          report(ViolationKind::UseBeforeDef, *use->children[0]);
    }
    // Regions run before the results exist; each block starts from what is
    // visible here and never sees a sibling block.
    for (const auto &child : op.children)
      if (child->kind == NodeKind::Region)
        for (const auto &block : child->children)
          if (block->kind == NodeKind::Block)
            runScope(block->children, visible);
    for (const auto &child : op.children)
      if (child->kind == NodeKind::ResultList)
        for (const auto &result : child->children)
          if (result->kind == NodeKind::ValueId)
            define(*result, visible, local);
  }
};

} // namespace

std::vector<Violation> checkGenericConstraints(const SyntaxTree &tree) {
  PrintSpanMap spans;
  print(*tree.root, PrintOptions{}, &spans);

  ConstraintChecker checker(spans);
  checker.run(*tree.root);
  return checker.take();
}

} // namespace treegraft
