//===- Coverage.cpp - Dialect pair coverage metrics ------------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "treegraft/Coverage.h"

#include <map>
#include <vector>

namespace treegraft {

std::string dialectOf(std::string_view opName) {
  if (opName.size() >= 2 && opName.front() == '"' && opName.back() == '"')
    opName = opName.substr(1, opName.size() - 2);
  size_t dot = opName.find('.');
  return std::string(dot == std::string_view::npos ? opName
                                                   : opName.substr(0, dot));
}

void Coverage::merge(const Coverage &other) {
  control.insert(other.control.begin(), other.control.end());
  data.insert(other.data.begin(), other.data.end());
}

namespace {

void insertPair(std::set<DialectPair> &set, const std::string &a,
                const std::string &b) {
  if (a == b)
    return;
  set.insert(a < b ? DialectPair{a, b} : DialectPair{b, a});
}

std::string opDialect(const SyntaxNode &op) {
  for (const auto &child : op.children)
    if (child->kind == NodeKind::OpName)
      return dialectOf(child->text);
  return "";
}

std::string baseName(const std::string &text) {
  size_t hash = text.find('#');
  return hash == std::string::npos ? text : text.substr(0, hash);
}

class CoverageWalker {
public:
  explicit CoverageWalker(Coverage &out) : out_(out) {}

  // A scope maps each visible value name to the dialect that defined it.
  using Scope = std::map<std::string, std::string>;

  // parent is a module body or a block: any label arguments shadow what an
  // outer scope defined (they have no defining operation), then the
  // operations run in order.
  void runBlockish(const SyntaxNode &parent, Scope visible) {
    for (const auto &child : parent.children)
      if (child->kind == NodeKind::BlockLabel)
        for (const auto &arg : child->children)
          if (arg->kind == NodeKind::BlockArg && !arg->children.empty())
            visible.erase(arg->children[0]->text);
    for (const auto &child : parent.children)
      if (child->kind == NodeKind::Operation)
        runOp(*child, visible);
  }

  void runOp(const SyntaxNode &op, Scope &visible) {
    std::string dialect = opDialect(op);

    for (const std::string &outer : enclosing_)
      insertPair(out_.control, outer, dialect);

    for (const auto &child : op.children) {
      if (child->kind != NodeKind::OperandList)
        continue;
      for (const auto &use : child->children) {
        if (use->kind != NodeKind::ValueUse || use->children.empty())
          continue;
        auto def = visible.find(baseName(use->children[0]->text));
        if (def != visible.end())
          insertPair(out_.data, def->second, dialect);
      }
    }

    enclosing_.push_back(dialect);
    for (const auto &child : op.children)
      if (child->kind == NodeKind::Region)
        for (const auto &block : child->children)
          if (block->kind == NodeKind::Block)
            runBlockish(*block, visible);
    enclosing_.pop_back();

    for (const auto &child : op.children)
      if (child->kind == NodeKind::ResultList)
        for (const auto &result : child->children)
          if (result->kind == NodeKind::ValueId)
            visible[result->text] = dialect;
  }

private:
  Coverage &out_;
  std::vector<std::string> enclosing_; // dialects of the ops we are inside
};

} // namespace

Coverage coverageOf(const SyntaxTree &tree) {
  Coverage coverage;
  CoverageWalker walker(coverage);
  if (tree.root->kind == NodeKind::ModuleBody) {
    walker.runBlockish(*tree.root, {});
  } else if (tree.root->kind == NodeKind::Operation) {
    CoverageWalker::Scope scope;
    walker.runOp(*tree.root, scope);
  }
  return coverage;
}

} // namespace treegraft
