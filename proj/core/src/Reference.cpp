//===- Reference.cpp - Bundled opt-style validator --------------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "treegraft/Reference.h"

#include "treegraft/Instantiate.h"
#include "treegraft/Parse.h"
#include "treegraft/Syntax.h"

#include <algorithm>

namespace treegraft {

const std::vector<ReferencePassInfo> &referencePasses() {
  static const std::vector<ReferencePassInfo> kPasses = {
      {"canonicalize", {"top-down", "region-simplify"}},
      {"cse", {}},
      {"inline", {"max-iterations"}},
      {"symbol-dce", {}},
      {"lower-comb", {}},
      {"hw-cleanup", {"merge-always-blocks"}},
      {"hw-specialize", {}},
      {"lower-seq-to-sv", {"lower-to-always-ff"}},
      {"prettify-verilog", {}},
      {"sv-extract-test-code", {}},
      {"llhd-early-code-motion", {}},
      {"llhd-temporal-code-motion", {}},
      {"arith-expand", {"include-bf16"}},
      {"convert-arith-to-llvm", {"index-bitwidth"}},
      {"func-bufferize", {}},
  };
  return kPasses;
}

namespace {

void checkFlags(const std::vector<std::string> &flags,
                std::vector<std::string> &diags) {
  for (const std::string &flag : flags) {
    std::string_view rest = flag;
    while (!rest.empty() && rest.front() == '-')
      rest.remove_prefix(1);
    size_t eq = rest.find('=');
    if (eq == std::string_view::npos)
      continue; // A bare pass flag names any pass; only options are vetted.
    std::string_view pass = rest.substr(0, eq);
    std::string_view option = rest.substr(eq + 1);
    const auto &table = referencePasses();
    auto info =
        std::find_if(table.begin(), table.end(),
                     [&](const ReferencePassInfo &p) { return p.name == pass; });
    bool known =
        info != table.end() &&
        std::find(info->options.begin(), info->options.end(), option) !=
            info->options.end();
    if (!known)
      diags.push_back("error: no such option exists: '--" + std::string(rest) +
                      "'");
  }
}

const SyntaxNode *childOf(const SyntaxNode &op, NodeKind kind) {
  for (const auto &child : op.children)
    if (child->kind == kind)
      return child.get();
  return nullptr;
}

std::string nameOf(const SyntaxNode &op) {
  const SyntaxNode *name = childOf(op, NodeKind::OpName);
  if (!name)
    return "";
  std::string text = name->text;
  if (text.size() >= 2 && text.front() == '"' && text.back() == '"')
    return text.substr(1, text.size() - 2);
  return text;
}

size_t operandCountOf(const SyntaxNode &op) {
  const SyntaxNode *list = childOf(op, NodeKind::OperandList);
  return list ? list->children.size() : 0;
}

size_t resultCountOf(const SyntaxNode &op) {
  const SyntaxNode *list = childOf(op, NodeKind::ResultList);
  return list ? list->children.size() : 0;
}

std::vector<std::string> typeTextsOf(const SyntaxNode &typeList) {
  std::vector<std::string> texts;
  for (const auto &type : typeList.children)
    if (!type->children.empty())
      texts.push_back(type->children[0]->text);
  return texts;
}

class SignatureChecker {
public:
  explicit SignatureChecker(std::vector<std::string> &diags) : diags_(diags) {}

  void run(const SyntaxNode &node) {
    if (node.kind == NodeKind::Operation)
      runOp(node);
    for (const auto &child : node.children)
      run(*child);
  }

private:
  void runOp(const SyntaxNode &op) {
    std::string name = nameOf(op);
    if (name == "comb.add" || name == "comb.sub")
      checkBinaryArith(op, name);
    else if (name == "comb.icmp")
      checkCounts(op, name, 2, 1);
    else if (name == "hw.constant")
      checkCounts(op, name, 0, 1);
    else if (name == "hw.output")
      checkResultsOnly(op, name, 0);
    else if (name == "llhd.proc")
      checkProc(op, name);
  }

  void emit(const std::string &name, const std::string &what) {
    diags_.push_back("error: '" + name + "' op " + what);
  }

  // Returns false when the count diagnostics already fired; the finer type
  // checks only make sense on the right shape.
  bool checkCounts(const SyntaxNode &op, const std::string &name,
                   size_t operands, size_t results) {
    bool ok = true;
    size_t haveOperands = operandCountOf(op);
    if (haveOperands != operands) {
      emit(name, "expected " + std::to_string(operands) + " operands, found " +
                     std::to_string(haveOperands));
      ok = false;
    }
    if (!checkResultsOnly(op, name, results))
      ok = false;
    if (ok && !typeCountsAgree(op, operands, results)) {
      emit(name, "type signature does not match its operands and results");
      ok = false;
    }
    return ok;
  }

  bool checkResultsOnly(const SyntaxNode &op, const std::string &name,
                        size_t results) {
    size_t have = resultCountOf(op);
    if (have == results)
      return true;
    emit(name, "expected " + std::to_string(results) + " results, found " +
                   std::to_string(have));
    return false;
  }

  static bool typeCountsAgree(const SyntaxNode &op, size_t operands,
                              size_t results) {
    const SyntaxNode *ftype = childOf(op, NodeKind::FunctionType);
    if (!ftype || ftype->children.size() != 2)
      return false;
    return ftype->children[0]->children.size() == operands &&
           ftype->children[1]->children.size() == results;
  }

  void checkBinaryArith(const SyntaxNode &op, const std::string &name) {
    if (!checkCounts(op, name, 2, 1))
      return;
    const SyntaxNode *ftype = childOf(op, NodeKind::FunctionType);
    std::vector<std::string> types = typeTextsOf(*ftype->children[0]);
    std::vector<std::string> outs = typeTextsOf(*ftype->children[1]);
    types.insert(types.end(), outs.begin(), outs.end());
    for (const std::string &type : types)
      if (type != types.front()) {
        emit(name, "requires all operands and results to have the same type");
        return;
      }
  }

  void checkProc(const SyntaxNode &op, const std::string &name) {
    size_t blocks = 0;
    bool terminated = true;
    for (const auto &child : op.children) {
      if (child->kind != NodeKind::Region)
        continue;
      for (const auto &block : child->children) {
        if (block->kind != NodeKind::Block)
          continue;
        ++blocks;
        const SyntaxNode *last = nullptr;
        for (const auto &inner : block->children)
          if (inner->kind == NodeKind::Operation)
            last = inner.get();
        if (!last || (nameOf(*last) != "llhd.wait" && nameOf(*last) != "llhd.halt"))
          terminated = false;
      }
    }
    if (blocks == 0)
      emit(name, "expects a body with at least one block");
    else if (!terminated)
      emit(name, "expects each block to end with 'llhd.wait' or 'llhd.halt'");
  }

  std::vector<std::string> &diags_;
};

} // namespace

ReferenceVerdict referenceValidate(std::string_view text,
                                   const std::vector<std::string> &flags) {
  ReferenceVerdict verdict;

  checkFlags(flags, verdict.diagnostics);
  if (!verdict.diagnostics.empty()) {
    verdict.exitCode = 1;
    return verdict;
  }

  SyntaxTree tree;
  try {
    tree = parse(text);
  } catch (const SyntaxError &err) {
    verdict.diagnostics.push_back("error: syntax error: " +
                                  std::string(err.what()));
    verdict.exitCode = 1;
    return verdict;
  }

  for (const Violation &violation : checkGenericConstraints(tree)) {
    if (violation.kind == ViolationKind::UseBeforeDef)
      verdict.diagnostics.push_back("error: use of undeclared SSA value " +
                                    violation.valueName);
    else
      verdict.diagnostics.push_back("error: redefinition of SSA value " +
                                    violation.valueName);
  }
  if (!verdict.diagnostics.empty()) {
    verdict.exitCode = 1;
    return verdict;
  }

  SignatureChecker(verdict.diagnostics).run(*tree.root);
  verdict.exitCode = verdict.diagnostics.empty() ? 0 : 1;
  return verdict;
}

} // namespace treegraft
