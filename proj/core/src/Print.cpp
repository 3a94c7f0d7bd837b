//===- Print.cpp - Canonical text form --------------------------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "treegraft/Print.h"

#include <cassert>

namespace treegraft {

namespace {

constexpr const char *kHoleMark = "⟨hole⟩"; // ⟨hole⟩

class Printer {
public:
  Printer(PrintOptions opts, PrintSpanMap *spans)
      : opts_(opts), spans_(spans) {}

  std::string take() { return std::move(out_); }

  void emitModuleBody(const SyntaxNode &body) {
    SpanGuard guard(*this, body);
    for (const auto &op : body.children)
      emitOpLine(*op, 0);
  }

  // Entry point for printing a subtree whose root is not a module body,
  // e.g. a detached mutation root in a debug dump.
  void emitAny(const SyntaxNode &node) {
    switch (node.kind) {
    case NodeKind::Operation:
      emitOpLine(node, 0);
      break;
    case NodeKind::Block:
      emitBlock(node, 0);
      break;
    case NodeKind::BlockLabel:
      emitBlockLabel(node);
      out_ += '\n';
      break;
    case NodeKind::FunctionType:
      emitFunctionType(node);
      out_ += '\n';
      break;
    default:
      emitChild(node, 0);
      out_ += '\n';
      break;
    }
  }

  void emitOpLine(const SyntaxNode &op, int level) {
    indent(level);
    if (op.isHole) {
      emitHole(op);
    } else {
      SpanGuard guard(*this, op);
      emitOp(op, level);
    }
    out_ += '\n';
  }

private:
  struct SpanGuard {
    SpanGuard(Printer &p, const SyntaxNode &node) : p(p), node(node) {
      begin = p.out_.size();
    }
    ~SpanGuard() {
      if (p.spans_)
        (*p.spans_)[&node] = {begin, p.out_.size()};
    }
    Printer &p;
    const SyntaxNode &node;
    size_t begin;
  };

  PrintOptions opts_;
  PrintSpanMap *spans_;
  std::string out_;

  void indent(int level) { out_.append(static_cast<size_t>(level) * 2, ' '); }

  void emitHole(const SyntaxNode &node) {
    SpanGuard guard(*this, node);
    out_ += kHoleMark;
  }

  void emitTerminal(const SyntaxNode &node) {
    assert(isTerminal(node.kind));
    SpanGuard guard(*this, node);
    if (opts_.renderParams && node.paramIndex >= 0) {
      out_ += "⟨P";
      out_ += std::to_string(node.paramIndex);
      out_ += "⟩";
    } else {
      out_ += node.text;
    }
  }

  void emitChild(const SyntaxNode &node, int level) {
    if (node.isHole) {
      emitHole(node);
      return;
    }
    switch (node.kind) {
    case NodeKind::ValueUse:
      emitValueUse(node);
      break;
    case NodeKind::Type:
      emitType(node);
      break;
    case NodeKind::AttrEntry:
      emitAttrEntry(node);
      break;
    case NodeKind::Region:
      emitRegion(node, level);
      break;
    default:
      emitTerminal(node);
      break;
    }
  }

  void emitOp(const SyntaxNode &op, int level) {
    size_t i = 0;
    const auto &kids = op.children;
    if (i < kids.size() && kids[i]->kind == NodeKind::ResultList) {
      SpanGuard guard(*this, *kids[i]);
      for (size_t j = 0; j < kids[i]->children.size(); ++j) {
        if (j)
          out_ += ", ";
        emitTerminal(*kids[i]->children[j]);
      }
      out_ += " = ";
      ++i;
    }
    assert(i < kids.size());
    emitTerminal(*kids[i]); // op name
    ++i;

    assert(i < kids.size() && kids[i]->kind == NodeKind::OperandList);
    {
      SpanGuard guard(*this, *kids[i]);
      out_ += '(';
      for (size_t j = 0; j < kids[i]->children.size(); ++j) {
        if (j)
          out_ += ", ";
        emitChild(*kids[i]->children[j], level);
      }
      out_ += ')';
    }
    ++i;

    if (i < kids.size() && kids[i]->kind == NodeKind::SuccessorList) {
      SpanGuard guard(*this, *kids[i]);
      out_ += '[';
      for (size_t j = 0; j < kids[i]->children.size(); ++j) {
        if (j)
          out_ += ", ";
        emitTerminal(*kids[i]->children[j]);
      }
      out_ += ']';
      ++i;
    }

    if (i < kids.size() && kids[i]->kind == NodeKind::Region) {
      out_ += " (";
      bool first = true;
      while (i < kids.size() && kids[i]->kind == NodeKind::Region) {
        if (!first)
          out_ += ", ";
        first = false;
        emitChild(*kids[i], level);
        ++i;
      }
      out_ += ')';
    }

    if (i < kids.size() && kids[i]->kind == NodeKind::AttrDict) {
      SpanGuard guard(*this, *kids[i]);
      out_ += " {";
      for (size_t j = 0; j < kids[i]->children.size(); ++j) {
        if (j)
          out_ += ", ";
        emitChild(*kids[i]->children[j], level);
      }
      out_ += '}';
      ++i;
    }

    out_ += " : ";
    assert(i < kids.size() && kids[i]->kind == NodeKind::FunctionType);
    emitFunctionType(*kids[i]);
  }

  void emitValueUse(const SyntaxNode &use) {
    SpanGuard guard(*this, use);
    emitTerminal(*use.children.front());
  }

  void emitType(const SyntaxNode &type) {
    SpanGuard guard(*this, type);
    emitTerminal(*type.children.front());
  }

  void emitAttrEntry(const SyntaxNode &entry) {
    SpanGuard guard(*this, entry);
    emitTerminal(*entry.children[0]);
    out_ += " = ";
    emitTerminal(*entry.children[1]);
    if (entry.children.size() > 2) {
      out_ += " : ";
      emitChild(*entry.children[2], 0);
    }
  }

  void emitRegion(const SyntaxNode &region, int level) {
    SpanGuard guard(*this, region);
    if (region.children.empty()) {
      out_ += "{}";
      return;
    }
    out_ += "{\n";
    for (const auto &block : region.children)
      emitBlock(*block, level);
    indent(level);
    out_ += '}';
  }

  void emitBlock(const SyntaxNode &block, int level) {
    if (block.isHole) {
      indent(level);
      emitHole(block);
      out_ += '\n';
      return;
    }
    SpanGuard guard(*this, block);
    size_t i = 0;
    if (!block.children.empty() &&
        block.children[0]->kind == NodeKind::BlockLabel) {
      indent(level);
      emitBlockLabel(*block.children[0]);
      out_ += '\n';
      ++i;
    }
    for (; i < block.children.size(); ++i)
      emitOpLine(*block.children[i], level + 1);
  }

  void emitBlockLabel(const SyntaxNode &label) {
    SpanGuard guard(*this, label);
    emitTerminal(*label.children[0]);
    if (label.children.size() > 1) {
      out_ += '(';
      for (size_t j = 1; j < label.children.size(); ++j) {
        if (j > 1)
          out_ += ", ";
        emitBlockArg(*label.children[j]);
      }
      out_ += ')';
    }
    out_ += ':';
  }

  void emitBlockArg(const SyntaxNode &arg) {
    if (arg.isHole) {
      emitHole(arg);
      return;
    }
    SpanGuard guard(*this, arg);
    emitTerminal(*arg.children[0]);
    out_ += ": ";
    emitChild(*arg.children[1], 0);
  }

  void emitFunctionType(const SyntaxNode &ftype) {
    SpanGuard guard(*this, ftype);
    const SyntaxNode &ins = *ftype.children[0];
    const SyntaxNode &outs = *ftype.children[1];
    out_ += '(';
    for (size_t j = 0; j < ins.children.size(); ++j) {
      if (j)
        out_ += ", ";
      emitChild(*ins.children[j], 0);
    }
    out_ += ") -> ";
    if (outs.children.size() == 1 && !outs.children[0]->isHole) {
      emitChild(*outs.children[0], 0);
    } else {
      out_ += '(';
      for (size_t j = 0; j < outs.children.size(); ++j) {
        if (j)
          out_ += ", ";
        emitChild(*outs.children[j], 0);
      }
      out_ += ')';
    }
  }
};

} // namespace

std::string print(const SyntaxNode &root, PrintOptions opts,
                  PrintSpanMap *spans) {
  Printer printer(opts, spans);
  if (root.kind == NodeKind::ModuleBody && !root.isHole)
    printer.emitModuleBody(root);
  else
    printer.emitAny(root);
  return printer.take();
}

} // namespace treegraft
