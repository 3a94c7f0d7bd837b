//===- Parser.cpp - Recursive descent over generic MLIR -------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "treegraft/Parse.h"

#include "Lexer.h"

#include <cctype>

namespace treegraft {

SyntaxError::SyntaxError(size_t offset, std::string message,
                         std::vector<std::string> expected)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + message),
      offset_(offset), expected_(std::move(expected)) {}

namespace {

// Guards against pathological nesting blowing the stack; real inputs sit
// orders of magnitude below this.
constexpr int kMaxRegionDepth = 1000;

class Parser {
public:
  explicit Parser(std::string_view source) : lex_(source) {}

  std::unique_ptr<SyntaxNode> parseModuleBody(size_t sourceSize) {
    auto body = std::make_unique<SyntaxNode>(NodeKind::ModuleBody);
    while (!lex_.at(Token::Eof))
      body->appendChild(parseOperation());
    body->beginByte = 0;
    body->endByte = static_cast<uint32_t>(sourceSize);
    return body;
  }

private:
  Lexer lex_;
  int regionDepth_ = 0;

  Token expect(Token::Kind kind, const char *spelling) {
    if (!lex_.at(kind))
      throw SyntaxError(lex_.peek().begin,
                        std::string("expected ") + spelling, {spelling});
    return lex_.consume();
  }

  static std::unique_ptr<SyntaxNode> terminal(NodeKind kind, const Token &t) {
    auto node = std::make_unique<SyntaxNode>(kind, std::string(t.text));
    node->beginByte = static_cast<uint32_t>(t.begin);
    node->endByte = static_cast<uint32_t>(t.end);
    return node;
  }

  static void closeSpan(SyntaxNode &node) {
    if (node.children.empty())
      return;
    node.beginByte = node.children.front()->beginByte;
    node.endByte = node.children.back()->endByte;
  }

  std::unique_ptr<SyntaxNode> parseOperation() {
    auto op = std::make_unique<SyntaxNode>(NodeKind::Operation);
    op->beginByte = static_cast<uint32_t>(lex_.peek().begin);

    if (lex_.at(Token::ValueId)) {
      auto results = std::make_unique<SyntaxNode>(NodeKind::ResultList);
      for (;;) {
        results->appendChild(
            terminal(NodeKind::ValueId, expect(Token::ValueId, "value-id")));
        if (!lex_.at(Token::Comma))
          break;
        lex_.consume();
      }
      expect(Token::Equal, "'='");
      closeSpan(*results);
      op->appendChild(std::move(results));
    } else if (!lex_.at(Token::StringLit)) {
      throw SyntaxError(lex_.peek().begin, "expected operation",
                        {"value-id", "op-name string"});
    }

    op->appendChild(
        terminal(NodeKind::OpName, expect(Token::StringLit, "op-name string")));

    expect(Token::LParen, "'('");
    auto operands = std::make_unique<SyntaxNode>(NodeKind::OperandList);
    if (!lex_.at(Token::RParen)) {
      for (;;) {
        Token t = expect(Token::ValueId, "value-id");
        auto use = std::make_unique<SyntaxNode>(NodeKind::ValueUse);
        use->appendChild(terminal(NodeKind::ValueId, t));
        closeSpan(*use);
        operands->appendChild(std::move(use));
        if (!lex_.at(Token::Comma))
          break;
        lex_.consume();
      }
    }
    expect(Token::RParen, "')'");
    closeSpan(*operands);
    op->appendChild(std::move(operands));

    if (lex_.at(Token::LBracket)) {
      lex_.consume();
      auto successors = std::make_unique<SyntaxNode>(NodeKind::SuccessorList);
      for (;;) {
        successors->appendChild(
            terminal(NodeKind::CaretId, expect(Token::CaretId, "caret-id")));
        if (!lex_.at(Token::Comma))
          break;
        lex_.consume();
      }
      expect(Token::RBracket, "']'");
      closeSpan(*successors);
      op->appendChild(std::move(successors));
    }

    // Regions attach directly as children of the operation.
    if (lex_.at(Token::LParen)) {
      lex_.consume();
      for (;;) {
        op->appendChild(parseRegion());
        if (!lex_.at(Token::Comma))
          break;
        lex_.consume();
      }
      expect(Token::RParen, "')'");
    }

    if (lex_.at(Token::LBrace))
      op->appendChild(parseAttrDict());

    expect(Token::Colon, "':'");
    op->appendChild(parseFunctionType());

    op->endByte = op->children.back()->endByte;
    return op;
  }

  std::unique_ptr<SyntaxNode> parseRegion() {
    if (++regionDepth_ > kMaxRegionDepth)
      throw SyntaxError(lex_.peek().begin, "regions nested too deeply");
    Token open = expect(Token::LBrace, "'{'");
    auto region = std::make_unique<SyntaxNode>(NodeKind::Region);

    // An unlabeled entry block is allowed; further blocks need labels.
    if (!lex_.at(Token::RBrace) && !lex_.at(Token::CaretId)) {
      auto block = std::make_unique<SyntaxNode>(NodeKind::Block);
      while (!lex_.at(Token::RBrace) && !lex_.at(Token::CaretId))
        block->appendChild(parseOperation());
      closeSpan(*block);
      region->appendChild(std::move(block));
    }
    while (lex_.at(Token::CaretId)) {
      auto block = std::make_unique<SyntaxNode>(NodeKind::Block);
      block->appendChild(parseBlockLabel());
      while (!lex_.at(Token::RBrace) && !lex_.at(Token::CaretId))
        block->appendChild(parseOperation());
      closeSpan(*block);
      region->appendChild(std::move(block));
    }

    Token close = expect(Token::RBrace, "'}'");
    region->beginByte = static_cast<uint32_t>(open.begin);
    region->endByte = static_cast<uint32_t>(close.end);
    --regionDepth_;
    return region;
  }

  std::unique_ptr<SyntaxNode> parseBlockLabel() {
    auto label = std::make_unique<SyntaxNode>(NodeKind::BlockLabel);
    label->appendChild(
        terminal(NodeKind::CaretId, expect(Token::CaretId, "caret-id")));
    if (lex_.at(Token::LParen)) {
      lex_.consume();
      if (!lex_.at(Token::RParen)) {
        for (;;) {
          auto arg = std::make_unique<SyntaxNode>(NodeKind::BlockArg);
          arg->appendChild(
              terminal(NodeKind::ValueId, expect(Token::ValueId, "value-id")));
          expect(Token::Colon, "':'");
          arg->appendChild(parseType());
          closeSpan(*arg);
          label->appendChild(std::move(arg));
          if (!lex_.at(Token::Comma))
            break;
          lex_.consume();
        }
      }
      expect(Token::RParen, "')'");
    }
    expect(Token::Colon, "':'");
    closeSpan(*label);
    return label;
  }

  std::unique_ptr<SyntaxNode> parseType() {
    Token t = lex_.rawType();
    auto type = std::make_unique<SyntaxNode>(NodeKind::Type);
    type->appendChild(terminal(NodeKind::TypeToken, t));
    closeSpan(*type);
    return type;
  }

  std::unique_ptr<SyntaxNode> parseAttrDict() {
    Token open = expect(Token::LBrace, "'{'");
    auto dict = std::make_unique<SyntaxNode>(NodeKind::AttrDict);
    if (!lex_.at(Token::RBrace)) {
      for (;;) {
        dict->appendChild(parseAttrEntry());
        if (!lex_.at(Token::Comma))
          break;
        lex_.consume();
      }
    }
    Token close = expect(Token::RBrace, "'}'");
    dict->beginByte = static_cast<uint32_t>(open.begin);
    dict->endByte = static_cast<uint32_t>(close.end);
    return dict;
  }

  static NodeKind classifyAttrValue(std::string_view text) {
    if (text.empty())
      return NodeKind::AttrValue;
    if (text.front() == '"')
      return NodeKind::StringLit;
    if (text.front() == '@')
      return NodeKind::SymbolRef;
    size_t i = text.front() == '-' ? 1 : 0;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      return NodeKind::AttrValue;
    bool sawFloatChar = false;
    if (text.compare(i, 2, "0x") == 0) {
      for (size_t j = i + 2; j < text.size(); ++j)
        if (!std::isxdigit(static_cast<unsigned char>(text[j])))
          return NodeKind::AttrValue;
      return text.size() > i + 2 ? NodeKind::IntLit : NodeKind::AttrValue;
    }
    for (size_t j = i; j < text.size(); ++j) {
      char c = text[j];
      if (std::isdigit(static_cast<unsigned char>(c)))
        continue;
      if (c == '.' || c == 'e' || c == 'E' || c == '+' || c == '-') {
        sawFloatChar = true;
        continue;
      }
      return NodeKind::AttrValue;
    }
    return sawFloatChar ? NodeKind::FloatLit : NodeKind::IntLit;
  }

  std::unique_ptr<SyntaxNode> parseAttrEntry() {
    auto entry = std::make_unique<SyntaxNode>(NodeKind::AttrEntry);
    entry->appendChild(
        terminal(NodeKind::BareId, expect(Token::BareId, "attribute name")));
    expect(Token::Equal, "'='");
    Token value = lex_.rawAttrValue();
    entry->appendChild(terminal(classifyAttrValue(value.text), value));
    if (lex_.at(Token::Colon)) {
      lex_.consume();
      entry->appendChild(parseType());
    }
    closeSpan(*entry);
    return entry;
  }

  std::unique_ptr<SyntaxNode> parseFunctionType() {
    auto ftype = std::make_unique<SyntaxNode>(NodeKind::FunctionType);
    expect(Token::LParen, "'('");
    auto ins = std::make_unique<SyntaxNode>(NodeKind::TypeList);
    // Peek raw: a type may start with '!' or other non-token bytes.
    if (!lex_.peekIsChar(')')) {
      for (;;) {
        ins->appendChild(parseType());
        if (!lex_.at(Token::Comma))
          break;
        lex_.consume();
      }
    }
    expect(Token::RParen, "')'");
    closeSpan(*ins);
    ftype->appendChild(std::move(ins));

    expect(Token::Arrow, "'->'");
    auto outs = std::make_unique<SyntaxNode>(NodeKind::TypeList);
    if (lex_.peekIsChar('(')) {
      lex_.consume();
      if (!lex_.peekIsChar(')')) {
        for (;;) {
          outs->appendChild(parseType());
          if (!lex_.at(Token::Comma))
            break;
          lex_.consume();
        }
      }
      expect(Token::RParen, "')'");
    } else {
      outs->appendChild(parseType());
    }
    closeSpan(*outs);
    ftype->appendChild(std::move(outs));
    closeSpan(*ftype);
    return ftype;
  }
};

} // namespace

SyntaxTree parse(std::string_view source) {
  Parser parser(source);
  auto root = parser.parseModuleBody(source.size());
  return SyntaxTree(std::move(root), std::string(source));
}

} // namespace treegraft
