//===- Lexer.h - Token stream over generic MLIR text ----------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef TREEGRAFT_SRC_LEXER_H
#define TREEGRAFT_SRC_LEXER_H

#include "treegraft/Parse.h"

#include <optional>
#include <string_view>

namespace treegraft {

struct Token {
  enum Kind {
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Equal,
    Colon,
    Arrow,
    ValueId,   // %foo, %0, %2#1
    CaretId,   // ^bb0
    SymbolRef, // @sym or @"sym"
    StringLit, // quotes included
    IntLit,
    FloatLit,
    BareId,
    Eof,
  };

  Kind kind;
  std::string_view text;
  size_t begin = 0;
  size_t end = 0;
};

/// One-token-lookahead lexer. Types and attribute values do not tokenize
/// cleanly (they nest arbitrary punctuation), so the parser asks for them
/// explicitly via rawType/rawAttrValue, which scan bytes with bracket
/// balancing from the current position.
class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  const Token &peek();
  Token consume();
  bool at(Token::Kind kind) { return peek().kind == kind; }

  /// True when the next non-trivia byte is c. Safe to call where the next
  /// construct may be an opaque lexeme that the tokenizer would reject.
  bool peekIsChar(char c);

  /// Balanced scan of one type. Stops at top-level whitespace or at a
  /// top-level ',' ')' '}' ']' '(' or the "->" arrow.
  Token rawType();

  /// Balanced scan of one attribute value. Stops at top-level ',' '}' ':'.
  Token rawAttrValue();

  size_t position();

private:
  void skipTrivia();
  Token lexOne();
  Token rawScan(bool forType);
  [[noreturn]] void fail(size_t at, std::string message);

  std::string_view src_;
  size_t pos_ = 0;
  std::optional<Token> buffered_;
};

} // namespace treegraft

#endif // TREEGRAFT_SRC_LEXER_H
