//===- Lexer.cpp -----------------------------------------------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "Lexer.h"

#include <cctype>

namespace treegraft {

namespace {

bool isIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

// Bare identifiers also cover attribute keys like "llvm.linkage", hence
// the dot. '$' appears in some dialect identifiers.
bool isIdentBody(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '$';
}

bool isDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// suffix-id after % ^ @: either all digits or an identifier that may also
// contain '-' (MLIR id-punct).
bool isSuffixBody(char c) { return isIdentBody(c) || c == '-'; }

} // namespace

const Token &Lexer::peek() {
  if (!buffered_)
    buffered_ = lexOne();
  return *buffered_;
}

Token Lexer::consume() {
  peek();
  Token t = *buffered_;
  buffered_.reset();
  return t;
}

size_t Lexer::position() {
  return peek().begin;
}

bool Lexer::peekIsChar(char c) {
  if (buffered_)
    return buffered_->begin < src_.size() && src_[buffered_->begin] == c;
  skipTrivia();
  return pos_ < src_.size() && src_[pos_] == c;
}

void Lexer::fail(size_t at, std::string message) {
  throw SyntaxError(at, std::move(message));
}

void Lexer::skipTrivia() {
  while (pos_ < src_.size()) {
    char c = src_[pos_];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++pos_;
      continue;
    }
    if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
      while (pos_ < src_.size() && src_[pos_] != '\n')
        ++pos_;
      continue;
    }
    break;
  }
}

Token Lexer::lexOne() {
  skipTrivia();
  size_t start = pos_;
  auto make = [&](Token::Kind kind) {
    return Token{kind, src_.substr(start, pos_ - start), start, pos_};
  };

  if (pos_ >= src_.size())
    return make(Token::Eof);

  char c = src_[pos_];
  switch (c) {
  case '(':
    ++pos_;
    return make(Token::LParen);
  case ')':
    ++pos_;
    return make(Token::RParen);
  case '{':
    ++pos_;
    return make(Token::LBrace);
  case '}':
    ++pos_;
    return make(Token::RBrace);
  case '[':
    ++pos_;
    return make(Token::LBracket);
  case ']':
    ++pos_;
    return make(Token::RBracket);
  case ',':
    ++pos_;
    return make(Token::Comma);
  case '=':
    ++pos_;
    return make(Token::Equal);
  case ':':
    ++pos_;
    return make(Token::Colon);
  default:
    break;
  }

  if (c == '-') {
    if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      pos_ += 2;
      return make(Token::Arrow);
    }
    if (pos_ + 1 < src_.size() && isDigit(src_[pos_ + 1])) {
      ++pos_; // fall through to the number path below
    } else {
      fail(start, "unexpected '-'");
    }
  }

  if (isDigit(src_[pos_])) {
    bool isFloat = false;
    if (src_[pos_] == '0' && pos_ + 1 < src_.size() &&
        (src_[pos_ + 1] == 'x' || src_[pos_ + 1] == 'X')) {
      pos_ += 2;
      while (pos_ < src_.size() &&
             std::isxdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      return make(Token::IntLit);
    }
    while (pos_ < src_.size() && isDigit(src_[pos_]))
      ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.' && pos_ + 1 < src_.size() &&
        isDigit(src_[pos_ + 1])) {
      isFloat = true;
      ++pos_;
      while (pos_ < src_.size() && isDigit(src_[pos_]))
        ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      size_t mark = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-'))
        ++pos_;
      if (pos_ < src_.size() && isDigit(src_[pos_])) {
        isFloat = true;
        while (pos_ < src_.size() && isDigit(src_[pos_]))
          ++pos_;
      } else {
        pos_ = mark;
      }
    }
    return make(isFloat ? Token::FloatLit : Token::IntLit);
  }

  if (c == '%' || c == '^' || c == '@') {
    ++pos_;
    if (c == '@' && pos_ < src_.size() && src_[pos_] == '"') {
      ++pos_;
      while (pos_ < src_.size() && src_[pos_] != '"') {
        if (src_[pos_] == '\\')
          ++pos_;
        ++pos_;
      }
      if (pos_ >= src_.size())
        fail(start, "unterminated symbol reference");
      ++pos_;
      return make(Token::SymbolRef);
    }
    if (pos_ >= src_.size() || !isSuffixBody(src_[pos_]))
      fail(start, "expected suffix after sigil");
    while (pos_ < src_.size() && isSuffixBody(src_[pos_]))
      ++pos_;
    // Result number, e.g. %2#1.
    if (c == '%' && pos_ < src_.size() && src_[pos_] == '#') {
      ++pos_;
      if (pos_ >= src_.size() || !isDigit(src_[pos_]))
        fail(start, "expected digits after '#'");
      while (pos_ < src_.size() && isDigit(src_[pos_]))
        ++pos_;
    }
    switch (c) {
    case '%':
      return make(Token::ValueId);
    case '^':
      return make(Token::CaretId);
    default:
      return make(Token::SymbolRef);
    }
  }

  if (c == '"') {
    ++pos_;
    while (pos_ < src_.size() && src_[pos_] != '"') {
      if (src_[pos_] == '\\')
        ++pos_;
      ++pos_;
    }
    if (pos_ >= src_.size())
      fail(start, "unterminated string literal");
    ++pos_;
    return make(Token::StringLit);
  }

  if (isIdentStart(c)) {
    ++pos_;
    while (pos_ < src_.size() && isIdentBody(src_[pos_]))
      ++pos_;
    return make(Token::BareId);
  }

  fail(start, "unexpected character");
}

Token Lexer::rawScan(bool forType) {
  // Invalidate lookahead; scanning restarts from the buffered token's start.
  if (buffered_) {
    pos_ = buffered_->begin;
    buffered_.reset();
  }
  skipTrivia();
  size_t start = pos_;
  int depth = 0;
  while (pos_ < src_.size()) {
    char c = src_[pos_];
    if (c == '"') {
      if (forType && depth == 0)
        break; // a bare string after a type belongs to the next operation
      ++pos_;
      while (pos_ < src_.size() && src_[pos_] != '"') {
        if (src_[pos_] == '\\')
          ++pos_;
        ++pos_;
      }
      if (pos_ >= src_.size())
        fail(start, "unterminated string in opaque lexeme");
      ++pos_;
      continue;
    }
    if (c == '<' || c == '(' || c == '[' || c == '{') {
      if (depth == 0 && forType && c == '(')
        break; // a '(' after a type starts something new, e.g. a region list
      ++depth;
      ++pos_;
      continue;
    }
    if (c == '>' || c == ')' || c == ']' || c == '}') {
      if (depth == 0)
        break;
      --depth;
      ++pos_;
      continue;
    }
    if (depth == 0) {
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ',')
        break;
      if (forType && c == '-' && pos_ + 1 < src_.size() &&
          src_[pos_ + 1] == '>')
        break;
      if (!forType && c == ':')
        break;
    }
    ++pos_;
  }
  if (depth != 0)
    fail(start, "unbalanced brackets in opaque lexeme");
  if (pos_ == start)
    fail(start, forType ? "expected type" : "expected attribute value");
  return Token{Token::BareId, src_.substr(start, pos_ - start), start, pos_};
}

Token Lexer::rawType() { return rawScan(/*forType=*/true); }

Token Lexer::rawAttrValue() { return rawScan(/*forType=*/false); }

} // namespace treegraft
