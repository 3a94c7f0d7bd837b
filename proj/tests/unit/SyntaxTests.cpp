//===- SyntaxTests.cpp - Lexer, parser, printer, navigation ---------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "TestUtil.h"
#include "treegraft/Parse.h"
#include "treegraft/Print.h"
#include "treegraft/Syntax.h"

#include "gtest/gtest.h"

#include <set>

using namespace treegraft;
using namespace treegraft::test;

namespace {

const SyntaxNode &child(const SyntaxNode &node, size_t i) {
  EXPECT_LT(i, node.children.size());
  return *node.children[i];
}

// Operations in lexical order, depth first.
std::vector<const SyntaxNode *> opsOf(const SyntaxNode &root) {
  std::vector<const SyntaxNode *> ops;
  for (const SyntaxNode *n : walk(root))
    if (n->kind == NodeKind::Operation)
      ops.push_back(n);
  return ops;
}

TEST(Parse, SingleOperationShape) {
  SyntaxTree tree = parse(
      "%o1 = \"comb.add\"(%arg0, %c1) : (i2, i2) -> i2\n");
  ASSERT_EQ(tree.root->kind, NodeKind::ModuleBody);
  ASSERT_EQ(tree.root->children.size(), 1u);

  const SyntaxNode &op = child(*tree.root, 0);
  EXPECT_EQ(op.kind, NodeKind::Operation);
  ASSERT_EQ(op.children.size(), 4u);
  EXPECT_EQ(child(op, 0).kind, NodeKind::ResultList);
  EXPECT_EQ(child(op, 1).kind, NodeKind::OpName);
  EXPECT_EQ(child(op, 1).text, "\"comb.add\"");
  EXPECT_EQ(child(op, 2).kind, NodeKind::OperandList);
  EXPECT_EQ(child(op, 3).kind, NodeKind::FunctionType);

  const SyntaxNode &operands = child(op, 2);
  ASSERT_EQ(operands.children.size(), 2u);
  EXPECT_EQ(child(operands, 0).kind, NodeKind::ValueUse);
  EXPECT_EQ(child(child(operands, 0), 0).text, "%arg0");
  EXPECT_EQ(child(child(operands, 1), 0).text, "%c1");

  const SyntaxNode &ftype = child(op, 3);
  ASSERT_EQ(ftype.children.size(), 2u);
  EXPECT_EQ(child(ftype, 0).children.size(), 2u);
  EXPECT_EQ(child(ftype, 1).children.size(), 1u);
  EXPECT_EQ(child(child(child(ftype, 1), 0), 0).text, "i2");
}

TEST(Parse, EmptyInput) {
  SyntaxTree tree = parse("");
  EXPECT_EQ(tree.root->kind, NodeKind::ModuleBody);
  EXPECT_TRUE(tree.root->children.empty());
}

TEST(Parse, NoResults) {
  SyntaxTree tree = parse("\"hw.output\"(%o1) : (i2) -> ()\n");
  const SyntaxNode &op = child(*tree.root, 0);
  ASSERT_EQ(op.children.size(), 3u);
  EXPECT_EQ(child(op, 0).kind, NodeKind::OpName);
  EXPECT_EQ(child(child(op, 2), 1).children.size(), 0u); // no result types
}

TEST(Parse, MultipleResults) {
  SyntaxTree tree = parse("%a, %b = \"x.two\"() : () -> (i2, i4)\n");
  const SyntaxNode &results = child(child(*tree.root, 0), 0);
  ASSERT_EQ(results.kind, NodeKind::ResultList);
  ASSERT_EQ(results.children.size(), 2u);
  EXPECT_EQ(child(results, 0).text, "%a");
  EXPECT_EQ(child(results, 1).text, "%b");
}

TEST(Parse, AttrDictShape) {
  SyntaxTree tree =
      parse("%c1 = \"hw.constant\"() {value = -2 : i2} : () -> i2\n");
  const SyntaxNode &op = child(*tree.root, 0);
  ASSERT_EQ(op.children.size(), 5u);
  const SyntaxNode &dict = child(op, 3);
  ASSERT_EQ(dict.kind, NodeKind::AttrDict);
  ASSERT_EQ(dict.children.size(), 1u);
  const SyntaxNode &entry = child(dict, 0);
  ASSERT_EQ(entry.children.size(), 3u);
  EXPECT_EQ(child(entry, 0).kind, NodeKind::BareId);
  EXPECT_EQ(child(entry, 0).text, "value");
  EXPECT_EQ(child(entry, 1).kind, NodeKind::IntLit);
  EXPECT_EQ(child(entry, 1).text, "-2");
  EXPECT_EQ(child(entry, 2).kind, NodeKind::Type);
}

TEST(Parse, AttrValueKinds) {
  SyntaxTree tree = parse("\"x.a\"() {a = \"s\", b = @sym, c = 0.5, "
                          "d = dense<[1, 2]>, e = [3, 4], f = true} "
                          ": () -> ()\n");
  const SyntaxNode &dict = child(child(*tree.root, 0), 2);
  ASSERT_EQ(dict.children.size(), 6u);
  EXPECT_EQ(child(child(dict, 0), 1).kind, NodeKind::StringLit);
  EXPECT_EQ(child(child(dict, 1), 1).kind, NodeKind::SymbolRef);
  EXPECT_EQ(child(child(dict, 2), 1).kind, NodeKind::FloatLit);
  EXPECT_EQ(child(child(dict, 3), 1).kind, NodeKind::AttrValue);
  EXPECT_EQ(child(child(dict, 3), 1).text, "dense<[1, 2]>");
  EXPECT_EQ(child(child(dict, 4), 1).kind, NodeKind::AttrValue);
  EXPECT_EQ(child(child(dict, 5), 1).kind, NodeKind::AttrValue);
}

TEST(Parse, RegionsAttachDirectlyToOperation) {
  SyntaxTree tree = parseFixture("donor.mlir");
  const SyntaxNode &module = child(*tree.root, 0);
  // op-name, operand-list, region, function-type
  ASSERT_EQ(module.children.size(), 4u);
  EXPECT_EQ(child(module, 0).kind, NodeKind::OpName);
  EXPECT_EQ(child(module, 1).kind, NodeKind::OperandList);
  EXPECT_EQ(child(module, 2).kind, NodeKind::Region);
  EXPECT_EQ(child(module, 3).kind, NodeKind::FunctionType);

  const SyntaxNode &region = child(module, 2);
  ASSERT_EQ(region.children.size(), 1u);
  const SyntaxNode &block = child(region, 0);
  ASSERT_EQ(block.children.size(), 4u); // label + 3 operations
  EXPECT_EQ(child(block, 0).kind, NodeKind::BlockLabel);
  const SyntaxNode &label = child(block, 0);
  ASSERT_EQ(label.children.size(), 2u);
  EXPECT_EQ(child(label, 0).text, "^bb0");
  const SyntaxNode &arg = child(label, 1);
  EXPECT_EQ(arg.kind, NodeKind::BlockArg);
  EXPECT_EQ(child(arg, 0).text, "%arg0");
  EXPECT_EQ(child(child(arg, 1), 0).text, "i2");
}

TEST(Parse, MultipleRegionsAndEmptyRegion) {
  SyntaxTree tree = parseFixture("nested-if.mlir");
  const SyntaxNode &ifOp = child(*tree.root, 0);
  ASSERT_EQ(ifOp.children.size(), 5u);
  EXPECT_EQ(child(ifOp, 2).kind, NodeKind::Region);
  EXPECT_EQ(child(ifOp, 3).kind, NodeKind::Region);
  EXPECT_EQ(child(ifOp, 2).children.size(), 1u);
  EXPECT_TRUE(child(ifOp, 3).children.empty());
}

TEST(Parse, Successors) {
  SyntaxTree tree = parse("\"cf.br\"(%x)[^bb1, ^bb2] : (i2) -> ()\n");
  const SyntaxNode &op = child(*tree.root, 0);
  ASSERT_EQ(op.children.size(), 4u);
  const SyntaxNode &successors = child(op, 2);
  ASSERT_EQ(successors.kind, NodeKind::SuccessorList);
  ASSERT_EQ(successors.children.size(), 2u);
  EXPECT_EQ(child(successors, 0).text, "^bb1");
  EXPECT_EQ(child(successors, 1).text, "^bb2");
}

TEST(Parse, BalancedTypes) {
  SyntaxTree tree = parse(
      "\"a.b\"() ({\n^bb0(%v: !llvm.struct<(i32, struct<(i64)>)>):\n}) "
      ": () -> !hw.array<2xi2>\n");
  const SyntaxNode &op = child(*tree.root, 0);
  const SyntaxNode &arg = child(child(child(child(op, 2), 0), 0), 1);
  EXPECT_EQ(child(child(arg, 1), 0).text, "!llvm.struct<(i32, struct<(i64)>)>");
  const SyntaxNode &outs = child(child(op, 3), 1);
  EXPECT_EQ(child(child(outs, 0), 0).text, "!hw.array<2xi2>");
}

TEST(Parse, CommentsAndWhitespaceIgnored) {
  std::string canonical = readFile(fixturePath("donor.mlir"));
  std::string noisy = "// header comment\n\"hw.module\"()  (  {\n"
                      "^bb0( %arg0 : i2 ) :  // trailing note\n"
                      "%c1 = \"hw.constant\"( ) { value = -2 : i2 } "
                      ": ( ) -> i2\n"
                      "  %o1 = \"comb.add\"(%arg0,%c1) : (i2,i2) -> i2\n"
                      "\"hw.output\"(%o1):(i2)->()\n"
                      "}  ) : () -> ()\n";
  EXPECT_TRUE(structurallyEqual(*parse(canonical).root, *parse(noisy).root));
}

TEST(Parse, ResultNumberSuffix) {
  SyntaxTree tree = parse("\"x.a\"(%2#1) : (i2) -> ()\n");
  EXPECT_EQ(child(child(child(child(*tree.root, 0), 1), 0), 0).text, "%2#1");
}

TEST(Parse, ErrorsCarryOffsetAndExpected) {
  try {
    parse("%x = \"a.b\"(%y : (i2) -> ()\n");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError &e) {
    EXPECT_EQ(e.offset(), 14u); // at ':', where ')' or ',' was expected
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(Parse, ErrorOnGarbage) {
  EXPECT_THROW(parse("hello world"), SyntaxError);
  EXPECT_THROW(parse("\"a.b\"("), SyntaxError);
  EXPECT_THROW(parse("\"a.b\"() : () -> ("), SyntaxError);
  EXPECT_THROW(parse("%x"), SyntaxError);
  EXPECT_THROW(parse("\xff\xfe\x01"), SyntaxError);
  EXPECT_THROW(parse("\"unterminated"), SyntaxError);
}

TEST(Parse, TotalOnArbitraryBytes) {
  Rng rng(7);
  for (int i = 0; i < 4000; ++i) {
    std::string bytes = randomBytes(rng, 64);
    try {
      parse(bytes);
    } catch (const SyntaxError &) {
      // fine: the documented failure mode
    }
    // anything else escapes and fails the test
  }
}

TEST(Parse, TerminalSpansSliceSource) {
  SyntaxTree tree = parseFixture("donor.mlir");
  for (const SyntaxNode *n : walk(*tree.root)) {
    if (!isTerminal(n->kind))
      continue;
    ASSERT_LE(n->endByte, tree.source.size());
    EXPECT_EQ(tree.source.substr(n->beginByte, n->endByte - n->beginByte),
              n->text);
  }
}

TEST(Parse, OperationSpanCoversLine) {
  SyntaxTree tree = parseFixture("donor.mlir");
  const SyntaxNode *addOp = opsOf(*tree.root)[2];
  ASSERT_EQ(child(*addOp, 1).text, "\"comb.add\"");
  std::string slice =
      tree.source.substr(addOp->beginByte, addOp->endByte - addOp->beginByte);
  EXPECT_EQ(slice, "%o1 = \"comb.add\"(%arg0, %c1) : (i2, i2) -> i2");
}

TEST(Print, CanonicalFixpointOnFixtures) {
  for (const char *name :
       {"donor.mlir", "recipient.mlir", "recipient-tail-use.mlir",
        "naive-graft.mlir", "expected-graft.mlir", "nested-if.mlir",
        "duplicate-def.mlir"}) {
    std::string text = readFile(fixturePath(name));
    EXPECT_EQ(print(parse(text)), text) << name;
  }
}

TEST(Print, EmptyModule) { EXPECT_EQ(print(parse("")), ""); }

TEST(Print, NormalizesWhitespaceAndParens) {
  EXPECT_EQ(print(parse("\"x.a\"():()->(i2)")), "\"x.a\"() : () -> i2\n");
  EXPECT_EQ(print(parse("%a=\"x.b\"( %c , %d ):(i1,i1)->()")),
            "%a = \"x.b\"(%c, %d) : (i1, i1) -> ()\n");
}

TEST(Print, IndentsByRegionNesting) {
  std::string text = "\"a.outer\"() ({\n"
                     "  \"a.mid\"() ({\n"
                     "  ^bb0:\n"
                     "    \"a.inner\"() : () -> ()\n"
                     "  }) : () -> ()\n"
                     "}) : () -> ()\n";
  EXPECT_EQ(print(parse(text)), text);
}

TEST(Print, RoundTripsRandomTrees) {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    SyntaxTree tree = randomTree(rng);
    std::string text = print(tree);
    SyntaxTree again = parse(text);
    EXPECT_TRUE(structurallyEqual(*tree.root, *again.root)) << text;
    EXPECT_EQ(print(again), text);
  }
}

TEST(Print, SpanMapMatchesOutput) {
  SyntaxTree tree = parseFixture("recipient.mlir");
  PrintSpanMap spans;
  std::string text = print(tree, {}, &spans);
  for (const SyntaxNode *n : walk(*tree.root)) {
    if (!isTerminal(n->kind))
      continue;
    auto it = spans.find(n);
    ASSERT_NE(it, spans.end());
    EXPECT_EQ(text.substr(it->second.begin,
                          it->second.end - it->second.begin),
              n->text);
  }
}

TEST(Walk, ParentsPrecedeChildren) {
  Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    SyntaxTree tree = randomTree(rng);
    std::vector<const SyntaxNode *> order = walk(*tree.root);
    EXPECT_EQ(order.size(), countNodes(*tree.root));
    std::set<const SyntaxNode *> seen;
    for (const SyntaxNode *n : order) {
      if (n->parent)
        EXPECT_TRUE(seen.count(n->parent));
      seen.insert(n);
    }
  }
}

TEST(Walk, BlockBeforeItsOperations) {
  SyntaxTree tree = parseFixture("donor.mlir");
  std::vector<const SyntaxNode *> order = walk(*tree.root);
  auto indexOf = [&](const SyntaxNode *n) {
    return std::find(order.begin(), order.end(), n) - order.begin();
  };
  const SyntaxNode *block = &child(child(child(*tree.root, 0), 2), 0);
  ASSERT_EQ(block->kind, NodeKind::Block);
  for (const auto &op : block->children)
    EXPECT_LT(indexOf(block), indexOf(op.get()));
}

TEST(Navigation, SiblingsAndParents) {
  SyntaxTree tree = parseFixture("donor.mlir");
  std::vector<const SyntaxNode *> ops = opsOf(*tree.root);
  ASSERT_EQ(ops.size(), 4u); // hw.module + 3 in the block
  const SyntaxNode *constant = ops[1], *add = ops[2], *output = ops[3];

  EXPECT_EQ(getParent(*add)->kind, NodeKind::Block);
  EXPECT_EQ(getLeftSibling(*add), constant);
  EXPECT_EQ(getRightSibling(*add), output);
  EXPECT_EQ(getRightSibling(*output), nullptr);
  EXPECT_EQ(getParent(*tree.root), nullptr);

  // The block label is the constant's left sibling in tree position.
  EXPECT_EQ(getLeftSibling(*constant)->kind, NodeKind::BlockLabel);
}

TEST(Navigation, CoherentOnRandomTrees) {
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    SyntaxTree tree = randomTree(rng);
    for (const SyntaxNode *n : walk(*tree.root)) {
      if (const SyntaxNode *left = getLeftSibling(*n))
        EXPECT_EQ(getRightSibling(*left), n);
      if (const SyntaxNode *right = getRightSibling(*n))
        EXPECT_EQ(getLeftSibling(*right), n);
      for (const auto &c : n->children)
        EXPECT_EQ(getParent(*c), n);
    }
  }
}

TEST(Paths, RoundTrip) {
  SyntaxTree tree = parseFixture("recipient.mlir");
  for (const SyntaxNode *n : walk(*tree.root))
    EXPECT_EQ(nodeAt(*tree.root, pathOf(*n)), n);
}

TEST(Clone, PreservesStructureIndependently) {
  SyntaxTree tree = parseFixture("recipient.mlir");
  SyntaxTree copy = tree.clone();
  EXPECT_TRUE(structurallyEqual(*tree.root, *copy.root));
  EXPECT_NE(tree.root.get(), copy.root.get());
  EXPECT_EQ(print(tree), print(copy));
}

} // namespace
