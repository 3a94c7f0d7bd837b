//===- CoverageTests.cpp - Dialect pair coverage tests ---------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "treegraft/Coverage.h"
#include "treegraft/Parse.h"

#include "TestUtil.h"
#include "gtest/gtest.h"

using namespace treegraft;
using namespace treegraft::test;

namespace {

std::set<DialectPair> pairs(std::initializer_list<DialectPair> list) {
  return std::set<DialectPair>(list);
}

TEST(DialectOf, StripsQuotesAndTakesThePrefix) {
  EXPECT_EQ(dialectOf("\"sv.if\""), "sv");
  EXPECT_EQ(dialectOf("comb.add"), "comb");
  EXPECT_EQ(dialectOf("\"hw.array.get\""), "hw");
}

TEST(DialectOf, DotlessNamesAreTheirOwnDialect) {
  EXPECT_EQ(dialectOf("\"module\""), "module");
  EXPECT_EQ(dialectOf("builtin"), "builtin");
}

TEST(ControlPairs, NestedIfPinsTheExactSets) {
  Coverage cov = coverageOf(parseFixture("nested-if.mlir"));
  EXPECT_EQ(cov.control, pairs({{"comb", "sv"}, {"hw", "sv"}}));
  EXPECT_EQ(cov.data, pairs({{"comb", "hw"}}));
  EXPECT_EQ(cov.total(), 3u);
}

TEST(ControlPairs, TransitiveNestingReachesEveryAncestor) {
  SyntaxTree tree = parse("\"a.outer\"() ({\n"
                          "  \"b.mid\"() ({\n"
                          "    \"c.inner\"() : () -> ()\n"
                          "  }) : () -> ()\n"
                          "}) : () -> ()\n");
  Coverage cov = coverageOf(tree);
  EXPECT_EQ(cov.control, pairs({{"a", "b"}, {"a", "c"}, {"b", "c"}}));
  EXPECT_TRUE(cov.data.empty());
}

TEST(ControlPairs, SameDialectNestingDoesNotCount) {
  SyntaxTree tree = parse("\"hw.module\"() ({\n"
                          "  \"hw.output\"() : () -> ()\n"
                          "}) : () -> ()\n");
  Coverage cov = coverageOf(tree);
  EXPECT_TRUE(cov.control.empty());
  EXPECT_TRUE(cov.data.empty());
}

TEST(DataPairs, WorkedDonorAndGraftPinTheExactSets) {
  for (const char *name : {"donor.mlir", "expected-graft.mlir"}) {
    Coverage cov = coverageOf(parseFixture(name));
    EXPECT_EQ(cov.control, pairs({{"comb", "hw"}})) << name;
    EXPECT_EQ(cov.data, pairs({{"comb", "hw"}})) << name;
  }
}

TEST(DataPairs, InnerRedefinitionShadowsTheOuterDef) {
  SyntaxTree tree = parse("%v = \"a.def\"() : () -> i1\n"
                          "\"b.op\"() ({\n"
                          "  %v = \"c.def\"() : () -> i1\n"
                          "  \"d.use\"(%v) : (i1) -> ()\n"
                          "}) : () -> ()\n"
                          "\"e.use\"(%v) : (i1) -> ()\n");
  Coverage cov = coverageOf(tree);
  EXPECT_EQ(cov.data, pairs({{"c", "d"}, {"a", "e"}}));
  EXPECT_EQ(cov.control, pairs({{"b", "c"}, {"b", "d"}}));
}

TEST(DataPairs, BlockArgumentsShadowAndDefineNoEdge) {
  SyntaxTree tree = parse("%v = \"a.def\"() : () -> i1\n"
                          "\"b.op\"() ({\n"
                          "^bb0(%v: i1):\n"
                          "  \"d.use\"(%v) : (i1) -> ()\n"
                          "}) : () -> ()\n");
  Coverage cov = coverageOf(tree);
  EXPECT_TRUE(cov.data.empty());
  EXPECT_EQ(cov.control, pairs({{"b", "d"}}));
}

TEST(DataPairs, UndefinedUsesContributeNothing) {
  SyntaxTree tree = parse("\"d.use\"(%ghost) : (i1) -> ()\n");
  Coverage cov = coverageOf(tree);
  EXPECT_TRUE(cov.control.empty());
  EXPECT_TRUE(cov.data.empty());
}

TEST(DataPairs, ResultNumbersResolveThroughTheBaseName) {
  SyntaxTree tree = parse("%2 = \"a.def\"() : () -> i4\n"
                          "\"b.use\"(%2#1) : (i4) -> ()\n");
  Coverage cov = coverageOf(tree);
  EXPECT_EQ(cov.data, pairs({{"a", "b"}}));
}

TEST(DataPairs, SameDialectEdgesDoNotCount) {
  SyntaxTree tree = parse("%v = \"a.def\"() : () -> i1\n"
                          "\"a.use\"(%v) : (i1) -> ()\n");
  Coverage cov = coverageOf(tree);
  EXPECT_TRUE(cov.data.empty());
}

TEST(Merge, UnionsBothSetsAcrossPrograms) {
  Coverage nested = coverageOf(parseFixture("nested-if.mlir"));
  Coverage donor = coverageOf(parseFixture("donor.mlir"));
  Coverage merged = nested;
  merged.merge(donor);
  EXPECT_EQ(merged.control, pairs({{"comb", "hw"}, {"comb", "sv"}, {"hw", "sv"}}));
  EXPECT_EQ(merged.data, pairs({{"comb", "hw"}}));
  EXPECT_EQ(merged.total(), 4u);

  Coverage again = merged;
  again.merge(nested);
  EXPECT_EQ(again, merged);
}

} // namespace
