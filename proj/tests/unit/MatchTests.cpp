//===- MatchTests.cpp - Site search and parameter binding tests ------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "TestUtil.h"

#include "treegraft/Match.h"
#include "treegraft/Mutation.h"
#include "treegraft/Print.h"

#include "gtest/gtest.h"

#include <algorithm>
#include <map>
#include <set>

using namespace treegraft;
using namespace treegraft::test;

namespace {

std::vector<MutationSite> sorted(std::vector<MutationSite> sites) {
  std::sort(sites.begin(), sites.end());
  return sites;
}

std::string describe(const MutationSite &site) {
  std::string out =
      site.kind == MutationSite::Kind::Replace ? "replace [" : "insert [";
  for (size_t i = 0; i < site.path.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(site.path[i]);
  }
  out += "]";
  if (site.kind == MutationSite::Kind::Insert)
    out += "@" + std::to_string(site.childPos);
  return out;
}

std::string describe(const std::vector<MutationSite> &sites) {
  std::string out;
  for (const MutationSite &site : sites)
    out += describe(site) + " ";
  return out;
}

} // namespace

TEST(InsertionSlots, EmptyModuleHasOneSlot) {
  SyntaxTree tree = parse("");
  std::vector<MutationSite> slots = enumerateInsertionSlots(tree);
  ASSERT_EQ(slots.size(), 1u);
  EXPECT_EQ(slots[0].kind, MutationSite::Kind::Insert);
  EXPECT_EQ(slots[0].path, NodePath{});
  EXPECT_EQ(slots[0].childPos, 0u);
}

TEST(InsertionSlots, WorkedDonorSlotInventory) {
  SyntaxTree tree = parseFixture("donor.mlir");
  std::vector<MutationSite> slots = enumerateInsertionSlots(tree);
  EXPECT_EQ(slots.size(), 19u) << describe(slots);

  std::map<NodeKind, std::set<uint32_t>> positionsByParentKind;
  for (const MutationSite &slot : slots) {
    const SyntaxNode *parent = nodeAt(*tree.root, slot.path);
    ASSERT_NE(parent, nullptr);
    positionsByParentKind[parent->kind].insert(slot.childPos);
  }

  // A labeled three-operation block still offers four operation gaps, and
  // none of them sits before the label.
  EXPECT_EQ(positionsByParentKind[NodeKind::Block],
            (std::set<uint32_t>{1, 2, 3, 4}));
  // Region gaps surround the module's only region (child index 2).
  EXPECT_EQ(positionsByParentKind[NodeKind::Operation],
            (std::set<uint32_t>{2, 3}));
  // Block args go after the caret id.
  EXPECT_EQ(positionsByParentKind[NodeKind::BlockLabel],
            (std::set<uint32_t>{1, 2}));
  EXPECT_TRUE(positionsByParentKind.count(NodeKind::ModuleBody));
  EXPECT_TRUE(positionsByParentKind.count(NodeKind::Region));
  EXPECT_TRUE(positionsByParentKind.count(NodeKind::OperandList));
  // Nothing may be inserted into result lists, attribute dictionaries, or
  // type lists.
  EXPECT_FALSE(positionsByParentKind.count(NodeKind::ResultList));
  EXPECT_FALSE(positionsByParentKind.count(NodeKind::AttrDict));
  EXPECT_FALSE(positionsByParentKind.count(NodeKind::TypeList));
  EXPECT_FALSE(positionsByParentKind.count(NodeKind::FunctionType));
}

TEST(InsertionSlots, UnlabeledEntryBlockOpensAtFront) {
  SyntaxTree tree = parse("\"a.x\"() ({\n"
                          "  \"a.y\"() : () -> ()\n"
                          "}) : () -> ()\n");
  std::set<uint32_t> blockSlots;
  for (const MutationSite &slot : enumerateInsertionSlots(tree)) {
    const SyntaxNode *parent = nodeAt(*tree.root, slot.path);
    if (parent->kind == NodeKind::Block)
      blockSlots.insert(slot.childPos);
  }
  EXPECT_EQ(blockSlots, (std::set<uint32_t>{0, 1}));
}

TEST(Locate, WorkedExampleFindsExactlyTheSubtraction) {
  SyntaxTree donor = parseFixture("donor.mlir");
  SyntaxTree recipient = parseFixture("recipient.mlir");
  ParameterizedMutation pm = mutationAt(donor, "comb.add");

  std::vector<MutationSite> sites = locate(pm, recipient, MatchConfig{});
  ASSERT_EQ(sites.size(), 1u) << describe(sites);
  EXPECT_EQ(sites[0].kind, MutationSite::Kind::Replace);

  const SyntaxNode *sub = findOperation(*recipient.root, "comb.sub");
  ASSERT_NE(sub, nullptr);
  EXPECT_EQ(sites[0].path, pathOf(*sub));

  // The surrounding operations differ by name on both sides of the site;
  // only their grammar labels have to line up.
  const SyntaxNode *donorLeft = findOperation(*donor.root, "hw.constant");
  const SyntaxNode *recipientLeft = findOperation(*recipient.root, "hw.bitcast");
  ASSERT_NE(donorLeft, nullptr);
  ASSERT_NE(recipientLeft, nullptr);
  EXPECT_NE(print(*donorLeft), print(*recipientLeft));
}

TEST(Locate, ContextWidthSeparatesNearbySites) {
  SyntaxTree donor = parseFixture("donor.mlir");
  SyntaxTree recipient = parseFixture("recipient.mlir");
  ParameterizedMutation pm = mutationAt(donor, "comb.add");

  const SyntaxNode *sub = findOperation(*recipient.root, "comb.sub");
  const SyntaxNode *module = findOperation(*recipient.root, "hw.module");
  ASSERT_NE(sub, nullptr);
  ASSERT_NE(module, nullptr);
  const SyntaxNode *block = sub->parent;
  ASSERT_EQ(block->kind, NodeKind::Block);

  MutationSite replaceSub{MutationSite::Kind::Replace, pathOf(*sub), 0};
  MutationSite endOfBlock{MutationSite::Kind::Insert, pathOf(*block),
                          static_cast<uint32_t>(block->children.size())};
  MutationSite regionGap{MutationSite::Kind::Insert, pathOf(*module), 2};

  auto sitesAt = [&](uint32_t k, uint32_t l, uint32_t r) {
    return sorted(locate(pm, recipient, MatchConfig{k, l, r}));
  };
  auto contains = [](const std::vector<MutationSite> &sites,
                     const MutationSite &site) {
    return std::binary_search(sites.begin(), sites.end(), site);
  };

  // Replacing the subtraction survives every widening used below.
  EXPECT_TRUE(contains(sitesAt(2, 1, 1), replaceSub));
  EXPECT_TRUE(contains(sitesAt(4, 4, 4), replaceSub));

  // The end-of-block gap has an operation to its left but nothing to its
  // right, while the mutation's context continues with one more operation:
  // one step of right context rejects it, zero steps accept it.
  EXPECT_TRUE(contains(sitesAt(2, 1, 0), endOfBlock));
  EXPECT_FALSE(contains(sitesAt(2, 1, 1), endOfBlock));

  // The region gap hangs off an operation, not a block, so any amount of
  // ancestor context rejects it.
  EXPECT_TRUE(contains(sitesAt(0, 0, 0), regionGap));
  EXPECT_FALSE(contains(sitesAt(1, 0, 0), regionGap));
  EXPECT_FALSE(contains(sitesAt(4, 0, 0), regionGap));
}

TEST(Locate, AgreesWithExhaustiveRederivation) {
  Rng master(2026);
  for (int iter = 0; iter < 500; ++iter) {
    Rng donorRng = master.fork(static_cast<uint64_t>(iter) * 3);
    Rng recipientRng = master.fork(static_cast<uint64_t>(iter) * 3 + 1);
    Rng pickRng = master.fork(static_cast<uint64_t>(iter) * 3 + 2);

    SyntaxTree donor = randomTree(donorRng);
    SyntaxTree recipient = randomTree(recipientRng);
    ParameterizedMutation pm = synthesizeMutation(donor, pickRng);
    MatchConfig cfg{static_cast<uint32_t>(pickRng.uniformInt(5)),
                    static_cast<uint32_t>(pickRng.uniformInt(5)),
                    static_cast<uint32_t>(pickRng.uniformInt(5))};

    std::vector<MutationSite> got = sorted(locate(pm, recipient, cfg));
    std::vector<MutationSite> want = sorted(bruteLocate(pm, recipient, cfg));
    ASSERT_EQ(got.size(), want.size())
        << "iter " << iter << " k=" << cfg.k << " l=" << cfg.l
        << " r=" << cfg.r << "\ngot:  " << describe(got)
        << "\nwant: " << describe(want);
    for (size_t i = 0; i < got.size(); ++i)
      ASSERT_TRUE(got[i] == want[i]) << "iter " << iter;
  }
}

TEST(Locate, WideningContextNeverAddsSites) {
  Rng master(515);
  for (int iter = 0; iter < 200; ++iter) {
    Rng rng = master.fork(static_cast<uint64_t>(iter));
    SyntaxTree donor = randomTree(rng);
    SyntaxTree recipient = randomTree(rng);
    ParameterizedMutation pm = synthesizeMutation(donor, rng);
    MatchConfig cfg{static_cast<uint32_t>(rng.uniformInt(4)),
                    static_cast<uint32_t>(rng.uniformInt(4)),
                    static_cast<uint32_t>(rng.uniformInt(4))};

    std::vector<MutationSite> base = sorted(locate(pm, recipient, cfg));
    for (int dim = 0; dim < 3; ++dim) {
      MatchConfig wide = cfg;
      (dim == 0 ? wide.k : dim == 1 ? wide.l : wide.r) += 1;
      std::vector<MutationSite> narrowed = sorted(locate(pm, recipient, wide));
      EXPECT_TRUE(std::includes(base.begin(), base.end(), narrowed.begin(),
                                narrowed.end()))
          << "iter " << iter << " dim " << dim;
    }
  }
}

TEST(Locate, ZeroContextAcceptsEveryKindMatchAndSlot) {
  SyntaxTree donor = parseFixture("donor.mlir");
  SyntaxTree recipient = parseFixture("recipient.mlir");
  ParameterizedMutation pm = mutationAt(donor, "comb.add");

  std::vector<MutationSite> want;
  for (const SyntaxNode *node : walk(*recipient.root))
    if (node->kind == NodeKind::Operation)
      want.push_back({MutationSite::Kind::Replace, pathOf(*node), 0});
  for (const MutationSite &slot : enumerateInsertionSlots(recipient))
    want.push_back(slot);

  std::vector<MutationSite> got = locate(pm, recipient, MatchConfig{0, 0, 0});
  EXPECT_EQ(sorted(got), sorted(want)) << describe(sorted(got));
}

TEST(Locate, EnumeratorOnlyPaysForSitesTaken) {
  std::string big;
  for (int i = 0; i < 300; ++i)
    big += "\"a.x\"() : () -> ()\n";
  SyntaxTree recipient = parse(big);

  SyntaxTree donor = parse("\"a.x\"() : () -> ()\n");
  ParameterizedMutation pm = mutationAt(donor, "a.x");

  size_t total = walk(*recipient.root).size() +
                 enumerateInsertionSlots(recipient).size();

  SiteEnumerator enumerator(pm, recipient, MatchConfig{0, 0, 0});
  std::vector<MutationSite> first = enumerator.take(3);
  ASSERT_EQ(first.size(), 3u);
  EXPECT_LE(enumerator.candidatesTested(), 4u);
  EXPECT_LT(enumerator.candidatesTested(), total / 10);

  // The stream picks up where it stopped and ends with the full set.
  std::vector<MutationSite> rest = enumerator.take(SIZE_MAX);
  EXPECT_EQ(first.size() + rest.size(),
            locate(pm, recipient, MatchConfig{0, 0, 0}).size());
}

TEST(Bind, DonorNeighborhoodBindsDonorValues) {
  SyntaxTree donor = parseFixture("donor.mlir");
  ParameterizedMutation pm = mutationAt(donor, "comb.add");

  MutationSite site{MutationSite::Kind::Replace, pm.holePath, 0};
  Rng rng(5);
  ParameterBinding binding =
      bindParameters(pm, donor, site, MatchConfig{}, rng);

  ASSERT_EQ(binding.values.size(), 4u);
  for (size_t i = 0; i < binding.values.size(); ++i) {
    EXPECT_EQ(binding.values[i].lexeme, pm.params[i].donorValue) << i;
    EXPECT_TRUE(binding.values[i].provenance.has_value()) << i;
    EXPECT_EQ(binding.values[i].kind, pm.params[i].kind) << i;
  }
}

TEST(Bind, WorkedExampleRebindsToRecipientNames) {
  SyntaxTree donor = parseFixture("donor.mlir");
  SyntaxTree recipient = parseFixture("recipient.mlir");
  ParameterizedMutation pm = mutationAt(donor, "comb.add");

  std::vector<MutationSite> sites = locate(pm, recipient, MatchConfig{});
  ASSERT_EQ(sites.size(), 1u);

  // The third parameter sees the recipient type twice (once through the
  // block arguments and once through the output's operand types), so the
  // outcome is the same for every seed.
  for (uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    Rng rng(seed);
    ParameterBinding binding =
        bindParameters(pm, recipient, sites[0], MatchConfig{}, rng);
    ASSERT_EQ(binding.values.size(), 4u);
    EXPECT_EQ(binding.values[0].lexeme, "%arg0");
    EXPECT_EQ(binding.values[1].lexeme, "%0");
    EXPECT_EQ(binding.values[2].lexeme, "i4");
    EXPECT_EQ(binding.values[3].lexeme, "%1");
    for (const BoundParameter &value : binding.values)
      EXPECT_TRUE(value.provenance.has_value());
  }
}

TEST(Bind, UniformChoiceBetweenDistinctCandidates) {
  SyntaxTree donor = parse("\"a.use\"(%v, %v) : (i1, i1) -> ()\n"
                           "\"a.tgt\"(%v) : (i1) -> ()\n");
  SyntaxTree recipient = parse("\"a.use\"(%x, %y) : (i1, i1) -> ()\n"
                               "\"a.tgt\"(%z) : (i1) -> ()\n");
  ParameterizedMutation pm = mutationAt(donor, "a.tgt");
  ASSERT_GE(pm.params.size(), 1u);
  ASSERT_EQ(pm.params[0].donorValue, "%v");

  const SyntaxNode *target = findOperation(*recipient.root, "a.tgt");
  ASSERT_NE(target, nullptr);
  MutationSite site{MutationSite::Kind::Replace, pathOf(*target), 0};

  Rng master(99);
  std::map<std::string, size_t> counts;
  std::set<NodePath> provenances;
  const size_t kDraws = 10000;
  for (size_t i = 0; i < kDraws; ++i) {
    Rng rng = master.fork(i);
    ParameterBinding binding =
        bindParameters(pm, recipient, site, MatchConfig{}, rng);
    ++counts[binding.values[0].lexeme];
    ASSERT_TRUE(binding.values[0].provenance.has_value());
    provenances.insert(*binding.values[0].provenance);
  }
  ASSERT_EQ(counts.size(), 2u);
  EXPECT_EQ(provenances.size(), 2u);
  EXPECT_NEAR(static_cast<double>(counts["%x"]) / kDraws, 0.5, 0.02);
  EXPECT_NEAR(static_cast<double>(counts["%y"]) / kDraws, 0.5, 0.02);
}

TEST(Bind, FallsBackToDonorValueOutsideAnyCandidate) {
  SyntaxTree donor = parse("\"a.use\"(%v) : (i1) -> ()\n"
                           "\"a.tgt\"(%v) : (i1) -> ()\n");
  SyntaxTree recipient = parse("\"b.other\"() : () -> ()\n"
                               "\"a.tgt\"(%q) : (i1) -> ()\n");
  ParameterizedMutation pm = mutationAt(donor, "a.tgt");

  const SyntaxNode *target = findOperation(*recipient.root, "a.tgt");
  ASSERT_NE(target, nullptr);
  MutationSite site{MutationSite::Kind::Replace, pathOf(*target), 0};

  Rng rng(1);
  ParameterBinding binding =
      bindParameters(pm, recipient, site, MatchConfig{}, rng);
  ASSERT_EQ(binding.values.size(), 2u);
  EXPECT_EQ(binding.values[0].lexeme, "%v");
  EXPECT_FALSE(binding.values[0].provenance.has_value());
  // The shared type has no aligned twin either: b.other takes no operands.
  EXPECT_EQ(binding.values[1].lexeme, "i1");
  EXPECT_FALSE(binding.values[1].provenance.has_value());
}

TEST(Bind, InsertSitesPairGapNeighbors) {
  SyntaxTree donor = parse("%v = \"a.def\"() : () -> i1\n"
                           "\"a.use\"(%v) : (i1) -> ()\n");
  SyntaxTree recipient = parse("%w = \"b.def\"() : () -> i8\n");
  ParameterizedMutation pm = mutationAt(donor, "a.use");

  std::vector<MutationSite> sites = locate(pm, recipient, MatchConfig{});
  ASSERT_EQ(sites.size(), 1u) << describe(sites);
  EXPECT_EQ(sites[0].kind, MutationSite::Kind::Insert);
  EXPECT_EQ(sites[0].path, NodePath{});
  EXPECT_EQ(sites[0].childPos, 1u);

  Rng rng(9);
  ParameterBinding binding =
      bindParameters(pm, recipient, sites[0], MatchConfig{}, rng);
  ASSERT_EQ(binding.values.size(), 2u);
  EXPECT_EQ(binding.values[0].lexeme, "%w");
  EXPECT_EQ(binding.values[1].lexeme, "i8");
}

TEST(Bind, BoundLexemesComeFromSameKindTerminals) {
  Rng master(4242);
  size_t exercised = 0;
  for (int iter = 0; iter < 400; ++iter) {
    Rng rng = master.fork(static_cast<uint64_t>(iter));
    SyntaxTree donor = randomTree(rng);
    SyntaxTree recipient = randomTree(rng);
    ParameterizedMutation pm = synthesizeMutation(donor, rng);

    std::vector<MutationSite> sites = locate(pm, recipient, MatchConfig{1, 1, 1});
    if (sites.empty() || pm.params.empty())
      continue;
    const MutationSite &site = sites[rng.uniformInt(sites.size())];
    ParameterBinding binding =
        bindParameters(pm, recipient, site, MatchConfig{1, 1, 1}, rng);

    ASSERT_EQ(binding.values.size(), pm.params.size());
    for (size_t i = 0; i < binding.values.size(); ++i) {
      const BoundParameter &value = binding.values[i];
      EXPECT_EQ(value.kind, pm.params[i].kind);
      if (!value.provenance.has_value()) {
        EXPECT_EQ(value.lexeme, pm.params[i].donorValue);
        continue;
      }
      ++exercised;
      const SyntaxNode *origin = nodeAt(*recipient.root, *value.provenance);
      ASSERT_NE(origin, nullptr);
      EXPECT_EQ(origin->kind, pm.params[i].kind);
      EXPECT_EQ(origin->text, value.lexeme);
    }
  }
  EXPECT_GT(exercised, 20u); // the property must actually get exercised
}
