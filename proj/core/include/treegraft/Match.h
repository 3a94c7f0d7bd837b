//===- Match.h - Context-directed site search and binding -----------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef TREEGRAFT_MATCH_H
#define TREEGRAFT_MATCH_H

#include "treegraft/Mutation.h"
#include "treegraft/Random.h"
#include "treegraft/Syntax.h"

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

namespace treegraft {

/// How much surrounding context a candidate site must reproduce: k ancestor
/// labels, l left-sibling labels, r right-sibling labels. A missing neighbor
/// at some step is a mismatch unless the context is exhausted at that step
/// too, in which case the remaining steps pass vacuously.
struct MatchConfig {
  uint32_t k = 4;
  uint32_t l = 4;
  uint32_t r = 4;
};

/// A position in the recipient where the mutation can land: either an
/// existing node to replace, or a quantified child slot to insert at.
struct MutationSite {
  enum class Kind : uint8_t { Replace, Insert };

  Kind kind = Kind::Replace;
  /// Replace: path of the node. Insert: path of the parent node.
  NodePath path;
  /// Insert only: position in the parent's child list.
  uint32_t childPos = 0;

  bool operator==(const MutationSite &other) const {
    return kind == other.kind && path == other.path &&
           childPos == other.childPos;
  }
  bool operator<(const MutationSite &other) const {
    if (kind != other.kind)
      return kind < other.kind;
    if (path != other.path)
      return path < other.path;
    return childPos < other.childPos;
  }
};

/// Every grammar-quantified (parent, index) slot of the tree: operation
/// lists in module bodies and blocks, block lists in regions, region lists
/// in operations that already have a region, operand lists, and block-arg
/// lists. End-of-list indices included.
std::vector<MutationSite> enumerateInsertionSlots(const SyntaxTree &tree);

/// Streams matching sites in breadth-first candidate order: each node is
/// considered for replacement, then its insertion slots, before the walk
/// moves on. Work is proportional to candidates tested, so taking the
/// first n sites does not pay for the rest of the tree.
class SiteEnumerator {
public:
  SiteEnumerator(const ParameterizedMutation &pm, const SyntaxTree &recipient,
                 MatchConfig cfg);

  std::optional<MutationSite> next();

  /// Candidates tested so far; exposed so tests can pin down laziness.
  size_t candidatesTested() const { return tested_; }

  /// Collects up to maxSites from the current position.
  std::vector<MutationSite> take(size_t maxSites);

private:
  bool matchReplace(const SyntaxNode &node) const;
  bool matchInsert(const SyntaxNode &parent, uint32_t pos) const;
  bool stepAncestors(const SyntaxNode *start) const;
  bool stepSiblings(const std::vector<NodeKind> &ctxChain, uint32_t m,
                    const SyntaxNode *parent, int64_t from, int64_t step) const;
  void refillCandidates();

  MatchConfig cfg_;
  NodeKind rootKind_;
  std::vector<NodeKind> ctxAncestors_;
  std::vector<NodeKind> ctxLeft_;
  std::vector<NodeKind> ctxRight_;

  std::deque<const SyntaxNode *> queue_;
  const SyntaxNode *current_ = nullptr;  // node the pending candidates are at
  std::vector<MutationSite> pending_;    // candidates for the node last popped
  size_t pendingNext_ = 0;
  size_t tested_ = 0;
};

/// All sites, eagerly.
std::vector<MutationSite> locate(const ParameterizedMutation &pm,
                                 const SyntaxTree &recipient, MatchConfig cfg);

struct BoundParameter {
  std::string lexeme;
  NodeKind kind;
  /// Recipient terminal the lexeme came from; empty when the donor value
  /// was kept because the neighborhood offered no candidate.
  std::optional<NodePath> provenance;
};

struct ParameterBinding {
  std::vector<BoundParameter> values; // indexed like pm.params
};

/// Joint breadth-first walk of the context and the recipient around the
/// site: the hole pairs with the site anchor, then left and right siblings
/// pair up to cfg.l / cfg.r steps out. Matched rule nodes descend into
/// children paired positionally up to the shorter list; when a context
/// terminal marked as a parameter aligns with a recipient terminal of the
/// same kind, that lexeme becomes a candidate. One candidate per parameter
/// is chosen uniformly at random; parameters without candidates fall back
/// to their donor value.
ParameterBinding bindParameters(const ParameterizedMutation &pm,
                                const SyntaxTree &recipient,
                                const MutationSite &site, MatchConfig cfg,
                                Rng &rng);

} // namespace treegraft

#endif // TREEGRAFT_MATCH_H
