//===- Match.cpp - Context-directed site search and binding ---------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "treegraft/Match.h"

#include <algorithm>
#include <cassert>
#include <utility>

namespace treegraft {

namespace {

/// Appends the grammar-quantified child slots owned by node, in index order.
void appendSlotsOf(const SyntaxNode &node, const NodePath &path,
                   std::vector<MutationSite> &out) {
  auto push = [&](uint32_t pos) {
    out.push_back({MutationSite::Kind::Insert, path, pos});
  };
  uint32_t n = static_cast<uint32_t>(node.children.size());
  switch (node.kind) {
  case NodeKind::ModuleBody:
  case NodeKind::Region:
  case NodeKind::OperandList:
    for (uint32_t i = 0; i <= n; ++i)
      push(i);
    break;
  case NodeKind::Block: {
    // Operations may not land before the label.
    uint32_t start =
        (n && node.children[0]->kind == NodeKind::BlockLabel) ? 1 : 0;
    for (uint32_t i = start; i <= n; ++i)
      push(i);
    break;
  }
  case NodeKind::BlockLabel:
    // Child 0 is the caret id; args follow it.
    for (uint32_t i = 1; i <= n; ++i)
      push(i);
    break;
  case NodeKind::Operation: {
    // The grammar quantifies regions only inside an existing region list.
    uint32_t first = 0, count = 0;
    for (uint32_t i = 0; i < n; ++i) {
      if (node.children[i]->kind == NodeKind::Region) {
        if (!count)
          first = i;
        ++count;
      }
    }
    if (count)
      for (uint32_t i = first; i <= first + count; ++i)
        push(i);
    break;
  }
  default:
    break;
  }
}

} // namespace

std::vector<MutationSite> enumerateInsertionSlots(const SyntaxTree &tree) {
  std::vector<MutationSite> slots;
  for (const SyntaxNode *node : walk(*tree.root))
    appendSlotsOf(*node, pathOf(*node), slots);
  return slots;
}

SiteEnumerator::SiteEnumerator(const ParameterizedMutation &pm,
                               const SyntaxTree &recipient, MatchConfig cfg)
    : cfg_(cfg), rootKind_(pm.mutationRoot->kind) {
  const SyntaxNode *hole = nodeAt(*pm.context.root, pm.holePath);
  assert(hole && hole->isHole && "context must carry the hole");
  for (const SyntaxNode *a = hole->parent; a; a = a->parent)
    ctxAncestors_.push_back(a->kind);
  if (const SyntaxNode *parent = hole->parent) {
    for (int64_t i = static_cast<int64_t>(hole->indexInParent) - 1; i >= 0; --i)
      ctxLeft_.push_back(parent->children[static_cast<size_t>(i)]->kind);
    for (size_t i = hole->indexInParent + 1; i < parent->children.size(); ++i)
      ctxRight_.push_back(parent->children[i]->kind);
  }
  queue_.push_back(recipient.root.get());
}

bool SiteEnumerator::stepAncestors(const SyntaxNode *start) const {
  const SyntaxNode *cand = start;
  for (uint32_t i = 0; i < cfg_.k; ++i) {
    bool haveCtx = i < ctxAncestors_.size();
    if (!haveCtx && !cand)
      return true; // both chains ended: the rest passes vacuously
    if (!haveCtx || !cand)
      return false;
    if (ctxAncestors_[i] != cand->kind)
      return false;
    cand = cand->parent;
  }
  return true;
}

bool SiteEnumerator::stepSiblings(const std::vector<NodeKind> &ctxChain,
                                  uint32_t m, const SyntaxNode *parent,
                                  int64_t from, int64_t step) const {
  int64_t n = parent ? static_cast<int64_t>(parent->children.size()) : 0;
  int64_t pos = from;
  for (uint32_t i = 0; i < m; ++i, pos += step) {
    bool haveCtx = i < ctxChain.size();
    bool haveCand = pos >= 0 && pos < n;
    if (!haveCtx && !haveCand)
      return true;
    if (haveCtx != haveCand)
      return false;
    if (ctxChain[i] != parent->children[static_cast<size_t>(pos)]->kind)
      return false;
  }
  return true;
}

bool SiteEnumerator::matchReplace(const SyntaxNode &node) const {
  if (node.kind != rootKind_)
    return false;
  if (!stepAncestors(node.parent))
    return false;
  int64_t idx = static_cast<int64_t>(node.indexInParent);
  return stepSiblings(ctxLeft_, cfg_.l, node.parent, idx - 1, -1) &&
         stepSiblings(ctxRight_, cfg_.r, node.parent, idx + 1, +1);
}

bool SiteEnumerator::matchInsert(const SyntaxNode &parent,
                                 uint32_t pos) const {
  // The grafted node's parent would be this node, so the ancestor walk
  // starts here. There is no node at the slot yet, hence no self check.
  if (!stepAncestors(&parent))
    return false;
  return stepSiblings(ctxLeft_, cfg_.l, &parent,
                      static_cast<int64_t>(pos) - 1, -1) &&
         stepSiblings(ctxRight_, cfg_.r, &parent, static_cast<int64_t>(pos),
                      +1);
}

void SiteEnumerator::refillCandidates() {
  pending_.clear();
  pendingNext_ = 0;
  current_ = nullptr;
  if (queue_.empty())
    return;
  const SyntaxNode *node = queue_.front();
  queue_.pop_front();
  for (const auto &child : node->children)
    queue_.push_back(child.get());
  current_ = node;
  NodePath path = pathOf(*node);
  pending_.push_back({MutationSite::Kind::Replace, path, 0});
  appendSlotsOf(*node, path, pending_);
}

std::optional<MutationSite> SiteEnumerator::next() {
  for (;;) {
    if (pendingNext_ >= pending_.size()) {
      if (queue_.empty())
        return std::nullopt;
      refillCandidates();
      continue;
    }
    const MutationSite &site = pending_[pendingNext_++];
    ++tested_;
    bool ok = site.kind == MutationSite::Kind::Replace
                  ? matchReplace(*current_)
                  : matchInsert(*current_, site.childPos);
    if (ok)
      return site;
  }
}

std::vector<MutationSite> SiteEnumerator::take(size_t maxSites) {
  std::vector<MutationSite> sites;
  while (sites.size() < maxSites) {
    std::optional<MutationSite> site = next();
    if (!site)
      break;
    sites.push_back(std::move(*site));
  }
  return sites;
}

std::vector<MutationSite> locate(const ParameterizedMutation &pm,
                                 const SyntaxTree &recipient,
                                 MatchConfig cfg) {
  SiteEnumerator enumerator(pm, recipient, cfg);
  return enumerator.take(SIZE_MAX);
}

ParameterBinding bindParameters(const ParameterizedMutation &pm,
                                const SyntaxTree &recipient,
                                const MutationSite &site, MatchConfig cfg,
                                Rng &rng) {
  const SyntaxNode *hole = nodeAt(*pm.context.root, pm.holePath);
  assert(hole && hole->isHole && "context must carry the hole");

  // Pair the hole's siblings with the site's, as far as the match related
  // them. The hole itself pairs with the anchor but has nothing inside.
  const SyntaxNode *ctxParent = hole->parent;
  const SyntaxNode *candParent = nullptr;
  int64_t leftFrom = 0, rightFrom = 0;
  if (site.kind == MutationSite::Kind::Replace) {
    const SyntaxNode *anchor = nodeAt(*recipient.root, site.path);
    assert(anchor && "site must point into the recipient");
    candParent = anchor->parent;
    leftFrom = static_cast<int64_t>(anchor->indexInParent) - 1;
    rightFrom = static_cast<int64_t>(anchor->indexInParent) + 1;
  } else {
    candParent = nodeAt(*recipient.root, site.path);
    assert(candParent && "site must point into the recipient");
    leftFrom = static_cast<int64_t>(site.childPos) - 1;
    rightFrom = static_cast<int64_t>(site.childPos);
  }

  using Pair = std::pair<const SyntaxNode *, const SyntaxNode *>;
  std::deque<Pair> queue;
  if (ctxParent && candParent) {
    int64_t holeIdx = static_cast<int64_t>(hole->indexInParent);
    int64_t ctxN = static_cast<int64_t>(ctxParent->children.size());
    int64_t candN = static_cast<int64_t>(candParent->children.size());
    for (uint32_t i = 0; i < cfg.l; ++i) {
      int64_t a = holeIdx - 1 - static_cast<int64_t>(i);
      int64_t b = leftFrom - static_cast<int64_t>(i);
      if (a < 0 || b < 0)
        break;
      queue.push_back({ctxParent->children[static_cast<size_t>(a)].get(),
                       candParent->children[static_cast<size_t>(b)].get()});
    }
    for (uint32_t i = 0; i < cfg.r; ++i) {
      int64_t a = holeIdx + 1 + static_cast<int64_t>(i);
      int64_t b = rightFrom + static_cast<int64_t>(i);
      if (a >= ctxN || b >= candN)
        break;
      queue.push_back({ctxParent->children[static_cast<size_t>(a)].get(),
                       candParent->children[static_cast<size_t>(b)].get()});
    }
  }

  std::vector<std::vector<std::pair<std::string, NodePath>>> candidates(
      pm.params.size());
  while (!queue.empty()) {
    auto [ctx, cand] = queue.front();
    queue.pop_front();
    if (ctx->kind != cand->kind || ctx->isHole || cand->isHole)
      continue;
    if (isTerminal(ctx->kind)) {
      if (ctx->paramIndex >= 0)
        candidates[static_cast<size_t>(ctx->paramIndex)].push_back(
            {cand->text, pathOf(*cand)});
      continue;
    }
    size_t shorter = std::min(ctx->children.size(), cand->children.size());
    for (size_t i = 0; i < shorter; ++i)
      queue.push_back({ctx->children[i].get(), cand->children[i].get()});
  }

  ParameterBinding binding;
  binding.values.reserve(pm.params.size());
  for (size_t i = 0; i < pm.params.size(); ++i) {
    const Parameter &param = pm.params[i];
    auto &options = candidates[i];
    if (options.empty()) {
      binding.values.push_back({param.donorValue, param.kind, std::nullopt});
      continue;
    }
    size_t pick = options.size() == 1 ? 0 : rng.uniformInt(options.size());
    binding.values.push_back(
        {options[pick].first, param.kind, options[pick].second});
  }
  return binding;
}

} // namespace treegraft
