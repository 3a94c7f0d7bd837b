//===- Passes.cpp - Pass list parsing and pipeline selection -----------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "treegraft/Passes.h"

#include "treegraft/Coverage.h"
#include "treegraft/Reference.h"

#include <algorithm>

namespace treegraft {

namespace {

std::string_view trimmed(std::string_view s) {
  size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos)
    return {};
  size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

void addOption(PassList &list, const std::string &option) {
  if (std::find(list.optionPool.begin(), list.optionPool.end(), option) ==
      list.optionPool.end())
    list.optionPool.push_back(option);
}

} // namespace

PassList parsePassList(std::string_view text) {
  PassList list;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, (eol == std::string_view::npos ? text.size() : eol) - pos);

    std::vector<std::string> fields;
    size_t fieldPos = 0;
    while (fieldPos <= line.size()) {
      size_t tab = line.find('\t', fieldPos);
      std::string_view field = line.substr(
          fieldPos, (tab == std::string_view::npos ? line.size() : tab) -
                        fieldPos);
      if (std::string_view t = trimmed(field); !t.empty())
        fields.emplace_back(t);
      if (tab == std::string_view::npos)
        break;
      fieldPos = tab + 1;
    }

    if (!fields.empty()) {
      PassInfo info;
      info.name = fields[0];
      info.options.assign(fields.begin() + 1, fields.end());
      for (const std::string &option : info.options)
        addOption(list, option);
      list.passes.push_back(std::move(info));
    }

    if (eol == std::string_view::npos)
      break;
    pos = eol + 1;
  }
  return list;
}

PassList referencePassList() {
  PassList list;
  for (const ReferencePassInfo &pass : referencePasses()) {
    list.passes.push_back({pass.name, pass.options});
    for (const std::string &option : pass.options)
      addOption(list, option);
  }
  return list;
}

std::set<std::string> dialectsIn(const SyntaxTree &tree) {
  std::set<std::string> dialects;
  std::vector<const SyntaxNode *> stack = {tree.root.get()};
  while (!stack.empty()) {
    const SyntaxNode *node = stack.back();
    stack.pop_back();
    if (node->kind == NodeKind::OpName)
      dialects.insert(dialectOf(node->text));
    for (const auto &child : node->children)
      stack.push_back(child.get());
  }
  return dialects;
}

std::vector<PassInvocation> selectPasses(const SyntaxTree &tree,
                                         const PassList &list, size_t p,
                                         PassSelection mode,
                                         uint32_t optionPermille, Rng &rng) {
  size_t want = std::min(p, list.passes.size());
  std::vector<size_t> chosen;
  chosen.reserve(want);

  // drawFrom removes a uniform element of `pool` and records it.
  auto drawFrom = [&](std::vector<size_t> &pool) {
    size_t at = rng.uniformInt(pool.size());
    chosen.push_back(pool[at]);
    pool.erase(pool.begin() + static_cast<ptrdiff_t>(at));
  };

  std::vector<size_t> preferred, rest;
  if (mode == PassSelection::DialectHeuristic) {
    std::set<std::string> dialects = dialectsIn(tree);
    for (size_t i = 0; i < list.passes.size(); ++i) {
      bool hit = std::any_of(dialects.begin(), dialects.end(),
                             [&](const std::string &d) {
                               return !d.empty() &&
                                      list.passes[i].name.find(d) !=
                                          std::string::npos;
                             });
      (hit ? preferred : rest).push_back(i);
    }
  } else {
    for (size_t i = 0; i < list.passes.size(); ++i)
      rest.push_back(i);
  }

  while (chosen.size() < want && !preferred.empty())
    drawFrom(preferred);
  while (chosen.size() < want && !rest.empty())
    drawFrom(rest);

  std::vector<PassInvocation> pipeline;
  pipeline.reserve(chosen.size());
  for (size_t index : chosen) {
    PassInvocation inv;
    inv.name = list.passes[index].name;
    if (!list.optionPool.empty() && rng.chance(optionPermille, 1000))
      inv.option = list.optionPool[rng.uniformInt(list.optionPool.size())];
    pipeline.push_back(std::move(inv));
  }
  return pipeline;
}

} // namespace treegraft
