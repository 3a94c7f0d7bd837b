//===- Random.cpp ------------------------------------------------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "treegraft/Random.h"

#include <cassert>

namespace treegraft {

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

size_t Rng::uniformInt(size_t bound) {
  assert(bound > 0 && "empty choice");
  uint64_t range = bound;
  uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<size_t>(draw % range);
}

Rng Rng::fork(uint64_t salt) const {
  return Rng(mix64(seed_ ^ mix64(salt)));
}

} // namespace treegraft
