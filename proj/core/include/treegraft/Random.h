//===- Random.h - Deterministic random source -----------------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef TREEGRAFT_RANDOM_H
#define TREEGRAFT_RANDOM_H

#include <cstdint>
#include <random>

namespace treegraft {

/// Seeded RNG with portable derived draws. std::mt19937_64 output is pinned
/// by the standard; the bounded draw below avoids uniform_int_distribution,
/// whose mapping is implementation-defined, so identical seeds give
/// identical runs on every platform.
class Rng {
public:
  explicit Rng(uint64_t seed) : seed_(seed), engine_(seed) {}

  uint64_t nextRaw() { return engine_(); }

  /// Uniform over [0, bound). bound must be nonzero. Uses rejection
  /// sampling, so every value is exactly equally likely.
  size_t uniformInt(size_t bound);

  /// True with probability num/den.
  bool chance(uint32_t num, uint32_t den) {
    return uniformInt(den) < num;
  }

  /// Independent child stream; same (seed, salt) always gives the same
  /// child. Lets per-iteration work draw identically regardless of how
  /// iterations are scheduled across workers.
  Rng fork(uint64_t salt) const;

private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer, the usual seed-mixing function.
uint64_t mix64(uint64_t x);

} // namespace treegraft

#endif // TREEGRAFT_RANDOM_H
