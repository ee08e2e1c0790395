#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ordfree/group.hpp"

namespace ordfree {

/// All elements of `g` within the given bounds, in a fixed deterministic
/// order with the identity first.
///
///   Integers      0, +1, -1, +2, -2, ... up to exponent_bound
///   KleinBottle   pairs (m, n) with both exponents in that order
///   DirectProduct cartesian product of child universes, first child
///                 outermost
///   FreeProduct   by syllable count, factor sequences lexicographic,
///                 syllable elements from syllable_candidates
///
/// For a FreeProduct the universe is exactly the reduced words with at
/// most max_syllables syllables whose syllable elements lie in the child
/// candidate lists.
std::vector<Element> element_universe(const Group& g, int max_syllables,
                                      int exponent_bound);

/// Nonidentity elements of a factor usable as word syllables, in the same
/// deterministic order. Composite factors are capped at two inner
/// syllables to keep candidate lists finite and small.
std::vector<Element> syllable_candidates(const Group& factor,
                                         int max_syllables,
                                         int exponent_bound);

/// Deterministic seeded sampler. Uses raw engine output (not
/// std::uniform_int_distribution) so sequences are identical across
/// platforms.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(rng_() % n);
  }

  template <typename T>
  const T& pick(const std::vector<T>& pool) {
    return pool[index(pool.size())];
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ordfree
