#pragma once

#include <cstdint>

#include "pusher/words.hpp"

// Deterministic random source. Golden outputs are byte-compared across
// machines, and the standard <random> distributions are allowed to differ
// between library implementations, so everything random funnels through this
// splitmix64 generator.

namespace pusher {

struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). Modulo bias is below 2^-50 for the tiny n used here.
  uint64_t below(uint64_t n) { return next() % n; }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniformly random nonzero letter with gen_index <= rank.
  Letter letter(int rank) {
    int k = static_cast<int>(below(static_cast<uint64_t>(2 * rank)));
    return k % 2 == 0 ? k / 2 + 1 : -(k / 2 + 1);
  }

  // Uniformly random reduced word of exactly the given length.
  Word reduced_word(int rank, int len) {
    Word w;
    w.reserve(static_cast<size_t>(len));
    while (static_cast<int>(w.size()) < len) {
      Letter a = letter(rank);
      if (!w.empty() && a == inv(w.back())) continue;
      w.push_back(a);
    }
    return w;
  }

  // Random cyclically reduced word: rejection on the wraparound letter.
  Word cyclic_word(int rank, int len) {
    for (;;) {
      Word w = reduced_word(rank, len);
      if (is_cyclically_reduced(w)) return w;
    }
  }
};

}  // namespace pusher
