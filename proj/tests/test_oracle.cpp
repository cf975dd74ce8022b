#include <catch2/catch_amalgamated.hpp>

#include "pusher/oracle.hpp"
#include "pusher/rng.hpp"

using namespace pusher;

namespace {

CyclicWord cw(const Word& w) { return CyclicWord(w); }

}  // namespace

TEST_CASE("intersection numbers of the standard pocket curves") {
  // on the 4-punctured sphere (rank 3) the pocket curves pairwise cross twice
  CHECK(geometric_intersection(cw({1, 2}), cw({2, 3}), 3) == 2);
  CHECK(geometric_intersection(cw({1, 2}), cw({1, 3}), 3) == 2);
  CHECK(geometric_intersection(cw({1, 3}), cw({2, 3}), 3) == 2);

  // the {3,4} pocket curve is the {1,2} curve from the other side
  Word other = concat({3}, inverse({1, 2, 3}));
  CHECK(unoriented(cw(other)) == unoriented(cw({1, 2})));
  CHECK(geometric_intersection(cw({1, 2}), cw(other), 3) == 0);
}

TEST_CASE("intersection numbers on five punctures") {
  // disjoint pockets {1,2} and {3,4}
  CHECK(geometric_intersection(cw({1, 2}), cw({3, 4}), 4) == 0);
  // nested pockets {1,2} inside {1,2,3}
  CHECK(geometric_intersection(cw({1, 2}), cw({1, 2, 3}), 4) == 0);
  // overlapping pockets
  CHECK(geometric_intersection(cw({1, 2}), cw({2, 3}), 4) == 2);
  CHECK(geometric_intersection(cw({1, 2}), cw({2, 3, 4}), 4) == 2);
  CHECK(geometric_intersection(cw({1, 2, 3}), cw({3, 4}), 4) == 2);
}

TEST_CASE("peripheral classes meet nothing") {
  SplitMix64 rng(29);
  std::vector<CyclicWord> peripherals{cw({2}), cw({1, 2, 3})};
  for (int t = 0; t < 60; ++t) {
    Word w = rng.cyclic_word(3, 1 + static_cast<int>(rng.below(7)));
    if (cw(w).empty()) continue;
    for (const CyclicWord& p : peripherals) {
      CHECK(geometric_intersection(p, cw(w), 3) == 0);
      CHECK(geometric_intersection(cw(w), p, 3) == 0);
    }
  }
  CHECK(self_intersection(cw({2}), 3) == 0);
  CHECK(self_intersection(cw({1, 2, 3}), 3) == 0);
}

TEST_CASE("parallel classes count zero") {
  CHECK(geometric_intersection(cw({1, 2}), cw({1, 2}), 3) == 0);
  CHECK(geometric_intersection(cw({1, 2}), cw({1, 2}).inversed(), 3) == 0);
  CHECK(geometric_intersection(cw(power({1, 2}, 2)), cw(power({1, 2}, 3)), 3) ==
        0);
  CHECK(geometric_intersection(cw(power({1, 2}, 2)), cw(inverse(power({1, 2}, 3))),
                               3) == 0);
}

TEST_CASE("self-intersections of short classes") {
  CHECK(self_intersection(cw({1, 2}), 3) == 0);
  CHECK(self_intersection(cw({1, 2, 3}), 4) == 0);
  // the mixed-sign pocket word is the one-crossing figure eight
  CHECK(self_intersection(cw({1, -2}), 3) == 1);
  CHECK(self_intersection(cw({1, -3}), 3) == 1);
  // the commutator of two petal loops: four excursions, three crossings
  // (hand count: rotations give four sliding classes, three of them linked)
  CHECK(self_intersection(cw({1, 2, -1, -2}), 3) == 3);
  CHECK(self_intersection(cw({1, 2, -1, -2}), 2) == 3);
}

TEST_CASE("powers scale intersection counts") {
  // parallel strands multiply pairwise crossings
  CHECK(geometric_intersection(cw(power({1, 2}, 2)), cw({2, 3}), 3) == 4);
  CHECK(geometric_intersection(cw(power({1, 2}, 2)), cw(power({2, 3}, 3)), 3) ==
        12);
  // k parallel strands of a simple core close up with k-1 crossings
  CHECK(self_intersection(cw(power({1, 2}, 2)), 3) == 1);
  CHECK(self_intersection(cw(power({1, 2}, 3)), 3) == 2);
  CHECK(self_intersection(cw(power({1, -2}, 2)), 3) == 5);

  SplitMix64 rng(31);
  for (int t = 0; t < 40; ++t) {
    CyclicWord a(rng.cyclic_word(3, 2 + static_cast<int>(rng.below(4))));
    CyclicWord b(rng.cyclic_word(3, 2 + static_cast<int>(rng.below(4))));
    if (a.empty() || b.empty()) continue;
    long base = geometric_intersection(a, b, 3);
    CHECK(geometric_intersection(cw(power(a.letters, 2)), b, 3) == 2 * base);
  }
}

TEST_CASE("intersection is symmetric and orientation blind") {
  SplitMix64 rng(37);
  for (int t = 0; t < 120; ++t) {
    CyclicWord a(rng.cyclic_word(3, 1 + static_cast<int>(rng.below(6))));
    CyclicWord b(rng.cyclic_word(3, 1 + static_cast<int>(rng.below(6))));
    if (a.empty() || b.empty()) continue;
    long ab = geometric_intersection(a, b, 3);
    CHECK(geometric_intersection(b, a, 3) == ab);
    CHECK(geometric_intersection(a.inversed(), b, 3) == ab);
    CHECK(geometric_intersection(a, b.inversed(), 3) == ab);
    CHECK(self_intersection(a, 3) == self_intersection(a.inversed(), 3));
  }
}

TEST_CASE("oracle input validation") {
  CHECK_THROWS_AS(geometric_intersection(cw({}), cw({1, 2}), 3), InputError);
  CHECK_THROWS_AS(self_intersection(cw({1, -1}), 3), InputError);
  CHECK_THROWS_AS(geometric_intersection(cw({1, 4}), cw({1, 2}), 3), InputError);
}
