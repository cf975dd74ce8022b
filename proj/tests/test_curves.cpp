#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "pusher/curves.hpp"
#include "pusher/rng.hpp"

using namespace pusher;

namespace {

CyclicWord cw(const Word& w) { return CyclicWord(w); }

}  // namespace

TEST_CASE("classification separates the four kinds") {
  SurfaceSig s4 = sphere(4);
  CHECK(classify(cw({}), s4) == Classification{CurveKind::Trivial, 0});
  CHECK(classify(cw({1}), s4) == Classification{CurveKind::Peripheral, 1});
  CHECK(classify(cw({-2}), s4) == Classification{CurveKind::Peripheral, 2});
  // the outer puncture's loop is the inverse of the petal product
  CHECK(classify(cw({1, 2, 3}), s4) ==
        Classification{CurveKind::Peripheral, 4});
  CHECK(classify(cw({1, 2}), s4).kind == CurveKind::SimpleEssential);
  CHECK(classify(cw({1, -2}), s4).kind == CurveKind::NonSimple);
  CHECK(classify(cw({1, 2, -1, -2}), s4).kind == CurveKind::NonSimple);
  CHECK_THROWS_AS(classify(cw({4}), s4), InputError);

  SurfaceSig s5 = sphere(5);
  CHECK(classify(cw({1, 2, 3, 4}), s5) ==
        Classification{CurveKind::Peripheral, 5});
  CHECK(classify(cw({1, 3}), s5).kind == CurveKind::SimpleEssential);
  CHECK(classify(cw({4}), s5) == Classification{CurveKind::Peripheral, 4});
}

TEST_CASE("classification is blind to conjugation and inversion") {
  SplitMix64 rng(41);
  SurfaceSig s5 = sphere(5);
  for (int t = 0; t < 10000; ++t) {
    Word w = rng.cyclic_word(4, 1 + static_cast<int>(rng.below(6)));
    Word g = rng.reduced_word(4, static_cast<int>(rng.below(5)));
    CyclicWord a(w);
    CyclicWord b(conjugate(g, w));
    CHECK(a == b);
    CHECK(classify(a, s5) == classify(b, s5));
    CHECK(classify(a, s5).kind == classify(a.inversed(), s5).kind);
  }
}

TEST_CASE("curve classes accept exactly the simple essential words") {
  SurfaceSig s4 = sphere(4);
  CurveClass c = curve_class(cw({2, 1}), s4);
  CHECK(c.word == cw({1, 2}));
  CHECK(curve_class(cw({1, 2}).inversed(), s4) == c);
  CHECK_THROWS_AS(curve_class(cw({}), s4), InputError);
  CHECK_THROWS_AS(curve_class(cw({1}), s4), InputError);
  CHECK_THROWS_AS(curve_class(cw({1, 2, 3}), s4), InputError);
  CHECK_THROWS_AS(curve_class(cw({1, -2}), s4), InputError);
  CHECK_THROWS_AS(curve_class(cw({1, 2, -1, -2}), s4), InputError);
}

TEST_CASE("the polyline cache matches a fresh diagram") {
  SurfaceSig s4 = sphere(4);
  CurveClass c = curve_class(cw({1, 2}), s4, true);
  REQUIRE(c.normal.has_value());
  REQUIRE(c.normal->size() == 4);
  std::set<int> distinct(c.normal->begin(), c.normal->end());
  CHECK(distinct.size() == c.normal->size());

  WeaveMap wm = build_weave(s4, {c.word});
  for (size_t t = 0; t < 2; ++t) {
    CHECK((*c.normal)[2 * t] == wm.pos_out[0][t]);
    CHECK((*c.normal)[2 * t + 1] == wm.pos_in[0][t]);
  }
  for (int p : *c.normal) {
    CHECK(p >= 0);
    CHECK(p < static_cast<int>(wm.points.size()));
  }

  // the cache is opt-in and never consulted by equality
  CurveClass bare = curve_class(cw({1, 2}), s4);
  CHECK_FALSE(bare.normal.has_value());
  CHECK(bare == c);
}

TEST_CASE("enumeration reproduces the frozen desk-scale slices") {
  SurfaceSig s4 = sphere(4);
  CHECK(enumerate_curves(s4, 1).empty());

  auto at2 = enumerate_curves(s4, 2);
  REQUIRE(at2.size() == 3);
  CHECK(at2[0].word == cw({1, 2}));
  CHECK(at2[1].word == cw({1, 3}));
  CHECK(at2[2].word == cw({2, 3}));

  SurfaceSig s5 = sphere(5);
  auto five2 = enumerate_curves(s5, 2);
  CHECK(five2.size() == 6);

  // every pocket pair of punctures is enumerated once length 3 arrives; the
  // four pairs holding the outer puncture canonicalize to petal triples
  auto five3 = enumerate_curves(s5, 3);
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      CurveClass pair = curve_around({i, j}, s5);
      CHECK(std::find(five3.begin(), five3.end(), pair) != five3.end());
      if (j <= 4)
        CHECK(std::find(five2.begin(), five2.end(), pair) != five2.end());
    }

  CHECK_THROWS_AS(enumerate_curves(s4, kMaxEnumLen + 1), ResourceError);
}

TEST_CASE("every enumerated class is simple essential and canonical") {
  for (auto [m, len] : {std::pair{4, 6}, std::pair{5, 4}}) {
    SurfaceSig s = sphere(m);
    auto pool = enumerate_curves(s, len);
    CHECK(pool.size() >= 3);
    for (const CurveClass& c : pool) {
      CHECK(self_intersection(c.word, s.rank()) == 0);
      CHECK(classify(c.word, s).kind == CurveKind::SimpleEssential);
      CHECK(c.word == unoriented(c.word));
      CHECK(is_primitive(c.word));
      CHECK(static_cast<int>(c.word.size()) <= len);
    }
    CHECK(std::is_sorted(pool.begin(), pool.end()));
  }
}

TEST_CASE("complementary blocks read the same class") {
  // the classic identity: the pocket around punctures 3 and 4 is the pocket
  // around 1 and 2 seen from the other side
  SurfaceSig s4 = sphere(4);
  CHECK(unoriented(block_word(3, 4, s4)) == cw({1, 2}));
  CHECK(curve_around({3, 4}, s4).word == cw({1, 2}));

  for (int m = 4; m <= 6; ++m) {
    SurfaceSig s = sphere(m);
    for (int first = 1; first <= m; ++first)
      for (int size = 2; size <= m - 2; ++size) {
        const int last = (first - 1 + size - 1) % m + 1;
        const int cfirst = last % m + 1;
        const int clast = (first + m - 2) % m + 1;
        CyclicWord a = block_word(first, last, s);
        CyclicWord b = block_word(cfirst, clast, s);
        CHECK(unoriented(a) == unoriented(b));

        std::vector<int> ids;
        for (int k = 0; k < size; ++k) ids.push_back((first - 1 + k) % m + 1);
        CHECK(curve_around(ids, s).word == unoriented(a));
      }
  }

  CHECK_THROWS_AS(block_word(1, 1, sphere(4)), InputError);
  CHECK_THROWS_AS(block_word(1, 3, sphere(4)), InputError);
  CHECK_THROWS_AS(curve_around({1}, sphere(4)), InputError);
  CHECK_THROWS_AS(curve_around({0, 2}, sphere(4)), InputError);
}

TEST_CASE("intersection is symmetric across the enumerated pool") {
  SurfaceSig s4 = sphere(4);
  auto pool = enumerate_curves(s4, 6);
  REQUIRE(pool.size() >= 2);
  SplitMix64 rng(43);
  for (int t = 0; t < 10000; ++t) {
    const CurveClass& a = pool[rng.below(pool.size())];
    const CurveClass& b = pool[rng.below(pool.size())];
    const long ab = geometric_intersection(a.word, b, s4);
    CHECK(ab == geometric_intersection(b.word, a, s4));
    if (a == b) CHECK(ab == 0);
  }
}

TEST_CASE("multicurves hold disjoint distinct classes") {
  SurfaceSig s5 = sphere(5);
  CurveClass inner = curve_class(cw({1, 2}), s5);
  CurveClass outer = curve_class(cw({1, 2, 3}), s5);
  CurveClass off = curve_class(cw({3, 4}), s5);

  MultiCurve pants = multicurve({outer, inner}, s5);
  REQUIRE(pants.size() == 2);
  CHECK(pants.components[0] == inner);
  CHECK(pants == multicurve({inner, outer}, s5));
  CHECK(multicurve({inner}, s5).size() == 1);
  CHECK(multicurve({inner, off}, s5).size() == 2);

  CHECK_THROWS_AS(multicurve({}, s5), InputError);
  CHECK_THROWS_AS(multicurve({inner, inner}, s5), InputError);
  CHECK_THROWS_AS(multicurve({curve_class(cw({2, 3}), s5), inner}, s5),
                  InputError);
}
