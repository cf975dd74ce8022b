#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "pusher/filling.hpp"
#include "pusher/rng.hpp"

using namespace pusher;

namespace {

CyclicWord cw(const Word& w) { return CyclicWord(w); }

std::set<CyclicWord> component_words(const MultiCurve& mc) {
  std::set<CyclicWord> out;
  for (const CurveClass& u : mc.components) out.insert(u.word);
  return out;
}

std::set<CyclicWord> classes(const SurfaceSig& surf,
                             const std::vector<Word>& ws) {
  std::set<CyclicWord> out;
  for (const Word& w : ws) out.insert(curve_class(cw(w), surf).word);
  return out;
}

}  // namespace

TEST_CASE("complement faces describe the taut picture of a loop") {
  const SurfaceSig s4 = sphere(4);
  CHECK_THROWS_AS(complement_faces(CyclicWord(), s4), InputError);

  const ComplementReport one = complement_faces(cw({1}), s4);
  CHECK(one.euler_ok);
  REQUIRE(one.regions.size() == 2);
  CHECK(one.regions[0].punctures == std::vector<int>{2, 3, 4});
  CHECK(one.regions[0].cls == RegionClass::Other);
  CHECK(one.regions[1].punctures == std::vector<int>{1});
  CHECK(one.regions[1].cls == RegionClass::OncePuncturedDisk);

  // a loop around two punctures splits the other two off on its far side
  const ComplementReport two = complement_faces(cw({1, 2}), s4);
  REQUIRE(two.regions.size() == 2);
  CHECK(two.regions[0].punctures == std::vector<int>{3, 4});
  CHECK(two.regions[1].punctures == std::vector<int>{1, 2});
  CHECK(two.regions[0].cls == RegionClass::Other);
  CHECK(two.regions[1].cls == RegionClass::Other);

  // the figure eight around punctures 1 and 2 pinches them off separately
  const ComplementReport fig = complement_faces(cw({1, -2}), s4);
  REQUIRE(fig.regions.size() == 3);
  CHECK(fig.regions[0].punctures == std::vector<int>{3, 4});
  CHECK(fig.regions[1].cls == RegionClass::OncePuncturedDisk);
  CHECK(fig.regions[2].cls == RegionClass::OncePuncturedDisk);
}

TEST_CASE("complement combinatorics stay consistent on random loops") {
  const SurfaceSig s4 = sphere(4);
  SplitMix64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const CyclicWord c = cw(rng.cyclic_word(3, 1 + (int)rng.below(6)));
    if (c.empty()) continue;
    CAPTURE(format_word(c.letters));
    const ComplementReport rep = complement_faces(c, s4);
    REQUIRE(rep.euler_ok);
    std::set<int> seen;
    for (const RegionReport& r : rep.regions) {
      REQUIRE(r.boundary_circles == (int)r.circle_classes.size());
      for (int p : r.punctures) REQUIRE(seen.insert(p).second);
    }
    REQUIRE(seen == std::set<int>{1, 2, 3, 4});
  }
}

TEST_CASE("filling verdicts match the small catalog") {
  const SurfaceSig s4 = sphere(4);

  const FillingVerdict fig = is_filling(cw({1, -2, 3, 2}), s4);
  CHECK(fig.filling);
  CHECK(!fig.witness);
  CHECK(!fig.marked_witness);
  CHECK(is_pseudo_anosov(cw({1, -2, 3, 2}), s4));
  CHECK(is_pseudo_anosov(cw({2, -3, 1, 3}), s4));

  const FillingVerdict single = is_filling(cw({1}), s4);
  CHECK(!single.filling);
  REQUIRE(single.witness);
  CHECK(component_words(*single.witness) == classes(s4, {{2, 3}}));
  CHECK(!is_pseudo_anosov(cw({1}), s4));

  // the verdict sees the conjugacy class, so powers of a simple loop and
  // peripheral powers stay non-filling
  const FillingVerdict cube = is_filling(cw({1, 1, 1}), s4);
  CHECK(!cube.filling);
  CHECK(component_words(*cube.witness) == classes(s4, {{2, 3}}));

  const FillingVerdict outer = is_filling(cw({-3, -2, -1, -3, -2, -1}), s4);
  CHECK(!outer.filling);
  CHECK(component_words(*outer.witness) == classes(s4, {{1, 2}}));

  const FillingVerdict pair = is_filling(cw({1, 2}), s4);
  CHECK(!pair.filling);
  CHECK(component_words(*pair.witness) == classes(s4, {{1, 2}}));

  const FillingVerdict fig8 = is_filling(cw({1, -2}), s4);
  CHECK(!fig8.filling);
  CHECK(component_words(*fig8.witness) == classes(s4, {{1, 2}}));

  const FillingVerdict comm = is_filling(cw({1, 2, -1, -2}), s4);
  CHECK(!comm.filling);
  CHECK(component_words(*comm.witness) == classes(s4, {{1, 2}}));

  CHECK_THROWS_AS(is_filling(CyclicWord(), s4), InputError);
}

TEST_CASE("the verdict is an inversion invariant and the witness misses") {
  const SurfaceSig s4 = sphere(4);
  SplitMix64 rng(51);
  int fill = 0, nonfill = 0;
  for (int i = 0; i < 400; ++i) {
    const CyclicWord c = cw(rng.cyclic_word(3, 1 + (int)rng.below(6)));
    if (c.empty()) continue;
    CAPTURE(format_word(c.letters));
    const FillingVerdict v = is_filling(c, s4);
    const FillingVerdict vi = is_filling(cw(inverse(c.letters)), s4);
    REQUIRE(v.filling == vi.filling);
    if (v.filling) {
      ++fill;
      REQUIRE(!v.witness);
      continue;
    }
    ++nonfill;
    REQUIRE(v.witness);
    REQUIRE(!v.witness->components.empty());
    for (const CurveClass& u : v.witness->components) {
      REQUIRE(classify(u.word, s4).kind == CurveKind::SimpleEssential);
      REQUIRE(geometric_intersection(c, u, s4) == 0);
    }
  }
  CHECK(fill > 50);
  CHECK(nonfill > 50);
}

TEST_CASE("a filling loop crosses every short curve on the sphere") {
  const SurfaceSig s4 = sphere(4);
  const std::vector<CurveClass> all = enumerate_curves(s4, 8);
  REQUIRE(all.size() == 18);

  const CyclicWord fig({1, -2, 3, 2});
  for (const CurveClass& u : all) {
    CAPTURE(format_word(u.word.letters));
    REQUIRE(geometric_intersection(fig, u, s4) > 0);
  }

  // while a non-filling loop misses exactly its supporting boundary
  const CyclicWord off({1, -2});
  std::vector<CyclicWord> missed;
  for (const CurveClass& u : all)
    if (geometric_intersection(off, u, s4) == 0) missed.push_back(u.word);
  REQUIRE(missed.size() == 1);
  CHECK(missed[0] == curve_class(cw({1, 2}), s4).word);
}

TEST_CASE("the marked witness is the boundary the push fixes") {
  const SurfaceSig s4 = sphere(4);
  const SurfaceSig s4m = sphere(4, true);

  // spellings chosen so the catalog covers a plain petal, petals touching
  // the slit on either side, a simple two-petal loop, a figure eight, a
  // commutator, and a peripheral square
  const std::vector<std::pair<Word, std::vector<Word>>> catalog = {
      {{1}, {{2, 3, 4}}},
      {{2}, {{1, 2, 3, 4, -2}}},
      {{3}, {{1, 2, 3, 4, -3}}},
      {{1, 1, 1}, {{2, 3, 4}}},
      {{1, 2}, {{1, 2}, {3, 4}}},
      {{1, -2}, {{3, 4}}},
      {{1, 2, -1, -2}, {{3, 4}}},
      {{-3, -2, -1, -3, -2, -1}, {{1, 2, 3, 4, 2, 3, -4, -3, -2}}},
  };
  for (const auto& [loop, expect] : catalog) {
    CAPTURE(format_word(loop));
    const CyclicWord c = cw(loop);
    const MultiCurve mw = marked_witness(c, s4);
    CHECK(component_words(mw) == classes(s4m, expect));
    // the witness is adapted to the stored spelling; pushing a different
    // rotation of the loop would fix a conjugate translate instead
    const PushMap h = push(c.letters, s4m);
    for (const CurveClass& u : mw.components) REQUIRE(apply_push(h, u) == u);
  }

  CHECK_THROWS_AS(marked_witness(cw({1, -2, 3, 2}), s4), InputError);
  CHECK_THROWS_AS(marked_witness(CyclicWord(), s4), InputError);
  CHECK_THROWS_AS(marked_witness(cw({4}), s4), InputError);
  CHECK_THROWS_AS(marked_witness(cw({1}), s4m), ContractError);
}

TEST_CASE("every non-filling loop has a push-fixed marked witness") {
  const SurfaceSig s4 = sphere(4);
  const SurfaceSig s4m = sphere(4, true);
  SplitMix64 rng(77);
  int comps = 0;
  for (int i = 0; i < 250; ++i) {
    const CyclicWord c = cw(rng.cyclic_word(3, 1 + (int)rng.below(6)));
    if (c.empty()) continue;
    CAPTURE(format_word(c.letters));
    const FillingVerdict v = is_filling(c, s4);
    if (v.filling) {
      REQUIRE(!v.marked_witness);
      continue;
    }
    REQUIRE(v.marked_witness);
    REQUIRE(!v.marked_witness->components.empty());
    const PushMap h = push(c.letters, s4m);
    for (const CurveClass& u : v.marked_witness->components) {
      ++comps;
      REQUIRE(apply_push(h, u) == u);
    }
  }
  CHECK(comps > 100);
}

TEST_CASE("a filling push moves every short marked class") {
  const SurfaceSig s4m = sphere(4, true);
  const std::vector<CurveClass> all = enumerate_curves(s4m, 6);
  REQUIRE(all.size() == 62);

  const PushMap fig = push({1, -2, 3, 2}, s4m);
  for (const CurveClass& u : all) {
    CAPTURE(format_word(u.word.letters));
    REQUIRE(apply_push(fig, u) != u);
  }

  // a non-filling push fixes exactly its witness among the short classes
  const PushMap off = push({1, -2}, s4m);
  std::vector<CyclicWord> fixed;
  for (const CurveClass& u : all)
    if (apply_push(off, u) == u) fixed.push_back(u.word);
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0] == curve_class(cw({3, 4}), s4m).word);
}

TEST_CASE("screens certify subgroups and report offenders once") {
  const SurfaceSig s4 = sphere(4);

  const ScreenReport petals = screen_purely_pA({{1}, {2}}, 2, s4);
  CHECK(petals.depth == 2);
  CHECK(petals.classes_tested == 6);
  CHECK(!petals.certified());
  REQUIRE(petals.offenders.size() == 6);
  CHECK(petals.offenders[0].spelled == Word{1});
  CHECK(petals.offenders[0].cls == cw({1}));
  CHECK(component_words(petals.offenders[0].witness) == classes(s4, {{2, 3}}));

  const ScreenReport one = screen_purely_pA({{1, -2, 3, 2}}, 1, s4);
  CHECK(one.classes_tested == 1);
  CHECK(one.certified());

  const ScreenReport pure =
      screen_purely_pA({{1, -2, 3, 2}, {2, -3, 1, 3}}, 4, s4);
  CHECK(pure.classes_tested == 25);
  CHECK(pure.certified());

  CHECK_THROWS_AS(screen_purely_pA({{1}}, -1, s4), InputError);
  CHECK_THROWS_AS(screen_purely_pA({{1}}, 9, s4), ResourceError);
  CHECK_THROWS_AS(screen_purely_pA({{1, -1}}, 2, s4), InputError);
  CHECK_THROWS_AS(screen_purely_pA({{4}}, 2, s4), InputError);
}
