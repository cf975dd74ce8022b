#pragma once

// Deciding whether a loop fills its sphere.
//
// A nontrivial free homotopy class fills when every complementary region of
// its taut realization is a disk or a once-punctured disk. When it does not
// fill, the loop stays inside a proper supporting subsurface, and the
// essential boundary circles of the non-disk regions witness that: each one
// can be realized disjoint from the loop. Peripheral powers are the
// degenerate case where every region boundary is trivial or peripheral;
// their witness is a curve around two punctures on the far side of the loop.
//
// Invariance questions live on the marked model, because the push drags the
// marked point along the loop. The smallest subsurface carrying the based
// loop contains both the free realization and the track of the moving
// point, and its boundary is the marked witness: away from the marked point
// it consists of circles of the free complement read verbatim, while the
// region holding the marked point is slit along the track, which at the
// word level multiplies a rotation of that region's circle word by the
// inverse marked peripheral word.
//
// The screen enumerates reduced words over a generating set and reports
// every non-filling conjugacy class it meets, one entry per class with the
// first spelling that reached it. An empty report certifies the generated
// subgroup as purely pseudo-Anosov out to the requested depth.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pusher/curves.hpp"
#include "pusher/errors.hpp"
#include "pusher/push.hpp"
#include "pusher/weave.hpp"

namespace pusher {

inline ComplementReport complement_faces(const CyclicWord& gamma,
                                         const SurfaceSig& surf) {
  if (gamma.empty())
    throw InputError("the trivial class has no taut representative");
  return complement_faces(surf, std::vector<CyclicWord>{gamma});
}

struct FillingVerdict {
  bool filling = false;
  std::optional<MultiCurve> witness;         // base-model boundary classes
  std::optional<MultiCurve> marked_witness;  // push-invariant lifts of them
};

// Boundary of the smallest subsurface carrying the based pushing loop, as
// classes on the marked model. Candidate words come from the non-disk
// regions of the verbatim complement: each circle read as is, and for the
// region holding the marked point every rotation of its circle word times
// the inverse marked peripheral word, which is the slit along the track of
// the moving point. A candidate survives when the push fixes its class and
// it is a simple essential curve disjoint from the loop; wrong rotations
// and wrong sides fail one of those checks.
inline MultiCurve marked_witness(const CyclicWord& gamma,
                                 const SurfaceSig& surf) {
  surf.validate();
  if (surf.marked)
    throw ContractError("pushing loops live on the base model");
  if (gamma.empty()) throw InputError("the trivial class has no witness");
  check_letters(gamma.letters, surf.rank());

  const SurfaceSig msurf = sphere(surf.punctures, true);
  const ComplementReport rep = complement_faces(gamma, msurf);
  const int zid = msurf.rank() + 1;
  auto holds_z = [&](const RegionReport& r) {
    return std::find(r.punctures.begin(), r.punctures.end(), zid) !=
           r.punctures.end();
  };

  // the region holding the marked point loses that point to the slit, so it
  // only obstructs filling when at least two other punctures remain in it
  bool fills = true;
  for (const RegionReport& r : rep.regions)
    if (static_cast<int>(r.punctures.size()) - (holds_z(r) ? 1 : 0) >= 2)
      fills = false;
  if (fills) throw InputError("a filling loop has no invariant boundary");

  Word xi_inv;
  for (int j = 1; j <= msurf.rank(); ++j) xi_inv.push_back(j);

  std::vector<CyclicWord> raw;
  std::set<CyclicWord> offered;
  auto offer = [&](const Word& w) {
    const CyclicWord cand = unoriented(CyclicWord(w));
    if (!cand.empty() && offered.insert(cand).second) raw.push_back(cand);
  };
  for (const RegionReport& r : rep.regions) {
    const bool zface = holds_z(r);
    const int rest = static_cast<int>(r.punctures.size()) - (zface ? 1 : 0);
    for (const CyclicWord& c : r.circle_classes) {
      if (r.punctures.size() >= 2) offer(c.letters);
      if (!zface || rest < 2) continue;
      for (const CyclicWord& u : {c, CyclicWord(inverse(c.letters))})
        for (size_t k = 0; k < u.letters.size(); ++k) {
          Word rot(u.letters.begin() + static_cast<long>(k), u.letters.end());
          rot.insert(rot.end(), u.letters.begin(),
                     u.letters.begin() + static_cast<long>(k));
          offer(concat(rot, xi_inv));
        }
    }
  }

  // the stored spelling is an arbitrary rotation of the based loop, while
  // the realization is based where its strands pass the access gap; scan
  // rotations for one whose push fixes candidates realized disjoint from
  // the verbatim lift, then carry the survivors back to the stored spelling
  // with the push of the rotation prefix, which conjugates between the two
  std::vector<CurveClass> comps;
  for (size_t r = 0; r < gamma.letters.size() && comps.empty(); ++r) {
    Word rot(gamma.letters.begin() + static_cast<long>(r),
             gamma.letters.end());
    rot.insert(rot.end(), gamma.letters.begin(),
               gamma.letters.begin() + static_cast<long>(r));
    const PushMap hr = push(rot, msurf);
    std::vector<CyclicWord> kept;
    for (const CyclicWord& c : raw) {
      if (unoriented(hr.apply_class(c)) != c) continue;
      if (classify(c, msurf).kind != CurveKind::SimpleEssential) continue;
      if (geometric_intersection(gamma, c, msurf.rank()) != 0) continue;
      kept.push_back(c);
    }
    if (kept.empty()) continue;
    PushMap prefix = push_identity(msurf);
    for (size_t j = 0; j < r; ++j)
      prefix = compose(prefix, detail::push_letter(gamma.letters[j], msurf));
    std::set<CurveClass> parts;
    for (const CyclicWord& c : kept)
      parts.insert(curve_class(unoriented(prefix.apply_class(c)), msurf));
    comps.assign(parts.begin(), parts.end());
  }
  if (comps.empty())
    throw ContractError(
        "no push-invariant boundary found for a non-filling loop");
  return multicurve(comps, msurf);
}

inline FillingVerdict is_filling(const CyclicWord& gamma,
                                 const SurfaceSig& surf) {
  const ComplementReport rep = complement_faces(gamma, surf);
  if (rep.all_disks_or_once_punctured()) return {true, std::nullopt};

  std::set<CurveClass> parts;
  for (const RegionReport& r : rep.regions) {
    if (r.cls == RegionClass::Disk || r.cls == RegionClass::OncePuncturedDisk)
      continue;
    for (const CyclicWord& c : r.circle_classes)
      if (classify(c, surf).kind == CurveKind::SimpleEssential)
        parts.insert(curve_class(c, surf));
  }
  if (parts.empty()) {
    // every non-disk region is bounded by trivial or peripheral circles,
    // so the loop is a peripheral power; any curve around two punctures
    // away from its cusp misses it
    const auto pid =
        GroupPresentation::of(surf).peripheral_id(
            CyclicWord(primitive_root(gamma).first));
    if (!pid)
      throw ContractError("non-filling class yielded no witness boundary");
    const int p = surf.punctures;
    const int c1 = *pid % p + 1;
    const int c2 = c1 % p + 1;
    parts.insert(curve_around({c1, c2}, surf));
  }
  FillingVerdict v;
  v.filling = false;
  v.witness =
      multicurve(std::vector<CurveClass>(parts.begin(), parts.end()), surf);
  if (!surf.marked) v.marked_witness = marked_witness(gamma, surf);
  return v;
}

inline bool is_pseudo_anosov(const CyclicWord& gamma, const SurfaceSig& surf) {
  return is_filling(gamma, surf).filling;
}

struct ScreenOffender {
  Word spelled;      // letters index the generating set
  CyclicWord cls;    // the non-filling conjugacy class reached
  MultiCurve witness;
};

struct ScreenReport {
  int depth = 0;
  std::vector<Word> generators;
  long classes_tested = 0;
  std::vector<ScreenOffender> offenders;

  bool certified() const { return offenders.empty(); }
};

inline ScreenReport screen_purely_pA(const std::vector<Word>& generators,
                                     int depth, const SurfaceSig& surf) {
  surf.validate();
  if (depth < 0) throw InputError("negative screen depth");
  if (depth > kMaxScreenDepth)
    throw ResourceError("screen depth " + std::to_string(depth) +
                        " exceeds the cap " +
                        std::to_string(kMaxScreenDepth));
  ScreenReport rep;
  rep.depth = depth;
  for (const Word& g : generators) {
    Word r = reduce(g);
    check_letters(r, surf.rank());
    if (r.empty()) throw InputError("trivial generator in screen input");
    rep.generators.push_back(std::move(r));
  }

  const int n = static_cast<int>(rep.generators.size());
  std::set<CyclicWord> seen;
  Word spelled;
  // shortest words first, letters in sigma order within each length, so the
  // report is deterministic and offenders appear at their first spelling
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      Word elem;
      for (Letter a : spelled) {
        const Word& g = rep.generators[gen_index(a) - 1];
        elem = concat(elem, a > 0 ? g : inverse(g));
      }
      if (elem.empty()) return;  // trivial in the ambient group
      const CyclicWord cls = unoriented(CyclicWord(elem));
      if (!seen.insert(cls).second) return;
      ++rep.classes_tested;
      FillingVerdict v = is_filling(cls, surf);
      if (!v.filling) rep.offenders.push_back({spelled, cls, *v.witness});
      return;
    }
    for (int g = 1; g <= n; ++g)
      for (Letter a : {Letter(g), Letter(-g)}) {
        if (!spelled.empty() && spelled.back() == -a) continue;
        spelled.push_back(a);
        self(self, remaining - 1);
        spelled.pop_back();
      }
  };
  for (int len = 1; len <= depth; ++len) rec(rec, len);
  return rep;
}

}  // namespace pusher
