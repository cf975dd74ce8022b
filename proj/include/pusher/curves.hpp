#pragma once

// Simple closed curves on the punctured sphere, carried as cyclic words.
//
// classify sorts a conjugacy class into trivial, peripheral, simple
// essential, or non-simple, using the self-intersection oracle for the
// simplicity verdict. CurveClass wraps the canonical unoriented word of a
// simple essential class, optionally with a reconstruction cache holding the
// boundary crossing sequence of its taut polyline. enumerate_curves lists
// every class admitting a representative of bounded canonical length.
//
// The sphere relation costs nothing here: the fundamental group is free on
// x1..xr once the loop around the last puncture is eliminated, and a curve
// encircling a block of punctures is conjugate to the inverse of the curve
// encircling the complementary block inside that free group, so canonical
// unoriented cyclic words already identify the two descriptions of one
// embedded circle. block_word makes the identification testable letter by
// letter, and curve_around names the round curve about a puncture set.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pusher/errors.hpp"
#include "pusher/oracle.hpp"
#include "pusher/weave.hpp"
#include "pusher/words.hpp"

namespace pusher {

enum class CurveKind { Trivial, Peripheral, SimpleEssential, NonSimple };

inline const char* curve_kind_name(CurveKind k) {
  switch (k) {
    case CurveKind::Trivial: return "trivial";
    case CurveKind::Peripheral: return "peripheral";
    case CurveKind::SimpleEssential: return "simple essential";
    default: return "non-simple";
  }
}

struct Classification {
  CurveKind kind = CurveKind::Trivial;
  int puncture = 0;  // 1-based id of the enclosed puncture when Peripheral

  bool operator==(const Classification& o) const {
    return kind == o.kind && puncture == o.puncture;
  }
  bool operator!=(const Classification& o) const { return !(*this == o); }
};

inline Classification classify(const CyclicWord& c, const SurfaceSig& surf) {
  surf.validate();
  check_letters(c.letters, surf.rank());
  if (c.empty()) return {CurveKind::Trivial, 0};
  const GroupPresentation pres = GroupPresentation::of(surf);
  if (auto p = pres.peripheral_id(c)) return {CurveKind::Peripheral, *p};
  if (self_intersection(c, surf.rank()) == 0)
    return {CurveKind::SimpleEssential, 0};
  return {CurveKind::NonSimple, 0};
}

// A simple essential curve: the canonical unoriented cyclic word, plus an
// optional cache of the taut polyline's boundary crossing sequence in the
// curve's own diagram (exit and entry position on the cut-open junction disk
// boundary, per letter of the stored word). The cache is reconstruction data
// only; equality and ordering read the word alone.
struct CurveClass {
  CyclicWord word;
  std::optional<std::vector<int>> normal;

  bool operator==(const CurveClass& o) const { return word == o.word; }
  bool operator!=(const CurveClass& o) const { return word != o.word; }
  bool operator<(const CurveClass& o) const { return word < o.word; }
};

inline CurveClass curve_class(const CyclicWord& c, const SurfaceSig& surf,
                              bool with_normal = false) {
  CurveClass out;
  out.word = unoriented(c);
  const Classification k = classify(out.word, surf);
  if (k.kind != CurveKind::SimpleEssential)
    throw InputError("not a simple essential curve (" +
                     std::string(curve_kind_name(k.kind)) +
                     "): " + format_word(out.word.letters));
  if (with_normal) {
    const WeaveMap wm = build_weave(surf, {out.word});
    std::vector<int> seq;
    seq.reserve(2 * wm.comps[0].size());
    for (size_t t = 0; t < wm.comps[0].size(); ++t) {
      seq.push_back(wm.pos_out[0][t]);
      seq.push_back(wm.pos_in[0][t]);
    }
    out.normal = std::move(seq);
  }
  return out;
}

inline long geometric_intersection(const CyclicWord& a, const CurveClass& b,
                                   const SurfaceSig& surf) {
  surf.validate();
  return geometric_intersection(a, b.word, surf.rank());
}

// Boundary word of the round circle around the cyclically consecutive block
// of punctures first..last (1-based, wrapping allowed): the product of the
// puncture loops in block order, with the loop around the last puncture
// expanded through the sphere relation. Blocks of size 1 and m-1 give
// peripheral classes, so only 2 <= size <= m-2 is accepted.
inline CyclicWord block_word(int first, int last, const SurfaceSig& surf) {
  surf.validate();
  const int m = surf.rank() + 1;
  if (first < 1 || first > m || last < 1 || last > m)
    throw InputError("block endpoints must be puncture ids 1.." +
                     std::to_string(m));
  const int size = (last - first + m) % m + 1;
  if (size < 2 || size > m - 2)
    throw InputError("block of " + std::to_string(size) +
                     " punctures does not bound an essential curve");
  Word w;
  for (int k = 0; k < size; ++k) {
    const int p = (first - 1 + k) % m + 1;
    if (p < m) {
      w.push_back(p);
    } else {
      for (int g = m - 1; g >= 1; --g) w.push_back(-g);
    }
  }
  return CyclicWord(w);
}

// The round curve around a set of punctures: the ascending product of the
// puncture loops. A set containing the last puncture is replaced by its
// complement first, which keeps the product in the petal alphabet and names
// the same embedded circle from its other side.
inline CurveClass curve_around(std::vector<int> punctures,
                               const SurfaceSig& surf) {
  surf.validate();
  const int m = surf.rank() + 1;
  std::sort(punctures.begin(), punctures.end());
  punctures.erase(std::unique(punctures.begin(), punctures.end()),
                  punctures.end());
  if (!punctures.empty() &&
      (punctures.front() < 1 || punctures.back() > m))
    throw InputError("puncture ids must lie in 1.." + std::to_string(m));
  if (!punctures.empty() && punctures.back() == m) {
    std::vector<int> comp;
    int at = 0;
    for (int p = 1; p <= m; ++p) {
      if (at < static_cast<int>(punctures.size()) && punctures[at] == p)
        ++at;
      else
        comp.push_back(p);
    }
    punctures = std::move(comp);
  }
  const int size = static_cast<int>(punctures.size());
  if (size < 2 || size > m - 2)
    throw InputError("a set of " + std::to_string(size) +
                     " punctures does not bound an essential curve");
  Word w(punctures.begin(), punctures.end());
  return curve_class(CyclicWord(w), surf);
}

// Every simple essential class with a canonical cyclic word of length at most
// maxLen. Candidates are generated as cyclically reduced words whose first
// letter is minimal in the germ order (a necessary condition for the stored
// rotation), deduplicated under rotation and inversion, then filtered by the
// self-intersection oracle. Raw candidate words count against the enumeration
// budget; lengths beyond the cap are refused outright.
inline std::vector<CurveClass> enumerate_curves(const SurfaceSig& surf,
                                                int maxLen) {
  surf.validate();
  if (maxLen > kMaxEnumLen)
    throw ResourceError("curve enumeration length " + std::to_string(maxLen) +
                        " exceeds cap " + std::to_string(kMaxEnumLen));
  std::vector<CurveClass> out;
  if (maxLen < 2) return out;
  const int r = surf.rank();
  const GroupPresentation pres = GroupPresentation::of(surf);

  std::vector<Letter> alphabet;
  for (int idx = 0; idx < 2 * r; ++idx) alphabet.push_back(sigma_letter(idx));

  std::set<CyclicWord> classes;
  long used = 0;
  Word w;
  auto dfs = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      if (w.front() == inv(w.back())) return;
      if (++used > kMaxEnumBudget)
        throw ResourceError("curve enumeration budget exceeded at length " +
                            std::to_string(w.size()));
      classes.insert(unoriented(CyclicWord(w)));
      return;
    }
    for (Letter a : alphabet) {
      if (!w.empty() &&
          (a == inv(w.back()) || sigma_less(a, w.front())))
        continue;
      w.push_back(a);
      self(self, remaining - 1);
      w.pop_back();
    }
  };
  for (int len = 2; len <= maxLen; ++len) dfs(dfs, len);

  for (const CyclicWord& c : classes) {
    if (pres.peripheral_id(c)) continue;
    if (!is_primitive(c)) continue;
    if (self_intersection(c, r) != 0) continue;
    out.push_back(CurveClass{c, std::nullopt});
  }
  return out;
}

// A simplex of the curve system world: distinct classes, pairwise disjoint,
// sorted so equal multicurves compare with ==.
struct MultiCurve {
  std::vector<CurveClass> components;

  bool operator==(const MultiCurve& o) const {
    return components == o.components;
  }
  bool operator!=(const MultiCurve& o) const { return !(*this == o); }
  bool operator<(const MultiCurve& o) const {
    return std::lexicographical_compare(
        components.begin(), components.end(), o.components.begin(),
        o.components.end());
  }

  size_t size() const { return components.size(); }
};

inline MultiCurve multicurve(std::vector<CurveClass> comps,
                             const SurfaceSig& surf) {
  surf.validate();
  if (comps.empty())
    throw InputError("a multicurve needs at least one component");
  std::sort(comps.begin(), comps.end());
  for (size_t i = 0; i + 1 < comps.size(); ++i)
    if (comps[i] == comps[i + 1])
      throw InputError("duplicate multicurve component " +
                       format_word(comps[i].word.letters));
  if (static_cast<int>(comps.size()) > surf.xi() + 1)
    throw InputError("multicurve with " + std::to_string(comps.size()) +
                     " components exceeds the simplex bound " +
                     std::to_string(surf.xi() + 1));
  for (size_t i = 0; i < comps.size(); ++i)
    for (size_t j = i + 1; j < comps.size(); ++j) {
      const long x =
          geometric_intersection(comps[i].word, comps[j].word, surf.rank());
      if (x != 0)
        throw InputError("multicurve components " +
                         format_word(comps[i].word.letters) + " and " +
                         format_word(comps[j].word.letters) + " cross " +
                         std::to_string(x) + " times");
    }
  return {std::move(comps)};
}

}  // namespace pusher
