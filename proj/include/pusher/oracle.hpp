#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "pusher/union_find.hpp"
#include "pusher/words.hpp"

// Geometric (minimal) intersection numbers from linked pairs of ends.
//
// A closed curve lifts to the universal cover of the wedge as a family of
// bi-infinite periodic lines, and two lines cross iff their endpoint pairs
// alternate on the circle at infinity. A configuration (i, j) places one
// lift of each curve through a common vertex, reading the rotations starting
// at letters i and j. Sliding the common vertex along a shared subpath turns
// one crossing locus into a chain of configurations:
//     (i, j) ~ (i+1, j+1)  when the lines share the next edge forwards,
//     (i, j) ~ (i+1, j-1)  when they share it in opposite directions.
// Each equivalence class of linked configurations is one crossing of the
// projected curves, so counting classes gives the minimum intersection
// number over the homotopy classes. Both inputs are reduced to primitive
// cores first; multiplicities scale the count afterwards.

namespace pusher {

namespace detail {

// Number of crossing loci between the lines of two primitive cyclic words.
// With self = true both words are the same object and the grid additionally
// identifies (i, j) with (j, i); the diagonal pairs one line with itself and
// is skipped.
inline long linked_config_classes(const Word& a, const Word& b, int rank,
                                  bool self) {
  const int p = static_cast<int>(a.size());
  const int q = static_cast<int>(b.size());
  std::vector<Ray> afwd, abwd, bfwd, bbwd;
  for (int i = 0; i < p; ++i) {
    Word r = rotated(a, i);
    afwd.push_back(Ray({}, r));
    abwd.push_back(Ray({}, inverse(r)));
  }
  for (int j = 0; j < q; ++j) {
    Word r = rotated(b, j);
    bfwd.push_back(Ray({}, r));
    bbwd.push_back(Ray({}, inverse(r)));
  }

  auto id = [&](int i, int j) { return i * q + j; };
  UnionFind uf(p * q);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      if (self && i == j) continue;
      if (a[i] == b[j]) {
        int ni = (i + 1) % p, nj = (j + 1) % q;
        if (self && ni == nj)
          throw ContractError("sliding chain entered the diagonal");
        uf.unite(id(i, j), id(ni, nj));
      }
      int jm = (j + q - 1) % q;
      if (a[i] == inv(b[jm])) {
        int ni = (i + 1) % p;
        if (self && ni == jm)
          throw ContractError("sliding chain entered the diagonal");
        uf.unite(id(i, j), id(ni, jm));
      }
      if (self) uf.unite(id(i, j), id(j, i));
    }
  }

  // Linkage must be constant along a sliding class: the configurations of a
  // class describe one pair of lines up to a deck translation.
  std::unordered_map<int, int> verdict;  // root -> 0/1
  long crossings = 0;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      if (self && i == j) continue;
      bool linked =
          ends_linked(afwd[i], abwd[i], bfwd[j], bbwd[j], rank);
      int root = uf.find(id(i, j));
      auto it = verdict.find(root);
      if (it == verdict.end()) {
        verdict.emplace(root, linked ? 1 : 0);
        if (linked) ++crossings;
      } else if (it->second != (linked ? 1 : 0)) {
        throw ContractError("linkage not constant on a sliding class");
      }
    }
  }
  return crossings;
}

}  // namespace detail

// Minimal intersection number of two free homotopy classes of closed curves.
// Classes sharing the same unoriented core ride as parallel lanes; they can
// be made disjoint exactly when the core is simple, and otherwise every core
// self-crossing forces two crossings per lane pair as the bundle passes
// through itself.
inline long geometric_intersection(const CyclicWord& a, const CyclicWord& b,
                                   int rank) {
  if (a.empty() || b.empty())
    throw InputError("trivial class has no curve representative");
  check_letters(a.letters, rank);
  check_letters(b.letters, rank);
  auto [ra, ka] = primitive_root(a);
  auto [rb, kb] = primitive_root(b);
  CyclicWord ca(ra), cb(rb);
  if (unoriented(ca) == unoriented(cb)) {
    long core =
        detail::linked_config_classes(ca.letters, ca.letters, rank, true);
    return 2L * ka * kb * core;
  }
  return static_cast<long>(ka) * kb *
         detail::linked_config_classes(ca.letters, cb.letters, rank, false);
}

// Minimal self-intersection number. For a k-th power of a primitive core c
// the k parallel strands contribute k^2 copies of each core crossing plus
// k-1 crossings where the strands close up.
inline long self_intersection(const CyclicWord& a, int rank) {
  if (a.empty()) throw InputError("trivial class has no curve representative");
  check_letters(a.letters, rank);
  auto [r, k] = primitive_root(a);
  CyclicWord core(r);
  long base =
      detail::linked_config_classes(core.letters, core.letters, rank, true);
  return static_cast<long>(k) * k * base + (k - 1);
}

}  // namespace pusher
