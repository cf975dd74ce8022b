#pragma once

// Taut realization of a system of conjugacy classes as curves on the ribbon
// surface, together with the full planar map of the complement.
//
// The surface is a disk V (the vertex neighborhood) with one band per
// generator attached along two boundary intervals, the gates.  Going
// counterclockwise along the boundary of V the gates appear in germ order
// x1, x1^-1, x2, x2^-1, ...; band t joins gate(x_t) to gate(x_t^-1) under
// the corner between them, and the puncture t sits in the lens enclosed by
// that corner and the band.  The last corner, between gate(x_r^-1) and
// gate(x1), is split by a vertex "at infinity"; the outer puncture lives in
// the face beyond the outer band walls.
//
// A class is realized by strands through the bands joined by chords across
// the disk.  Each strand reads two boundary rays, one per side of its band
// passage.  The gate(x_t) endpoints are ordered by the rays on that side,
// descending counterclockwise from the gate mouth; the gate(x_t^-1) order is
// then forced, because a band transports boundary order reversingly (it is
// a planar U).  This keeps bands crossing free and puts every crossing in
// the disk, where interleaved chords meet.
//
// The initial layout is minimal except on strand pairs that fellow-travel
// through a run of bands with a direction change: such a pair picks up one
// junction crossing per change instead of crossing once, and each surplus
// pair of crossings bounds a thin bigon inside the band neighborhood.  A
// removal pass walks the shared run between two realized crossings of one
// pair and flips the pair's relative order inside the bands between them;
// flips that lower the crossing total are kept, in a fixed scan order, until
// every count is minimal.  The construction does not take the result on
// faith: it asserts that the crossing count of every pair of components
// equals the geometric intersection number and that every component
// self-crosses exactly its self-intersection number, both from the
// independent linked-ends oracle.  A mismatch is a ContractError.
//
// Every puncture is a vertex of the map, tied to the boundary of its face
// by two scaffold edges ("slits").  Slits make all faces simply connected,
// so the dual-path words below are honest homotopy bookkeeping.  Walking a
// slit is forbidden: a path through a puncture leaves the surface.
//
// Two letter-reading schemes, both verified by built-in monodromy checks:
//  - walking an edge: strands and walls of band t read x_t (toward the
//    gate(x_t^-1) side), every other edge is silent.  Closed edge walks
//    avoiding puncture vertices read their free homotopy class.
//  - crossing an edge (dual steps): gate(x_t) arcs read x_t from disk to
//    band, d-corners and outer walls read (x1...x_t)^-1 leaving the disk
//    or band outward, the petal slit at E(gate x_t) reads x_t, the outer
//    slit at S(gate x1) reads x1...x_r, everything else is silent.  The
//    product around every ordinary vertex cancels; around a puncture
//    vertex it reads the peripheral class.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pusher/errors.hpp"
#include "pusher/exact.hpp"
#include "pusher/oracle.hpp"
#include "pusher/union_find.hpp"
#include "pusher/words.hpp"

namespace pusher {

enum class RegionClass { Disk, OncePuncturedDisk, Annulus, Other };

inline const char* region_class_name(RegionClass c) {
  switch (c) {
    case RegionClass::Disk: return "disk";
    case RegionClass::OncePuncturedDisk: return "once-punctured disk";
    case RegionClass::Annulus: return "annulus";
    default: return "other";
  }
}

struct WeaveMap {
  SurfaceSig surface;
  int rank = 0;
  std::vector<CyclicWord> comps;  // primitive cores, deduplicated

  // boundary endpoints by position along the cut-open boundary of V
  struct Endpoint {
    int comp = -1, transit = -1;
    bool in = false;  // true: the curve re-enters V here
    int gate_sigma = -1;
  };
  std::vector<Endpoint> points;
  std::vector<std::vector<int>> pos_in, pos_out;  // comp -> transit -> position

  struct Chord {
    int comp = -1, transit = -1;
    int lo = -1, hi = -1;
    std::vector<int> crossings;  // sorted from the lo end to the hi end
  };
  std::vector<Chord> chords;
  std::vector<std::vector<int>> chord_of;  // comp -> transit -> chord id

  struct Crossing {
    int a = -1, b = -1;  // chord ids, a has the smaller perturbed center
    int vert = -1;
    EpsRational x;
  };
  std::vector<Crossing> crossings;

  enum EdgeKind { kArcGate, kArcCorner, kWallOuter, kWallInner, kSlit, kStrand, kChordSeg };
  struct Half {
    int tail = -1, twin = -1;
    EdgeKind kind = kArcGate;
    Letter walk = 0;  // letter read walking this half; 0 is silent
    Word cross;       // dual step from the face left of this half to the one left of its twin
    bool curve = false;
    int face = -1;
  };
  std::vector<Half> halves;
  std::vector<std::vector<int>> rot;  // vertex -> halves tailed there, counterclockwise
  int n_verts = 0;

  int v_inf = -1, v_qout = -1;
  std::vector<int> v_q;       // petal puncture vertices, 1-based
  std::vector<int> v_S, v_E;  // shoulders per gate germ index
  std::vector<int> v_pt;      // per position
  std::vector<int> h_wall_outer, h_wall_inner;  // primary halves, 1-based by band
  int h_eta1 = -1, h_eta2 = -1, h_halfA = -1, h_halfB = -1;

  std::vector<std::vector<int>> faces;  // face -> boundary halves in trace order
  std::vector<Word> face_pos;           // P(f): dual BFS word from the root face
  int root_face = -1;                   // disk piece at the vertex at infinity
  int outer_main_face = -1;

  struct Region {
    std::vector<int> faces;
    std::vector<int> punctures;             // 1..rank petals, rank+1 outer
    std::vector<std::vector<int>> circles;  // boundary circles as curve-half cycles
    std::vector<Word> circle_words;         // raw letters read along each circle
  };
  std::vector<int> face_region;
  std::vector<Region> regions;

  int head(int h) const { return halves[halves[h].twin].tail; }
  int next_around_face(int h) const {
    const int v = head(h);
    const auto& fan = rot[v];
    const int tw = halves[h].twin;
    int g = -1;
    for (int k = 0; k < static_cast<int>(fan.size()); ++k)
      if (fan[k] == tw) { g = k; break; }
    if (g < 0) throw ContractError("half edge missing from its vertex rotation");
    const int d = static_cast<int>(fan.size());
    return fan[(g + d - 1) % d];
  }

  long total_crossings() const { return static_cast<long>(crossings.size()); }

  Word face_walk_word(int f) const {
    Word out;
    for (int h : faces[f])
      if (halves[h].walk != 0) out.push_back(halves[h].walk);
    return out;
  }
};

struct RegionReport {
  int index = -1;
  int boundary_circles = 0;
  std::vector<int> punctures;
  int chi = 2;
  RegionClass cls = RegionClass::Other;
  std::vector<CyclicWord> circle_classes;
};

struct ComplementReport {
  SurfaceSig surface;
  std::vector<CyclicWord> components;
  long crossings = 0;
  bool euler_ok = false;
  std::vector<RegionReport> regions;

  bool all_disks_or_once_punctured() const {
    for (const auto& r : regions)
      if (r.cls != RegionClass::Disk && r.cls != RegionClass::OncePuncturedDisk) return false;
    return true;
  }
};

namespace detail {

// endpoint addressing before positions exist: transit side of a component
struct EndpointKey {
  int comp, transit;
  bool in;
};

inline RegionClass classify_region(int b, int p) {
  if (b == 1 && p == 0) return RegionClass::Disk;
  if (b == 1 && p == 1) return RegionClass::OncePuncturedDisk;
  if (b == 2 && p == 0) return RegionClass::Annulus;
  return RegionClass::Other;
}

// Lexicographic ray order as read from one gate mouth: the first germ slot is
// counted counterclockwise from the mouth, later digits are the usual
// relative slots between consecutive letters.
inline int gate_compare(const Ray& a, const Ray& b, int mouth_sigma, int rank) {
  const int modulus = 2 * rank;
  auto digit = [&](const Ray& r, size_t i) {
    int raw;
    if (i == 0) {
      raw = sigma_index(r.at(0)) - mouth_sigma;
    } else {
      raw = sigma_index(r.at(i)) - sigma_index(inv(r.at(i - 1)));
    }
    return ((raw % modulus) + modulus) % modulus;
  };
  const size_t bound =
      a.head.size() + b.head.size() + a.cycle.size() + b.cycle.size() + 2;
  for (size_t i = 0; i < bound; ++i) {
    const int da = digit(a, i), db = digit(b, i);
    if (da != db) return da < db ? -1 : 1;
  }
  return 0;
}

}  // namespace detail

inline WeaveMap build_weave(const SurfaceSig& sig, const std::vector<CyclicWord>& system) {
  sig.validate();
  WeaveMap wm;
  wm.surface = sig;
  const int r = sig.rank();
  wm.rank = r;

  // primitive cores, deduplicated as unoriented classes
  for (const auto& c : system) {
    if (c.empty()) throw InputError("trivial class has no curve representative");
    check_letters(c.letters, r);
    const CyclicWord core(primitive_root(c).first);
    bool seen = false;
    for (const auto& have : wm.comps)
      if (unoriented(have) == unoriented(core)) { seen = true; break; }
    if (!seen) wm.comps.push_back(core);
  }
  const int nc = static_cast<int>(wm.comps.size());

  // ---- strand endpoints and positions -------------------------------------
  struct StrandRec {
    int comp, idx;  // letter index within the component
    bool fwd;       // true: traverses the band from gate(x_t) to gate(x_t^-1)
    Ray even_ray;   // ray leaving the gate(x_t) side, away from the band
    Ray odd_ray;    // ray leaving the gate(x_t^-1) side, away from the band
    detail::EndpointKey near, far;
  };
  std::vector<std::vector<StrandRec>> band(r + 1);
  wm.pos_in.assign(nc, {});
  wm.pos_out.assign(nc, {});
  for (int c = 0; c < nc; ++c) {
    const Word& w = wm.comps[c].letters;
    const int p = static_cast<int>(w.size());
    wm.pos_in[c].assign(p, -1);
    wm.pos_out[c].assign(p, -1);
    for (int i = 0; i < p; ++i) {
      const int t = gen_index(w[i]);
      const int prev = (i + p - 1) % p;
      const int next = (i + 1) % p;
      const bool fwd = w[i] > 0;
      const Word past = inverse(rotated(w, i));
      const Word future = rotated(w, next);
      StrandRec s{c,
                  i,
                  fwd,
                  Ray({}, fwd ? past : future),
                  Ray({}, fwd ? future : past),
                  {},
                  {}};
      if (fwd) {
        s.near = {c, prev, false};
        s.far = {c, i, true};
      } else {
        s.near = {c, i, true};
        s.far = {c, prev, false};
      }
      band[t].push_back(std::move(s));
    }
  }
  for (int t = 1; t <= r; ++t) {
    auto& bs = band[t];
    const int even_mouth = sigma_index(t);
    const int odd_mouth = sigma_index(-t);
    std::sort(bs.begin(), bs.end(), [&](const StrandRec& a, const StrandRec& b) {
      const int ce = detail::gate_compare(a.even_ray, b.even_ray, even_mouth, r);
      if (ce != 0) return ce > 0;  // descending ccw across the even mouth
      const int co = detail::gate_compare(a.odd_ray, b.odd_ray, odd_mouth, r);
      if (co != 0) return co < 0;  // mirrored gate then reads descending
      throw ContractError("two strands read the same rays on both sides; "
                          "components must be distinct primitive classes");
    });
  }

  // pairwise minima from the independent oracle; the final map must realize
  // exactly these counts
  std::vector<std::vector<long>> target(nc, std::vector<long>(nc, 0));
  for (int a = 0; a < nc; ++a)
    for (int b = a; b < nc; ++b)
      target[a][b] = (a == b)
                         ? self_intersection(wm.comps[a], r)
                         : geometric_intersection(wm.comps[a], wm.comps[b], r);

  // ---- exhaustive bigon removal -------------------------------------------
  // Crossing census of the current band orders.  realized holds the junction
  // configurations carrying a crossing: (comp a, comp b, x, y) marks a
  // crossing between the chord entering letter x of a and the chord entering
  // letter y of b, recorded in both orientations.
  std::vector<std::vector<long>> cnt;
  std::set<std::array<int, 4>> realized;
  auto recount = [&]() {
    std::vector<std::vector<int>> pe(nc), po(nc);
    int pos = 0;
    for (int c = 0; c < nc; ++c) {
      pe[c].assign(wm.comps[c].letters.size(), -1);
      po[c].assign(wm.comps[c].letters.size(), -1);
    }
    for (int t = 1; t <= r; ++t) {
      for (const StrandRec& s : band[t]) pe[s.comp][s.idx] = pos++;
      for (auto it = band[t].rbegin(); it != band[t].rend(); ++it)
        po[it->comp][it->idx] = pos++;
    }
    struct ChordRec {
      int lo, hi, comp, letter;
    };
    std::vector<ChordRec> chords;
    for (int c = 0; c < nc; ++c) {
      const Word& w = wm.comps[c].letters;
      const int p = static_cast<int>(w.size());
      for (int i = 0; i < p; ++i) {
        const int j = (i + 1) % p;
        const int u = w[i] > 0 ? po[c][i] : pe[c][i];
        const int v = w[j] > 0 ? pe[c][j] : po[c][j];
        chords.push_back({std::min(u, v), std::max(u, v), c, i});
      }
    }
    cnt.assign(nc, std::vector<long>(nc, 0));
    realized.clear();
    for (size_t p1 = 0; p1 < chords.size(); ++p1) {
      for (size_t p2 = p1 + 1; p2 < chords.size(); ++p2) {
        const auto& A = chords[p1];
        const auto& B = chords[p2];
        const bool in1 = B.lo > A.lo && B.lo < A.hi;
        const bool in2 = B.hi > A.lo && B.hi < A.hi;
        if (in1 == in2) continue;
        cnt[std::min(A.comp, B.comp)][std::max(A.comp, B.comp)] += 1;
        const int La = static_cast<int>(wm.comps[A.comp].letters.size());
        const int Lb = static_cast<int>(wm.comps[B.comp].letters.size());
        realized.insert({A.comp, B.comp, (A.letter + 1) % La, (B.letter + 1) % Lb});
        realized.insert({B.comp, A.comp, (B.letter + 1) % Lb, (A.letter + 1) % La});
      }
    }
  };
  // flip the relative order of two strands inside one band: the first leaves
  // its slot and lands immediately on the far side of the second
  auto flip = [&](int t, int c1, int i1, int c2, int i2) {
    auto& bs = band[t];
    auto locate = [&](int c, int i) {
      for (size_t k = 0; k < bs.size(); ++k)
        if (bs[k].comp == c && bs[k].idx == i) return k;
      throw ContractError("strand missing from its band during bigon removal");
    };
    size_t ku = locate(c1, i1);
    const bool before = ku < locate(c2, i2);
    StrandRec u = std::move(bs[ku]);
    bs.erase(bs.begin() + static_cast<long>(ku));
    const size_t kv = locate(c2, i2);
    bs.insert(bs.begin() + static_cast<long>(kv) + (before ? 1 : 0), std::move(u));
  };
  recount();
  // A surplus pair of crossings sits at two junction configurations joined by
  // a chain of shared bands (the fellow-traveling run of the two strands).
  // Walking the chain forward from every realized crossing in scan order
  // finds such a pair; flipping the run between them removes both crossings.
  // Flips are kept only when the total strictly drops, so the pass count is
  // bounded and the scan is deterministic.
  for (bool improved = true; improved;) {
    improved = false;
    bool excess = false;
    for (int a = 0; a < nc && !excess; ++a)
      for (int b = a; b < nc && !excess; ++b)
        if (cnt[a][b] > target[a][b]) excess = true;
    if (!excess) break;
    const auto snapshot = realized;
    for (const auto& start : snapshot) {
      const int a = start[0], b = start[1];
      if (cnt[std::min(a, b)][std::max(a, b)] <= target[std::min(a, b)][std::max(a, b)])
        continue;
      const Word& wa = wm.comps[a].letters;
      const Word& wb = wm.comps[b].letters;
      const int La = static_cast<int>(wa.size());
      const int Lb = static_cast<int>(wb.size());
      int x = start[2], y = start[3];
      std::vector<std::array<int, 5>> flips;  // band, strand u, strand v
      for (int step = 0; step < La * Lb + 2; ++step) {
        if (a == b && x == y) break;
        int iu, iv, nx, ny;
        if (wa[x] == wb[y]) {  // run continues through an aligned band
          iu = x, iv = y, nx = (x + 1) % La, ny = (y + 1) % Lb;
        } else {
          const int ym = (y + Lb - 1) % Lb;
          if (wa[x] != inv(wb[ym])) break;  // the strands diverge: no bigon
          iu = x, iv = ym, nx = (x + 1) % La, ny = ym;
        }
        if (a == b && iu == iv) break;
        flips.push_back({gen_index(wa[iu]), a, iu, b, iv});
        x = nx, y = ny;
        if (x == start[2] && y == start[3]) break;  // closed the full run
        if (!realized.count({a, b, x, y})) continue;
        const auto saved_band = band;
        const auto saved_cnt = cnt;
        const auto saved_realized = realized;
        long before = 0, after = 0;
        bool below = false;
        for (int p = 0; p < nc; ++p)
          for (int q = p; q < nc; ++q) before += cnt[p][q];
        for (const auto& f : flips) flip(f[0], f[1], f[2], f[3], f[4]);
        recount();
        for (int p = 0; p < nc; ++p)
          for (int q = p; q < nc; ++q) {
            after += cnt[p][q];
            if (cnt[p][q] < target[p][q]) below = true;
          }
        if (!below && after < before) {
          improved = true;
        } else {
          band = saved_band;
          cnt = saved_cnt;
          realized = saved_realized;
        }
        break;
      }
      if (improved) break;
    }
  }

  // assign boundary positions: gate(x_t) in ray order, gate(x_t^-1) reversed
  // by the band's parallel transport
  auto set_pos = [&](const detail::EndpointKey& k, int pos, int sigma) {
    auto& slot = k.in ? wm.pos_in[k.comp][k.transit] : wm.pos_out[k.comp][k.transit];
    if (slot != -1) throw ContractError("endpoint assigned twice");
    slot = pos;
    wm.points.push_back({k.comp, k.transit, k.in, sigma});
  };
  for (int sigma = 0; sigma < 2 * r; ++sigma) {
    const int t = sigma / 2 + 1;
    const auto& bs = band[t];
    const int n = static_cast<int>(bs.size());
    for (int k = 0; k < n; ++k) {
      const int pos = static_cast<int>(wm.points.size());
      if (sigma % 2 == 0)
        set_pos(bs[k].near, pos, sigma);
      else
        set_pos(bs[n - 1 - k].far, pos, sigma);
    }
  }
  const int N = static_cast<int>(wm.points.size());

  // ---- chords and crossings ------------------------------------------------
  wm.chord_of.assign(nc, {});
  for (int c = 0; c < nc; ++c) {
    const int p = static_cast<int>(wm.comps[c].letters.size());
    wm.chord_of[c].assign(p, -1);
    for (int i = 0; i < p; ++i) {
      WeaveMap::Chord ch;
      ch.comp = c;
      ch.transit = i;
      ch.lo = std::min(wm.pos_in[c][i], wm.pos_out[c][i]);
      ch.hi = std::max(wm.pos_in[c][i], wm.pos_out[c][i]);
      wm.chord_of[c][i] = static_cast<int>(wm.chords.size());
      wm.chords.push_back(std::move(ch));
    }
  }
  const int nch = static_cast<int>(wm.chords.size());
  std::map<std::pair<int, int>, long> pair_count;
  for (int qa = 0; qa < nch; ++qa) {
    for (int qb = qa + 1; qb < nch; ++qb) {
      const auto& A = wm.chords[qa];
      const auto& B = wm.chords[qb];
      const bool crossed = (A.lo < B.lo && B.lo < A.hi && A.hi < B.hi) ||
                           (B.lo < A.lo && A.lo < B.hi && B.hi < A.hi);
      if (!crossed) continue;
      WeaveMap::Crossing cr;
      const int cc = compare_center(A.lo, A.hi, B.lo, B.hi);
      if (cc == 0) throw ContractError("two distinct chords share their perturbed center");
      cr.a = cc < 0 ? qa : qb;
      cr.b = cc < 0 ? qb : qa;
      cr.x = chord_crossing_x(A.lo, A.hi, B.lo, B.hi);
      const int id = static_cast<int>(wm.crossings.size());
      wm.crossings.push_back(std::move(cr));
      wm.chords[qa].crossings.push_back(id);
      wm.chords[qb].crossings.push_back(id);
      const int ca = std::min(A.comp, B.comp), cb = std::max(A.comp, B.comp);
      ++pair_count[{ca, cb}];
    }
  }

  // the realization must be taut: check every count against the oracle
  for (int a = 0; a < nc; ++a) {
    for (int b = a; b < nc; ++b) {
      long got = 0;
      const auto it = pair_count.find({a, b});
      if (it != pair_count.end()) got = it->second;
      const long want = target[a][b];
      if (got != want)
        throw ContractError("realization is not taut: components " + std::to_string(a) + "," +
                            std::to_string(b) + " cross " + std::to_string(got) + " times, oracle says " +
                            std::to_string(want));
    }
  }

  for (auto& ch : wm.chords) {
    std::sort(ch.crossings.begin(), ch.crossings.end(), [&](int ia, int ib) {
      const int cmp = compare_crossing_x(wm.crossings[ia].x, wm.crossings[ib].x);
      if (cmp == 0) throw ContractError("degenerate chord triple survives the perturbation");
      return cmp < 0;
    });
  }

  // ---- vertices --------------------------------------------------------
  auto new_vert = [&]() { return wm.n_verts++; };
  wm.v_inf = new_vert();
  wm.v_qout = new_vert();
  wm.v_q.assign(r + 1, -1);
  for (int t = 1; t <= r; ++t) wm.v_q[t] = new_vert();
  wm.v_S.assign(2 * r, -1);
  wm.v_E.assign(2 * r, -1);
  for (int sigma = 0; sigma < 2 * r; ++sigma) {
    wm.v_S[sigma] = new_vert();
    wm.v_E[sigma] = new_vert();
  }
  wm.v_pt.assign(N, -1);
  for (int i = 0; i < N; ++i) wm.v_pt[i] = new_vert();
  for (auto& cr : wm.crossings) cr.vert = new_vert();

  // ---- edges ------------------------------------------------------------
  // germ slots give the counterclockwise rotation at each vertex
  std::vector<std::vector<std::pair<int, int>>> germs(wm.n_verts);  // (slot, half)
  auto add_edge = [&](int tail, int tail_slot, int headv, int head_slot, WeaveMap::EdgeKind kind,
                      Letter walk, Word cross, bool curve) {
    const int h = static_cast<int>(wm.halves.size());
    WeaveMap::Half fwd, bwd;
    fwd.tail = tail;
    fwd.twin = h + 1;
    fwd.kind = kind;
    fwd.walk = walk;
    fwd.cross = cross;
    fwd.curve = curve;
    bwd.tail = headv;
    bwd.twin = h;
    bwd.kind = kind;
    bwd.walk = walk == 0 ? 0 : inv(walk);
    bwd.cross = inverse(cross);
    bwd.curve = curve;
    wm.halves.push_back(std::move(fwd));
    wm.halves.push_back(std::move(bwd));
    germs[tail].push_back({tail_slot, h});
    germs[headv].push_back({head_slot, h + 1});
    return h;
  };
  auto prefix_inv = [&](int t) {  // (x1 ... x_t)^-1
    Word w;
    for (int k = t; k >= 1; --k) w.push_back(-k);
    return w;
  };
  Word outer_word;  // x1 ... xr
  for (int t = 1; t <= r; ++t) outer_word.push_back(t);

  // boundary chain of V, cut at the vertex at infinity
  // slots: points [arc+ 0, chord 1, arc- 2, strand 3]
  //        S even [arc 0, corner 1, wall 2] (+ outer slit before the wall at gate x1)
  //        S odd  [arc 0, corner 1, slit 2, wall 3]
  //        E even [corner 0, arc 1, wall 2, slit 3]
  //        E odd  [corner 0, arc 1, wall 2]
  //        infinity [halfA 0, eta1 1, halfB 2]; Q_out [eta2 0, eta1 1]; Q_t [toB 0, toA 1]
  {
    int prev_vert = wm.v_inf;
    int prev_slot = 2;  // halfB germ
    // positions grouped by gate
    int pos = 0;
    for (int sigma = 0; sigma < 2 * r; ++sigma) {
      const int t = sigma / 2 + 1;
      const bool even = sigma % 2 == 0;
      const Word gate_cross = even ? Word{t} : Word{};
      // corner arriving at S(sigma)
      Word corner_cross;
      if (sigma == 0)
        corner_cross = prefix_inv(r);  // d_r half B
      else if (!even)
        corner_cross = Word{};  // c_t
      else
        corner_cross = prefix_inv(t - 1);  // d_{t-1}
      const int hh = add_edge(prev_vert, prev_slot, wm.v_S[sigma], 1, WeaveMap::kArcCorner, 0,
                              corner_cross, false);
      if (sigma == 0) wm.h_halfB = hh;
      // gate pieces
      int at = wm.v_S[sigma], at_slot = 0;
      const int n_here = static_cast<int>(band[t].size());
      for (int k = 0; k < n_here; ++k) {
        add_edge(at, at_slot, wm.v_pt[pos], 2, WeaveMap::kArcGate, 0, gate_cross, false);
        at = wm.v_pt[pos];
        at_slot = 0;
        ++pos;
      }
      add_edge(at, at_slot, wm.v_E[sigma], 1, WeaveMap::kArcGate, 0, gate_cross, false);
      prev_vert = wm.v_E[sigma];
      prev_slot = 0;
    }
    if (pos != N) throw ContractError("gate blocks do not cover the boundary positions");
    wm.h_halfA = add_edge(prev_vert, prev_slot, wm.v_inf, 0, WeaveMap::kArcCorner, 0, prefix_inv(r), false);
  }

  // walls and slits
  wm.h_wall_outer.assign(r + 1, -1);
  wm.h_wall_inner.assign(r + 1, -1);
  for (int t = 1; t <= r; ++t) {
    const int sE = 2 * (t - 1), sO = 2 * t - 1;
    const int s_wall_slot = (t == 1) ? 3 : 2;
    wm.h_wall_outer[t] = add_edge(wm.v_S[sE], s_wall_slot, wm.v_E[sO], 2, WeaveMap::kWallOuter, t,
                                  prefix_inv(t), false);
    wm.h_wall_inner[t] = add_edge(wm.v_E[sE], 2, wm.v_S[sO], 3, WeaveMap::kWallInner, t, Word{}, false);
    add_edge(wm.v_E[sE], 3, wm.v_q[t], 1, WeaveMap::kSlit, 0, Word{t}, false);
    add_edge(wm.v_q[t], 0, wm.v_S[sO], 2, WeaveMap::kSlit, 0, Word{}, false);
  }
  wm.h_eta1 = add_edge(wm.v_inf, 1, wm.v_qout, 1, WeaveMap::kSlit, 0, Word{}, false);
  wm.h_eta2 = add_edge(wm.v_qout, 0, wm.v_S[0], 2, WeaveMap::kSlit, 0, outer_word, false);

  // strands
  for (int t = 1; t <= r; ++t) {
    for (const auto& s : band[t]) {
      const auto pos_of = [&](const detail::EndpointKey& k) {
        return k.in ? wm.pos_in[k.comp][k.transit] : wm.pos_out[k.comp][k.transit];
      };
      add_edge(wm.v_pt[pos_of(s.near)], 3, wm.v_pt[pos_of(s.far)], 3, WeaveMap::kStrand, t, Word{}, true);
    }
  }

  // chord segments
  for (int q = 0; q < nch; ++q) {
    const auto& ch = wm.chords[q];
    struct Stop { int vert; int tail_slot; int head_slot; };
    std::vector<Stop> stops;
    stops.push_back({wm.v_pt[ch.lo], 1, 1});
    for (int id : ch.crossings) {
      const auto& cr = wm.crossings[id];
      const bool is_a = cr.a == q;
      stops.push_back({cr.vert, is_a ? 0 : 1, is_a ? 2 : 3});
    }
    stops.push_back({wm.v_pt[ch.hi], 1, 1});
    for (size_t k = 0; k + 1 < stops.size(); ++k)
      add_edge(stops[k].vert, stops[k].tail_slot, stops[k + 1].vert, stops[k + 1].head_slot,
               WeaveMap::kChordSeg, 0, Word{}, true);
  }

  // rotations
  wm.rot.assign(wm.n_verts, {});
  for (int v = 0; v < wm.n_verts; ++v) {
    auto& g = germs[v];
    std::sort(g.begin(), g.end());
    for (size_t k = 0; k + 1 < g.size(); ++k)
      if (g[k].first == g[k + 1].first) throw ContractError("two germs share a rotation slot");
    for (auto& [slot, h] : g) wm.rot[v].push_back(h);
  }

  // every ordinary dual loop around a vertex must cancel; puncture vertices
  // must read their peripheral class
  for (int v = 0; v < wm.n_verts; ++v) {
    Word m;
    for (int h : wm.rot[v]) m = concat(m, inverse(wm.halves[h].cross));
    int punct = 0;
    if (v == wm.v_qout) punct = r + 1;
    for (int t = 1; t <= r; ++t)
      if (v == wm.v_q[t]) punct = t;
    if (punct == 0) {
      if (!m.empty()) throw ContractError("dual monodromy around an ordinary vertex does not cancel");
    } else {
      const CyclicWord cls(m);
      const CyclicWord want(punct == r + 1 ? outer_word : Word{punct});
      if (unoriented(cls) != unoriented(want))
        throw ContractError("dual monodromy around a puncture vertex is not its peripheral class");
    }
  }

  // ---- faces -------------------------------------------------------------
  {
    const int nh = static_cast<int>(wm.halves.size());
    for (int h0 = 0; h0 < nh; ++h0) {
      if (wm.halves[h0].face != -1) continue;
      const int f = static_cast<int>(wm.faces.size());
      wm.faces.push_back({});
      int h = h0;
      do {
        wm.halves[h].face = f;
        wm.faces[f].push_back(h);
        h = wm.next_around_face(h);
        if (static_cast<int>(wm.faces[f].size()) > nh)
          throw ContractError("face trace does not close");
      } while (h != h0);
    }
    const long V = wm.n_verts;
    const long E = static_cast<long>(wm.halves.size()) / 2;
    const long F = static_cast<long>(wm.faces.size());
    if (V - E + F != 2)
      throw ContractError("map fails the sphere Euler count: V=" + std::to_string(V) +
                          " E=" + std::to_string(E) + " F=" + std::to_string(F));
  }
  wm.root_face = wm.halves[wm.h_halfB].face;
  wm.outer_main_face = wm.halves[wm.halves[wm.h_wall_outer[1]].twin].face;
  {
    const CyclicWord outer_read(wm.face_walk_word(wm.outer_main_face));
    if (unoriented(outer_read) != unoriented(CyclicWord(outer_word)))
      throw ContractError("outer face walk does not read the boundary word");
    for (int t = 1; t <= r; ++t) {
      const CyclicWord petal_read(wm.face_walk_word(wm.halves[wm.h_wall_inner[t]].face));
      if (unoriented(petal_read) != unoriented(CyclicWord(Word{t})))
        throw ContractError("petal face walk does not read its peripheral letter");
    }
  }

  // ---- dual BFS position words --------------------------------------------
  wm.face_pos.assign(wm.faces.size(), {});
  {
    std::vector<char> seen(wm.faces.size(), 0);
    std::vector<int> queue{wm.root_face};
    seen[wm.root_face] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      const int f = queue[qi];
      for (int h : wm.faces[f]) {
        const int g = wm.halves[wm.halves[h].twin].face;
        if (seen[g]) continue;
        seen[g] = 1;
        wm.face_pos[g] = concat(wm.face_pos[f], wm.halves[h].cross);
        queue.push_back(g);
      }
    }
    if (queue.size() != wm.faces.size()) throw ContractError("dual graph is disconnected");
  }

  // ---- regions -------------------------------------------------------------
  {
    UnionFind uf(static_cast<int>(wm.faces.size()));
    for (int h = 0; h < static_cast<int>(wm.halves.size()); h += 2)
      if (!wm.halves[h].curve) uf.unite(wm.halves[h].face, wm.halves[h + 1].face);
    std::map<int, int> region_id;
    wm.face_region.assign(wm.faces.size(), -1);
    for (int f = 0; f < static_cast<int>(wm.faces.size()); ++f) {
      const int root = uf.find(f);
      auto it = region_id.find(root);
      if (it == region_id.end()) {
        it = region_id.insert({root, static_cast<int>(wm.regions.size())}).first;
        wm.regions.push_back({});
      }
      wm.face_region[f] = it->second;
      wm.regions[it->second].faces.push_back(f);
    }
    auto puncture_region = [&](int vert, int id) {
      int reg = -1;
      for (int h : wm.rot[vert]) {
        const int rf = wm.face_region[wm.halves[h].face];
        if (reg == -1) reg = rf;
        if (rf != reg) throw ContractError("puncture vertex touches two regions");
      }
      wm.regions[reg].punctures.push_back(id);
    };
    for (int t = 1; t <= r; ++t) puncture_region(wm.v_q[t], t);
    puncture_region(wm.v_qout, r + 1);
    for (auto& reg : wm.regions) std::sort(reg.punctures.begin(), reg.punctures.end());

    // Boundary circles: orbits of curve halves under the region-boundary
    // walk.  After a curve half the walk sweeps clockwise through the germ
    // fan at its head vertex, hopping scaffold germs until the next curve
    // germ.  The hop never leaves the vertex, and curve halves end only at
    // ordinary vertices, so the connecting corner contracts there and the
    // circle reads the walk letters of its curve halves alone.
    std::vector<char> used(wm.halves.size(), 0);
    const int guard = static_cast<int>(wm.halves.size()) + 4;
    for (int h0 = 0; h0 < static_cast<int>(wm.halves.size()); ++h0) {
      if (!wm.halves[h0].curve || used[h0]) continue;
      const int reg = wm.face_region[wm.halves[h0].face];
      std::vector<int> circle;
      Word word;
      int h = h0;
      do {
        used[h] = 1;
        circle.push_back(h);
        if (wm.halves[h].walk != 0) word.push_back(wm.halves[h].walk);
        int s = wm.next_around_face(h);
        int steps = 0;
        while (!wm.halves[s].curve) {
          s = wm.next_around_face(wm.halves[s].twin);
          if (++steps > guard) throw ContractError("region boundary walk does not terminate");
        }
        if (wm.face_region[wm.halves[s].face] != reg)
          throw ContractError("region boundary walk escaped its region");
        h = s;
      } while (h != h0);
      wm.regions[reg].circles.push_back(std::move(circle));
      wm.regions[reg].circle_words.push_back(std::move(word));
    }
  }

  return wm;
}

inline ComplementReport complement_faces(const SurfaceSig& sig, const std::vector<CyclicWord>& system) {
  const WeaveMap wm = build_weave(sig, system);
  ComplementReport rep;
  rep.surface = sig;
  rep.components = wm.comps;
  rep.crossings = wm.total_crossings();
  rep.euler_ok = true;  // the constructor throws otherwise
  for (int i = 0; i < static_cast<int>(wm.regions.size()); ++i) {
    const auto& reg = wm.regions[i];
    RegionReport rr;
    rr.index = i;
    rr.boundary_circles = static_cast<int>(reg.circles.size());
    rr.punctures = reg.punctures;
    rr.chi = 2 - rr.boundary_circles - static_cast<int>(rr.punctures.size());
    rr.cls = detail::classify_region(rr.boundary_circles, static_cast<int>(rr.punctures.size()));
    for (const auto& w : reg.circle_words) rr.circle_classes.push_back(CyclicWord(w));
    rep.regions.push_back(std::move(rr));
  }
  return rep;
}

}  // namespace pusher
