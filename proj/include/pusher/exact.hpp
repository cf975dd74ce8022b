#pragma once

// Exact ordering of chord crossings in the disk.
//
// Chord endpoints sit at integer positions on the boundary line and chords
// are drawn as semicircles, so two crossing chords meet where their circles'
// radical line hits: x = (p_j p_l - p_i p_k) / ((p_j + p_l) - (p_i + p_k)).
// Comparing two such abscissas with plain integers ties whenever three
// chords are concurrent.  We therefore evaluate every endpoint e at the
// symbolically perturbed value
//
//     p_e(eps) = e + (e+1) eps + (e+1)^2 eps^2
//
// and compare the resulting rational functions as eps -> 0+.  Cross
// multiplication gives integer polynomials of degree at most six; the sign
// of the lowest nonzero coefficient decides.  Coefficients stay far below
// the __int128 range for any boundary size this library accepts.

#include <array>
#include <cstdint>

#include "pusher/errors.hpp"

namespace pusher {

struct EpsPoly {
  // coefficient of eps^k in c[k]
  std::array<__int128, 7> c{};

  static EpsPoly point(long long e) {
    EpsPoly p;
    p.c[0] = e;
    p.c[1] = e + 1;
    p.c[2] = static_cast<__int128>(e + 1) * (e + 1);
    return p;
  }

  friend EpsPoly operator+(const EpsPoly& a, const EpsPoly& b) {
    EpsPoly r;
    for (int k = 0; k < 7; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
  }

  friend EpsPoly operator-(const EpsPoly& a, const EpsPoly& b) {
    EpsPoly r;
    for (int k = 0; k < 7; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
  }

  friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
    EpsPoly r;
    for (int i = 0; i < 7; ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; j + i < 7; ++j) {
        if (b.c[j] == 0) continue;
        r.c[i + j] += a.c[i] * b.c[j];
      }
    }
    return r;
  }

  bool is_zero() const {
    for (int k = 0; k < 7; ++k)
      if (c[k] != 0) return false;
    return true;
  }

  // sign as eps -> 0+: the lowest nonzero coefficient wins
  int sign() const {
    for (int k = 0; k < 7; ++k) {
      if (c[k] > 0) return 1;
      if (c[k] < 0) return -1;
    }
    return 0;
  }
};

// crossing abscissa of the semicircles over (i,k) and (j,l), as an exact
// rational function numer/denom of the perturbation parameter
struct EpsRational {
  EpsPoly numer;
  EpsPoly denom;  // normalized to be positive as eps -> 0+
};

inline EpsRational chord_crossing_x(long long i, long long k, long long j, long long l) {
  const EpsPoly pi = EpsPoly::point(i), pk = EpsPoly::point(k);
  const EpsPoly pj = EpsPoly::point(j), pl = EpsPoly::point(l);
  EpsRational r;
  r.numer = pj * pl - pi * pk;
  r.denom = (pj + pl) - (pi + pk);
  const int ds = r.denom.sign();
  if (ds == 0) throw ContractError("chord crossing with identically vanishing denominator");
  if (ds < 0) {
    EpsPoly zero;
    r.numer = zero - r.numer;
    r.denom = zero - r.denom;
  }
  return r;
}

// -1, 0, +1 comparison of two crossing abscissas; 0 would mean the two
// crossings coincide for every perturbation, which cannot happen for
// distinct chord pairs and is reported as a contract violation by callers
inline int compare_crossing_x(const EpsRational& a, const EpsRational& b) {
  return (a.numer * b.denom - b.numer * a.denom).sign();
}

// compare two perturbed sums p_i + p_k vs p_j + p_l (chord "centers");
// used to fix the rotation order at a crossing vertex
inline int compare_center(long long i, long long k, long long j, long long l) {
  const EpsPoly ca = EpsPoly::point(i) + EpsPoly::point(k);
  const EpsPoly cb = EpsPoly::point(j) + EpsPoly::point(l);
  return (ca - cb).sign();
}

}  // namespace pusher
