#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pusher/errors.hpp"

// Free-group word algebra for punctured-sphere surface models.
//
// The surface is carried as a ribbon graph: a wedge of r petals, one petal
// per generator, with the letter germs at the wedge point in counterclockwise
// order
//     x1, x1^-1, x2, x2^-1, ..., xr, xr^-1.
// Every lexicographic comparison of words and ends uses that germ order, so
// combinatorics downstream (chord diagrams, boundary traces, end linking)
// agree with the planar picture.
//
// Letters are signed ints: +k is xk, -k its inverse, 0 is illegal.

namespace pusher {

using Letter = int;
using Word = std::vector<Letter>;

inline Letter inv(Letter a) { return -a; }

inline int gen_index(Letter a) { return a > 0 ? a : -a; }

// Position of the letter germ in the counterclockwise order at the wedge.
inline int sigma_index(Letter a) { return a > 0 ? 2 * (a - 1) : -2 * a - 1; }

// Inverse of sigma_index.
inline Letter sigma_letter(int idx) {
  return idx % 2 == 0 ? idx / 2 + 1 : -(idx / 2 + 1);
}

inline bool sigma_less(Letter a, Letter b) {
  return sigma_index(a) < sigma_index(b);
}

inline void check_letters(const Word& w, int rank) {
  for (Letter a : w) {
    if (a == 0) throw InputError("0 is not a generator letter");
    if (gen_index(a) > rank)
      throw InputError("letter x" + std::to_string(gen_index(a)) +
                       " exceeds generator rank " + std::to_string(rank));
  }
}

inline Word reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter a : w) {
    if (a == 0) throw InputError("0 is not a generator letter");
    if (!out.empty() && out.back() == inv(a))
      out.pop_back();
    else
      out.push_back(a);
  }
  return out;
}

inline bool is_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == inv(w[i + 1])) return false;
  return true;
}

inline Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& a : out) a = inv(a);
  return out;
}

inline Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce(out);
}

// g w g^-1, reduced.
inline Word conjugate(const Word& g, const Word& w) {
  return concat(concat(g, w), inverse(g));
}

inline Word power(const Word& w, int k) {
  Word base = k >= 0 ? w : inverse(w);
  Word out;
  for (int i = 0; i < std::abs(k); ++i) out = concat(out, base);
  return out;
}

// Strips inverse pairs off both ends after free reduction; the result is the
// shortest word in the conjugacy class, as a linear word.
inline Word cyclic_reduce(const Word& w) {
  Word r = reduce(w);
  size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == inv(r[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + lo, r.begin() + hi);
}

inline bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || w.front() != inv(w.back());
}

// Booth's least-rotation algorithm under the ribbon germ order.
inline size_t least_rotation(const Word& w) {
  const size_t n = w.size();
  if (n == 0) return 0;
  std::vector<long> f(2 * n, -1);
  size_t k = 0;
  for (size_t j = 1; j < 2 * n; ++j) {
    Letter sj = w[j % n];
    long i = f[j - k - 1];
    while (i != -1 && sj != w[(k + i + 1) % n]) {
      if (sigma_less(sj, w[(k + i + 1) % n])) k = j - i - 1;
      i = f[i];
    }
    if (i == -1 && sj != w[(k + i + 1) % n]) {
      if (sigma_less(sj, w[(k + i + 1) % n])) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

inline Word rotated(const Word& w, size_t start) {
  Word out;
  out.reserve(w.size());
  for (size_t i = 0; i < w.size(); ++i) out.push_back(w[(start + i) % w.size()]);
  return out;
}

inline bool word_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      sigma_less);
}

// A free conjugacy class: cyclically reduced, stored in the lexicographically
// minimal rotation, so classes compare with ==.
struct CyclicWord {
  Word letters;

  CyclicWord() = default;
  explicit CyclicWord(const Word& raw) {
    Word r = cyclic_reduce(raw);
    letters = rotated(r, least_rotation(r));
  }

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  CyclicWord inversed() const { return CyclicWord(inverse(letters)); }

  // Representative starting with letters[start].
  Word rotation(size_t start) const { return rotated(letters, start); }

  bool operator==(const CyclicWord& o) const { return letters == o.letters; }
  bool operator!=(const CyclicWord& o) const { return letters != o.letters; }
  bool operator<(const CyclicWord& o) const {
    if (letters.size() != o.letters.size())
      return letters.size() < o.letters.size();
    return word_less(letters, o.letters);
  }
};

// Canonical representative of the unoriented class {w, w^-1}.
inline CyclicWord unoriented(const CyclicWord& c) {
  CyclicWord r = c.inversed();
  return r < c ? r : c;
}

// Shortest u with w = u^k cyclically; returns u and k. Uses the KMP failure
// function of the canonical rotation (rotations of u^k are k-th powers of
// rotations of u, so the linear test suffices).
inline std::pair<Word, int> primitive_root(const CyclicWord& c) {
  const Word& w = c.letters;
  const size_t n = w.size();
  if (n == 0) return {Word{}, 1};
  std::vector<size_t> fail(n, 0);
  for (size_t i = 1; i < n; ++i) {
    size_t j = fail[i - 1];
    while (j > 0 && w[i] != w[j]) j = fail[j - 1];
    if (w[i] == w[j]) ++j;
    fail[i] = j;
  }
  size_t p = n - fail[n - 1];
  if (n % p != 0) p = n;
  return {Word(w.begin(), w.begin() + p), static_cast<int>(n / p)};
}

inline bool is_primitive(const CyclicWord& c) {
  return c.empty() || primitive_root(c).second == 1;
}

struct WordHash {
  size_t operator()(const Word& w) const {
    size_t h = 1469598103934665603ull;
    for (Letter a : w) {
      h ^= static_cast<size_t>(static_cast<uint32_t>(a));
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct CyclicWordHash {
  size_t operator()(const CyclicWord& c) const { return WordHash{}(c.letters); }
};

// ---------------------------------------------------------------------------
// Parsing and formatting. Accepted tokens: x3, x3^-2, g2, bare signed ints,
// 'e' for the identity; separators are whitespace, '*' and '.'.

inline Word parse_word(const std::string& s, char prefix = 'x') {
  Word out;
  size_t i = 0;
  auto skip_seps = [&] {
    while (i < s.size() &&
           (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*' ||
            s[i] == '.'))
      ++i;
  };
  auto parse_int = [&](const char* what) {
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw InputError(std::string("expected ") + what + " in word at offset " +
                       std::to_string(start) + ": '" + s + "'");
    return std::atoi(s.substr(start, i - start).c_str());
  };
  skip_seps();
  while (i < s.size()) {
    Letter a;
    char c = s[i];
    if (c == 'e') {
      ++i;
      skip_seps();
      continue;
    }
    if (c == prefix || c == 'x' || c == 'g') {
      ++i;
      int k = parse_int("generator index");
      if (k <= 0) throw InputError("generator index must be positive: '" + s + "'");
      a = k;
    } else if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      a = parse_int("signed letter");
      if (a == 0) throw InputError("0 is not a generator letter: '" + s + "'");
    } else {
      throw InputError(std::string("unexpected character '") + c + "' in word: '" + s + "'");
    }
    int e = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      e = parse_int("exponent");
    }
    Letter base = e >= 0 ? a : inv(a);
    for (int t = 0; t < std::abs(e); ++t) out.push_back(base);
    skip_seps();
  }
  return out;
}

inline std::string format_word(const Word& w, char prefix = 'x') {
  if (w.empty()) return "e";
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += ' ';
    out += prefix;
    out += std::to_string(gen_index(w[i]));
    long e = static_cast<long>(j - i) * (w[i] > 0 ? 1 : -1);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Surfaces and their one-vertex presentations.

struct SurfaceSig {
  int genus = 0;
  int punctures = 0;
  bool marked = false;  // true: one puncture is the distinguished point z

  // Punctures of the underlying surface, z excluded.
  int base_punctures() const { return marked ? punctures - 1 : punctures; }

  // Complexity of the surface the curve complex lives on.
  int xi() const { return 3 * genus - 3 + punctures; }

  // Rank of the free group carrying curve words. The wedge has one petal per
  // puncture except the last one, which is the outer face (z on the marked
  // model) with peripheral word (x1...xr)^-1.
  int rank() const { return punctures - 1; }

  void validate() const {
    if (genus != 0)
      throw InputError("only punctured spheres are supported (genus 0)");
    if (base_punctures() > kMaxPunctures)
      throw ResourceError("puncture count " + std::to_string(base_punctures()) +
                          " exceeds cap " + std::to_string(kMaxPunctures));
    if (base_punctures() < 4)
      throw InputError("need at least 4 punctures for an essential curve");
  }

  bool operator==(const SurfaceSig& o) const {
    return genus == o.genus && punctures == o.punctures && marked == o.marked;
  }
};

inline SurfaceSig sphere(int punctures, bool marked = false) {
  SurfaceSig s;
  s.genus = 0;
  s.punctures = marked ? punctures + 1 : punctures;
  s.marked = marked;
  s.validate();
  return s;
}

// One-vertex ribbon presentation of the punctured sphere: free on x1..xr with
// one peripheral word per puncture. Boundary tracing of the petal wedge gives
// the singleton cycles (xk^-1), one per petal puncture, and the outer cycle
// x1 x2 ... xr; the final puncture (z on the marked model) is the outer face
// and its peripheral word is the inverse of the product of the others, so the
// relation word reduces to 1.
struct GroupPresentation {
  int rank = 0;
  std::vector<Word> peripheral;  // index p-1 <-> puncture id p
  Word relation;                 // product of all peripheral words

  static GroupPresentation of(const SurfaceSig& s) {
    s.validate();
    GroupPresentation g;
    g.rank = s.rank();
    Word outer;
    for (int k = 1; k <= g.rank; ++k) {
      g.peripheral.push_back(Word{k});
      outer.push_back(k);
    }
    g.peripheral.push_back(inverse(outer));
    for (const Word& p : g.peripheral)
      g.relation.insert(g.relation.end(), p.begin(), p.end());
    return g;
  }

  // 1-based puncture id when c is peripheral (as unoriented class), else none.
  std::optional<int> peripheral_id(const CyclicWord& c) const {
    CyclicWord u = unoriented(c);
    for (size_t p = 0; p < peripheral.size(); ++p)
      if (u == unoriented(CyclicWord(peripheral[p])))
        return static_cast<int>(p) + 1;
    return std::nullopt;
  }
};

// Forgetting the marked point z: words on the marked wedge (rank m, one petal
// per base puncture) map to the base wedge (rank m-1) by keeping x1..x_{m-1}
// and expanding xm to (x1...x_{m-1})^-1. Kills the class of the z-loop.
inline Word forget_marked(const Word& w, int base_rank) {
  Word out;
  Word last_inv;
  for (int k = base_rank; k >= 1; --k) last_inv.push_back(-k);
  for (Letter a : w) {
    if (gen_index(a) > base_rank + 1)
      throw InputError("letter exceeds marked-model rank");
    if (gen_index(a) < base_rank + 1) {
      out.push_back(a);
    } else if (a > 0) {
      out.insert(out.end(), last_inv.begin(), last_inv.end());
    } else {
      for (int k = 1; k <= base_rank; ++k) out.push_back(k);
    }
  }
  return reduce(out);
}

// ---------------------------------------------------------------------------
// Ends of the universal cover of the wedge. An end is an eventually periodic
// reduced ray head . cycle cycle ... read off from the wedge point. Two rays
// describe the same end iff their letter streams agree, so normalization
// pulls the junction tight and absorbs the head tail into the cycle.

struct Ray {
  Word head;
  Word cycle;

  Ray(Word h, Word c) : head(std::move(h)), cycle(std::move(c)) {
    head = reduce(head);
    if (cycle.empty()) throw InputError("end ray needs a nonempty cycle");
    if (!is_cyclically_reduced(cycle))
      throw InputError("end ray cycle must be cyclically reduced");
    // cancel across the junction: head tail against cycle front
    while (!head.empty() && head.back() == inv(cycle.front())) {
      head.pop_back();
      std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
    }
    // absorb: a head tail equal to the cycle tail is one period earlier
    while (!head.empty() && head.back() == cycle.back()) {
      head.pop_back();
      std::rotate(cycle.begin(), cycle.end() - 1, cycle.end());
    }
  }

  Letter at(size_t i) const {
    if (i < head.size()) return head[i];
    return cycle[(i - head.size()) % cycle.size()];
  }
};

// Circular position of an end around the wedge, digit by digit. The first
// digit is the germ slot of the first letter; each later digit is the
// clockwise-free slot count from the reverse germ of the previous letter,
// always in 1..2r-1 for reduced rays. Lexicographic order on digit streams
// is the counterclockwise circular order of ends, cut at the corner between
// the germs xr^-1 and x1.
inline int end_compare(const Ray& a, const Ray& b, int rank) {
  const int modulus = 2 * rank;
  auto digit = [&](const Ray& r, size_t i) {
    if (i == 0) return sigma_index(r.at(0));
    int from = sigma_index(inv(r.at(i - 1)));
    int to = sigma_index(r.at(i));
    return ((to - from) % modulus + modulus) % modulus;
  };
  // two eventually periodic streams that agree this long agree forever
  const size_t bound =
      std::max(a.head.size(), b.head.size()) + a.cycle.size() + b.cycle.size() + 2;
  for (size_t i = 0; i < bound; ++i) {
    int da = digit(a, i), db = digit(b, i);
    if (da != db) return da < db ? -1 : 1;
  }
  return 0;
}

// True when the pairs {a1,a2} and {b1,b2} of pairwise distinct ends separate
// each other on the circle at infinity, i.e. sorted circularly they alternate.
inline bool ends_linked(const Ray& a1, const Ray& a2, const Ray& b1,
                        const Ray& b2, int rank) {
  struct Tagged {
    const Ray* r;
    int tag;
  };
  std::vector<Tagged> v{{&a1, 0}, {&a2, 0}, {&b1, 1}, {&b2, 1}};
  std::sort(v.begin(), v.end(), [&](const Tagged& p, const Tagged& q) {
    return end_compare(*p.r, *q.r, rank) < 0;
  });
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (end_compare(*v[i].r, *v[i + 1].r, rank) == 0)
      throw ContractError("ends_linked requires four distinct ends");
  return v[0].tag != v[1].tag && v[1].tag != v[2].tag && v[2].tag != v[3].tag;
}

}  // namespace pusher
