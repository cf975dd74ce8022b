#pragma once

// Point-pushing mapping classes on the marked sphere.
//
// The marked model places z in the outer face of the m-petal flower, reached
// by an access ray through the gap between the last petal and the first.
// Pushing z around the k-th puncture loop is the Dehn twist about the outer
// pushoff of that loop: the curve around {puncture k, z}, whose based word
// through the gap is K = x_k w_z with w_z = (x1...xm)^-1 the z-peripheral
// word. Tracing the twist insertions petal by petal gives a block
// conjugation: petals before k are conjugated by K = x_k w_z, petals after k
// by K' = w_z x_k, and x_k itself is fixed. Every push therefore fixes the
// z-peripheral word exactly, sends each puncture loop to a conjugate of
// itself, and satisfies the quotient contract: filling z back in turns the
// pushed image of any loop into its conjugate by the pushing word.
//
// Pushes along longer loops compose letter by letter, so the push of a
// reduced word times the push of its inverse cancels to the identity at the
// level of generator images, not just mapping classes.

#include <string>
#include <utility>
#include <vector>

#include "pusher/curves.hpp"
#include "pusher/errors.hpp"
#include "pusher/words.hpp"

namespace pusher {

struct PushMap {
  SurfaceSig surface;        // the marked model the images live on
  Word source;               // pushing loop, letters in the base alphabet
  std::vector<Word> images;  // image of x_{i+1} under the automorphism

  Word apply_word(const Word& w) const {
    Word out;
    for (Letter a : w) {
      const int g = gen_index(a);
      if (g > static_cast<int>(images.size()))
        throw InputError("letter x" + std::to_string(g) +
                         " exceeds the marked rank " +
                         std::to_string(images.size()));
      const Word& img = images[g - 1];
      if (a > 0)
        out.insert(out.end(), img.begin(), img.end());
      else {
        Word rev = inverse(img);
        out.insert(out.end(), rev.begin(), rev.end());
      }
    }
    return reduce(out);
  }

  CyclicWord apply_class(const CyclicWord& c) const {
    return CyclicWord(apply_word(c.letters));
  }

  bool is_identity() const {
    for (size_t i = 0; i < images.size(); ++i)
      if (images[i] != Word{static_cast<Letter>(i + 1)}) return false;
    return true;
  }

  // Automorphism equality: the source loop is provenance, not data.
  bool operator==(const PushMap& o) const {
    return surface == o.surface && images == o.images;
  }
  bool operator!=(const PushMap& o) const { return !(*this == o); }
};

inline PushMap push_identity(const SurfaceSig& surf) {
  surf.validate();
  if (!surf.marked)
    throw ContractError("point pushes require the marked model");
  PushMap h;
  h.surface = surf;
  for (int k = 1; k <= surf.rank(); ++k) h.images.push_back(Word{k});
  return h;
}

// f after g: apply g's automorphism first.
inline PushMap compose(const PushMap& f, const PushMap& g) {
  if (f.surface != g.surface)
    throw InputError("composing pushes over different surfaces");
  PushMap h;
  h.surface = f.surface;
  h.source = concat(f.source, g.source);
  for (const Word& img : g.images) h.images.push_back(f.apply_word(img));
  return h;
}

namespace detail {

// The push around the k-th puncture loop (negative k: its inverse). Petals
// split into the block before k, conjugated by K = x_k w_z, and the block
// after k, conjugated by K' = w_z x_k; x_k is fixed.
inline PushMap push_letter(Letter a, const SurfaceSig& surf) {
  PushMap h = push_identity(surf);
  const int m = surf.rank();
  const int k = gen_index(a);
  Word wz;
  for (int j = m; j >= 1; --j) wz.push_back(-j);
  const Word head = concat(Word{k}, wz);   // K
  const Word tail = concat(wz, Word{k});   // K'
  for (int j = 1; j <= m; ++j) {
    if (j == k) continue;
    const Word& c = j < k ? head : tail;
    h.images[j - 1] =
        a > 0 ? concat(concat(c, Word{j}), inverse(c))
              : concat(concat(inverse(c), Word{j}), c);
  }
  h.source = Word{a};
  return h;
}

}  // namespace detail

inline PushMap push(const Word& gamma, const SurfaceSig& surf) {
  surf.validate();
  if (!surf.marked)
    throw ContractError("point pushes require the marked model");
  const int base_rank = surf.rank() - 1;
  const Word g = reduce(gamma);
  check_letters(g, base_rank);
  PushMap h = push_identity(surf);
  for (Letter a : g) h = compose(h, detail::push_letter(a, surf));
  h.source = g;
  return h;
}

inline PushMap inverse_push(const PushMap& h) {
  return push(inverse(h.source), h.surface);
}

inline CurveClass apply_push(const PushMap& h, const CurveClass& u) {
  return curve_class(h.apply_class(u.word), h.surface);
}

// The quotient contract: filling z back in (which kills the z-peripheral
// generator) must turn the pushed image of any lifted loop into its
// conjugate by the pushing word, as an exact word identity.
inline bool conjugation_check(const Word& gamma, const Word& alpha,
                              const SurfaceSig& surf) {
  surf.validate();
  if (!surf.marked)
    throw ContractError("point pushes require the marked model");
  const int base_rank = surf.rank() - 1;
  const Word g = reduce(gamma);
  const Word al = reduce(alpha);
  check_letters(g, base_rank);
  check_letters(al, base_rank);
  const PushMap h = push(g, surf);
  const Word pushed = forget_marked(h.apply_word(al), base_rank);
  return pushed == conjugate(g, al);
}

}  // namespace pusher
