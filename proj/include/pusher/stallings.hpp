#pragma once

// Folded subgroup graphs for finitely generated subgroups of the free group
// on x1..xr, anchored at a base vertex so conjugate subgroups stay distinct.
//
// A subgroup is built as the wedge of its generator loops, folded until no
// vertex carries two equally labeled departures, trimmed to the based core,
// and renumbered by breadth-first discovery in the germ order. The result is
// a canonical deterministic table: two generating sets span the same
// subgroup exactly when their tables are identical. Membership, rank, free
// bases, conjugation, inclusion, and coset tests all read this table.

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "pusher/errors.hpp"
#include "pusher/union_find.hpp"
#include "pusher/words.hpp"

namespace pusher {

struct SubgroupGraph {
  int rank = 0;  // ambient free rank, not the subgroup's own rank
  // next[state][sigma_index(letter)] = target state, -1 when absent; state 0
  // is the base vertex carrying the anchor.
  std::vector<std::vector<int>> next;

  static SubgroupGraph of(const std::vector<Word>& gens, int ambient_rank);

  int states() const { return static_cast<int>(next.size()); }

  int step(int state, Letter a) const {
    if (gen_index(a) > rank)
      throw InputError("letter x" + std::to_string(gen_index(a)) +
                       " exceeds ambient rank " + std::to_string(rank));
    return next[state][sigma_index(a)];
  }

  // Geometric edge count: every present arrow has its inverse present, and
  // a self-loop contributes both directions at one vertex.
  int edges() const {
    int darts = 0;
    for (const auto& row : next)
      for (int t : row)
        if (t >= 0) ++darts;
    return darts / 2;
  }

  // First Betti number of the connected folded graph = the subgroup's rank.
  int betti() const { return edges() - states() + 1; }

  bool contains(const Word& w) const {
    int at = 0;
    for (Letter a : reduce(w)) {
      at = step(at, a);
      if (at < 0) return false;
    }
    return at == 0;
  }

  // Left cosets: aH = bH exactly when a^-1 b lies in H.
  bool same_coset(const Word& a, const Word& b) const {
    return contains(concat(inverse(a), b));
  }

  // A free basis from the breadth-first spanning tree: one word per
  // non-tree edge, spelled tree-path in, edge, tree-path out.
  std::vector<Word> basis() const;

  // The graph of g H g^-1, anchored at the same base.
  SubgroupGraph conjugated(const Word& g) const {
    std::vector<Word> moved;
    for (const Word& w : basis()) moved.push_back(conjugate(g, w));
    return of(moved, rank);
  }

  bool includes(const SubgroupGraph& other) const {
    if (rank != other.rank)
      throw InputError("subgroup graphs live over different ambient ranks");
    for (const Word& w : other.basis())
      if (!contains(w)) return false;
    return true;
  }

  bool operator==(const SubgroupGraph& o) const {
    return rank == o.rank && next == o.next;
  }
  bool operator!=(const SubgroupGraph& o) const { return !(*this == o); }
};

inline std::vector<Word> SubgroupGraph::basis() const {
  std::vector<Word> out;
  const int n = states();
  std::vector<int> parent(n, -1), via(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<std::vector<bool>> in_tree(n,
                                         std::vector<bool>(2 * rank, false));
  std::vector<int> queue{0};
  seen[0] = true;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const int u = queue[qi];
    for (int k = 0; k < 2 * rank; ++k) {
      const int v = next[u][k];
      if (v < 0 || seen[v]) continue;
      seen[v] = true;
      parent[v] = u;
      via[v] = k;
      in_tree[u][k] = true;
      in_tree[v][sigma_index(inv(sigma_letter(k)))] = true;
      queue.push_back(v);
    }
  }
  std::vector<Word> to(n);  // spanning-tree path from the base, per state
  for (size_t qi = 1; qi < queue.size(); ++qi) {
    const int v = queue[qi];
    to[v] = to[parent[v]];
    to[v].push_back(sigma_letter(via[v]));
  }
  for (int u : queue)
    for (int k = 0; k < 2 * rank; ++k) {
      const int v = next[u][k];
      if (v < 0 || in_tree[u][k]) continue;
      const Letter a = sigma_letter(k);
      // count each geometric edge once; self-loops keep the positive dart
      if (u < v || (u == v && a < 0)) continue;
      Word w = to[u];
      w.push_back(a);
      Word back = inverse(to[v]);
      w.insert(w.end(), back.begin(), back.end());
      out.push_back(reduce(w));
    }
  return out;
}

inline SubgroupGraph SubgroupGraph::of(const std::vector<Word>& gens,
                                       int ambient_rank) {
  if (ambient_rank < 1) throw InputError("ambient rank must be positive");
  // darts of the unfolded wedge: (from, letter, to), both directions stored
  struct Dart {
    int from;
    Letter label;
    int to;
  };
  std::vector<Dart> darts;
  int n = 1;
  for (const Word& raw : gens) {
    const Word w = reduce(raw);
    check_letters(w, ambient_rank);
    if (w.empty()) continue;
    int at = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      const int to = i + 1 == w.size() ? 0 : n++;
      darts.push_back({at, w[i], to});
      darts.push_back({to, inv(w[i]), at});
      at = to;
    }
  }

  UnionFind uf(n);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::vector<int>> slot(
        n, std::vector<int>(2 * ambient_rank, -1));
    for (const Dart& d : darts) {
      const int u = uf.find(d.from);
      const int v = uf.find(d.to);
      int& s = slot[u][sigma_index(d.label)];
      if (s < 0) {
        s = v;
      } else if (uf.find(s) != v) {
        uf.unite(uf.find(s), v);
        changed = true;
      }
    }
  }

  // collapse onto the folded quotient; the base may have been absorbed into
  // any union class, so track where it landed
  std::vector<int> id(n, -1);
  int live = 0;
  for (int s = 0; s < n; ++s)
    if (uf.find(s) == s) id[s] = live++;
  const int base = id[uf.find(0)];
  std::vector<std::vector<int>> table(live,
                                      std::vector<int>(2 * ambient_rank, -1));
  for (const Dart& d : darts)
    table[id[uf.find(d.from)]][sigma_index(d.label)] = id[uf.find(d.to)];

  // trim hanging trees: a non-base vertex of degree one sits on no reduced
  // loop at the base, so it carries nothing of the subgroup
  for (bool trimmed = true; trimmed;) {
    trimmed = false;
    for (int s = 0; s < live; ++s) {
      if (s == base) continue;
      int degree = 0, lone = -1;
      for (int k = 0; k < 2 * ambient_rank; ++k)
        if (table[s][k] >= 0) {
          ++degree;
          lone = k;
        }
      if (degree != 1) continue;
      const int t = table[s][lone];
      table[s][lone] = -1;
      table[t][sigma_index(inv(sigma_letter(lone)))] = -1;
      trimmed = true;
    }
  }

  // renumber by breadth-first discovery in the germ order
  std::vector<int> order(live, -1);
  std::vector<int> queue{base};
  order[base] = 0;
  int named = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (int k = 0; k < 2 * ambient_rank; ++k) {
      const int v = table[queue[qi]][k];
      if (v < 0 || order[v] >= 0) continue;
      order[v] = named++;
      queue.push_back(v);
    }

  SubgroupGraph g;
  g.rank = ambient_rank;
  g.next.assign(named, std::vector<int>(2 * ambient_rank, -1));
  for (int s = 0; s < live; ++s) {
    if (order[s] < 0) continue;  // trimmed away or unreachable
    for (int k = 0; k < 2 * ambient_rank; ++k)
      if (table[s][k] >= 0 && order[table[s][k]] >= 0)
        g.next[order[s]][k] = order[table[s][k]];
  }
  return g;
}

}  // namespace pusher
