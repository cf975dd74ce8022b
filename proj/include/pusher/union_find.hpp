#pragma once

#include <numeric>
#include <vector>

namespace pusher {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }
};

}  // namespace pusher
