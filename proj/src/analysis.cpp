#include "elp/analysis.hpp"

#include <algorithm>
#include <numeric>

namespace elp {

DependenceGraph dep_pairs(const Program& p) {
  DependenceGraph g;
  for (const auto& r : p.rules) {
    Interp generative = r.head;
    Interp sub = 0, sub_pos = 0;
    for (const auto& l : r.body) {
      if (!l.subjective) generative |= atoms_of(l);
      else {
        sub |= atoms_of(l);
        if (l.negs == 0) sub_pos |= atoms_of(l);
      }
    }
    for (int a = 0; a < p.sig.size(); ++a) {
      if (!(generative >> a & 1)) continue;
      for (int b = 0; b < p.sig.size(); ++b) {
        if (sub >> b & 1) g.edges.emplace_back(a, b);
        if (sub_pos >> b & 1) g.plus_edges.emplace_back(a, b);
      }
    }
    g.coatom_groups.push_back(atoms_of(r) & ~sub);
  }
  for (auto* e : {&g.edges, &g.plus_edges}) {
    std::sort(e->begin(), e->end());
    e->erase(std::unique(e->begin(), e->end()), e->end());
  }
  return g;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::optional<LayerAssignment> solve_layers(
    int n, const std::vector<Interp>& groups,
    const std::vector<std::pair<int, int>>& edges) {
  UnionFind uf(n);
  for (Interp g : groups) {
    int first = -1;
    for (int a = 0; a < n; ++a)
      if (g >> a & 1) {
        if (first < 0) first = a;
        else uf.unite(first, a);
      }
  }
  // Strict edges between classes: for dep(a,b), a sits strictly above b.
  std::vector<std::vector<int>> below(n);
  for (auto [a, b] : edges) {
    int ca = uf.find(a), cb = uf.find(b);
    if (ca == cb) return std::nullopt;
    below[ca].push_back(cb);
  }
  // layer(c) = length of the longest strict chain below c; a cycle among
  // classes means no assignment exists.
  std::vector<int> layer(n, 0), state(n, 0);
  bool cyclic = false;
  auto dfs = [&](auto&& self, int c) -> int {
    if (state[c] == 1) { cyclic = true; return 0; }
    if (state[c] == 2) return layer[c];
    state[c] = 1;
    int lv = 0;
    for (int d : below[c]) lv = std::max(lv, self(self, d) + 1);
    state[c] = 2;
    return layer[c] = lv;
  };
  LayerAssignment out(n, 0);
  for (int a = 0; a < n; ++a) out[a] = dfs(dfs, uf.find(a));
  if (cyclic) return std::nullopt;
  return out;
}

}  // namespace

std::optional<LayerAssignment> stratify(const Program& p) {
  const DependenceGraph g = dep_pairs(p);
  return solve_layers(p.sig.size(), g.coatom_groups, g.edges);
}

std::optional<LayerAssignment> tight_stratify(const Program& p) {
  const DependenceGraph g = dep_pairs(p);
  return solve_layers(p.sig.size(), g.coatom_groups, g.plus_edges);
}

}  // namespace elp
