#pragma once

// Independent reference implementations used only by tests. Nothing here shares code with the
// search, DP or canonical-form paths under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rkdom/graph.hpp"
#include "rkdom/labeling.hpp"

namespace oracle {

using rkdom::Graph;
using rkdom::Variant;
using rkdom::Vertex;
using rkdom::WeightFunction;

inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

// hub 0 with r leaves
inline Graph star(int r) {
  Graph g(r + 1);
  for (int i = 1; i <= r; ++i) g.add_edge(0, i);
  return g;
}

// centers 0 and 1; leaves of 0 first
inline Graph double_star(int r, int s) {
  Graph g(2 + r + s);
  g.add_edge(0, 1);
  for (int i = 0; i < r; ++i) g.add_edge(0, 2 + i);
  for (int i = 0; i < s; ++i) g.add_edge(1, 2 + r + i);
  return g;
}

// The definitions evaluated literally, thresholds cross-multiplied by 2.
inline bool satisfies(const Graph& g, const std::vector<int>& f, int k, Variant variant) {
  for (Vertex u = 0; u < g.order(); ++u) {
    if (2 * f[u] >= k) continue;
    int total = f[u];
    for (Vertex v : g.neighbors(u))
      if (variant == Variant::rdf || 2 * f[v] > k) total += f[v];
    if (total < k) return false;
  }
  return true;
}

struct Optimum {
  int value = -1;
  std::vector<std::vector<int>> functions;  // every optimal function, lexicographic order
};

// Scans all (k+1)^n functions.
inline Optimum exhaustive(const Graph& g, int k, Variant variant) {
  const int n = g.order();
  std::vector<int> f(n, 0);
  Optimum best;
  while (true) {
    if (satisfies(g, f, k, variant)) {
      const int w = std::accumulate(f.begin(), f.end(), 0);
      if (best.value < 0 || w < best.value) {
        best.value = w;
        best.functions.clear();
      }
      if (w == best.value) best.functions.push_back(f);
    }
    int i = n - 1;
    while (i >= 0 && f[i] == k) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  std::sort(best.functions.begin(), best.functions.end());
  return best;
}

inline int domination(const Graph& g) {
  const int n = g.order();
  int best = n;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u) {
      bool covered = s >> u & 1;
      for (Vertex v : g.neighbors(u)) covered = covered || (s >> v & 1);
      ok = covered;
    }
    if (ok) best = std::min(best, __builtin_popcount(s));
  }
  return best;
}

// Minimum adjacency string over all n! vertex orders.
inline std::string brute_canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += g.has_edge(p[i], p[j]) ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::to_string(n) + ":" + best;
}

inline bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v))
      if (!seen[u]) seen[u] = 1, ++count, stack.push_back(u);
  }
  return count == g.order();
}

// Isomorphism classes of connected graphs on exactly n vertices from all edge subsets.
inline int count_connected_classes(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::set<std::string> seen;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t e = 0; e < slots.size(); ++e)
      if (mask >> e & 1) g.add_edge(slots[e].first, slots[e].second);
    if (connected(g)) seen.insert(brute_canonical(g));
  }
  return static_cast<int>(seen.size());
}

inline std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex c : t.neighbors(v))
    if (c != parent) kids.push_back(rooted_code(t, c, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "[";
  for (auto& c : kids) s += c;
  return s + "]";
}

// Minimum rooted code over every root: an isomorphism invariant that is complete for trees.
inline std::string tree_code(const Graph& t) {
  std::string best;
  for (Vertex r = 0; r < t.order(); ++r) {
    std::string s = rooted_code(t, r, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// Isomorphism classes of labelled trees on n vertices obtained from every Prüfer sequence.
inline int count_tree_classes(int n) {
  if (n <= 2) return 1;
  std::set<std::string> seen;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    Graph t(n);
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      t.add_edge(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) (a < 0 ? a : b) = v;
    t.add_edge(a, b);
    seen.insert(tree_code(t));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return static_cast<int>(seen.size());
}

inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  // random spanning tree then extra edges
  for (int v = 1; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace oracle
