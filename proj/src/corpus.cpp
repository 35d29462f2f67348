#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "rkdom/harness.hpp"

namespace rkdom {

namespace {

std::string ahu(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> parts;
  for (Vertex c : t.neighbors(v))
    if (c != parent) parts.push_back(ahu(t, c, v));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ")";
  return out;
}

std::string two_digit(int n) {
  std::string s = std::to_string(n);
  return s.size() < 2 ? "0" + s : s;
}

}  // namespace

std::string tree_canonical(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("tree_canonical needs a tree");
  const auto centers = *structure(tree).centers;
  std::string best;
  for (Vertex c : centers) {
    std::string enc = ahu(tree, c, -1);
    if (best.empty() || enc < best) best = enc;
  }
  return best;
}

namespace {

// Colour refinement to the coarsest equitable partition. Colours are renumbered by sorted
// signature so the result is isomorphism-invariant.
void refine(const Graph& g, std::vector<int>& colors) {
  const int n = g.order();
  int classes = -1;
  while (true) {
    std::vector<std::pair<std::vector<int>, Vertex>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int>& s = sig[v].first;
      s.push_back(colors[v]);
      for (Vertex u : g.neighbors(v)) s.push_back(colors[u]);
      std::sort(s.begin() + 1, s.end());
      sig[v].second = v;
    }
    std::sort(sig.begin(), sig.end());
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++c;
      colors[sig[i].second] = c;
    }
    if (c + 1 == classes) return;
    classes = c + 1;
  }
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g) {}

  std::string run() {
    std::vector<int> colors(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v) colors[v] = g_.order() - g_.degree(v);
    search(colors);
    return best_;
  }

 private:
  void search(std::vector<int> colors) {
    refine(g_, colors);
    const int n = g_.order();
    std::vector<int> size(n, 0);
    for (int c : colors) ++size[c];
    int target = -1;
    for (int c = 0; c < n && target < 0; ++c)
      if (size[c] > 1) target = c;
    if (target < 0) {
      std::vector<Vertex> at(n);
      for (Vertex v = 0; v < n; ++v) at[colors[v]] = v;
      std::string code;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) code += g_.has_edge(at[i], at[j]) ? '1' : '0';
      if (code > best_) best_ = std::move(code);
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> next(n);
      for (Vertex u = 0; u < n; ++u) next[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
      search(std::move(next));
    }
  }

  const Graph& g_;
  std::string best_;
};

}  // namespace

std::string graph_canonical(const Graph& g) {
  std::vector<int> degrees;
  for (Vertex v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.rbegin(), degrees.rend());
  std::string out;
  for (std::size_t i = 0; i < degrees.size(); ++i) out += (i ? "," : "") + std::to_string(degrees[i]);
  return out + "|" + Canonizer(g).run();
}

CorpusKey corpus_key(const Graph& g) {
  if (g.order() >= 1 && is_tree(g)) return two_digit(g.order()) + ":t" + tree_canonical(g);
  return two_digit(g.order()) + ":g" + graph_canonical(g);
}

void for_each_tree(int n_max, const std::function<void(const Graph&)>& visit) {
  if (n_max < 1 || n_max > 14) throw std::invalid_argument("tree enumeration supports 1 <= n_max <= 14");
  std::map<std::string, Graph> level{{tree_canonical(Graph(1)), Graph(1)}};
  for (int n = 1;; ++n) {
    for (const auto& [key, t] : level) visit(t);
    if (n == n_max) break;
    std::map<std::string, Graph> next;
    for (const auto& [key, t] : level)
      for (Vertex v = 0; v < t.order(); ++v) {
        Graph grown = t;
        grown.add_edge(v, grown.add_vertex());
        std::string code = tree_canonical(grown);
        next.emplace(std::move(code), std::move(grown));
      }
    level = std::move(next);
  }
}

std::vector<Graph> enumerate_trees(int n_max) {
  std::vector<Graph> out;
  for_each_tree(n_max, [&](const Graph& t) { out.push_back(t); });
  return out;
}

std::vector<Graph> enumerate_connected(int n_max) {
  if (n_max < 1 || n_max > 7) throw std::invalid_argument("connected enumeration supports 1 <= n_max <= 7");
  std::vector<Graph> out;
  std::map<std::string, Graph> level{{graph_canonical(Graph(1)), Graph(1)}};
  for (int n = 1;; ++n) {
    for (const auto& [key, g] : level) out.push_back(g);
    if (n == n_max) break;
    // every connected graph has a vertex whose removal leaves it connected
    std::map<std::string, Graph> next;
    for (const auto& [key, g] : level) {
      const int m = g.order();
      for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        Graph grown = g;
        Vertex x = grown.add_vertex();
        for (int i = 0; i < m; ++i)
          if (mask & (1u << i)) grown.add_edge(i, x);
        std::string code = graph_canonical(grown);
        next.emplace(std::move(code), std::move(grown));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<Graph> enumerate_families(int n_max) {
  std::map<CorpusKey, Graph> found;
  if (n_max >= 5) {
    Graph c5 = make_family(FamilySpec::cycle(5)).graph;
    found.emplace(corpus_key(c5), c5);
  }
  for (const Graph& host : enumerate_connected(3)) {
    const int h = host.order();
    for (int mask = 0; mask < (1 << h); ++mask) {
      std::vector<BranchKind> kinds;
      int n = 0;
      for (int i = 0; i < h; ++i) {
        kinds.push_back((mask >> i) & 1 ? BranchKind::p5 : BranchKind::p4);
        n += branch_order(kinds.back());
      }
      if (n > n_max) continue;
      Graph g = make_family(FamilySpec::branch(host, kinds)).graph;
      found.emplace(corpus_key(g), g);
    }
  }
  std::vector<Graph> out;
  for (auto& [key, g] : found) out.push_back(g);
  return out;
}

std::string to_string(CorpusKind c) {
  switch (c) {
    case CorpusKind::trees: return "trees";
    case CorpusKind::connected: return "connected";
    case CorpusKind::families: return "families";
  }
  return "?";
}

CorpusKind parse_corpus(const std::string& s) {
  if (s == "trees") return CorpusKind::trees;
  if (s == "connected") return CorpusKind::connected;
  if (s == "families") return CorpusKind::families;
  throw std::invalid_argument("unknown corpus '" + s + "'");
}

std::vector<Graph> build_corpus(CorpusKind kind, int n_max) {
  switch (kind) {
    case CorpusKind::trees: return enumerate_trees(n_max);
    case CorpusKind::connected: return enumerate_connected(n_max);
    case CorpusKind::families: return enumerate_families(n_max);
  }
  return {};
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree needs n >= 1");
  Graph t(n);
  if (n == 1) return t;
  if (n == 2) {
    t.add_edge(0, 1);
    return t;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> prufer(n - 2);
  for (int& x : prufer) x = pick(rng);
  std::vector<int> degree(n, 1);
  for (int x : prufer) ++degree[x];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int x : prufer) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    t.add_edge(leaf, x);
    if (--degree[x] == 1) leaves.insert(x);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  t.add_edge(a, b);
  return t;
}

SolveResult solve_exact(const Graph& g, int k, Variant variant, const SolveOptions& opts) {
  if (is_tree(g)) return tree_solve(g, k, variant, Alphabet::restricted);
  return solve(g, k, variant, opts);
}

}  // namespace rkdom
