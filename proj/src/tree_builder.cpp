#include <algorithm>

#include "rkdom/constructions.hpp"

namespace rkdom {

std::string to_string(TreeCase c) {
  switch (c) {
    case TreeCase::star: return "star";
    case TreeCase::double_star: return "double_star";
    case TreeCase::leaf_removal: return "leaf_removal";
    case TreeCase::cherry_removal: return "cherry_removal";
    case TreeCase::spider: return "spider";
    case TreeCase::spider_split: return "spider_split";
    case TreeCase::fallback: return "fallback";
  }
  return "?";
}

namespace {

int farthest(const std::vector<int>& dist) {
  return static_cast<int>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

class TreeBuilder {
 public:
  TreeBuilder(int k, std::array<int, kTreeCaseCount>& hits) : k_(k), hits_(hits) {}

  std::vector<int> build(const Graph& t) {
    std::vector<int> f = build_unchecked(t);
    WeightFunction wf(k_, f);
    if (!is_ksrdf(t, wf) || Rational(wf.weight()) > bound_value(t.order(), {k_, Variant::srdf})) {
      hit(TreeCase::fallback);
      return tree_solve(t, k_, Variant::srdf).witness.values();
    }
    return f;
  }

 private:
  void hit(TreeCase c) { ++hits_[static_cast<int>(c)]; }
  int half_up() const { return (k_ + 1) / 2; }

  std::vector<int> build_unchecked(const Graph& t) {
    const int n = t.order();
    const auto from0 = bfs_distances(t, 0);
    const Vertex a = farthest(from0);
    const auto from_a = bfs_distances(t, a);
    const Vertex b = farthest(from_a);
    const auto from_b = bfs_distances(t, b);
    const int diam = from_a[b];
    std::vector<int> f(n, 0);

    if (diam <= 2) {
      hit(TreeCase::star);
      Vertex center = 0;
      for (Vertex v = 0; v < n; ++v)
        if (t.degree(v) > t.degree(center)) center = v;
      f[center] = k_;
      return f;
    }

    if (diam == 3) {
      hit(TreeCase::double_star);
      std::vector<Vertex> centers;
      for (Vertex v = 0; v < n; ++v)
        if (t.degree(v) > 1) centers.push_back(v);
      const Vertex c1 = centers[0], c2 = centers[1];
      const int r = leaves_adjacent(t, c1).size();
      const int s = leaves_adjacent(t, c2).size();
      if (r == 1 || s == 1) {
        const Vertex lone = r == 1 ? c1 : c2;
        const Vertex other = lone == c1 ? c2 : c1;
        f[other] = k_;
        f[leaves_adjacent(t, lone).members().front()] = half_up();
      } else {
        f[c1] = f[c2] = k_;
      }
      return f;
    }

    // Longest path w0 ... r, with deg(v0) maximal over all choices, then smallest (w0, r).
    Vertex w0 = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (std::max(from_a[v], from_b[v]) != diam) continue;
      const Vertex nb = t.neighbors(v).front();
      if (w0 < 0 || t.degree(nb) > t.degree(t.neighbors(w0).front())) w0 = v;
    }
    const Vertex v0 = t.neighbors(w0).front();
    const auto from_w0 = bfs_distances(t, w0);
    Vertex r = 0;
    while (from_w0[r] != diam) ++r;
    const auto from_r = bfs_distances(t, r);
    Vertex u = -1;
    for (Vertex x : t.neighbors(v0))
      if (from_r[x] == from_r[v0] - 1) u = x;

    if (t.degree(v0) > 3) {
      hit(TreeCase::leaf_removal);
      VertexSet gone(n, {w0});
      auto del = delete_vertices(t, gone);
      auto sub = build(del.graph);
      // Re-extend: v0 carries k, its leaves (now including w0) carry 0.
      WeightFunction g(k_, sub);
      g = leaf_normalize(del.graph, g, del.new_index[v0], Variant::srdf);
      for (Vertex x = 0; x < del.graph.order(); ++x) f[del.old_index[x]] = g[x];
      f[w0] = 0;
      return f;
    }

    if (t.degree(v0) == 3) {
      hit(TreeCase::cherry_removal);
      VertexSet gone(n, {v0});
      for (Vertex x : t.neighbors(v0))
        if (x != u) gone.insert(x);
      auto del = delete_vertices(t, gone);
      auto sub = build(del.graph);
      for (Vertex x = 0; x < del.graph.order(); ++x) f[del.old_index[x]] = sub[x];
      f[v0] = k_;
      return f;
    }

    const auto from_u = bfs_distances(t, u);
    bool spider = true;
    for (Vertex x = 0; x < n; ++x)
      if (x != u && (t.degree(x) > 2 || from_u[x] > 2)) spider = false;
    if (spider) {
      hit(TreeCase::spider);
      return spider_weights(t, u, from_u);
    }

    hit(TreeCase::spider_split);
    // T' is u with its descendants when rooted at r; T'' is the rest.
    const Vertex p = [&] {
      for (Vertex x : t.neighbors(u))
        if (from_r[x] == from_r[u] - 1) return x;
      return Vertex{-1};
    }();
    VertexSet upper(n);
    {
      std::vector<Vertex> stack{p};
      upper.insert(p);
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : t.neighbors(x))
          if (y != u && !upper.contains(y)) upper.insert(y), stack.push_back(y);
      }
    }
    VertexSet lower(n);
    for (Vertex x = 0; x < n; ++x)
      if (!upper.contains(x)) lower.insert(x);
    auto spider_part = delete_vertices(t, upper);
    auto rest = delete_vertices(t, lower);
    if (rest.graph.order() < 3) {
      hit(TreeCase::fallback);
      return tree_solve(t, k_, Variant::srdf).witness.values();
    }
    auto fs = build(spider_part.graph);
    auto fr = build(rest.graph);
    for (Vertex x = 0; x < spider_part.graph.order(); ++x) f[spider_part.old_index[x]] = fs[x];
    for (Vertex x = 0; x < rest.graph.order(); ++x) f[rest.old_index[x]] = fr[x];
    return f;
  }

  std::vector<int> spider_weights(const Graph& t, Vertex head, const std::vector<int>& from_head) {
    const int n = t.order();
    std::vector<Vertex> healthy;
    int wounded = 0;
    for (Vertex x = 0; x < n; ++x) {
      if (from_head[x] == 2) healthy.push_back(x);
      if (from_head[x] == 1 && t.degree(x) == 1) ++wounded;
    }
    if (healthy.size() == 2 && wounded == 0) {
      // P5: exact optimum
      return tree_solve(t, k_, Variant::srdf).witness.values();
    }
    std::vector<int> f(n, 0);
    if (wounded == 0 && k_ % 2 == 1) {
      f[head] = half_up();
    } else {
      f[head] = k_;
    }
    for (Vertex x : healthy) f[x] = half_up();
    return f;
  }

  int k_;
  std::array<int, kTreeCaseCount>& hits_;
};

}  // namespace

TreeConstruction construct_tree_srdf(const Graph& tree, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (!is_tree(tree) || tree.order() < 3) throw std::invalid_argument("construct_tree_srdf needs a tree with n >= 3");
  TreeConstruction out;
  TreeBuilder builder(k, out.case_hits);
  out.function = WeightFunction(k, builder.build(tree));
  return out;
}

}  // namespace rkdom
