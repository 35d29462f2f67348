#include <algorithm>
#include <chrono>
#include <limits>

#include "rkdom/solvers.hpp"

namespace rkdom {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Per-vertex state: own weight a and the residual demand d that only the parent can
// discharge. For rdf the parent discharges d iff f(p) >= d. For srdf the parent's weight counts
// only when it is heavy, so d is discharged iff d == 0 or (f(p) > k/2 and f(p) >= d).
class TreeDp {
 public:
  TreeDp(const Graph& t, int k, Variant variant, Alphabet alphabet)
      : t_(t), k_(k), variant_(variant), alphabet_(alphabet) {
    const int n = t.order();
    parent_.assign(n, -1);
    children_.resize(n);
    std::vector<Vertex> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      post_.push_back(v);
      for (Vertex u : t.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          parent_[u] = v;
          children_[v].push_back(u);
          stack.push_back(u);
        }
    }
    std::reverse(post_.begin(), post_.end());
    table_.assign(n, Table(k + 1, std::vector<Cell>(k + 1)));
    steps_.resize(n);
  }

  int solve() {
    for (Vertex v : post_) fill(v);
    int best = kInf;
    int best_a = -1;
    for (int a = 0; a <= k_; ++a)
      if (table_[0][a][0].cost < best) best = table_[0][a][0].cost, best_a = a;
    if (best >= kInf) throw std::logic_error("tree DP found no valid function");
    witness_.assign(t_.order(), 0);
    rebuild(0, best_a, 0);
    return best;
  }

  const std::vector<int>& witness() const { return witness_; }
  std::int64_t cells() const { return cells_; }

 private:
  struct Cell {
    int cost = kInf;
    int capped_sum = -1;  // children contribution that produced this cell
  };
  using Table = std::vector<std::vector<Cell>>;  // [a][d]

  struct Choice {
    int prev_sum = -1;
    int child_a = -1;
    int child_d = -1;
  };
  // knapsack after each child: [child index + 1][capped sum]
  struct Steps {
    std::vector<std::vector<int>> cost;
    std::vector<std::vector<Choice>> choice;
  };

  int contribution(int a) const { return variant_ == Variant::rdf || above_half(a, k_) ? a : 0; }

  bool allowed(int a) const {
    return alphabet_ == Alphabet::full || variant_ == Variant::rdf || a == 0 || !below_half(a, k_);
  }

  bool discharges(int parent_weight, int d) const {
    if (d == 0) return true;
    if (variant_ == Variant::srdf && !above_half(parent_weight, k_)) return false;
    return parent_weight >= d;
  }

  void fill(Vertex v) {
    const auto& kids = children_[v];
    steps_[v].assign(k_ + 1, Steps{});
    for (int a = 0; a <= k_; ++a) {
      if (!allowed(a)) continue;
      Steps& st = steps_[v][a];
      st.cost.assign(kids.size() + 1, std::vector<int>(k_ + 1, kInf));
      st.choice.assign(kids.size() + 1, std::vector<Choice>(k_ + 1));
      st.cost[0][0] = 0;
      for (std::size_t i = 0; i < kids.size(); ++i) {
        const Table& ct = table_[kids[i]];
        for (int s = 0; s <= k_; ++s) {
          if (st.cost[i][s] >= kInf) continue;
          for (int ca = 0; ca <= k_; ++ca)
            for (int cd = 0; cd <= k_; ++cd) {
              ++cells_;
              const int c = ct[ca][cd].cost;
              if (c >= kInf || !discharges(a, cd)) continue;
              const int ns = std::min(k_, s + contribution(ca));
              const int total = st.cost[i][s] + c;
              if (total < st.cost[i + 1][ns]) {
                st.cost[i + 1][ns] = total;
                st.choice[i + 1][ns] = {s, ca, cd};
              }
            }
        }
      }
      const auto& last = st.cost[kids.size()];
      for (int s = 0; s <= k_; ++s) {
        if (last[s] >= kInf) continue;
        const int d = below_half(a, k_) ? std::max(0, k_ - a - s) : 0;
        Cell& cell = table_[v][a][d];
        if (a + last[s] < cell.cost) cell = {a + last[s], s};
      }
    }
  }

  void rebuild(Vertex v, int a, int d) {
    witness_[v] = a;
    const Steps& st = steps_[v][a];
    int s = table_[v][a][d].capped_sum;
    const auto& kids = children_[v];
    for (std::size_t i = kids.size(); i-- > 0;) {
      const Choice& c = st.choice[i + 1][s];
      rebuild(kids[i], c.child_a, c.child_d);
      s = c.prev_sum;
    }
  }

  const Graph& t_;
  int k_;
  Variant variant_;
  Alphabet alphabet_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> post_;
  std::vector<Table> table_;
  std::vector<std::vector<Steps>> steps_;
  std::vector<int> witness_;
  std::int64_t cells_ = 0;
};

}  // namespace

SolveResult tree_solve(const Graph& tree, int k, Variant variant, Alphabet alphabet) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (!is_tree(tree)) throw std::invalid_argument("tree_solve requires a tree");
  auto t0 = std::chrono::steady_clock::now();
  TreeDp dp(tree, k, variant, alphabet);
  SolveResult r;
  r.value = dp.solve();
  r.witness = WeightFunction(k, dp.witness());
  r.method = Method::tree_dp;
  r.stats.nodes = dp.cells();
  r.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace rkdom
