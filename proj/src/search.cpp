#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "json.hpp"
#include "rkdom/solvers.hpp"

namespace rkdom {

std::string to_string(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::restricted: return "restricted";
    case Method::tree_dp: return "tree_dp";
    case Method::dom_brute: return "dom_brute";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void require_searchable(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (g.order() < 1) throw std::invalid_argument("graph must have at least one vertex");
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
}

// BFS order from the lowest-indexed vertex of maximum degree.
std::vector<Vertex> search_order(const Graph& g) {
  Vertex root = 0;
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) > g.degree(root)) root = v;
  std::vector<Vertex> order;
  std::vector<char> seen(g.order(), 0);
  std::deque<Vertex> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    order.push_back(u);
    for (Vertex v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
  }
  return order;
}

std::vector<Vertex> greedy_dominating_set(const Graph& g) {
  std::vector<char> covered(g.order(), 0);
  int remaining = g.order();
  std::vector<Vertex> chosen;
  while (remaining > 0) {
    Vertex best = -1;
    int best_gain = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
      int gain = covered[v] ? 0 : 1;
      for (Vertex u : g.neighbors(v)) gain += covered[u] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    chosen.push_back(best);
    if (!covered[best]) covered[best] = 1, --remaining;
    for (Vertex u : g.neighbors(best))
      if (!covered[u]) covered[u] = 1, --remaining;
  }
  return chosen;
}

// Depth-first assignment in BFS order with incumbent, deficit lower-bound and closed
// neighbourhood violation pruning. In enumeration mode the target weight is fixed and every
// valid assignment hitting it is reported.
class Search {
 public:
  Search(const Graph& g, int k, Variant variant, std::vector<int> alphabet, std::int64_t budget)
      : g_(g), k_(k), variant_(variant), alphabet_(std::move(alphabet)), budget_(budget) {
    const int n = g.order();
    order_ = search_order(g);
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) pos[order_[p]] = p;
    closes_at_.resize(n);
    for (Vertex u = 0; u < n; ++u) {
      int last = pos[u];
      for (Vertex v : g.neighbors(u)) last = std::max(last, pos[v]);
      closes_at_[last].push_back(u);
    }
    std::sort(alphabet_.rbegin(), alphabet_.rend());
    f_.assign(n, -1);
    contrib_.assign(n, 0);
  }

  // Returns true when an assignment strictly lighter than `bound` was found.
  bool minimize(int bound, std::vector<int>& best) {
    best_ = bound;
    enumerate_ = false;
    found_ = false;
    dfs(0, 0);
    if (found_) best = best_assignment_;
    return found_;
  }

  // Emits every assignment of weight exactly `target` until the sink returns false.
  void enumerate(int target, const std::function<bool(const std::vector<int>&)>& sink) {
    best_ = target;
    enumerate_ = true;
    stopped_ = false;
    sink_ = &sink;
    dfs(0, 0);
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  int contribution(int value) const {
    return variant_ == Variant::rdf || above_half(value, k_) ? value : 0;
  }

  void assign(Vertex v, int value, int sign) {
    int c = contribution(value) * sign;
    if (variant_ == Variant::rdf) {
      contrib_[v] += c;
    } else {
      contrib_[v] += value * sign;
    }
    for (Vertex u : g_.neighbors(v)) contrib_[u] += c;
  }

  bool violated(Vertex u) const { return below_half(f_[u], k_) && contrib_[u] < k_; }

  int lower_bound_extra() const {
    const int half_up = (k_ + 1) / 2;
    int lb = 0;
    for (Vertex u = 0; u < g_.order(); ++u) {
      int need;
      if (f_[u] < 0) {
        need = std::min(half_up, std::max(0, k_ - contrib_[u]));
      } else if (below_half(f_[u], k_)) {
        need = std::max(0, k_ - contrib_[u]);
      } else {
        continue;
      }
      lb = std::max(lb, need);
    }
    return lb;
  }

  void dfs(int depth, int partial) {
    if (stopped_) return;
    if (++nodes_ > budget_) throw BudgetExceeded(budget_);
    if (depth == static_cast<int>(order_.size())) {
      if (enumerate_) {
        if (partial == best_ && !(*sink_)(f_)) stopped_ = true;
      } else if (partial < best_) {
        best_ = partial;
        best_assignment_ = f_;
        found_ = true;
      }
      return;
    }
    const Vertex v = order_[depth];
    for (int value : alphabet_) {
      const int w = partial + value;
      if (enumerate_ ? w > best_ : w >= best_) continue;
      f_[v] = value;
      assign(v, value, +1);
      bool ok = true;
      for (Vertex u : closes_at_[depth])
        if (violated(u)) {
          ok = false;
          break;
        }
      if (ok) {
        const int lb = w + lower_bound_extra();
        ok = enumerate_ ? lb <= best_ : lb < best_;
      }
      if (ok) dfs(depth + 1, w);
      assign(v, value, -1);
      f_[v] = -1;
    }
  }

  const Graph& g_;
  int k_;
  Variant variant_;
  std::vector<int> alphabet_;
  std::int64_t budget_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> closes_at_;
  std::vector<int> f_;
  std::vector<int> contrib_;
  int best_ = 0;
  bool enumerate_ = false;
  bool found_ = false;
  bool stopped_ = false;
  std::vector<int> best_assignment_;
  const std::function<bool(const std::vector<int>&)>* sink_ = nullptr;
  std::int64_t nodes_ = 0;
};

std::vector<int> alphabet_for(int k, Alphabet alphabet) {
  std::vector<int> out;
  for (int i = 0; i <= k; ++i)
    if (alphabet == Alphabet::full || i == 0 || !below_half(i, k)) out.push_back(i);
  return out;
}

SolveResult run_minimize(const Graph& g, int k, Variant variant, Alphabet alphabet, Method method,
                         const SolveOptions& opts) {
  require_searchable(g, k);
  auto t0 = Clock::now();
  // k on a dominating set is valid for both variants.
  std::vector<int> incumbent(g.order(), 0);
  for (Vertex v : greedy_dominating_set(g)) incumbent[v] = k;
  const int incumbent_weight = std::accumulate(incumbent.begin(), incumbent.end(), 0);

  Search search(g, k, variant, alphabet_for(k, alphabet), opts.budget);
  std::vector<int> best = incumbent;
  search.minimize(incumbent_weight, best);

  SolveResult r;
  r.witness = WeightFunction(k, best);
  r.value = r.witness.weight();
  r.method = method;
  r.stats.nodes = search.nodes();
  r.stats.millis = millis_since(t0);
  return r;
}

}  // namespace

SolveResult domination_number(const Graph& g, const SolveOptions& opts) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("domination number of the empty graph is undefined");
  if (n > 62) throw std::invalid_argument("domination brute force supports n <= 62");
  auto t0 = Clock::now();
  std::vector<std::uint64_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = std::uint64_t{1} << v;
    for (Vertex u : g.neighbors(v)) closed[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::int64_t nodes = 0;
  for (int size = 1; size <= n; ++size) {
    // Gosper's hack over subsets of the given size.
    std::uint64_t s = (std::uint64_t{1} << size) - 1;
    while (s <= all) {
      if (++nodes > opts.budget) throw BudgetExceeded(opts.budget);
      std::uint64_t cover = 0;
      for (std::uint64_t t = s; t; t &= t - 1) cover |= closed[std::countr_zero(t)];
      if (cover == all) {
        std::vector<int> indicator(n, 0);
        for (std::uint64_t t = s; t; t &= t - 1) indicator[std::countr_zero(t)] = 1;
        SolveResult r;
        r.witness = WeightFunction(1, indicator);
        r.value = size;
        r.method = Method::dom_brute;
        r.stats = {nodes, millis_since(t0)};
        return r;
      }
      std::uint64_t c = s & -s;
      std::uint64_t rr = s + c;
      if (rr == 0) break;
      s = (((rr ^ s) >> 2) / c) | rr;
    }
  }
  throw std::logic_error("unreachable: V dominates itself");
}

SolveResult gamma_k(const Graph& g, int k, const SolveOptions& opts) {
  return run_minimize(g, k, Variant::rdf, Alphabet::full, Method::brute, opts);
}

SolveResult gamma_k_strong(const Graph& g, int k, Alphabet alphabet, const SolveOptions& opts) {
  return run_minimize(g, k, Variant::srdf, alphabet,
                      alphabet == Alphabet::restricted ? Method::restricted : Method::brute, opts);
}

SolveResult solve(const Graph& g, int k, Variant variant, const SolveOptions& opts) {
  return variant == Variant::rdf ? gamma_k(g, k, opts) : gamma_k_strong(g, k, Alphabet::restricted, opts);
}

std::int64_t for_each_min_function(const Graph& g, int k, Variant variant,
                                   const std::function<bool(const WeightFunction&)>& visit,
                                   const SolveOptions& opts) {
  const int target = solve(g, k, variant, opts).value;
  Search search(g, k, variant, alphabet_for(k, Alphabet::full), opts.budget);
  std::int64_t emitted = 0;
  std::function<bool(const std::vector<int>&)> forward = [&](const std::vector<int>& f) {
    ++emitted;
    return visit(WeightFunction(k, f));
  };
  search.enumerate(target, forward);
  return emitted;
}

std::int64_t all_min_functions(const Graph& g, int k, Variant variant,
                               const std::function<void(const WeightFunction&)>& sink,
                               const SolveOptions& opts) {
  return for_each_min_function(
      g, k, variant,
      [&](const WeightFunction& f) {
        sink(f);
        return true;
      },
      opts);
}

std::string to_json(const SolveResult& r) {
  nlohmann::ordered_json j;
  j["value"] = r.value;
  j["k"] = r.witness.k();
  j["witness"] = r.witness.values();
  j["method"] = to_string(r.method);
  j["nodes"] = r.stats.nodes;
  j["millis"] = std::round(r.stats.millis * 1000.0) / 1000.0;
  return j.dump();
}

}  // namespace rkdom
