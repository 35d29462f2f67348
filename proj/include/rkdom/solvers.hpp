#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "rkdom/graph.hpp"
#include "rkdom/labeling.hpp"

namespace rkdom {

enum class Method { brute, restricted, tree_dp, dom_brute };
enum class Alphabet { full, restricted };

std::string to_string(Method m);

// Thrown when a search exhausts its node budget. Never accompanied by a partial answer.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::int64_t budget)
      : std::runtime_error("node budget of " + std::to_string(budget) + " exceeded") {}
};

inline constexpr std::int64_t kDefaultBudget = 1'000'000'000;

struct SolveOptions {
  std::int64_t budget = kDefaultBudget;
};

struct SolveStats {
  std::int64_t nodes = 0;
  double millis = 0.0;
};

struct SolveResult {
  int value = 0;
  WeightFunction witness;
  Method method = Method::brute;
  SolveStats stats;
};

// Minimum dominating set size; the witness is the 0/1 indicator (k = 1).
SolveResult domination_number(const Graph& g, const SolveOptions& opts = {});

// Exact Roman k-domination number by branch and bound.
SolveResult gamma_k(const Graph& g, int k, const SolveOptions& opts = {});

// Exact strong Roman k-domination number. The restricted alphabet skips weights strictly
// between 0 and k/2.
SolveResult gamma_k_strong(const Graph& g, int k, Alphabet alphabet = Alphabet::restricted,
                           const SolveOptions& opts = {});

SolveResult solve(const Graph& g, int k, Variant variant, const SolveOptions& opts = {});

// Rooted DP over a tree, polynomial in n for fixed k. The restricted alphabet only matters for srdf.
SolveResult tree_solve(const Graph& tree, int k, Variant variant, Alphabet alphabet = Alphabet::full);

// Streams every valid function of minimum weight exactly once; returns how many were emitted.
std::int64_t all_min_functions(const Graph& g, int k, Variant variant,
                               const std::function<void(const WeightFunction&)>& sink,
                               const SolveOptions& opts = {});

// Same stream, stopping as soon as `visit` returns false. Returns how many were visited.
std::int64_t for_each_min_function(const Graph& g, int k, Variant variant,
                                   const std::function<bool(const WeightFunction&)>& visit,
                                   const SolveOptions& opts = {});

// {"value":..,"witness":[..],"k":..,"method":"..","nodes":..,"millis":..}
std::string to_json(const SolveResult& r);

}  // namespace rkdom
