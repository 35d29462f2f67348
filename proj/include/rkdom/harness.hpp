#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rkdom/constructions.hpp"
#include "rkdom/families.hpp"
#include "rkdom/graph.hpp"
#include "rkdom/solvers.hpp"

namespace rkdom {

// ---- canonical forms and corpora -------------------------------------------------------------

using CorpusKey = std::string;

// AHU encoding rooted at the center, or the smaller of the two encodings for bicentral trees.
std::string tree_canonical(const Graph& tree);

// Sorted degree sequence plus the maximum upper-triangle adjacency string over the vertex orders
// reached by colour refinement with individualization. Exact; cost grows with the automorphism group.
std::string graph_canonical(const Graph& g);

// "nn:t<ahu>" for trees, "nn:g<bits>" otherwise. Sorting keys sorts by order first.
CorpusKey corpus_key(const Graph& g);

// One representative per isomorphism class of trees with 1..n_max vertices, in key order.
std::vector<Graph> enumerate_trees(int n_max);
void for_each_tree(int n_max, const std::function<void(const Graph&)>& visit);

// One representative per isomorphism class of connected graphs with 1..n_max (<= 7) vertices.
std::vector<Graph> enumerate_connected(int n_max);

// C5 plus every {P4,P5}-branch graph whose host is a connected graph with at most 3 vertices,
// restricted to n <= n_max.
std::vector<Graph> enumerate_families(int n_max);

enum class CorpusKind { trees, connected, families };
std::string to_string(CorpusKind c);
CorpusKind parse_corpus(const std::string& s);
std::vector<Graph> build_corpus(CorpusKind kind, int n_max);

// Exact value using the tree DP on trees and branch and bound otherwise. srdf witnesses avoid
// weights strictly between 0 and k/2.
SolveResult solve_exact(const Graph& g, int k, Variant variant, const SolveOptions& opts = {});

// ---- theorem verification --------------------------------------------------------------------

enum class TheoremId { prop2_2, thm2_3_1, thm2_3_2, thm2_3_3, cor3_5, lem3_1, lem3_2, lem3_6, thm3_3, thm3_7, thm3_9 };
std::string to_string(TheoremId id);
TheoremId parse_theorem(const std::string& s);
const std::vector<TheoremId>& all_theorems();

struct Grid {
  int k_min = 2;
  int k_max = 9;
  int n_max = 7;
  CorpusKind corpus = CorpusKind::connected;
  int n_min = 3;
  int c_min = 1;
  int c_max = 3;
  // 0 = every corpus graph; otherwise the first `max_instances` graphs in key order
  int max_instances = 0;
  // random trees appended for thm3.3 (n in [3, random_n_max]); seeded, deterministic
  int random_trees = 0;
  int random_n_max = 200;
  std::uint64_t seed = 20240601;
  std::int64_t budget = kDefaultBudget;
};

struct Violation {
  std::string graph;  // corpus key
  int n = 0;
  int k = 0;
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct ExtremalHit {
  std::string graph;
  int n = 0;
  int k = 0;
  std::string note;
};

struct Skipped {
  std::string graph;
  int k = 0;
  std::string reason;
};

struct TheoremReport {
  TheoremId id = TheoremId::cor3_5;
  Grid grid;
  std::int64_t instances_checked = 0;
  std::vector<Violation> violations;
  std::vector<ExtremalHit> extremal_hits;
  std::vector<Skipped> skipped;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  // "verified" iff no violations and nothing skipped; "incomplete" when only skips occurred
  std::string status() const;
};

enum class Execution { serial, parallel };

TheoremReport verify_theorem(TheoremId id, const Grid& grid, Execution exec = Execution::parallel);

nlohmann::ordered_json to_json(const TheoremReport& r);

// Uniform random labelled tree via a Prüfer sequence.
Graph random_tree(int n, std::uint64_t seed);

}  // namespace rkdom
