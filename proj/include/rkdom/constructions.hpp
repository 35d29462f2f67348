#pragma once

#include <array>
#include <string>

#include <boost/rational.hpp>

#include "rkdom/graph.hpp"
#include "rkdom/labeling.hpp"
#include "rkdom/solvers.hpp"

namespace rkdom {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);

struct BoundSpec {
  int k = 2;
  Variant variant = Variant::rdf;
};

// Per-vertex extremal coefficient A_k:
//   rdf:  3k/8 (k even), (3k+1)/8 (k odd)
//   srdf: 2k/5 (k in {2,4,6}), 3k/8 (k even >= 8), (3k+1)/8 (k odd)
Rational bound_coefficient(const BoundSpec& spec);

// A_k * n, exact. Requires n >= 3.
Rational bound_value(int n, const BoundSpec& spec);

// The two constants used by the lifting constructions. They differ exactly when k is odd.
struct LiftConstants {
  int a_floor = 0;  // floor(k/2)
  int a_ceil = 0;   // floor((k+1)/2)
};
LiftConstants lift_constants(int k);

// f' = c f, a (ck)-function of the same variant with weight c w(f).
WeightFunction scale(const WeightFunction& f, int c);

// (ck+1)-RDF from a k-RDF: weight l <= floor(k/2) becomes cl+1, heavier weights become cl.
// w(f') = c w(f) + |{v : f(v) <= floor(k/2)}|.
WeightFunction lift_rdf(const WeightFunction& f, int c);

// (ck+1)-SRDF from a k-SRDF with no weights strictly between 0 and k/2: zero stays zero and every
// nonzero l becomes cl+1. w(f') = c w(f) + (n - |V_0|). Throws if f is not in that form.
WeightFunction lift_srdf(const WeightFunction& f, int c);

bool in_restricted_form(const WeightFunction& f);

// Puts k on v and 0 on every leaf adjacent to v, keeping f elsewhere. Requires >= 2 adjacent
// leaves. Validity is preserved and weight never increases.
WeightFunction leaf_normalize(const Graph& g, const WeightFunction& f, Vertex v, Variant variant);

// g with `extra` new pendant vertices attached to v.
Graph attach_pendants(const Graph& g, Vertex v, int extra);

struct PendantCheck {
  bool equal = false;
  int base_value = 0;
  int extended_value = 0;
};

PendantCheck pendant_invariance_check(const Graph& g, Vertex v, int extra, int k, Variant variant,
                                      const SolveOptions& opts = {});

enum class TreeCase { star, double_star, leaf_removal, cherry_removal, spider, spider_split, fallback };
inline constexpr int kTreeCaseCount = 7;
std::string to_string(TreeCase c);

struct TreeConstruction {
  WeightFunction function;
  // number of times each case fired across the recursion
  std::array<int, kTreeCaseCount> case_hits{};
  bool used_fallback() const { return case_hits[static_cast<int>(TreeCase::fallback)] > 0; }
};

// Inductive k-SRDF builder for trees with weight at most bound_value(n, {k, srdf}).
TreeConstruction construct_tree_srdf(const Graph& tree, int k);

}  // namespace rkdom
