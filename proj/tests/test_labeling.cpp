#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "rkdom/labeling.hpp"

using namespace rkdom;

TEST_CASE("weight") {
  CHECK(weight(WeightFunction(2, {0, 0, 0, 0})) == 0);
  CHECK(weight(WeightFunction(4, {4, 0, 0, 0})) == 4);
  CHECK(weight(WeightFunction(4, {2, 0, 4, 0, 2})) == 8);
}

TEST_CASE("weight function bounds are enforced") {
  CHECK_THROWS_AS(WeightFunction(3, {0, 4}), std::out_of_range);
  CHECK_THROWS_AS(WeightFunction(3, {-1}), std::out_of_range);
  WeightFunction f(3, {0, 1, 3, 3});
  CHECK_THROWS_AS(f.set(0, 4), std::out_of_range);
  CHECK(f.count(3) == 2);
  CHECK(f.level(3) == std::vector<Vertex>{2, 3});
}

TEST_CASE("k-RDF predicate") {
  const Graph p4 = oracle::path(4);
  CHECK(is_krdf(p4, WeightFunction(2, {0, 2, 0, 1})));
  auto bad = is_krdf(p4, WeightFunction(2, {1, 0, 0, 1}));
  CHECK_FALSE(bad);
  CHECK(*bad.violation == 1);
  CHECK(is_krdf(oracle::cycle(5), WeightFunction::constant(7, 5, 7)));
  CHECK_THROWS_AS(is_krdf(p4, WeightFunction(2, {0, 2, 0})), std::invalid_argument);
}

TEST_CASE("k-SRDF predicate") {
  const Graph p3 = oracle::path(3);
  CHECK(is_ksrdf(p3, WeightFunction(3, {0, 3, 0})));
  auto bad = is_ksrdf(p3, WeightFunction(3, {0, 2, 0}));
  CHECK_FALSE(bad);
  CHECK(*bad.violation == 0);
  WeightFunction c5(8, {5, 0, 5, 5, 0});
  CHECK(is_ksrdf(oracle::cycle(5), c5));
  CHECK(c5.weight() == 15);
}

TEST_CASE("half thresholds for even k impose nothing") {
  for (int k : {2, 4, 6, 8}) {
    const Graph g = oracle::path(5);
    const auto f = WeightFunction::constant(k, 5, k / 2);
    CHECK(is_krdf(g, f));
    CHECK(is_ksrdf(g, f));
  }
  // odd k: (k-1)/2 is below half and does trigger the condition
  CHECK_FALSE(is_ksrdf(oracle::path(3), WeightFunction::constant(3, 3, 1)));
}

TEST_CASE("file format round trip and errors") {
  WeightFunction f(5, {0, 3, 5, 1});
  CHECK(format_weight_function(f) == "5\n0 3 5 1\n");
  CHECK(parse_weight_function(format_weight_function(f)) == f);
  CHECK(parse_weight_function("# c\n4\n\n4 0 0 0\n") == WeightFunction(4, {4, 0, 0, 0}));
  CHECK_THROWS(parse_weight_function("3\n0 4\n"));
  CHECK_THROWS(parse_weight_function("x\n0 1\n"));
  CHECK_THROWS(parse_weight_function(""));
}

TEST_CASE("variant names") {
  CHECK(to_string(Variant::rdf) == "rdf");
  CHECK(parse_variant("srdf") == Variant::srdf);
  CHECK_THROWS(parse_variant("dom"));
}

TEST_CASE("predicates agree with the literal definitions on random functions") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + trial % 8;
    const int k = 2 + trial % 7;
    Graph g = oracle::random_connected(n, 0.3, rng);
    std::vector<int> w(n);
    for (int& x : w) x = std::uniform_int_distribution<int>(0, k)(rng);
    WeightFunction f(k, w);
    const bool weak = oracle::satisfies(g, w, k, Variant::rdf);
    const bool strong = oracle::satisfies(g, w, k, Variant::srdf);
    CHECK(bool(is_krdf(g, f)) == weak);
    CHECK(bool(is_ksrdf(g, f)) == strong);
    // every k-SRDF is a k-RDF
    if (strong) CHECK(weak);
    CHECK(is_krdf(g, WeightFunction::constant(k, n, k)));
    CHECK(is_ksrdf(g, WeightFunction::constant(k, n, k)));
    // raising a weight never breaks validity
    for (Variant v : {Variant::rdf, Variant::srdf}) {
      if (!is_valid(g, f, v)) continue;
      WeightFunction up = f;
      const Vertex x = std::uniform_int_distribution<int>(0, n - 1)(rng);
      up.set(x, std::min(k, f[x] + 1 + trial % 3));
      CHECK(is_valid(g, up, v));
    }
    // the reported violation is the smallest violating vertex
    for (Variant v : {Variant::rdf, Variant::srdf}) {
      auto r = is_valid(g, f, v);
      if (r) continue;
      std::optional<Vertex> first;
      for (Vertex u = 0; u < n && !first; ++u) {
        if (2 * w[u] >= k) continue;
        int total = w[u];
        for (Vertex x : g.neighbors(u))
          if (v == Variant::rdf || 2 * w[x] > k) total += w[x];
        if (total < k) first = u;
      }
      CHECK(r.violation == first);
    }
  }
}
