#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "rkdom/harness.hpp"

using namespace rkdom;

TEST_CASE("bound values") {
  CHECK(bound_value(5, {8, Variant::srdf}) == Rational(15));
  CHECK(bound_value(4, {5, Variant::rdf}) == Rational(8));
  CHECK(bound_value(5, {2, Variant::srdf}) == Rational(4));
  CHECK(bound_value(7, {3, Variant::rdf}) == Rational(35, 4));
  CHECK_THROWS_AS(bound_value(2, {2, Variant::rdf}), std::invalid_argument);
}

TEST_CASE("bound coefficient rows") {
  CHECK(bound_coefficient({2, Variant::rdf}) == Rational(3, 4));
  CHECK(bound_coefficient({2, Variant::srdf}) == Rational(4, 5));
  CHECK(bound_coefficient({3, Variant::rdf}) == Rational(5, 4));
  CHECK(bound_coefficient({3, Variant::srdf}) == Rational(5, 4));
  for (int k : {4, 6}) {
    CHECK(bound_coefficient({k, Variant::rdf}) == Rational(3 * k, 8));
    CHECK(bound_coefficient({k, Variant::srdf}) == Rational(2 * k, 5));
  }
  for (int k : {8, 10, 12}) {
    CHECK(bound_coefficient({k, Variant::rdf}) == Rational(3 * k, 8));
    CHECK(bound_coefficient({k, Variant::srdf}) == Rational(3 * k, 8));
  }
  for (int k : {5, 7, 9, 11}) {
    CHECK(bound_coefficient({k, Variant::rdf}) == Rational(3 * k + 1, 8));
    CHECK(bound_coefficient({k, Variant::srdf}) == Rational(3 * k + 1, 8));
  }
  CHECK(to_string(Rational(32, 5)) == "32/5");
  CHECK(to_string(Rational(6)) == "6");
}

TEST_CASE("lift constants") {
  for (int k = 2; k <= 12; ++k) {
    auto c = lift_constants(k);
    CHECK(c.a_floor == k / 2);
    CHECK(c.a_ceil == (k + 1) / 2);
    CHECK((c.a_ceil == c.a_floor) == (k % 2 == 0));
  }
}

TEST_CASE("scale") {
  const Graph p3 = oracle::path(3);
  auto s = scale(WeightFunction(2, {0, 2, 0}), 3);
  CHECK(s == WeightFunction(6, {0, 6, 0}));
  CHECK(is_krdf(p3, s));

  const Graph c5 = oracle::cycle(5);
  auto base = gamma_k_strong(c5, 4);
  auto doubled = scale(base.witness, 2);
  CHECK(doubled.k() == 8);
  CHECK(doubled.weight() == 16);
  CHECK(is_ksrdf(c5, doubled));
  CHECK(gamma_k_strong(c5, 8).value == 15);

  WeightFunction f(4, {1, 3, 0, 4});
  CHECK(scale(f, 1) == f);
  CHECK_THROWS(scale(f, 0));
}

TEST_CASE("lift_rdf") {
  auto p3 = lift_rdf(WeightFunction(2, {0, 2, 0}), 2);
  CHECK(p3 == WeightFunction(5, {1, 4, 1}));
  CHECK(p3.weight() == 6);
  CHECK(is_krdf(oracle::path(3), p3));

  // weight 1 sits at floor(k/2) = 1 and is lifted to 2*1+1
  auto p4 = lift_rdf(WeightFunction(2, {0, 2, 0, 1}), 2);
  CHECK(p4 == WeightFunction(5, {1, 4, 1, 3}));
  CHECK(p4.weight() == 9);
  CHECK(is_krdf(oracle::path(4), p4));
  CHECK_FALSE(is_krdf(oracle::path(4), WeightFunction(5, {1, 4, 1, 2})));

  // c = 1 merges levels floor(k/2) and floor(k/2)+1
  auto merged = lift_rdf(WeightFunction(4, {0, 1, 2, 3, 4}), 1);
  CHECK(merged == WeightFunction(5, {1, 2, 3, 3, 4}));
}

TEST_CASE("lift_srdf") {
  auto p3 = lift_srdf(WeightFunction(3, {0, 3, 0}), 1);
  CHECK(p3 == WeightFunction(4, {0, 4, 0}));
  CHECK(p3.weight() == 4);
  CHECK(is_ksrdf(oracle::path(3), p3));
  CHECK(gamma_k_strong(oracle::path(3), 4).value == 4);

  auto s3 = lift_srdf(WeightFunction(2, {2, 0, 0, 0}), 2);
  CHECK(s3 == WeightFunction(5, {5, 0, 0, 0}));
  CHECK(is_ksrdf(oracle::star(3), s3));

  CHECK_THROWS_AS(lift_srdf(WeightFunction(4, {1, 4, 0}), 2), std::invalid_argument);
  CHECK(in_restricted_form(WeightFunction(4, {0, 2, 4})));
  CHECK_FALSE(in_restricted_form(WeightFunction(5, {0, 2, 5})));
}

TEST_CASE("weight identities on every small connected graph") {
  for (const Graph& g : enumerate_connected(6)) {
    if (g.order() < 2) continue;
    for (int k = 2; k <= 4; ++k) {
      const auto weak = gamma_k(g, k).witness;
      const auto strong = gamma_k_strong(g, k).witness;
      for (int c = 1; c <= 3; ++c) {
        const auto s = scale(weak, c);
        CHECK(s.weight() == c * weak.weight());
        CHECK(is_krdf(g, s));
        CHECK(is_ksrdf(g, scale(strong, c)));
        int light = 0;
        for (int w : weak.values()) light += w <= k / 2;
        const auto l = lift_rdf(weak, c);
        CHECK(l.k() == c * k + 1);
        CHECK(l.weight() == c * weak.weight() + light);
        CHECK(is_krdf(g, l));
        const auto ls = lift_srdf(strong, c);
        CHECK(ls.weight() == c * strong.weight() + g.order() - strong.count(0));
        CHECK(is_ksrdf(g, ls));
      }
    }
  }
}

TEST_CASE("leaf_normalize") {
  const Graph s22 = oracle::double_star(2, 2);
  auto f = gamma_k_strong(s22, 3).witness;
  CHECK(f.weight() == 6);
  f = leaf_normalize(s22, f, 0, Variant::srdf);
  f = leaf_normalize(s22, f, 1, Variant::srdf);
  CHECK(f == WeightFunction(3, {3, 3, 0, 0, 0, 0}));
  CHECK(f.weight() == 6);

  WeightFunction hub(4, {4, 0, 0, 0});
  CHECK(leaf_normalize(oracle::star(3), hub, 0, Variant::rdf) == hub);

  CHECK_THROWS_AS(leaf_normalize(oracle::path(4), WeightFunction::constant(2, 4, 2), 1, Variant::rdf),
                  std::invalid_argument);
  CHECK_THROWS(leaf_normalize(oracle::star(3), WeightFunction(4, {0, 0, 0, 0}), 0, Variant::rdf));
}

TEST_CASE("leaf_normalize on a wounded spider head") {
  // legs 0 and 1 subdivided, 2 and 3 wounded
  const auto spider = make_family(FamilySpec::spider(4, {0, 1}));
  const Graph& g = spider.graph;
  const Vertex head = *spider.roles.head;
  REQUIRE(spider.roles.wounded_feet.size() == 2);
  for (int k = 2; k <= 6; ++k)
    for (Variant v : {Variant::rdf, Variant::srdf}) {
      const auto opt = solve(g, k, v);
      const auto normal = leaf_normalize(g, opt.witness, head, v);
      CHECK(is_valid(g, normal, v));
      CHECK(normal.weight() == opt.value);
      CHECK(normal[head] == k);
    }
}

TEST_CASE("pendant invariance") {
  auto s3 = pendant_invariance_check(oracle::star(3), 0, 2, 5, Variant::rdf);
  CHECK(s3.equal);
  CHECK(s3.base_value == 5);
  CHECK(s3.extended_value == 5);
  auto s22 = pendant_invariance_check(oracle::double_star(2, 2), 0, 3, 3, Variant::srdf);
  CHECK(s22.equal);
  CHECK(s22.base_value == 6);
  CHECK(attach_pendants(oracle::star(3), 0, 2).order() == 6);
  CHECK_THROWS(pendant_invariance_check(oracle::path(4), 1, 1, 2, Variant::rdf));
}

TEST_CASE("tree construction examples") {
  auto p5 = construct_tree_srdf(oracle::path(5), 4);
  CHECK(p5.function.weight() == 8);
  CHECK(is_ksrdf(oracle::path(5), p5.function));

  const auto spider = make_family(FamilySpec::spider(3, {0, 1, 2}));
  REQUIRE(spider.graph.order() == 7);
  auto healthy = construct_tree_srdf(spider.graph, 5);
  CHECK(healthy.function.weight() == 12);
  CHECK(healthy.function[*spider.roles.head] == 3);
  for (Vertex foot : spider.roles.healthy_feet) CHECK(healthy.function[foot] == 3);
  CHECK(Rational(12) < bound_value(7, {5, Variant::srdf}));

  const Graph s23 = oracle::double_star(2, 3);
  auto ds = construct_tree_srdf(s23, 6);
  CHECK(ds.function[0] == 6);
  CHECK(ds.function[1] == 6);
  CHECK(ds.function.weight() == 12);

  CHECK(construct_tree_srdf(oracle::star(4), 3).function == WeightFunction(3, {3, 0, 0, 0, 0}));
  CHECK_THROWS(construct_tree_srdf(oracle::path(2), 3));
  CHECK_THROWS(construct_tree_srdf(oracle::cycle(5), 3));
}

TEST_CASE("tree construction on every tree up to 10 vertices") {
  for (const Graph& t : enumerate_trees(10)) {
    if (t.order() < 3) continue;
    for (int k = 2; k <= 9; ++k) {
      const auto built = construct_tree_srdf(t, k);
      CHECK(is_ksrdf(t, built.function));
      CHECK(Rational(built.function.weight()) <= bound_value(t.order(), {k, Variant::srdf}));
      CHECK(built.function.weight() >= tree_solve(t, k, Variant::srdf).value);
      CHECK_FALSE(built.used_fallback());
    }
  }
}

TEST_CASE("tree construction on random trees") {
  for (int i = 0; i < 60; ++i) {
    const Graph t = random_tree(3 + (i * 37) % 150, 1000 + i);
    const int k = 2 + i % 8;
    const auto built = construct_tree_srdf(t, k);
    CHECK(is_ksrdf(t, built.function));
    CHECK(Rational(built.function.weight()) <= bound_value(t.order(), {k, Variant::srdf}));
  }
}
