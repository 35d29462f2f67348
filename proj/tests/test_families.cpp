#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "rkdom/harness.hpp"

using namespace rkdom;

namespace {

const std::set<BranchKind> kP4{BranchKind::p4};
const std::set<BranchKind> kP5{BranchKind::p5};
const std::set<BranchKind> kBoth{BranchKind::p4, BranchKind::p5};

// Keys of every branch graph over connected hosts with at most three vertices, per allowed set.
std::map<std::set<BranchKind>, std::set<CorpusKey>> generated_keys() {
  std::map<std::set<BranchKind>, std::set<CorpusKey>> out;
  for (const Graph& host : enumerate_connected(3)) {
    const int h = host.order();
    for (int mask = 0; mask < (1 << h); ++mask) {
      std::vector<BranchKind> kinds;
      std::set<BranchKind> used;
      for (int i = 0; i < h; ++i) {
        kinds.push_back(mask >> i & 1 ? BranchKind::p5 : BranchKind::p4);
        used.insert(kinds.back());
      }
      const CorpusKey key = corpus_key(make_family(FamilySpec::branch(host, kinds)).graph);
      for (const auto& allowed : {kP4, kP5, kBoth})
        if (std::includes(allowed.begin(), allowed.end(), used.begin(), used.end())) out[allowed].insert(key);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("simple generators") {
  CHECK(make_family(FamilySpec::path(4)).graph == oracle::path(4));
  CHECK(make_family(FamilySpec::cycle(5)).graph == oracle::cycle(5));
  auto ds = make_family(FamilySpec::double_star(1, 2));
  CHECK(ds.graph.order() == 5);
  CHECK(ds.roles.centers == std::vector<Vertex>{0, 1});
  CHECK(ds.graph == oracle::double_star(1, 2));
  auto s = make_family(FamilySpec::star(4));
  CHECK(*s.roles.head == 0);
  CHECK(s.roles.centers == std::vector<Vertex>{0});
}

TEST_CASE("spiders") {
  auto healthy = make_family(FamilySpec::spider(3, {0, 1, 2}));
  CHECK(healthy.graph.order() == 7);
  CHECK(healthy.roles.healthy_feet.size() == 3);
  CHECK(healthy.roles.wounded_feet.empty());
  CHECK(healthy.roles.centers == std::vector<Vertex>{*healthy.roles.head});
  for (Vertex f : healthy.roles.healthy_feet) CHECK(healthy.graph.degree(f) == 1);

  auto wounded = make_family(FamilySpec::spider(4, {2}));
  CHECK(wounded.graph.order() == 6);
  CHECK(wounded.roles.wounded_feet.size() == 3);
  for (Vertex f : wounded.roles.wounded_feet) CHECK(wounded.graph.has_edge(f, *wounded.roles.head));
}

TEST_CASE("invalid family parameters") {
  CHECK_THROWS_AS(make_family(FamilySpec::cycle(2)), std::invalid_argument);
  CHECK_THROWS_AS(make_family(FamilySpec::path(0)), std::invalid_argument);
  CHECK_THROWS_AS(make_family(FamilySpec::double_star(0, 2)), std::invalid_argument);
  CHECK_THROWS_AS(make_family(FamilySpec::spider(3, {})), std::invalid_argument);
  CHECK_THROWS_AS(make_family(FamilySpec::spider(3, {3})), std::invalid_argument);
  CHECK_THROWS_AS(make_family(FamilySpec::branch(Graph(2), {BranchKind::p4, BranchKind::p4})),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_family(FamilySpec::branch(oracle::path(2), {BranchKind::p4})), std::invalid_argument);
}

TEST_CASE("family spec json") {
  auto spec = family_spec_from_json(nlohmann::json::parse(R"({"kind":"double-star","params":{"r":2,"s":3}})"));
  CHECK(make_family(spec).graph == oracle::double_star(2, 3));
  auto branch = family_spec_from_json(nlohmann::json::parse(
      R"({"kind":"branch","params":{"host":{"n":2,"edges":[[0,1]]},"branches":["P4","P5"]}})"));
  CHECK(make_family(branch).graph.order() == 9);
  auto back = family_spec_from_json(to_json(branch));
  CHECK(make_family(back).graph == make_family(branch).graph);
  CHECK_THROWS(family_spec_from_json(nlohmann::json::parse(R"({"kind":"wheel","params":{}})")));
  CHECK_THROWS(family_spec_from_json(nlohmann::json::parse(R"({"kind":"path","params":{}})")));
}

TEST_CASE("rooted products") {
  auto single = rooted_product(Graph(1), {rooted_branch(BranchKind::p4)});
  CHECK(single.graph == oracle::path(4));
  CHECK(single.root_of == std::vector<Vertex>{1});

  auto two = rooted_product(oracle::path(2), {rooted_branch(BranchKind::p4), rooted_branch(BranchKind::p4)});
  CHECK(two.graph.order() == 8);
  CHECK(is_tree(two.graph));
  CHECK(two.graph.has_edge(two.root_of[0], two.root_of[1]));

  auto mixed = rooted_product(oracle::path(2), {rooted_branch(BranchKind::p4), rooted_branch(BranchKind::p5)});
  CHECK(mixed.graph.order() == 9);
  CHECK(mixed.graph.size() == 8);

  auto tri = rooted_product(oracle::cycle(3), {rooted_branch(BranchKind::p5), rooted_branch(BranchKind::p5),
                                               rooted_branch(BranchKind::p5)});
  CHECK(tri.graph.order() == 15);
  CHECK(tri.graph.size() == 15);
}

TEST_CASE("recognition examples") {
  auto p4 = recognize_branch(oracle::path(4), kP4);
  REQUIRE(p4);
  REQUIRE(p4->branches.size() == 1);
  const Vertex root = p4->branches[0].root;
  CHECK((root == 1 || root == 2));
  CHECK(root == 1);

  CHECK_FALSE(recognize_branch(oracle::cycle(5), kBoth));

  Graph two_p5 = make_family(FamilySpec::branch(oracle::path(2), {BranchKind::p5, BranchKind::p5})).graph;
  auto d = recognize_branch(two_p5, kP5);
  REQUIRE(d);
  CHECK(d->branches.size() == 2);
  CHECK(d->host_edges.size() == 1);
  CHECK(validate_decomposition(two_p5, *d, kP5));
  CHECK_FALSE(recognize_branch(two_p5, kP4));

  Graph split(8);
  split.add_edge(0, 1);
  CHECK_THROWS_AS(recognize_branch(split, kP4), std::invalid_argument);
}

TEST_CASE("validate rejects broken decompositions") {
  Graph g = make_family(FamilySpec::branch(oracle::path(2), {BranchKind::p4, BranchKind::p4})).graph;
  auto d = *recognize_branch(g, kP4);
  CHECK(validate_decomposition(g, d, kP4));
  CHECK_FALSE(validate_decomposition(g, d, kP5));
  auto no_host = d;
  no_host.host_edges.clear();
  CHECK_FALSE(validate_decomposition(g, no_host, kP4));
  auto bad_root = d;
  bad_root.branches[0].root = bad_root.branches[0].path.front();
  CHECK_FALSE(validate_decomposition(g, bad_root, kP4));
}

TEST_CASE("round trip over relabelled generated branch graphs") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    const int h = 1 + trial % 5;
    Graph host = oracle::random_connected(h, 0.4, rng);
    std::vector<BranchKind> kinds;
    std::set<BranchKind> used;
    for (int i = 0; i < h; ++i) {
      kinds.push_back(rng() % 2 ? BranchKind::p5 : BranchKind::p4);
      used.insert(kinds.back());
    }
    const auto fam = make_family(FamilySpec::branch(host, kinds));
    CHECK(validate_decomposition(fam.graph, *fam.decomposition, used));
    std::vector<int> perm(fam.graph.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph g = oracle::relabel(fam.graph, perm);
    auto d = recognize_branch(g, used);
    REQUIRE(d);
    CHECK(validate_decomposition(g, *d, used));
    int fours = 0, fives = 0;
    for (const auto& b : d->branches) (b.kind == BranchKind::p4 ? fours : fives)++;
    CHECK(g.order() == 4 * fours + 5 * fives);
    if (is_tree(g)) {
      std::map<Vertex, int> index;
      for (const auto& b : d->branches) index.emplace(b.root, static_cast<int>(index.size()));
      Graph roots(static_cast<int>(d->branches.size()));
      for (auto [u, v] : d->host_edges) roots.add_edge(index.at(u), index.at(v));
      CHECK(is_tree(roots));
    }
  }
}

TEST_CASE("recognition agrees with generation on small corpora") {
  const auto keys = generated_keys();
  auto check = [&](const Graph& g) {
    const CorpusKey key = corpus_key(g);
    for (const auto& allowed : {kP4, kP5, kBoth}) {
      auto d = recognize_branch(g, allowed);
      CHECK(d.has_value() == (keys.at(allowed).count(key) > 0));
      if (d) CHECK(validate_decomposition(g, *d, allowed));
    }
  };
  for (const Graph& g : enumerate_connected(7)) check(g);
  for (const Graph& t : enumerate_trees(12))
    if (t.order() >= 8) check(t);
}
