#include <algorithm>
#include <map>
#include <random>

#include "rkdom/harness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rkdom {

using nlohmann::ordered_json;

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::prop2_2: return "prop2.2";
    case TheoremId::thm2_3_1: return "thm2.3.1";
    case TheoremId::thm2_3_2: return "thm2.3.2";
    case TheoremId::thm2_3_3: return "thm2.3.3";
    case TheoremId::cor3_5: return "cor3.5";
    case TheoremId::lem3_1: return "lem3.1";
    case TheoremId::lem3_2: return "lem3.2";
    case TheoremId::lem3_6: return "lem3.6";
    case TheoremId::thm3_3: return "thm3.3";
    case TheoremId::thm3_7: return "thm3.7";
    case TheoremId::thm3_9: return "thm3.9";
  }
  return "?";
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids{TheoremId::prop2_2, TheoremId::thm2_3_1, TheoremId::thm2_3_2,
                                          TheoremId::thm2_3_3, TheoremId::cor3_5,  TheoremId::lem3_1,
                                          TheoremId::lem3_2,   TheoremId::lem3_6,  TheoremId::thm3_3,
                                          TheoremId::thm3_7,   TheoremId::thm3_9};
  return ids;
}

TheoremId parse_theorem(const std::string& s) {
  for (auto id : all_theorems())
    if (to_string(id) == s) return id;
  throw std::invalid_argument("unknown theorem id '" + s + "'");
}

std::string TheoremReport::status() const {
  if (!violations.empty()) return "violated";
  if (!skipped.empty()) return "incomplete";
  return "verified";
}

namespace {

struct Instance {
  Graph graph;
  CorpusKey key;
  int k = 2;
};

struct Outcome {
  std::int64_t checked = 0;
  std::vector<Violation> violations;
  std::vector<ExtremalHit> hits;
  std::vector<Skipped> skipped;
  // thm3.3
  std::array<int, kTreeCaseCount> case_hits{};
  // cor3.5 ratio measurements; thm3.7 / thm3.9 set sizes
  std::optional<Rational> rdf_ratio, srdf_ratio;
  bool in_equality_set = false;
  bool in_family = false;
};

class Checker {
 public:
  Checker(const Instance& inst, const Grid& grid, Outcome& out) : inst_(inst), grid_(grid), out_(out) {}

  const Graph& g() const { return inst_.graph; }
  int n() const { return inst_.graph.order(); }
  int k() const { return inst_.k; }
  SolveOptions opts() const { return {grid_.budget}; }

  SolveResult exact(int k, Variant variant) const { return solve_exact(g(), k, variant, opts()); }

  // Records one checked comparison lhs <= rhs.
  void at_most(const Rational& lhs, const Rational& rhs, const std::string& what) {
    ++out_.checked;
    if (lhs > rhs) violation(to_string(lhs), to_string(rhs), what);
    else if (lhs == rhs) hit(what);
  }

  void expect(bool ok, const std::string& lhs, const std::string& rhs, const std::string& what) {
    ++out_.checked;
    if (!ok) violation(lhs, rhs, what);
  }

  void violation(const std::string& lhs, const std::string& rhs, const std::string& note) {
    out_.violations.push_back({inst_.key, n(), k(), lhs, rhs, note});
  }
  void hit(const std::string& note) { out_.hits.push_back({inst_.key, n(), k(), note}); }

  Outcome& out() { return out_; }

 private:
  const Instance& inst_;
  const Grid& grid_;
  Outcome& out_;
};

Rational R(long long v) { return Rational(v); }

void check_prop2_2(Checker& c) {
  const int gamma = domination_number(c.g(), c.opts()).value;
  const int gs = c.exact(c.k(), Variant::srdf).value;
  const int lower = lift_constants(c.k()).a_ceil * gamma;
  c.at_most(R(lower), R(gs), "floor((k+1)/2)*gamma <= gamma_k^s");
  c.at_most(R(gs), R(static_cast<long long>(c.k()) * gamma), "gamma_k^s <= k*gamma");
}

void check_thm2_3_1(Checker& c, const Grid& grid) {
  for (Variant v : {Variant::rdf, Variant::srdf}) {
    const auto base = c.exact(c.k(), v);
    for (int m = grid.c_min; m <= grid.c_max; ++m) {
      const auto scaled = scale(base.witness, m);
      const std::string tag = to_string(v) + " c=" + std::to_string(m);
      c.expect(bool(is_valid(c.g(), scaled, v)), "invalid", "valid", "scaled function " + tag);
      c.expect(scaled.weight() == m * base.value, std::to_string(scaled.weight()),
               std::to_string(m * base.value), "scale weight identity " + tag);
      const int lhs = c.exact(m * c.k(), v).value;
      c.at_most(R(lhs), R(static_cast<long long>(m) * base.value), "gamma_{ck} <= c*gamma_k " + tag);
    }
  }
}

void check_thm2_3_2(Checker& c, const Grid& grid) {
  const auto base = c.exact(c.k(), Variant::rdf);
  const int light = [&] {
    int cnt = 0;
    for (int w : base.witness.values()) cnt += w <= lift_constants(c.k()).a_floor;
    return cnt;
  }();
  for (int m = grid.c_min; m <= grid.c_max; ++m) {
    const auto lifted = lift_rdf(base.witness, m);
    const std::string tag = "c=" + std::to_string(m);
    const int identity = m * base.value + light;
    c.expect(bool(is_krdf(c.g(), lifted)), "invalid", "valid", "lifted (ck+1)-RDF " + tag);
    c.expect(lifted.weight() == identity, std::to_string(lifted.weight()), std::to_string(identity),
             "lift_rdf weight identity " + tag);
    const int lhs = c.exact(m * c.k() + 1, Variant::rdf).value;
    c.at_most(R(lhs), R(identity), "gamma_{ck+1} <= c*gamma_k + |V_0..V_A| " + tag);
    c.at_most(R(identity), R(m * base.value + c.n()), "c*gamma_k + |V_0..V_A| <= c*gamma_k + n " + tag);
  }
}

void check_thm2_3_3(Checker& c, const Grid& grid) {
  const auto base = c.exact(c.k(), Variant::srdf);
  c.expect(in_restricted_form(base.witness), "mixed", "restricted", "optimal witness in restricted form");
  const int nonzero = c.n() - base.witness.count(0);
  for (int m = grid.c_min; m <= grid.c_max; ++m) {
    const auto lifted = lift_srdf(base.witness, m);
    const std::string tag = "c=" + std::to_string(m);
    const int identity = m * base.value + nonzero;
    c.expect(bool(is_ksrdf(c.g(), lifted)), "invalid", "valid", "lifted (ck+1)-SRDF " + tag);
    c.expect(lifted.weight() == identity, std::to_string(lifted.weight()), std::to_string(identity),
             "lift_srdf weight identity " + tag);
    const int lhs = c.exact(m * c.k() + 1, Variant::srdf).value;
    c.at_most(R(lhs), R(identity), "gamma^s_{ck+1} <= c*gamma^s_k + n - |V_0| " + tag);
    c.at_most(R(identity), R(static_cast<long long>(m + 1) * base.value),
              "c*gamma^s_k + n - |V_0| <= (c+1)*gamma^s_k " + tag);
  }
}

void check_cor3_5(Checker& c) {
  for (Variant v : {Variant::rdf, Variant::srdf}) {
    const int value = c.exact(c.k(), v).value;
    const Rational bound = bound_value(c.n(), {c.k(), v});
    c.at_most(R(value), bound, "gamma_" + to_string(v) + " <= A_k n");
    Rational ratio(value, c.n());
    (v == Variant::rdf ? c.out().rdf_ratio : c.out().srdf_ratio) = ratio;
  }
}

void check_thm3_3(Checker& c) {
  const auto built = construct_tree_srdf(c.g(), c.k());
  c.out().case_hits = built.case_hits;
  c.expect(bool(is_ksrdf(c.g(), built.function)), "invalid", "valid", "constructed k-SRDF");
  c.at_most(R(built.function.weight()), bound_value(c.n(), {c.k(), Variant::srdf}), "construction <= A_k n");
  const int opt = tree_solve(c.g(), c.k(), Variant::srdf).value;
  c.expect(built.function.weight() >= opt, std::to_string(built.function.weight()), std::to_string(opt),
           "construction >= optimum");
}

bool is_c5(const Graph& g) { return g.order() == 5 && g.size() == 5 && is_connected(g) && [&] {
  for (Vertex v = 0; v < 5; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}(); }

std::set<BranchKind> extremal_branches(int k) {
  if (k == 2 || k == 4 || k == 6) return {BranchKind::p5};
  if (k == 8) return {BranchKind::p4, BranchKind::p5};
  return {BranchKind::p4};
}

std::string kinds_label(const std::set<BranchKind>& kinds) {
  std::string s = "{";
  for (auto kd : kinds) s += (s.size() > 1 ? "," : "") + to_string(kd);
  return s + "}";
}

void check_characterization(Checker& c, Variant variant) {
  const int value = c.exact(c.k(), variant).value;
  const bool equal = Rational(value) == bound_value(c.n(), {c.k(), variant});
  std::set<BranchKind> kinds = variant == Variant::srdf ? extremal_branches(c.k()) : std::set{BranchKind::p4};
  bool family = recognize_branch(c.g(), kinds).has_value();
  const bool even_small = c.k() == 2 || c.k() == 4 || c.k() == 6 || c.k() == 8;
  if (variant == Variant::srdf && even_small && is_c5(c.g())) family = true;
  c.out().in_equality_set = equal;
  c.out().in_family = family;
  const std::string label = variant == Variant::srdf && even_small ? "C5 or " + kinds_label(kinds) + "-branch"
                                                                   : kinds_label(kinds) + "-branch";
  c.expect(equal == family, equal ? "gamma=A_k n" : "gamma<A_k n", family ? label : "not " + label,
           "equality iff " + label);
  if (equal) c.hit("gamma = A_k n = " + std::to_string(value));
}

void check_lem3_1(Checker& c) {
  for (Variant v : {Variant::rdf, Variant::srdf}) {
    const auto base = c.exact(c.k(), v);
    for (Vertex x = 0; x < c.n(); ++x) {
      if (leaves_adjacent(c.g(), x).size() < 2) continue;
      const std::string tag = to_string(v) + " v=" + std::to_string(x);
      const auto normal = leaf_normalize(c.g(), base.witness, x, v);
      c.expect(bool(is_valid(c.g(), normal, v)), "invalid", "valid", "normalized function " + tag);
      c.expect(normal.weight() == base.value, std::to_string(normal.weight()), std::to_string(base.value),
               "normalized function stays optimal " + tag);
      for (int extra = 1; extra <= 2; ++extra) {
        const auto check = pendant_invariance_check(c.g(), x, extra, c.k(), v, c.opts());
        c.expect(check.equal, std::to_string(check.extended_value), std::to_string(check.base_value),
                 "pendant invariance +" + std::to_string(extra) + " " + tag);
      }
    }
  }
}

// Subdivides every pendant edge at u.
Graph subdivide_pendants(const Graph& h, Vertex u) {
  Graph g(h.order());
  const auto leaves = leaves_adjacent(h, u);
  for (auto [a, b] : h.edges()) {
    const bool pendant = (a == u && leaves.contains(b)) || (b == u && leaves.contains(a));
    if (!pendant) {
      g.add_edge(a, b);
      continue;
    }
    const Vertex w = a == u ? b : a;
    const Vertex mid = g.add_vertex();
    g.add_edge(u, mid);
    g.add_edge(mid, w);
  }
  return g;
}

void check_lem3_2(Checker& c) {
  const bool even = c.k() % 2 == 0;
  const Variant v = even ? Variant::rdf : Variant::srdf;
  for (Vertex u = 0; u < c.n(); ++u) {
    const int r = leaves_adjacent(c.g(), u).size();
    if (r < (even ? 1 : 2)) continue;
    const Graph g = subdivide_pendants(c.g(), u);
    bool found = false;
    std::int64_t seen = 0;
    for_each_min_function(
        g, c.k(), v,
        [&](const WeightFunction& f) {
          ++seen;
          if (!below_half(f[u], c.k())) found = true;
          return !found;
        },
        c.opts());
    c.expect(found, "all " + std::to_string(seen) + " optimal have f(u)<k/2", "some optimal f(u)>=k/2",
             "u=" + std::to_string(u) + " r=" + std::to_string(r) + " " + to_string(v));
  }
}

void check_lem3_6(Checker& c) {
  const int k = c.k();
  const int n = c.n();
  std::optional<long long> expected;
  std::string which;
  if (is_c5(c.g())) {
    if (k == 2 || k == 4 || k == 6) expected = 2 * k, which = "C5, 2k";
    if (k == 8) expected = 15, which = "C5, 15";
  } else if (recognize_branch(c.g(), {BranchKind::p5})) {
    if (k == 2 || k == 4 || k == 6) expected = 2LL * k * n / 5, which = "{P5}-branch, 2kn/5";
    if (k == 8) expected = 3LL * n, which = "{P5}-branch, 3n";
  } else if (recognize_branch(c.g(), {BranchKind::p4})) {
    if (k % 2 == 0 && k >= 8) expected = 3LL * k * n / 8, which = "{P4}-branch, 3kn/8";
    if (k % 2 == 1) expected = (3LL * k + 1) * n / 8, which = "{P4}-branch, (3k+1)n/8";
  } else if (recognize_branch(c.g(), {BranchKind::p4, BranchKind::p5})) {
    if (k == 8) expected = 3LL * n, which = "{P4,P5}-branch, 3n";
  }
  if (!expected) return;
  const int value = c.exact(k, Variant::srdf).value;
  c.expect(value == *expected, std::to_string(value), std::to_string(*expected), which);
  if (value == *expected) c.hit(which);
}

Outcome run_instance(TheoremId id, const Instance& inst, const Grid& grid) {
  Outcome out;
  Checker c(inst, grid, out);
  try {
    switch (id) {
      case TheoremId::prop2_2: check_prop2_2(c); break;
      case TheoremId::thm2_3_1: check_thm2_3_1(c, grid); break;
      case TheoremId::thm2_3_2: check_thm2_3_2(c, grid); break;
      case TheoremId::thm2_3_3: check_thm2_3_3(c, grid); break;
      case TheoremId::cor3_5: check_cor3_5(c); break;
      case TheoremId::lem3_1: check_lem3_1(c); break;
      case TheoremId::lem3_2: check_lem3_2(c); break;
      case TheoremId::lem3_6: check_lem3_6(c); break;
      case TheoremId::thm3_3: check_thm3_3(c); break;
      case TheoremId::thm3_7: check_characterization(c, Variant::srdf); break;
      case TheoremId::thm3_9: check_characterization(c, Variant::rdf); break;
    }
  } catch (const BudgetExceeded& e) {
    out = Outcome{};
    out.skipped.push_back({inst.key, inst.k, e.what()});
  } catch (const std::exception& e) {
    out.violations.push_back({inst.key, inst.graph.order(), inst.k, "error", "", e.what()});
  }
  return out;
}

std::vector<Instance> build_instances(TheoremId id, const Grid& grid) {
  if (grid.k_min < 2 || grid.k_max < grid.k_min) throw std::invalid_argument("bad k range");
  if (id == TheoremId::thm3_3 && grid.corpus != CorpusKind::trees)
    throw std::invalid_argument("thm3.3 runs on the trees corpus");
  // lem3.2 instances are base trees; subdivided graphs are built per instance
  const int n_min = id == TheoremId::lem3_2 ? 2 : std::max(grid.n_min, 3);
  std::vector<std::pair<CorpusKey, Graph>> graphs;
  for (Graph& g : build_corpus(grid.corpus, grid.n_max))
    if (g.order() >= n_min) graphs.emplace_back(corpus_key(g), std::move(g));
  std::sort(graphs.begin(), graphs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (grid.max_instances > 0 && static_cast<int>(graphs.size()) > grid.max_instances)
    graphs.resize(static_cast<std::size_t>(grid.max_instances));
  if (id == TheoremId::thm3_3) {
    std::mt19937_64 rng(grid.seed);
    std::uniform_int_distribution<int> size(3, std::max(3, grid.random_n_max));
    for (int i = 0; i < grid.random_trees; ++i) {
      const int n = size(rng);
      Graph t = random_tree(n, rng());
      graphs.emplace_back("random" + std::to_string(i) + ":n" + std::to_string(n), std::move(t));
    }
  }
  std::vector<Instance> out;
  for (const auto& [key, g] : graphs)
    for (int k = grid.k_min; k <= grid.k_max; ++k) out.push_back({g, key, k});
  return out;
}

}  // namespace

TheoremReport verify_theorem(TheoremId id, const Grid& grid, Execution exec) {
  const auto instances = build_instances(id, grid);
  std::vector<Outcome> outcomes(instances.size());
  const auto count = static_cast<std::int64_t>(instances.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) outcomes[i] = run_instance(id, instances[i], grid);
  } else {
    for (std::int64_t i = 0; i < count; ++i) outcomes[i] = run_instance(id, instances[i], grid);
  }

  TheoremReport report;
  report.id = id;
  report.grid = grid;
  std::array<int, kTreeCaseCount> case_totals{};
  std::int64_t equality = 0, family = 0;
  std::map<int, ordered_json> table;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    Outcome& o = outcomes[i];
    report.instances_checked += o.checked > 0 ? 1 : 0;
    for (auto& v : o.violations) report.violations.push_back(std::move(v));
    for (auto& h : o.hits) report.extremal_hits.push_back(std::move(h));
    for (auto& s : o.skipped) report.skipped.push_back(std::move(s));
    for (int c = 0; c < kTreeCaseCount; ++c) case_totals[c] += o.case_hits[c];
    equality += o.in_equality_set;
    family += o.in_family;
    if (id == TheoremId::cor3_5 && o.rdf_ratio && o.srdf_ratio) {
      const int k = instances[i].k;
      auto& row = table[k];
      auto bump = [&](const char* field, const Rational& ratio) {
        if (!row.contains(field) || Rational(row[field]["num"].get<long long>(), row[field]["den"].get<long long>()) < ratio)
          row[field] = {{"num", ratio.numerator()}, {"den", ratio.denominator()}, {"graph", instances[i].key}};
      };
      bump("max_rdf_ratio", *o.rdf_ratio);
      bump("max_srdf_ratio", *o.srdf_ratio);
    }
  }
  if (id == TheoremId::thm3_3) {
    ordered_json cases = ordered_json::object();
    for (int c = 0; c < kTreeCaseCount; ++c) cases[to_string(static_cast<TreeCase>(c))] = case_totals[c];
    report.extra["construction_cases"] = cases;
    report.extra["fallbacks"] = case_totals[static_cast<int>(TreeCase::fallback)];
  }
  if (id == TheoremId::thm3_7 || id == TheoremId::thm3_9) {
    report.extra["equality_set_size"] = equality;
    report.extra["family_set_size"] = family;
  }
  if (id == TheoremId::cor3_5) {
    ordered_json rows = ordered_json::array();
    for (auto& [k, row] : table) {
      ordered_json r;
      r["k"] = k;
      r["rdf_coefficient"] = to_string(bound_coefficient({k, Variant::rdf}));
      r["srdf_coefficient"] = to_string(bound_coefficient({k, Variant::srdf}));
      for (const char* f : {"max_rdf_ratio", "max_srdf_ratio"})
        r[f] = {{"value", to_string(Rational(row[f]["num"].get<long long>(), row[f]["den"].get<long long>()))},
                {"graph", row[f]["graph"]}};
      rows.push_back(r);
    }
    report.extra["table"] = rows;
  }
  return report;
}

ordered_json to_json(const TheoremReport& r) {
  ordered_json j;
  j["theorem"] = to_string(r.id);
  j["status"] = r.status();
  ordered_json grid;
  grid["corpus"] = to_string(r.grid.corpus);
  grid["n_max"] = r.grid.n_max;
  grid["k_min"] = r.grid.k_min;
  grid["k_max"] = r.grid.k_max;
  if (r.id == TheoremId::thm2_3_1 || r.id == TheoremId::thm2_3_2 || r.id == TheoremId::thm2_3_3) {
    grid["c_min"] = r.grid.c_min;
    grid["c_max"] = r.grid.c_max;
  }
  if (r.grid.max_instances > 0) grid["max_instances"] = r.grid.max_instances;
  if (r.id == TheoremId::thm3_3 && r.grid.random_trees > 0) {
    grid["random_trees"] = r.grid.random_trees;
    grid["random_n_max"] = r.grid.random_n_max;
    grid["seed"] = r.grid.seed;
  }
  j["grid"] = grid;
  j["instances_checked"] = r.instances_checked;
  ordered_json vs = ordered_json::array();
  for (const auto& v : r.violations)
    vs.push_back({{"graph", v.graph}, {"n", v.n}, {"k", v.k}, {"lhs", v.lhs}, {"rhs", v.rhs}, {"note", v.note}});
  j["violations"] = vs;
  ordered_json hs = ordered_json::array();
  for (const auto& h : r.extremal_hits) hs.push_back({{"graph", h.graph}, {"n", h.n}, {"k", h.k}, {"note", h.note}});
  j["extremal_hits"] = hs;
  ordered_json ss = ordered_json::array();
  for (const auto& s : r.skipped) ss.push_back({{"graph", s.graph}, {"k", s.k}, {"reason", s.reason}});
  j["skipped"] = ss;
  if (!r.extra.empty()) j["extra"] = r.extra;
  return j;
}

}  // namespace rkdom
