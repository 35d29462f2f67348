#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rkdom/harness.hpp"

using namespace rkdom;
using nlohmann::ordered_json;

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad range '" + s + "', expected A..B");
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit(const std::optional<std::string>& path, const std::string& text) {
  if (path) write_text(*path, text);
  else std::cout << text;
}

std::set<BranchKind> family_kinds(const std::string& name) {
  if (name == "p4-branch") return {BranchKind::p4};
  if (name == "p5-branch") return {BranchKind::p5};
  if (name == "p45-branch") return {BranchKind::p4, BranchKind::p5};
  throw std::invalid_argument("unknown family '" + name + "'");
}

ordered_json roles_json(const FamilyRoles& r) {
  ordered_json j;
  j["centers"] = r.centers;
  if (r.head) j["head"] = *r.head;
  if (!r.healthy_feet.empty()) j["healthy_feet"] = r.healthy_feet;
  if (!r.wounded_feet.empty()) j["wounded_feet"] = r.wounded_feet;
  if (!r.roots.empty()) j["roots"] = r.roots;
  return j;
}

void check_order(const Graph& g, const WeightFunction& f) {
  if (f.order() != g.order())
    throw std::invalid_argument("function has " + std::to_string(f.order()) + " values, graph has " +
                                std::to_string(g.order()) + " vertices");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Roman k-domination solver, constructions and verification harness"};
  app.require_subcommand(1);

  std::string graph_path, function_path, variant_name, method_name, family, params, corpus = "connected";
  std::string theorem, k_range = "2..9", c_range = "1..3";
  std::optional<std::string> out_path;
  int k = 2, c = 1, max_n = 7;
  std::int64_t budget = kDefaultBudget;
  Grid grid;
  bool serial = false;

  auto* solve_cmd = app.add_subcommand("solve", "exact Roman / strong Roman k-domination number");
  solve_cmd->add_option("--graph", graph_path, "edge-list file")->required();
  solve_cmd->add_option("--k", k)->required();
  solve_cmd->add_option("--variant", variant_name)->required()->check(CLI::IsMember({"rdf", "srdf", "dom"}));
  solve_cmd->add_option("--method", method_name)->check(CLI::IsMember({"brute", "restricted", "tree-dp"}));
  solve_cmd->add_option("--budget", budget, "search node budget");

  auto* construct_cmd = app.add_subcommand("construct", "inductive k-SRDF for a tree");
  construct_cmd->add_option("--graph", graph_path)->required();
  construct_cmd->add_option("--k", k)->required();

  auto* scale_cmd = app.add_subcommand("scale", "multiply every weight by c");
  scale_cmd->add_option("--graph", graph_path)->required();
  scale_cmd->add_option("--function", function_path)->required();
  scale_cmd->add_option("--c", c)->required();

  auto* lift_cmd = app.add_subcommand("lift", "lift a k-function to a (ck+1)-function");
  lift_cmd->add_option("--graph", graph_path)->required();
  lift_cmd->add_option("--function", function_path)->required();
  lift_cmd->add_option("--c", c)->required();
  lift_cmd->add_option("--variant", variant_name)->required()->check(CLI::IsMember({"rdf", "srdf"}));

  auto* generate_cmd = app.add_subcommand("generate", "write a family member as an edge list");
  generate_cmd->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "star", "double-star", "spider", "branch"}));
  generate_cmd->add_option("--params", params, "JSON parameters")->required();
  generate_cmd->add_option("--out", out_path);

  auto* recognize_cmd = app.add_subcommand("recognize", "branch-graph decomposition");
  recognize_cmd->add_option("--graph", graph_path)->required();
  recognize_cmd->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"p4-branch", "p5-branch", "p45-branch"}));

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list a corpus");
  enumerate_cmd->add_option("--corpus", corpus)->required()->check(CLI::IsMember({"trees", "connected", "families"}));
  enumerate_cmd->add_option("--max-n", max_n)->required();
  std::optional<std::string> out_dir;
  enumerate_cmd->add_option("--out", out_dir, "directory for one edge-list file per graph");

  auto* verify_cmd = app.add_subcommand("verify", "check a theorem over a corpus");
  verify_cmd->add_option("--theorem", theorem)->required();
  verify_cmd->add_option("--corpus", corpus)->check(CLI::IsMember({"trees", "connected", "families"}));
  verify_cmd->add_option("--max-n", max_n);
  verify_cmd->add_option("--k", k_range, "A..B");
  verify_cmd->add_option("--c", c_range, "A..B, scaling factors for the construction theorems");
  verify_cmd->add_option("--max-instances", grid.max_instances);
  verify_cmd->add_option("--random-trees", grid.random_trees);
  verify_cmd->add_option("--random-max-n", grid.random_n_max);
  verify_cmd->add_option("--seed", grid.seed);
  verify_cmd->add_option("--budget", budget);
  verify_cmd->add_flag("--serial", serial, "disable the parallel instance loop");
  verify_cmd->add_option("--out", out_path, "report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve_cmd) {
      const Graph g = read_graph_file(graph_path);
      const SolveOptions opts{budget};
      SolveResult r;
      if (variant_name == "dom") {
        if (!method_name.empty()) throw std::invalid_argument("--method does not apply to dom");
        r = domination_number(g, opts);
      } else {
        const Variant v = parse_variant(variant_name);
        if (method_name == "tree-dp") r = tree_solve(g, k, v);
        else if (method_name == "brute") r = v == Variant::rdf ? gamma_k(g, k, opts) : gamma_k_strong(g, k, Alphabet::full, opts);
        else if (method_name == "restricted") {
          if (v == Variant::rdf) throw std::invalid_argument("the restricted alphabet applies to srdf only");
          r = gamma_k_strong(g, k, Alphabet::restricted, opts);
        } else r = solve(g, k, v, opts);
      }
      std::cout << to_json(r) << "\n";
    } else if (*construct_cmd) {
      const Graph g = read_graph_file(graph_path);
      const auto built = construct_tree_srdf(g, k);
      const Rational bound = bound_value(g.order(), {k, Variant::srdf});
      ordered_json j;
      j["weight"] = built.function.weight();
      j["bound"] = to_string(bound);
      j["slack"] = to_string(bound - built.function.weight());
      std::cout << format_weight_function(built.function) << j.dump() << "\n";
    } else if (*scale_cmd) {
      const Graph g = read_graph_file(graph_path);
      const auto f = read_weight_function_file(function_path);
      check_order(g, f);
      std::cout << format_weight_function(scale(f, c));
    } else if (*lift_cmd) {
      const Graph g = read_graph_file(graph_path);
      const auto f = read_weight_function_file(function_path);
      check_order(g, f);
      const Variant v = parse_variant(variant_name);
      std::cout << format_weight_function(v == Variant::rdf ? lift_rdf(f, c) : lift_srdf(f, c));
    } else if (*generate_cmd) {
      nlohmann::json doc{{"kind", family}, {"params", nlohmann::json::parse(params)}};
      const Family fam = make_family(family_spec_from_json(doc));
      emit(out_path, format_graph(fam.graph));
      if (out_path) {
        ordered_json j;
        j["n"] = fam.graph.order();
        j["m"] = fam.graph.size();
        j["roles"] = roles_json(fam.roles);
        std::cout << j.dump() << "\n";
      }
    } else if (*recognize_cmd) {
      const Graph g = read_graph_file(graph_path);
      const auto d = recognize_branch(g, family_kinds(family));
      std::cout << (d ? to_json(*d).dump() : "null") << "\n";
    } else if (*enumerate_cmd) {
      const auto graphs = build_corpus(parse_corpus(corpus), max_n);
      if (out_dir) std::filesystem::create_directories(*out_dir);
      int index = 0;
      for (const Graph& g : graphs) {
        const CorpusKey key = corpus_key(g);
        std::cout << key << "\n";
        if (out_dir) {
          std::string name = std::to_string(index++);
          name.insert(0, 5 - std::min<std::size_t>(5, name.size()), '0');
          write_text(*out_dir + "/" + corpus + "_" + name + ".el", "# " + key + "\n" + format_graph(g));
        }
      }
    } else if (*verify_cmd) {
      grid.corpus = parse_corpus(corpus);
      grid.n_max = max_n;
      std::tie(grid.k_min, grid.k_max) = parse_range(k_range);
      std::tie(grid.c_min, grid.c_max) = parse_range(c_range);
      grid.budget = budget;
      const auto report = verify_theorem(parse_theorem(theorem), grid, serial ? Execution::serial : Execution::parallel);
      emit(out_path, to_json(report).dump(2) + "\n");
      if (!report.violations.empty()) return kExitViolations;
      if (!report.skipped.empty()) return kExitBudget;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
