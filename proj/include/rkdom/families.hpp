#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "rkdom/graph.hpp"

namespace rkdom {

enum class FamilyKind { path, cycle, star, double_star, spider, branch };
enum class BranchKind { p4, p5 };

std::string to_string(FamilyKind k);
std::string to_string(BranchKind k);
FamilyKind parse_family_kind(const std::string& s);
BranchKind parse_branch_kind(const std::string& s);
inline int branch_order(BranchKind k) { return k == BranchKind::p4 ? 4 : 5; }

struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  int r = 0;                         // path/cycle order, star leaves, double star first side
  int s = 0;                         // double star second side
  int t = 0;                         // spider legs
  std::vector<int> subdivided;       // spider legs that are subdivided, indices in 0..t-1
  Graph host;                        // branch graph host
  std::vector<BranchKind> branches;  // one per host vertex

  static FamilySpec path(int r) { return {.kind = FamilyKind::path, .r = r}; }
  static FamilySpec cycle(int r) { return {.kind = FamilyKind::cycle, .r = r}; }
  static FamilySpec star(int r) { return {.kind = FamilyKind::star, .r = r}; }
  static FamilySpec double_star(int r, int s) { return {.kind = FamilyKind::double_star, .r = r, .s = s}; }
  static FamilySpec spider(int t, std::vector<int> subdivided);
  static FamilySpec branch(Graph host, std::vector<BranchKind> kinds);
};

// {"kind": "...", "params": {...}}; kind names match the CLI (double-star, branch, ...).
FamilySpec family_spec_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const FamilySpec& spec);

struct Branch {
  BranchKind kind = BranchKind::p4;
  std::vector<Vertex> path;  // vertices in path order
  Vertex root = -1;
};

struct BranchDecomposition {
  std::vector<Branch> branches;
  std::vector<std::pair<Vertex, Vertex>> host_edges;  // edges between roots
};

// Vertex roles of a generated graph.
struct FamilyRoles {
  std::vector<Vertex> centers;
  std::optional<Vertex> head;
  std::vector<Vertex> healthy_feet;
  std::vector<Vertex> wounded_feet;
  std::vector<Vertex> roots;
};

struct Family {
  Graph graph;
  FamilyRoles roles;
  std::optional<BranchDecomposition> decomposition;
};

Family make_family(const FamilySpec& spec);

struct RootedGraph {
  Graph graph;
  Vertex root = 0;
};

RootedGraph rooted_branch(BranchKind kind);

struct RootedProduct {
  Graph graph;
  // offset[x] is the index of the first vertex of K_x's copy; root_of[x] is x's image
  std::vector<Vertex> offset;
  std::vector<Vertex> root_of;
};

RootedProduct rooted_product(const Graph& host, const std::vector<RootedGraph>& branches);

// Exact backtracking recognizer. Throws on disconnected input.
std::optional<BranchDecomposition> recognize_branch(const Graph& g, const std::set<BranchKind>& allowed);

// Checks every decomposition invariant against g.
bool validate_decomposition(const Graph& g, const BranchDecomposition& d, const std::set<BranchKind>& allowed);

nlohmann::json to_json(const BranchDecomposition& d);

}  // namespace rkdom
