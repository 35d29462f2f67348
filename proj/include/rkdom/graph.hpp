#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rkdom {

using Vertex = int;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Membership set over the vertex range of one graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : bits_(static_cast<std::size_t>(n), 0) {}
  VertexSet(int n, const std::vector<Vertex>& members);

  int universe() const { return static_cast<int>(bits_.size()); }
  bool contains(Vertex v) const { return bits_[static_cast<std::size_t>(v)] != 0; }
  void insert(Vertex v) { bits_[static_cast<std::size_t>(v)] = 1; }
  void erase(Vertex v) { bits_[static_cast<std::size_t>(v)] = 0; }
  int size() const;
  bool empty() const { return size() == 0; }
  std::vector<Vertex> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Finite simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}
  static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Adds u-v; returns false if the edge was already present. Throws on loops or bad indices.
  bool add_edge(Vertex u, Vertex v);
  Vertex add_vertex();

  bool valid_vertex(Vertex v) const { return v >= 0 && v < order(); }
  // Symmetry, sortedness, no loops, no duplicates.
  bool well_formed() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);
Graph read_graph_file(const std::string& path);

struct StructureSummary {
  bool is_connected = false;
  bool is_tree = false;
  std::vector<int> degrees;
  std::vector<Vertex> leaves;
  // dist[u][v], -1 when unreachable
  std::vector<std::vector<int>> distances;
  // defined only for connected graphs
  std::optional<int> diameter;
  std::optional<std::vector<Vertex>> centers;
};

std::vector<int> bfs_distances(const Graph& g, Vertex source);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
StructureSummary structure(const Graph& g);

VertexSet leaves_adjacent(const Graph& g, Vertex v);

struct Deletion {
  Graph graph;
  // old index -> new index, -1 for deleted vertices
  std::vector<Vertex> new_index;
  // new index -> old index
  std::vector<Vertex> old_index;
};

Deletion delete_vertices(const Graph& g, const VertexSet& removed);

}  // namespace rkdom
