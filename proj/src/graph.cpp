#include "rkdom/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>

namespace rkdom {

VertexSet::VertexSet(int n, const std::vector<Vertex>& members) : VertexSet(n) {
  for (Vertex v : members) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex set member out of range");
    insert(v);
  }
}

int VertexSet::size() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<Vertex>(i));
  return out;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::size() const {
  std::size_t total = 0;
  for (const auto& a : adj_) total += a.size();
  return static_cast<int>(total / 2);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& a = neighbors(u);
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (!valid_vertex(u) || !valid_vertex(v)) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  auto& au = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[static_cast<std::size_t>(v)];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  return true;
}

Vertex Graph::add_vertex() {
  adj_.emplace_back();
  return order() - 1;
}

bool Graph::well_formed() const {
  for (Vertex u = 0; u < order(); ++u) {
    const auto& a = neighbors(u);
    if (!std::is_sorted(a.begin(), a.end())) return false;
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
    for (Vertex v : a) {
      if (!valid_vertex(v) || v == u) return false;
      if (!has_edge(v, u)) return false;
    }
  }
  return true;
}

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  std::optional<Graph> g;
  long long declared_m = 0;
  long long seen_m = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (blank(line)) continue;
    std::istringstream ls(line);
    long long a = 0, b = 0;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra)) {
      throw ParseError(lineno, g ? "expected 'u v'" : "malformed header, expected 'n m'");
    }
    if (!g) {
      if (a < 0 || b < 0 || a > std::numeric_limits<int>::max())
        throw ParseError(lineno, "malformed header, negative or oversized count");
      g.emplace(static_cast<int>(a));
      declared_m = b;
      continue;
    }
    if (a < 0 || a >= g->order()) throw ParseError(lineno, "index " + std::to_string(a) + " out of range");
    if (b < 0 || b >= g->order()) throw ParseError(lineno, "index " + std::to_string(b) + " out of range");
    if (a == b) throw ParseError(lineno, "self-loop at " + std::to_string(a));
    g->add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    ++seen_m;
  }
  if (!g) throw ParseError(lineno, "missing header");
  if (seen_m != declared_m)
    throw ParseError(lineno, "header declares " + std::to_string(declared_m) + " edge lines, found " +
                                 std::to_string(seen_m));
  return *g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

StructureSummary structure(const Graph& g) {
  StructureSummary s;
  const int n = g.order();
  s.degrees.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    s.degrees[static_cast<std::size_t>(v)] = g.degree(v);
    if (g.degree(v) == 1) s.leaves.push_back(v);
  }
  for (Vertex v = 0; v < n; ++v) s.distances.push_back(bfs_distances(g, v));
  s.is_connected = is_connected(g);
  s.is_tree = s.is_connected && n >= 1 && g.size() == n - 1;
  if (s.is_connected && n > 0) {
    std::vector<int> ecc(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      const auto& row = s.distances[static_cast<std::size_t>(v)];
      ecc[static_cast<std::size_t>(v)] = *std::max_element(row.begin(), row.end());
    }
    s.diameter = *std::max_element(ecc.begin(), ecc.end());
    int radius = *std::min_element(ecc.begin(), ecc.end());
    std::vector<Vertex> centers;
    for (Vertex v = 0; v < n; ++v)
      if (ecc[static_cast<std::size_t>(v)] == radius) centers.push_back(v);
    s.centers = std::move(centers);
  }
  return s;
}

VertexSet leaves_adjacent(const Graph& g, Vertex v) {
  if (!g.valid_vertex(v)) throw std::out_of_range("vertex out of range");
  VertexSet out(g.order());
  for (Vertex u : g.neighbors(v))
    if (g.degree(u) == 1) out.insert(u);
  return out;
}

Deletion delete_vertices(const Graph& g, const VertexSet& removed) {
  if (removed.universe() != g.order()) throw std::invalid_argument("vertex set does not match graph order");
  Deletion d;
  d.new_index.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (removed.contains(v)) continue;
    d.new_index[static_cast<std::size_t>(v)] = static_cast<Vertex>(d.old_index.size());
    d.old_index.push_back(v);
  }
  d.graph = Graph(static_cast<int>(d.old_index.size()));
  for (auto [u, v] : g.edges()) {
    Vertex a = d.new_index[static_cast<std::size_t>(u)];
    Vertex b = d.new_index[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) d.graph.add_edge(a, b);
  }
  return d;
}

}  // namespace rkdom
