#include "rkdom/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace rkdom {

using nlohmann::json;

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::star: return "star";
    case FamilyKind::double_star: return "double-star";
    case FamilyKind::spider: return "spider";
    case FamilyKind::branch: return "branch";
  }
  return "?";
}

std::string to_string(BranchKind k) { return k == BranchKind::p4 ? "P4" : "P5"; }

FamilyKind parse_family_kind(const std::string& s) {
  for (auto k : {FamilyKind::path, FamilyKind::cycle, FamilyKind::star, FamilyKind::double_star,
                 FamilyKind::spider, FamilyKind::branch})
    if (to_string(k) == s) return k;
  if (s == "double_star") return FamilyKind::double_star;
  throw std::invalid_argument("unknown family '" + s + "'");
}

BranchKind parse_branch_kind(const std::string& s) {
  if (s == "P4" || s == "p4") return BranchKind::p4;
  if (s == "P5" || s == "p5") return BranchKind::p5;
  throw std::invalid_argument("unknown branch kind '" + s + "'");
}

FamilySpec FamilySpec::spider(int t, std::vector<int> subdivided) {
  FamilySpec spec{FamilyKind::spider};
  spec.t = t;
  spec.subdivided = std::move(subdivided);
  return spec;
}

FamilySpec FamilySpec::branch(Graph host, std::vector<BranchKind> kinds) {
  FamilySpec spec{FamilyKind::branch};
  spec.host = std::move(host);
  spec.branches = std::move(kinds);
  return spec;
}

FamilySpec family_spec_from_json(const json& doc) {
  const FamilyKind kind = parse_family_kind(doc.at("kind").get<std::string>());
  const json params = doc.value("params", json::object());
  switch (kind) {
    case FamilyKind::path: return FamilySpec::path(params.at("r").get<int>());
    case FamilyKind::cycle: return FamilySpec::cycle(params.at("r").get<int>());
    case FamilyKind::star: return FamilySpec::star(params.at("r").get<int>());
    case FamilyKind::double_star:
      return FamilySpec::double_star(params.at("r").get<int>(), params.at("s").get<int>());
    case FamilyKind::spider:
      return FamilySpec::spider(params.at("t").get<int>(), params.at("subdivided").get<std::vector<int>>());
    case FamilyKind::branch: {
      const json& h = params.at("host");
      Graph host(h.at("n").get<int>());
      for (const auto& e : h.value("edges", json::array())) host.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
      std::vector<BranchKind> kinds;
      for (const auto& b : params.at("branches")) kinds.push_back(parse_branch_kind(b.get<std::string>()));
      return FamilySpec::branch(std::move(host), std::move(kinds));
    }
  }
  throw std::invalid_argument("unhandled family");
}

json to_json(const FamilySpec& spec) {
  json params = json::object();
  switch (spec.kind) {
    case FamilyKind::path:
    case FamilyKind::cycle:
    case FamilyKind::star: params["r"] = spec.r; break;
    case FamilyKind::double_star:
      params["r"] = spec.r;
      params["s"] = spec.s;
      break;
    case FamilyKind::spider:
      params["t"] = spec.t;
      params["subdivided"] = spec.subdivided;
      break;
    case FamilyKind::branch: {
      json edges = json::array();
      for (auto [u, v] : spec.host.edges()) edges.push_back({u, v});
      json kinds = json::array();
      for (auto b : spec.branches) kinds.push_back(to_string(b));
      params["host"] = {{"n", spec.host.order()}, {"edges", edges}};
      params["branches"] = kinds;
      break;
    }
  }
  return {{"kind", to_string(spec.kind)}, {"params", params}};
}

RootedGraph rooted_branch(BranchKind kind) {
  const int n = branch_order(kind);
  Graph p(n);
  for (int i = 0; i + 1 < n; ++i) p.add_edge(i, i + 1);
  return {p, kind == BranchKind::p4 ? 1 : 2};
}

RootedProduct rooted_product(const Graph& host, const std::vector<RootedGraph>& branches) {
  if (static_cast<int>(branches.size()) != host.order())
    throw std::invalid_argument("need one rooted graph per host vertex");
  RootedProduct out;
  int total = 0;
  for (const auto& b : branches) {
    if (!b.graph.valid_vertex(b.root)) throw std::invalid_argument("branch root out of range");
    out.offset.push_back(total);
    out.root_of.push_back(total + b.root);
    total += b.graph.order();
  }
  out.graph = Graph(total);
  for (std::size_t x = 0; x < branches.size(); ++x)
    for (auto [u, v] : branches[x].graph.edges()) out.graph.add_edge(out.offset[x] + u, out.offset[x] + v);
  for (auto [x, y] : host.edges()) out.graph.add_edge(out.root_of[x], out.root_of[y]);
  return out;
}

Family make_family(const FamilySpec& spec) {
  Family fam;
  auto path_graph = [](int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
  };
  switch (spec.kind) {
    case FamilyKind::path:
      if (spec.r < 1) throw std::invalid_argument("path needs r >= 1");
      fam.graph = path_graph(spec.r);
      break;
    case FamilyKind::cycle:
      if (spec.r < 3) throw std::invalid_argument("cycle needs r >= 3");
      fam.graph = path_graph(spec.r);
      fam.graph.add_edge(spec.r - 1, 0);
      break;
    case FamilyKind::star:
      if (spec.r < 1) throw std::invalid_argument("star needs r >= 1");
      fam.graph = Graph(spec.r + 1);
      for (int i = 1; i <= spec.r; ++i) fam.graph.add_edge(0, i);
      fam.roles.head = 0;
      break;
    case FamilyKind::double_star: {
      if (spec.r < 1 || spec.s < 1) throw std::invalid_argument("double star needs r, s >= 1");
      fam.graph = Graph(2 + spec.r + spec.s);
      fam.graph.add_edge(0, 1);
      for (int i = 0; i < spec.r; ++i) fam.graph.add_edge(0, 2 + i);
      for (int i = 0; i < spec.s; ++i) fam.graph.add_edge(1, 2 + spec.r + i);
      break;
    }
    case FamilyKind::spider: {
      std::vector<int> sub = spec.subdivided;
      std::sort(sub.begin(), sub.end());
      sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
      if (spec.t < 1 || sub.empty() || static_cast<int>(sub.size()) > spec.t || sub.front() < 0 ||
          sub.back() >= spec.t)
        throw std::invalid_argument("spider needs t >= 1 and 1..t distinct subdivided legs in 0..t-1");
      fam.graph = Graph(1);
      fam.roles.head = 0;
      for (int leg = 0; leg < spec.t; ++leg) {
        Vertex mid = fam.graph.add_vertex();
        fam.graph.add_edge(0, mid);
        if (std::binary_search(sub.begin(), sub.end(), leg)) {
          Vertex foot = fam.graph.add_vertex();
          fam.graph.add_edge(mid, foot);
          fam.roles.healthy_feet.push_back(foot);
        } else {
          fam.roles.wounded_feet.push_back(mid);
        }
      }
      break;
    }
    case FamilyKind::branch: {
      if (spec.host.order() < 1 || !is_connected(spec.host)) throw std::invalid_argument("branch host must be connected");
      if (static_cast<int>(spec.branches.size()) != spec.host.order())
        throw std::invalid_argument("need one branch kind per host vertex");
      std::vector<RootedGraph> parts;
      for (auto b : spec.branches) parts.push_back(rooted_branch(b));
      auto product = rooted_product(spec.host, parts);
      fam.graph = product.graph;
      fam.roles.roots = product.root_of;
      BranchDecomposition d;
      for (std::size_t x = 0; x < parts.size(); ++x) {
        Branch b{spec.branches[x], {}, product.root_of[x]};
        for (int i = 0; i < parts[x].graph.order(); ++i) b.path.push_back(product.offset[x] + i);
        d.branches.push_back(b);
      }
      for (auto [x, y] : spec.host.edges()) d.host_edges.emplace_back(product.root_of[x], product.root_of[y]);
      fam.decomposition = d;
      break;
    }
  }
  if (fam.graph.order() > 0) fam.roles.centers = *structure(fam.graph).centers;
  return fam;
}

namespace {

class Recognizer {
 public:
  Recognizer(const Graph& g, const std::set<BranchKind>& allowed)
      : g_(g), allowed_(allowed.begin(), allowed.end()), owner_(g.order(), -1), is_root_(g.order(), 0) {}

  std::optional<BranchDecomposition> run() {
    if (!order_feasible()) return std::nullopt;
    if (!search()) return std::nullopt;
    BranchDecomposition d;
    d.branches = branches_;
    for (auto [u, v] : g_.edges())
      if (owner_[u] != owner_[v]) d.host_edges.emplace_back(u, v);
    return d;
  }

 private:
  bool order_feasible() const {
    const int n = g_.order();
    for (int a = 0; 4 * a <= n; ++a) {
      int rest = n - 4 * a;
      bool p4 = std::count(allowed_.begin(), allowed_.end(), BranchKind::p4) > 0;
      bool p5 = std::count(allowed_.begin(), allowed_.end(), BranchKind::p5) > 0;
      if (a > 0 && !p4) break;
      if (rest == 0 || (p5 && rest % 5 == 0)) return true;
    }
    return false;
  }

  bool search() {
    Vertex x = -1;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (owner_[v] < 0) {
        x = v;
        break;
      }
    if (x < 0) return true;
    for (BranchKind kind : allowed_) {
      const int len = branch_order(kind);
      for (const auto& path : paths_through(x, len)) {
        std::vector<int> root_positions =
            kind == BranchKind::p5 ? std::vector<int>{2} : std::vector<int>{1, 2};
        // lower-indexed centre first
        if (root_positions.size() == 2 && path[2] < path[1]) std::swap(root_positions[0], root_positions[1]);
        for (int rp : root_positions) {
          if (!placeable(path, rp)) continue;
          place(path, rp, kind);
          if (search()) return true;
          unplace(path);
        }
      }
    }
    return false;
  }

  // Non-root vertices may only touch their path neighbours; the root may also touch other roots.
  bool placeable(const std::vector<Vertex>& path, int root_pos) const {
    const int len = static_cast<int>(path.size());
    for (int i = 0; i < len; ++i) {
      const Vertex y = path[i];
      const int path_deg = (i > 0) + (i + 1 < len);
      if (i != root_pos) {
        if (g_.degree(y) != path_deg) return false;
        continue;
      }
      for (Vertex z : g_.neighbors(y)) {
        if (std::find(path.begin(), path.end(), z) != path.end()) {
          if (!(i > 0 && path[i - 1] == z) && !(i + 1 < len && path[i + 1] == z)) return false;
          continue;
        }
        if (owner_[z] >= 0 && !is_root_[z]) return false;
      }
    }
    return true;
  }

  void place(const std::vector<Vertex>& path, int root_pos, BranchKind kind) {
    const int id = static_cast<int>(branches_.size());
    for (Vertex y : path) owner_[y] = id;
    is_root_[path[root_pos]] = 1;
    branches_.push_back({kind, path, path[root_pos]});
  }

  void unplace(const std::vector<Vertex>& path) {
    for (Vertex y : path) owner_[y] = -1, is_root_[y] = 0;
    branches_.pop_back();
  }

  // Simple paths on unassigned vertices with `len` vertices containing x, one orientation each.
  std::vector<std::vector<Vertex>> paths_through(Vertex x, int len) const {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> left;
    std::vector<char> used(g_.order(), 0);
    used[x] = 1;
    for (int pos = 0; pos < len; ++pos) extend_left(x, pos, len, left, used, out);
    return out;
  }

  void extend_left(Vertex x, int remaining, int len, std::vector<Vertex>& left, std::vector<char>& used,
                   std::vector<std::vector<Vertex>>& out) const {
    if (remaining == 0) {
      std::vector<Vertex> right;
      extend_right(x, len - 1 - static_cast<int>(left.size()), left, right, used, out);
      return;
    }
    const Vertex tip = left.empty() ? x : left.back();
    for (Vertex y : g_.neighbors(tip)) {
      if (used[y] || owner_[y] >= 0) continue;
      used[y] = 1;
      left.push_back(y);
      extend_left(x, remaining - 1, len, left, used, out);
      left.pop_back();
      used[y] = 0;
    }
  }

  void extend_right(Vertex x, int remaining, const std::vector<Vertex>& left, std::vector<Vertex>& right,
                    std::vector<char>& used, std::vector<std::vector<Vertex>>& out) const {
    if (remaining == 0) {
      std::vector<Vertex> path(left.rbegin(), left.rend());
      path.push_back(x);
      path.insert(path.end(), right.begin(), right.end());
      if (path.front() < path.back()) out.push_back(std::move(path));
      return;
    }
    const Vertex tip = right.empty() ? x : right.back();
    for (Vertex y : g_.neighbors(tip)) {
      if (used[y] || owner_[y] >= 0) continue;
      used[y] = 1;
      right.push_back(y);
      extend_right(x, remaining - 1, left, right, used, out);
      right.pop_back();
      used[y] = 0;
    }
  }

  const Graph& g_;
  std::vector<BranchKind> allowed_;
  std::vector<int> owner_;
  std::vector<char> is_root_;
  std::vector<Branch> branches_;
};

}  // namespace

std::optional<BranchDecomposition> recognize_branch(const Graph& g, const std::set<BranchKind>& allowed) {
  if (!is_connected(g)) throw std::invalid_argument("recognize_branch needs a connected graph");
  if (allowed.empty()) return std::nullopt;
  return Recognizer(g, allowed).run();
}

bool validate_decomposition(const Graph& g, const BranchDecomposition& d, const std::set<BranchKind>& allowed) {
  const int n = g.order();
  std::vector<int> owner(n, -1);
  std::vector<char> root(n, 0);
  for (std::size_t i = 0; i < d.branches.size(); ++i) {
    const Branch& b = d.branches[i];
    if (!allowed.count(b.kind)) return false;
    if (static_cast<int>(b.path.size()) != branch_order(b.kind)) return false;
    for (Vertex v : b.path) {
      if (!g.valid_vertex(v) || owner[v] >= 0) return false;
      owner[v] = static_cast<int>(i);
    }
    // induced path
    for (std::size_t a = 0; a < b.path.size(); ++a)
      for (std::size_t c = a + 1; c < b.path.size(); ++c)
        if (g.has_edge(b.path[a], b.path[c]) != (c == a + 1)) return false;
    // root is a center of the path
    const int len = static_cast<int>(b.path.size());
    auto at = std::find(b.path.begin(), b.path.end(), b.root) - b.path.begin();
    if (at == len || (at != (len - 1) / 2 && at != len / 2)) return false;
    root[b.root] = 1;
  }
  if (std::count(owner.begin(), owner.end(), -1) > 0) return false;
  std::set<std::pair<Vertex, Vertex>> host(d.host_edges.begin(), d.host_edges.end());
  Graph h(n);
  for (auto [u, v] : g.edges()) {
    if (owner[u] == owner[v]) continue;
    if (!root[u] || !root[v]) return false;
    if (!host.count({u, v}) && !host.count({v, u})) return false;
    h.add_edge(owner[u] < owner[v] ? owner[u] : owner[v], owner[u] < owner[v] ? owner[v] : owner[u]);
  }
  for (auto [u, v] : d.host_edges)
    if (!g.valid_vertex(u) || !g.valid_vertex(v) || !g.has_edge(u, v) || owner[u] == owner[v]) return false;
  // host graph over branch indices must be connected
  Graph hb(static_cast<int>(d.branches.size()));
  for (auto [a, b] : h.edges()) hb.add_edge(a, b);
  return !d.branches.empty() && is_connected(hb);
}

json to_json(const BranchDecomposition& d) {
  json branches = json::array();
  for (const auto& b : d.branches)
    branches.push_back({{"kind", to_string(b.kind)}, {"vertices", b.path}, {"root", b.root}});
  json edges = json::array();
  for (auto [u, v] : d.host_edges) edges.push_back({u, v});
  return {{"branches", branches}, {"host_edges", edges}};
}

}  // namespace rkdom
