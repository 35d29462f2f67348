#include "rkdom/labeling.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rkdom {

std::string to_string(Variant v) { return v == Variant::rdf ? "rdf" : "srdf"; }

Variant parse_variant(std::string_view s) {
  if (s == "rdf") return Variant::rdf;
  if (s == "srdf") return Variant::srdf;
  throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

WeightFunction::WeightFunction(int k, std::vector<int> weights) : k_(k), weights_(std::move(weights)) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  for (int w : weights_)
    if (w < 0 || w > k) throw std::out_of_range("weight " + std::to_string(w) + " outside 0.." + std::to_string(k));
}

WeightFunction WeightFunction::constant(int k, int n, int value) {
  return WeightFunction(k, std::vector<int>(static_cast<std::size_t>(n), value));
}

void WeightFunction::set(Vertex v, int value) {
  if (value < 0 || value > k_) throw std::out_of_range("weight outside 0..k");
  weights_.at(static_cast<std::size_t>(v)) = value;
}

int WeightFunction::weight() const { return std::accumulate(weights_.begin(), weights_.end(), 0); }

int WeightFunction::count(int i) const {
  return static_cast<int>(std::count(weights_.begin(), weights_.end(), i));
}

std::vector<Vertex> WeightFunction::level(int i) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v)
    if ((*this)[v] == i) out.push_back(v);
  return out;
}

namespace {

void check_sizes(const Graph& g, const WeightFunction& f) {
  if (g.order() != f.order())
    throw std::invalid_argument("weight function has " + std::to_string(f.order()) + " entries, graph has " +
                                std::to_string(g.order()) + " vertices");
}

}  // namespace

Validity is_krdf(const Graph& g, const WeightFunction& f) {
  check_sizes(g, f);
  const int k = f.k();
  for (Vertex u = 0; u < g.order(); ++u) {
    if (!below_half(f[u], k)) continue;
    int sum = f[u];
    for (Vertex v : g.neighbors(u)) sum += f[v];
    if (sum < k) return {false, u};
  }
  return {};
}

Validity is_ksrdf(const Graph& g, const WeightFunction& f) {
  check_sizes(g, f);
  const int k = f.k();
  for (Vertex u = 0; u < g.order(); ++u) {
    if (!below_half(f[u], k)) continue;
    int sum = f[u];
    for (Vertex v : g.neighbors(u))
      if (above_half(f[v], k)) sum += f[v];
    if (sum < k) return {false, u};
  }
  return {};
}

Validity is_valid(const Graph& g, const WeightFunction& f, Variant variant) {
  return variant == Variant::rdf ? is_krdf(g, f) : is_ksrdf(g, f);
}

WeightFunction parse_weight_function(std::string_view text) {
  // '#' comments as in the edge-list format
  std::string stripped;
  std::istringstream lines{std::string(text)};
  for (std::string line; std::getline(lines, line);) stripped += line.substr(0, line.find('#')) + '\n';
  std::istringstream in{stripped};
  int k = 0;
  if (!(in >> k) || k < 1) throw std::invalid_argument("weight function: missing or invalid k");
  std::vector<int> ws;
  int w = 0;
  while (in >> w) ws.push_back(w);
  if (!in.eof()) throw std::invalid_argument("weight function: non-integer token");
  return WeightFunction(k, std::move(ws));
}

std::string format_weight_function(const WeightFunction& f) {
  std::ostringstream out;
  out << f.k() << '\n';
  for (Vertex v = 0; v < f.order(); ++v) out << (v ? " " : "") << f[v];
  out << '\n';
  return out.str();
}

WeightFunction read_weight_function_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open function file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_weight_function(buf.str());
}

}  // namespace rkdom
