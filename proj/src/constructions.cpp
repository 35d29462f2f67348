#include "rkdom/constructions.hpp"

#include <stdexcept>

namespace rkdom {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational bound_coefficient(const BoundSpec& spec) {
  const long long k = spec.k;
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (k % 2 == 1) return Rational(3 * k + 1, 8);
  if (spec.variant == Variant::srdf && k <= 6) return Rational(2 * k, 5);
  return Rational(3 * k, 8);
}

Rational bound_value(int n, const BoundSpec& spec) {
  if (n < 3) throw std::invalid_argument("bound requires n >= 3");
  return bound_coefficient(spec) * Rational(n);
}

LiftConstants lift_constants(int k) { return {k / 2, (k + 1) / 2}; }

WeightFunction scale(const WeightFunction& f, int c) {
  if (c < 1) throw std::invalid_argument("scale factor must be positive");
  std::vector<int> out(f.values());
  for (int& w : out) w *= c;
  return WeightFunction(c * f.k(), std::move(out));
}

WeightFunction lift_rdf(const WeightFunction& f, int c) {
  if (c < 1) throw std::invalid_argument("lift factor must be positive");
  const int a = lift_constants(f.k()).a_floor;
  std::vector<int> out(f.values());
  for (int& w : out) w = w <= a ? c * w + 1 : c * w;
  return WeightFunction(c * f.k() + 1, std::move(out));
}

bool in_restricted_form(const WeightFunction& f) {
  for (int w : f.values())
    if (w > 0 && below_half(w, f.k())) return false;
  return true;
}

WeightFunction lift_srdf(const WeightFunction& f, int c) {
  if (c < 1) throw std::invalid_argument("lift factor must be positive");
  if (!in_restricted_form(f)) throw std::invalid_argument("lift_srdf needs weights in {0} and [k/2, k]");
  std::vector<int> out(f.values());
  for (int& w : out)
    if (w > 0) w = c * w + 1;
  return WeightFunction(c * f.k() + 1, std::move(out));
}

WeightFunction leaf_normalize(const Graph& g, const WeightFunction& f, Vertex v, Variant variant) {
  if (g.order() != f.order()) throw std::invalid_argument("function does not match graph");
  const auto leaves = leaves_adjacent(g, v).members();
  if (leaves.size() < 2) throw std::invalid_argument("vertex needs at least two adjacent leaves");
  if (!is_valid(g, f, variant)) throw std::invalid_argument("input function is not valid");
  WeightFunction out = f;
  out.set(v, f.k());
  for (Vertex u : leaves) out.set(u, 0);
  return out;
}

Graph attach_pendants(const Graph& g, Vertex v, int extra) {
  if (extra < 1) throw std::invalid_argument("need at least one pendant");
  Graph h = g;
  for (int i = 0; i < extra; ++i) h.add_edge(v, h.add_vertex());
  return h;
}

PendantCheck pendant_invariance_check(const Graph& g, Vertex v, int extra, int k, Variant variant,
                                      const SolveOptions& opts) {
  if (leaves_adjacent(g, v).size() < 2) throw std::invalid_argument("vertex needs at least two adjacent leaves");
  const Graph h = attach_pendants(g, v, extra);
  PendantCheck r;
  auto exact = [&](const Graph& x) {
    return is_tree(x) ? tree_solve(x, k, variant).value : solve(x, k, variant, opts).value;
  };
  r.base_value = exact(g);
  r.extended_value = exact(h);
  r.equal = r.base_value == r.extended_value;
  return r;
}

}  // namespace rkdom
