#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rkdom/graph.hpp"

namespace rkdom {

enum class Variant { rdf, srdf };

std::string to_string(Variant v);
Variant parse_variant(std::string_view s);

// f: V -> {0..k}. Weight w(f) is the sum over all vertices.
class WeightFunction {
 public:
  WeightFunction() = default;
  WeightFunction(int k, std::vector<int> weights);
  static WeightFunction constant(int k, int n, int value);

  int k() const { return k_; }
  int order() const { return static_cast<int>(weights_.size()); }
  int operator[](Vertex v) const { return weights_[static_cast<std::size_t>(v)]; }
  void set(Vertex v, int value);
  const std::vector<int>& values() const { return weights_; }

  int weight() const;
  // |V_i|
  int count(int i) const;
  // V_i
  std::vector<Vertex> level(int i) const;

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;
  friend auto operator<=>(const WeightFunction&, const WeightFunction&) = default;

 private:
  int k_ = 2;
  std::vector<int> weights_;
};

inline int weight(const WeightFunction& f) { return f.weight(); }

// Threshold tests in exact integer arithmetic.
inline bool below_half(int value, int k) { return 2 * value < k; }
inline bool above_half(int value, int k) { return 2 * value > k; }

struct Validity {
  bool valid = true;
  // smallest-index violating vertex
  std::optional<Vertex> violation;
  explicit operator bool() const { return valid; }
};

Validity is_krdf(const Graph& g, const WeightFunction& f);
Validity is_ksrdf(const Graph& g, const WeightFunction& f);
Validity is_valid(const Graph& g, const WeightFunction& f, Variant variant);

// Weight-function text: "k" on the first line, then n integers.
WeightFunction parse_weight_function(std::string_view text);
std::string format_weight_function(const WeightFunction& f);
WeightFunction read_weight_function_file(const std::string& path);

}  // namespace rkdom
