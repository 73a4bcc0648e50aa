#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "densest/rational.hpp"

namespace densest {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Immutable hypergraph in compressed incidence form. Edges are stored
/// sorted and duplicate-free; the vertex->edge incidence is built once.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Sorts each edge. Throws ParseError on an empty edge, an index outside
  /// [0, vertex_count) or a repeated vertex within one edge.
  Hypergraph(std::size_t vertex_count,
             const std::vector<std::vector<VertexId>>& edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_offsets_.size() - 1; }
  /// Sum of edge sizes.
  std::size_t incidence_count() const { return edge_vertices_.size(); }
  /// Largest edge size (0 without edges).
  std::size_t rank() const { return rank_; }

  std::span<const VertexId> edge(EdgeId e) const {
    return {edge_vertices_.data() + edge_offsets_[e],
            edge_offsets_[e + 1] - edge_offsets_[e]};
  }
  std::size_t edge_size(EdgeId e) const {
    return edge_offsets_[e + 1] - edge_offsets_[e];
  }
  /// Offset of edge e in the flat incidence array.
  std::size_t edge_offset(EdgeId e) const { return edge_offsets_[e]; }

  std::span<const EdgeId> incident_edges(VertexId v) const {
    return {vertex_edges_.data() + vertex_offsets_[v],
            vertex_offsets_[v + 1] - vertex_offsets_[v]};
  }
  std::size_t degree(VertexId v) const {
    return vertex_offsets_[v + 1] - vertex_offsets_[v];
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.vertex_count_ == b.vertex_count_ &&
           a.edge_offsets_ == b.edge_offsets_ &&
           a.edge_vertices_ == b.edge_vertices_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::size_t rank_ = 0;
  std::vector<std::size_t> edge_offsets_{0};
  std::vector<VertexId> edge_vertices_;
  std::vector<std::size_t> vertex_offsets_{0};
  std::vector<EdgeId> vertex_edges_;
};

enum class Shape { kConvex, kConcave, kNeither };

std::string_view to_string(Shape shape);

struct WeightSource {
  enum class Kind { kTable, kLinear, kAllOrNothing, kPower };
  Kind kind = Kind::kTable;
  Rational scale;             // w for the closed forms
  unsigned exponent = 0;      // power only
};

/// Tabulated edge-weight function f(0..k) for an edge of size k.
/// Always normalized to f(0) = 0 and non-decreasing.
class WeightFn {
 public:
  /// The zero function on an edge of size 1.
  WeightFn() : WeightFn({Rational(), Rational()}, WeightSource{}) {}

  /// values[i] = f(i). A non-zero f(0) is subtracted from every entry;
  /// `shifted` (when given) reports whether that happened. Throws
  /// ValidationError on negative or decreasing entries.
  static WeightFn table(std::vector<Rational> values, bool* shifted = nullptr);
  /// f(i) = w * i.
  static WeightFn linear(std::size_t edge_size, const Rational& w);
  /// f(i) = w when i = k, else 0.
  static WeightFn all_or_nothing(std::size_t edge_size, const Rational& w);
  /// f(i) = w * i^exponent, exponent >= 1.
  static WeightFn power(std::size_t edge_size, const Rational& w,
                        unsigned exponent);

  std::size_t edge_size() const { return values_.size() - 1; }
  const Rational& operator()(std::size_t i) const { return values_[i]; }
  const Rational& top() const { return values_.back(); }
  std::span<const Rational> values() const { return values_; }

  /// Linear tables are both convex and concave and classify as kConvex.
  Shape shape() const { return shape_; }
  bool is_convex() const { return convex_; }
  bool is_concave() const { return concave_; }
  const WeightSource& source() const { return source_; }

  friend bool operator==(const WeightFn& a, const WeightFn& b) {
    return a.values_ == b.values_;
  }

 private:
  WeightFn(std::vector<Rational> values, WeightSource source);

  std::vector<Rational> values_;
  Shape shape_ = Shape::kConvex;
  bool convex_ = true;
  bool concave_ = true;
  WeightSource source_;
};

/// A hypergraph with one weight function per edge. Immutable.
class WeightedHypergraph {
 public:
  WeightedHypergraph() = default;
  /// Throws ValidationError when the weight count or a table length does
  /// not match the edges.
  WeightedHypergraph(Hypergraph graph, std::vector<WeightFn> weights);

  const Hypergraph& graph() const { return graph_; }
  const WeightFn& weight(EdgeId e) const { return weights_[e]; }
  std::span<const WeightFn> weights() const { return weights_; }

  std::size_t vertex_count() const { return graph_.vertex_count(); }
  std::size_t edge_count() const { return graph_.edge_count(); }

  /// Sum over edges of f_e(|e|).
  const Rational& total_weight() const { return total_weight_; }
  /// lcm of every table entry's denominator.
  const BigInt& weight_denominator() const { return weight_denominator_; }

  bool all_convex() const { return all_convex_; }
  bool all_concave() const { return all_concave_; }
  /// "convex", "concave" or "mixed"; an instance that is both reports
  /// "convex".
  std::string_view shape_class() const;

  /// Every table scaled by weight_denominator(), flattened per edge:
  /// entry graph().edge_offset(e) + e + i holds f_e(i) * denominator.
  std::vector<BigInt> scaled_tables() const;

  friend bool operator==(const WeightedHypergraph& a,
                         const WeightedHypergraph& b) {
    return a.graph_ == b.graph_ && a.weights_ == b.weights_;
  }

 private:
  Hypergraph graph_;
  std::vector<WeightFn> weights_;
  Rational total_weight_;
  BigInt weight_denominator_ = 1;
  bool all_convex_ = true;
  bool all_concave_ = true;
};

/// Per-edge intersection counts |e ∩ S| for a mutable vertex set S.
class IntersectionCounts {
 public:
  IntersectionCounts(const Hypergraph& graph, std::span<const VertexId> set);

  bool contains(VertexId v) const { return member_[v]; }
  std::uint32_t count(EdgeId e) const { return counts_[e]; }
  std::size_t size() const { return size_; }

  void insert(const Hypergraph& graph, VertexId v);
  void erase(const Hypergraph& graph, VertexId v);

 private:
  std::vector<bool> member_;
  std::vector<std::uint32_t> counts_;
  std::size_t size_ = 0;
};

/// F(S) = sum_e f_e(|e ∩ S|). Duplicate ids in S count once.
Rational induced_weight(const WeightedHypergraph& instance,
                        std::span<const VertexId> set);

/// F(S) / |S|. Throws EmptySetError for S = ∅.
Rational density(const WeightedHypergraph& instance,
                 std::span<const VertexId> set);

/// F(S) - F(S \ {v}) from maintained counts, in O(deg(v)).
/// Throws InvalidArgumentError when v is not in S.
Rational removal_delta(const WeightedHypergraph& instance,
                       const IntersectionCounts& counts, VertexId v);

enum class Algorithm {
  kFlow,
  kFlowEps,
  kGreedy,
  kPara,
  kConcave,
  kBruteForce,
  kSweep,
};

std::string_view to_string(Algorithm algorithm);

struct Solution {
  std::vector<VertexId> vertices;  // sorted, nonempty
  Rational density;
  Algorithm algorithm = Algorithm::kBruteForce;
  std::size_t iterations = 0;
  std::map<std::string, std::string> extras;
};

/// Global tie-break: higher density first, then the smaller set, then the
/// lexicographically smaller sorted id list.
bool preferred(const Rational& density_a, std::span<const VertexId> set_a,
               const Rational& density_b, std::span<const VertexId> set_b);

}  // namespace densest
