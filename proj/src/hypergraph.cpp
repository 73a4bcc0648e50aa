#include "densest/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "densest/errors.hpp"

namespace densest {

Hypergraph::Hypergraph(std::size_t vertex_count,
                       const std::vector<std::vector<VertexId>>& edges)
    : vertex_count_(vertex_count) {
  std::size_t total = 0;
  for (const auto& e : edges) total += e.size();
  edge_offsets_.reserve(edges.size() + 1);
  edge_vertices_.reserve(total);

  std::vector<std::size_t> degree(vertex_count, 0);
  std::vector<VertexId> sorted;
  for (std::size_t j = 0; j < edges.size(); ++j) {
    sorted = edges[j];
    if (sorted.empty()) {
      throw ParseError("edge " + std::to_string(j) + " is empty");
    }
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] >= vertex_count) {
        throw ParseError("edge " + std::to_string(j) + ": vertex " +
                         std::to_string(sorted[i]) + " out of range");
      }
      if (i > 0 && sorted[i] == sorted[i - 1]) {
        throw ParseError("edge " + std::to_string(j) + ": duplicate vertex " +
                         std::to_string(sorted[i]));
      }
      ++degree[sorted[i]];
    }
    edge_vertices_.insert(edge_vertices_.end(), sorted.begin(), sorted.end());
    edge_offsets_.push_back(edge_vertices_.size());
    rank_ = std::max(rank_, sorted.size());
  }

  vertex_offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    vertex_offsets_[v + 1] = vertex_offsets_[v] + degree[v];
  }
  vertex_edges_.resize(total);
  std::vector<std::size_t> cursor(vertex_offsets_.begin(),
                                  vertex_offsets_.end() - 1);
  for (EdgeId e = 0; e < edge_count(); ++e) {
    for (VertexId v : edge(e)) vertex_edges_[cursor[v]++] = e;
  }
}

std::string_view to_string(Shape shape) {
  switch (shape) {
    case Shape::kConvex:
      return "convex";
    case Shape::kConcave:
      return "concave";
    case Shape::kNeither:
      return "neither";
  }
  return "?";
}

WeightFn::WeightFn(std::vector<Rational> values, WeightSource source)
    : values_(std::move(values)), source_(std::move(source)) {
  for (std::size_t i = 1; i + 1 < values_.size(); ++i) {
    const Rational left = values_[i] - values_[i - 1];
    const Rational right = values_[i + 1] - values_[i];
    if (left > right) convex_ = false;
    if (left < right) concave_ = false;
  }
  shape_ = convex_ ? Shape::kConvex
                   : (concave_ ? Shape::kConcave : Shape::kNeither);
}

WeightFn WeightFn::table(std::vector<Rational> values, bool* shifted) {
  if (values.size() < 2) {
    throw ValidationError("weight table needs at least two entries");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].sign() < 0) {
      throw ValidationError("negative weight at index " + std::to_string(i));
    }
    if (i > 0 && values[i] < values[i - 1]) {
      throw ValidationError("weight table decreases at index " +
                            std::to_string(i));
    }
  }
  const bool shift = !values.front().is_zero();
  if (shift) {
    const Rational base = values.front();
    for (auto& v : values) v -= base;
  }
  if (shifted != nullptr) *shifted = shift;
  return WeightFn(std::move(values), WeightSource{});
}

namespace {

void check_closed_form(std::size_t edge_size, const Rational& w) {
  if (edge_size == 0) throw ValidationError("edge size must be positive");
  if (w.sign() < 0) throw ValidationError("negative weight");
}

}  // namespace

WeightFn WeightFn::linear(std::size_t edge_size, const Rational& w) {
  check_closed_form(edge_size, w);
  std::vector<Rational> values(edge_size + 1);
  for (std::size_t i = 1; i <= edge_size; ++i) {
    values[i] = w * Rational(static_cast<long long>(i));
  }
  return WeightFn(std::move(values),
                  WeightSource{WeightSource::Kind::kLinear, w, 0});
}

WeightFn WeightFn::all_or_nothing(std::size_t edge_size, const Rational& w) {
  check_closed_form(edge_size, w);
  std::vector<Rational> values(edge_size + 1);
  values.back() = w;
  return WeightFn(std::move(values),
                  WeightSource{WeightSource::Kind::kAllOrNothing, w, 0});
}

WeightFn WeightFn::power(std::size_t edge_size, const Rational& w,
                         unsigned exponent) {
  check_closed_form(edge_size, w);
  if (exponent < 1) throw ValidationError("power exponent must be >= 1");
  std::vector<Rational> values(edge_size + 1);
  for (std::size_t i = 1; i <= edge_size; ++i) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), i, exponent);
    values[i] = w * Rational(p);
  }
  return WeightFn(std::move(values),
                  WeightSource{WeightSource::Kind::kPower, w, exponent});
}

WeightedHypergraph::WeightedHypergraph(Hypergraph graph,
                                       std::vector<WeightFn> weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
  if (weights_.size() != graph_.edge_count()) {
    throw ValidationError("expected " + std::to_string(graph_.edge_count()) +
                          " weight functions, got " +
                          std::to_string(weights_.size()));
  }
  for (EdgeId e = 0; e < weights_.size(); ++e) {
    const WeightFn& f = weights_[e];
    if (f.edge_size() != graph_.edge_size(e)) {
      throw ValidationError("edge " + std::to_string(e) +
                            ": weight table length does not match edge size");
    }
    total_weight_ += f.top();
    for (const Rational& value : f.values()) {
      if (value.denominator() != 1) {
        weight_denominator_ = lcm(weight_denominator_, value.denominator());
      }
    }
    all_convex_ = all_convex_ && f.is_convex();
    all_concave_ = all_concave_ && f.is_concave();
  }
}

std::string_view WeightedHypergraph::shape_class() const {
  if (all_convex_) return "convex";
  if (all_concave_) return "concave";
  return "mixed";
}

std::vector<BigInt> WeightedHypergraph::scaled_tables() const {
  std::vector<BigInt> out;
  out.reserve(graph_.incidence_count() + graph_.edge_count());
  const Rational scale(weight_denominator_);
  for (const WeightFn& f : weights_) {
    for (const Rational& value : f.values()) {
      out.push_back((value * scale).numerator());
    }
  }
  return out;
}

IntersectionCounts::IntersectionCounts(const Hypergraph& graph,
                                       std::span<const VertexId> set)
    : member_(graph.vertex_count(), false), counts_(graph.edge_count(), 0) {
  for (VertexId v : set) {
    if (v >= graph.vertex_count()) {
      throw InvalidArgumentError("vertex " + std::to_string(v) +
                                 " out of range");
    }
    if (!member_[v]) insert(graph, v);
  }
}

void IntersectionCounts::insert(const Hypergraph& graph, VertexId v) {
  if (member_[v]) return;
  member_[v] = true;
  ++size_;
  for (EdgeId e : graph.incident_edges(v)) ++counts_[e];
}

void IntersectionCounts::erase(const Hypergraph& graph, VertexId v) {
  if (!member_[v]) return;
  member_[v] = false;
  --size_;
  for (EdgeId e : graph.incident_edges(v)) --counts_[e];
}

Rational induced_weight(const WeightedHypergraph& instance,
                        std::span<const VertexId> set) {
  const IntersectionCounts counts(instance.graph(), set);
  Rational total;
  for (EdgeId e = 0; e < instance.edge_count(); ++e) {
    if (counts.count(e) > 0) total += instance.weight(e)(counts.count(e));
  }
  return total;
}

Rational density(const WeightedHypergraph& instance,
                 std::span<const VertexId> set) {
  const IntersectionCounts counts(instance.graph(), set);
  if (counts.size() == 0) {
    throw EmptySetError("density of the empty set is undefined");
  }
  Rational total;
  for (EdgeId e = 0; e < instance.edge_count(); ++e) {
    if (counts.count(e) > 0) total += instance.weight(e)(counts.count(e));
  }
  return total / Rational(static_cast<long long>(counts.size()));
}

Rational removal_delta(const WeightedHypergraph& instance,
                       const IntersectionCounts& counts, VertexId v) {
  if (v >= instance.vertex_count() || !counts.contains(v)) {
    throw InvalidArgumentError("vertex " + std::to_string(v) +
                               " is not in the set");
  }
  Rational delta;
  for (EdgeId e : instance.graph().incident_edges(v)) {
    const auto c = counts.count(e);
    const WeightFn& f = instance.weight(e);
    delta += f(c) - f(c - 1);
  }
  return delta;
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kFlow:
      return "flow";
    case Algorithm::kFlowEps:
      return "flow-eps";
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kPara:
      return "para";
    case Algorithm::kConcave:
      return "concave";
    case Algorithm::kBruteForce:
      return "brute";
    case Algorithm::kSweep:
      return "sweep";
  }
  return "?";
}

bool preferred(const Rational& density_a, std::span<const VertexId> set_a,
               const Rational& density_b, std::span<const VertexId> set_b) {
  if (density_a != density_b) return density_a > density_b;
  if (set_a.size() != set_b.size()) return set_a.size() < set_b.size();
  return std::lexicographical_compare(set_a.begin(), set_a.end(),
                                      set_b.begin(), set_b.end());
}

}  // namespace densest
