#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "densest/hypergraph.hpp"
#include "densest/rational.hpp"

namespace densest {

struct FlowArc {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  BigInt capacity;
};

/// The s-t gadget whose minimum cut evaluates min_S (λ|S| - F(S)) + Ψ.
///
/// Node layout: hypergraph vertices 0..n-1, then for every edge e the
/// gadget nodes u^e_0..u^e_{|e|-1} starting at gadget_offset[e], then the
/// source (n + p) and the sink (n + p + 1). All capacities are the
/// rational capacities multiplied by `scale`.
struct FlowNetwork {
  std::size_t vertex_count = 0;
  std::size_t node_count = 0;
  std::uint32_t source = 0;
  std::uint32_t sink = 0;
  std::vector<FlowArc> arcs;
  std::vector<std::uint32_t> gadget_offset;
  BigInt scale = 1;
  Rational lambda;
  /// Ψ · scale, the cost of the cut that keeps only s on the source side.
  BigInt scaled_total_weight;
};

enum class CutVariant { kMinimalSource, kMaximalSource };

struct CutResult {
  BigInt cut_value;                           // scaled units
  std::vector<VertexId> source_side_vertices;  // X ∩ V, sorted
  std::vector<bool> source_side;               // X over all nodes
  CutVariant variant = CutVariant::kMinimalSource;
};

/// α_0 = f(1) - f(0), α_i = f(i+1) + f(i-1) - 2 f(i) for 0 < i < |e|.
/// Throws NotConvexError when some α_i is negative.
std::vector<Rational> alpha_coefficients(const WeightFn& f);

/// Builds the gadget for density threshold `lambda` >= 0. Zero-capacity
/// arcs are omitted. Throws NotConvexError / InvalidArgumentError.
FlowNetwork build_network(const WeightedHypergraph& instance,
                          const Rational& lambda);

/// Adds an arc s -> v whose capacity exceeds every finite cut, so v stays
/// on the source side of any minimum cut.
void force_source_side(FlowNetwork& network, VertexId v);

/// Exact minimum s-t cut. The computation runs on 64-bit capacities when
/// the total capacity leaving s and entering t both fit, otherwise on
/// arbitrary-precision integers.
CutResult min_cut(const FlowNetwork& network, CutVariant variant);

/// Capacity of the arcs leaving `source_side` (indexed by node).
BigInt cut_capacity(const FlowNetwork& network,
                    const std::vector<bool>& source_side);

/// DIMACS max-flow text (1-based node ids).
void write_dimacs(std::ostream& out, const FlowNetwork& network);

}  // namespace densest
