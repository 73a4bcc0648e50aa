#pragma once

// Slow, deliberately naive reference computations used as test oracles.
// Nothing here shares code paths with the library's solvers beyond the
// instance accessors and the Rational type.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "densest/flow_network.hpp"
#include "densest/hypergraph.hpp"
#include "densest/rational.hpp"

namespace densest::testing {

inline Rational Q(const char* text) { return Rational::parse(text); }

inline std::vector<Rational> row(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.push_back(Q(v));
  return out;
}

struct EdgeSpec {
  std::vector<VertexId> vertices;
  std::vector<Rational> table;
};

inline WeightedHypergraph make_instance(std::size_t n, const std::vector<EdgeSpec>& edges) {
  std::vector<std::vector<VertexId>> lists;
  std::vector<WeightFn> weights;
  for (const auto& e : edges) {
    lists.push_back(e.vertices);
    weights.push_back(WeightFn::table(e.table));
  }
  return WeightedHypergraph(Hypergraph(n, lists), std::move(weights));
}

inline std::vector<VertexId> mask_to_set(std::uint64_t mask, std::size_t n) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (mask >> v & 1) out.push_back(v);
  }
  return out;
}

// F(S) straight from the definition: count |e ∩ S| by scanning every edge.
inline Rational naive_weight(const WeightedHypergraph& h, std::uint64_t mask) {
  Rational total;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    std::size_t c = 0;
    for (VertexId v : h.graph().edge(e)) c += mask >> v & 1;
    total += h.weight(e)(c);
  }
  return total;
}

struct NaiveBest {
  std::vector<VertexId> set;
  Rational density;
};

// Maximum density over all nonempty subsets, ties to the smaller set and
// then the lexicographically smaller sorted id list.
inline NaiveBest naive_densest(const WeightedHypergraph& h) {
  const std::size_t n = h.vertex_count();
  NaiveBest best;
  bool have = false;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const auto set = mask_to_set(mask, n);
    const Rational d = naive_weight(h, mask) / Rational(static_cast<long long>(set.size()));
    bool take = !have || d > best.density;
    if (have && d == best.density) {
      take = set.size() < best.set.size() ||
             (set.size() == best.set.size() && set < best.set);
    }
    if (take) {
      best = {set, d};
      have = true;
    }
  }
  return best;
}

// Minimum s-t cut by trying every partition of the non-terminal nodes.
inline BigInt enumerate_min_cut(const FlowNetwork& net) {
  std::vector<std::uint32_t> inner;
  for (std::uint32_t u = 0; u < net.node_count; ++u) {
    if (u != net.source && u != net.sink) inner.push_back(u);
  }
  BigInt best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inner.size()); ++mask) {
    std::vector<bool> side(net.node_count, false);
    side[net.source] = true;
    for (std::size_t i = 0; i < inner.size(); ++i) side[inner[i]] = mask >> i & 1;
    BigInt cost = 0;
    for (const auto& a : net.arcs) {
      if (side[a.from] && !side[a.to]) cost += a.capacity;
    }
    if (best < 0 || cost < best) best = cost;
  }
  return best;
}

// The cut X = {s} ∪ S ∪ {u^e_i : i < |e ∩ S|} over all network nodes.
inline std::vector<bool> lemma_cut(const WeightedHypergraph& h, const FlowNetwork& net,
                                   std::uint64_t mask) {
  std::vector<bool> side(net.node_count, false);
  side[net.source] = true;
  for (VertexId v = 0; v < h.vertex_count(); ++v) side[v] = mask >> v & 1;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    std::size_t c = 0;
    for (VertexId v : h.graph().edge(e)) c += mask >> v & 1;
    for (std::size_t i = 0; i < c; ++i) side[net.gadget_offset[e] + i] = true;
  }
  return side;
}

inline BigInt side_cost(const FlowNetwork& net, const std::vector<bool>& side) {
  BigInt cost = 0;
  for (const auto& a : net.arcs) {
    if (side[a.from] && !side[a.to]) cost += a.capacity;
  }
  return cost;
}

// Classical edge density |E(S)| / |S| of a plain graph, best over subsets.
inline Rational graph_densest(std::size_t n,
                              const std::vector<std::pair<VertexId, VertexId>>& edges) {
  Rational best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    long long inside = 0;
    for (const auto& [a, b] : edges) inside += (mask >> a & 1) && (mask >> b & 1);
    const Rational d = Rational(inside) / Rational(static_cast<long long>(
                                              __builtin_popcountll(mask)));
    if (d > best) best = d;
  }
  return best;
}

}  // namespace densest::testing
