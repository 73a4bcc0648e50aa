#include "densest/flow_network.hpp"

#include <cstdint>
#include <ostream>
#include <string>

#include "densest/errors.hpp"
#include "densest/max_flow.hpp"

namespace densest {

std::vector<Rational> alpha_coefficients(const WeightFn& f) {
  const std::size_t k = f.edge_size();
  std::vector<Rational> alpha(k);
  alpha[0] = f(1) - f(0);
  for (std::size_t i = 1; i < k; ++i) {
    alpha[i] = f(i + 1) + f(i - 1) - f(i) - f(i);
    if (alpha[i].sign() < 0) {
      throw NotConvexError("weight function is not convex at " +
                           std::to_string(i));
    }
  }
  if (alpha[0].sign() < 0) throw NotConvexError("weight function decreases");
  return alpha;
}

FlowNetwork build_network(const WeightedHypergraph& instance,
                          const Rational& lambda) {
  if (lambda.sign() < 0) {
    throw InvalidArgumentError("lambda must be non-negative");
  }
  const Hypergraph& g = instance.graph();
  const std::size_t n = g.vertex_count();
  const std::size_t p = g.incidence_count();

  std::vector<std::vector<Rational>> alphas;
  alphas.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    try {
      alphas.push_back(alpha_coefficients(instance.weight(e)));
    } catch (const NotConvexError& err) {
      throw NotConvexError("edge " + std::to_string(e) + ": " + err.what());
    }
  }

  FlowNetwork net;
  net.vertex_count = n;
  net.node_count = n + p + 2;
  net.source = static_cast<std::uint32_t>(n + p);
  net.sink = static_cast<std::uint32_t>(n + p + 1);
  net.lambda = lambda;
  net.scale = lcm(instance.weight_denominator(), lambda.denominator());
  net.scaled_total_weight = (instance.total_weight() * Rational(net.scale)).numerator();

  const Rational scale(net.scale);
  const BigInt lambda_cap = (lambda * scale).numerator();
  if (lambda_cap != 0) {
    for (std::uint32_t v = 0; v < n; ++v) {
      net.arcs.push_back({v, net.sink, lambda_cap});
    }
  }

  net.gadget_offset.resize(g.edge_count());
  std::uint32_t next = static_cast<std::uint32_t>(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    net.gadget_offset[e] = next;
    const auto members = g.edge(e);
    const std::size_t k = members.size();
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint32_t u = next + static_cast<std::uint32_t>(i);
      const BigInt a = (alphas[e][i] * scale).numerator();
      if (a == 0) continue;
      net.arcs.push_back({net.source, u, BigInt(a * static_cast<unsigned long>(k - i))});
      for (VertexId v : members) net.arcs.push_back({u, v, a});
    }
    next += static_cast<std::uint32_t>(k);
  }
  return net;
}

void force_source_side(FlowNetwork& network, VertexId v) {
  BigInt total = 1;
  for (const FlowArc& arc : network.arcs) total += arc.capacity;
  network.arcs.push_back({network.source, v, total});
}

namespace {

template <typename Cap>
std::vector<bool> solve_side(const FlowNetwork& net, CutVariant variant,
                             Cap (*convert)(const BigInt&)) {
  PushRelabel<Cap> solver(net.node_count);
  const bool reversed = variant == CutVariant::kMinimalSource;
  for (const FlowArc& arc : net.arcs) {
    if (reversed) {
      solver.add_arc(arc.to, arc.from, convert(arc.capacity));
    } else {
      solver.add_arc(arc.from, arc.to, convert(arc.capacity));
    }
  }
  if (reversed) {
    // On the reversed network the roles swap: the nodes that can still
    // reach the original source form the minimal source side.
    solver.run(net.sink, net.source);
    return solver.reaches_sink();
  }
  solver.run(net.source, net.sink);
  std::vector<bool> side = solver.reaches_sink();
  side.flip();
  return side;
}

std::int64_t as_int64(const BigInt& v) { return to_int64(v); }
BigInt as_big(const BigInt& v) { return v; }

bool fits_fast_path(const FlowNetwork& net) {
  BigInt out_of_source = 0;
  BigInt into_sink = 0;
  for (const FlowArc& arc : net.arcs) {
    if (arc.from == net.source) out_of_source += arc.capacity;
    if (arc.to == net.sink) into_sink += arc.capacity;
    if (!fits_int64(arc.capacity)) return false;
  }
  static const BigInt limit = BigInt(1) << 62;
  return out_of_source < limit && into_sink < limit;
}

}  // namespace

CutResult min_cut(const FlowNetwork& network, CutVariant variant) {
  CutResult result;
  result.variant = variant;
  result.source_side = fits_fast_path(network)
                           ? solve_side<std::int64_t>(network, variant, as_int64)
                           : solve_side<BigInt>(network, variant, as_big);
  result.source_side[network.source] = true;
  result.source_side[network.sink] = false;
  result.cut_value = cut_capacity(network, result.source_side);
  for (std::uint32_t v = 0; v < network.vertex_count; ++v) {
    if (result.source_side[v]) result.source_side_vertices.push_back(v);
  }
  return result;
}

BigInt cut_capacity(const FlowNetwork& network,
                    const std::vector<bool>& source_side) {
  BigInt total = 0;
  for (const FlowArc& arc : network.arcs) {
    if (source_side[arc.from] && !source_side[arc.to]) total += arc.capacity;
  }
  return total;
}

void write_dimacs(std::ostream& out, const FlowNetwork& network) {
  out << "c density threshold " << network.lambda.str() << ", scale "
      << network.scale.get_str() << '\n';
  out << "p max " << network.node_count << ' ' << network.arcs.size() << '\n';
  out << "n " << network.source + 1 << " s\n";
  out << "n " << network.sink + 1 << " t\n";
  for (const FlowArc& arc : network.arcs) {
    out << "a " << arc.from + 1 << ' ' << arc.to + 1 << ' '
        << arc.capacity.get_str() << '\n';
  }
}

}  // namespace densest
