#include "densest/exact_flow.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "densest/errors.hpp"
#include "densest/flow_network.hpp"

namespace densest {

namespace {

void require_convex(const WeightedHypergraph& instance) {
  for (EdgeId e = 0; e < instance.edge_count(); ++e) {
    if (!instance.weight(e).is_convex()) {
      throw NotConvexError("edge " + std::to_string(e) +
                           ": weight function is not convex");
    }
  }
}

Rational of(std::size_t value) {
  return Rational(static_cast<long long>(value));
}

// One feasibility probe: does some nonempty set have density > lambda?
bool denser_than(const WeightedHypergraph& instance, const Rational& lambda,
                 SearchTrace& trace, Rational& lower, Rational& upper) {
  const FlowNetwork net = build_network(instance, lambda);
  const CutResult cut = min_cut(net, CutVariant::kMinimalSource);
  const bool denser = cut.cut_value < net.scaled_total_weight;
  if (denser) {
    lower = lambda;
  } else {
    upper = lambda;
  }
  trace.steps.push_back({lambda, cut.cut_value, net.scaled_total_weight,
                         denser ? SearchStep::Branch::kRaiseLower
                                : SearchStep::Branch::kLowerUpper,
                         lower, upper});
  return denser;
}

std::vector<VertexId> extract(const WeightedHypergraph& instance,
                              const Rational& lambda) {
  const FlowNetwork net = build_network(instance, lambda);
  auto vertices = min_cut(net, CutVariant::kMaximalSource).source_side_vertices;
  if (vertices.empty()) {
    throw std::logic_error("empty extraction at density " + lambda.str());
  }
  return vertices;
}

Solution single_vertex(const WeightedHypergraph& instance, Algorithm algorithm) {
  Solution out;
  out.vertices = {0};
  out.density = density(instance, out.vertices);
  out.algorithm = algorithm;
  return out;
}

}  // namespace

std::pair<Solution, SearchTrace> solve_exact(const WeightedHypergraph& instance) {
  const std::size_t n = instance.vertex_count();
  if (n == 0) throw EmptyGraphError("instance has no vertices");
  require_convex(instance);

  SearchTrace trace;
  trace.initial_upper = instance.total_weight();
  trace.final_upper = instance.total_weight();
  if (instance.total_weight().is_zero() || n == 1) {
    return {single_vertex(instance, Algorithm::kFlow), trace};
  }

  // Distinct densities a/k and b/l (integer weights, k, l <= n) differ by
  // at least 1/(n(n-1)); translate that into the rational weights.
  const Rational resolution =
      Rational(1) / (of(n) * of(n - 1) * Rational(instance.weight_denominator()));

  Rational lower = 0;
  Rational upper = instance.total_weight();
  while (upper - lower >= resolution) {
    const Rational lambda = (lower + upper) / Rational(2);
    denser_than(instance, lambda, trace, lower, upper);
  }
  trace.final_lower = lower;
  trace.final_upper = upper;

  // The maximal minimizer at `lower` is optimal and contains every optimal
  // set. Among the optimal sets (the nonempty zero-cost minimizers at λ*),
  // the smallest one containing v is the minimal source side with v forced
  // into the source; the preferred optimum is one of these.
  const std::vector<VertexId> widest = extract(instance, lower);
  const Rational best_density = density(instance, widest);
  const FlowNetwork at_optimum = build_network(instance, best_density);

  Solution best;
  best.vertices = widest;
  best.density = best_density;
  for (VertexId v : widest) {
    FlowNetwork forced = at_optimum;
    force_source_side(forced, v);
    const CutResult cut = min_cut(forced, CutVariant::kMinimalSource);
    ++trace.tie_break_cuts;
    if (cut.cut_value != at_optimum.scaled_total_weight) continue;
    if (preferred(best_density, cut.source_side_vertices, best.density,
                  best.vertices)) {
      best.vertices = cut.source_side_vertices;
    }
  }
  best.algorithm = Algorithm::kFlow;
  best.iterations = trace.steps.size();
  return {std::move(best), std::move(trace)};
}

std::pair<Solution, SearchTrace> solve_eps(const WeightedHypergraph& instance,
                                           const Rational& epsilon) {
  if (epsilon.sign() <= 0 || epsilon >= Rational(1)) {
    throw InvalidArgumentError("epsilon must lie in (0, 1), got " +
                               epsilon.str());
  }
  const std::size_t n = instance.vertex_count();
  if (n == 0) throw EmptyGraphError("instance has no vertices");
  if (instance.total_weight().is_zero()) {
    throw InvalidArgumentError("all weights are zero");
  }
  require_convex(instance);

  EdgeId heaviest = 0;
  for (EdgeId e = 1; e < instance.edge_count(); ++e) {
    if (instance.weight(e).top() > instance.weight(heaviest).top()) heaviest = e;
  }
  Rational lower = instance.weight(heaviest).top() /
                   of(instance.graph().edge_size(heaviest));
  Rational upper = instance.total_weight();

  SearchTrace trace;
  trace.initial_lower = lower;
  trace.initial_upper = upper;

  // Grid for the rounded geometric mean: 1/(n^2 r 2^16) in integer-weight
  // units, refined locally if it fails to land strictly inside (lo, hi).
  const BigInt base_grid = BigInt(static_cast<unsigned long>(n * n)) *
                           static_cast<unsigned long>(instance.graph().rank()) *
                           BigInt(65536) * instance.weight_denominator();
  const Rational keep = Rational(1) - epsilon;
  while (lower < keep * upper) {
    BigInt grid = base_grid;
    Rational lambda;
    while (true) {
      const Rational scaled = lower * upper * Rational(BigInt(grid * grid));
      lambda = Rational(floor_sqrt(floor(scaled)), grid);
      if (lower < lambda && lambda < upper) break;
      grid *= 2;
    }
    denser_than(instance, lambda, trace, lower, upper);
  }
  trace.final_lower = lower;
  trace.final_upper = upper;

  Solution out;
  out.vertices = extract(instance, lower);
  out.density = density(instance, out.vertices);
  out.algorithm = Algorithm::kFlowEps;
  out.iterations = trace.steps.size();
  return {std::move(out), std::move(trace)};
}

std::size_t eps_iteration_bound(std::size_t rank, std::size_t edge_count,
                                const Rational& epsilon) {
  const long double rm = static_cast<long double>(rank) * edge_count;
  if (rm <= 1.0L) return 2;
  const long double shrink = -std::log1p(-static_cast<long double>(epsilon.to_double()));
  const long double ratio = std::log(rm) / shrink;
  if (ratio <= 1.0L) return 2;
  return static_cast<std::size_t>(std::ceil(std::log2(ratio))) + 2;
}

std::string trace_to_json(const SearchTrace& trace) {
  using nlohmann::json;
  json steps = json::array();
  for (const SearchStep& step : trace.steps) {
    steps.push_back(
        {{"lambda", step.lambda.str()},
         {"cut_value", step.cut_value.get_str()},
         {"scaled_psi", step.scaled_total_weight.get_str()},
         {"branch", step.branch == SearchStep::Branch::kRaiseLower ? "raise_lb"
                                                                   : "lower_ub"},
         {"lb", step.lower.str()},
         {"ub", step.upper.str()}});
  }
  json doc = {{"initial_lb", trace.initial_lower.str()},
              {"initial_ub", trace.initial_upper.str()},
              {"final_lb", trace.final_lower.str()},
              {"final_ub", trace.final_upper.str()},
              {"tie_break_cuts", trace.tie_break_cuts},
              {"iterations", steps}};
  return doc.dump();
}

}  // namespace densest
