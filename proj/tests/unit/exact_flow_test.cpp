#include <gtest/gtest.h>

#include <cmath>

#include <json.hpp>

#include "densest/errors.hpp"
#include "densest/exact_flow.hpp"
#include "densest/oracle.hpp"
#include "reference.hpp"

namespace densest {
namespace {

using testing::make_instance;
using testing::naive_densest;
using testing::Q;
using testing::row;

const std::vector<Rational> kUnitEdge = {Rational(0), Rational(0), Rational(1)};

WeightedHypergraph squares() { return make_instance(3, {{{0, 1, 2}, row({"0", "1", "4", "9"})}}); }

RandomSpec corpus_spec(std::uint64_t seed) {
  RandomSpec spec;
  spec.seed = seed;
  spec.vertex_count = 2 + seed % 9;
  spec.edge_count = 1 + seed % 12;
  spec.max_edge_size = std::min<std::size_t>(5, spec.vertex_count);
  spec.max_weight = 9;
  return spec;
}

TEST(SolveExact, SquaresEdge) {
  const auto [sol, trace] = solve_exact(squares());
  EXPECT_EQ(sol.vertices, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(sol.density, Q("3"));
  EXPECT_EQ(sol.algorithm, Algorithm::kFlow);
  EXPECT_EQ(trace.initial_lower, Q("0"));
  EXPECT_EQ(trace.initial_upper, Q("9"));
}

TEST(SolveExact, TrianglePlusPendantPrefersSmallerSet) {
  const auto h = make_instance(
      4, {{{0, 1}, kUnitEdge}, {{1, 2}, kUnitEdge}, {{0, 2}, kUnitEdge}, {{0, 3}, kUnitEdge}});
  const auto [sol, trace] = solve_exact(h);
  EXPECT_EQ(sol.vertices, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(sol.density, Q("1"));
}

TEST(SolveExact, AllZeroWeightsGiveFirstVertex) {
  const auto h = make_instance(3, {{{0, 1}, row({"0", "0", "0"})}});
  const auto [sol, trace] = solve_exact(h);
  EXPECT_EQ(sol.vertices, std::vector<VertexId>{0});
  EXPECT_EQ(sol.density, Q("0"));
}

TEST(SolveExact, Errors) {
  EXPECT_THROW(solve_exact(WeightedHypergraph(Hypergraph(0, {}), {})), EmptyGraphError);
  const auto concave = make_instance(2, {{{0, 1}, row({"0", "2", "3"})}});
  EXPECT_THROW(solve_exact(concave), NotConvexError);
}

TEST(SolveExact, TraceBoundsAreMonotone) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto h = random_instance(corpus_spec(seed));
    const auto [sol, trace] = solve_exact(h);
    Rational lb = trace.initial_lower, ub = trace.initial_upper;
    for (const auto& step : trace.steps) {
      EXPECT_GE(step.lower, lb);
      EXPECT_LE(step.upper, ub);
      EXPECT_LE(step.lower, step.upper);
      // Soundness of the cut test: a cheaper cut means a denser set exists.
      const bool denser_exists = naive_densest(h).density > step.lambda;
      EXPECT_EQ(step.cut_value < step.scaled_total_weight, denser_exists);
      lb = step.lower;
      ub = step.upper;
    }
    EXPECT_EQ(trace.final_lower, lb);
    EXPECT_EQ(trace.final_upper, ub);
  }
}

TEST(SolveExact, MatchesNaiveOracleWithTieBreak) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    RandomSpec spec = corpus_spec(seed);
    // Tiny weights make ties between distinct optimal sets common.
    spec.max_weight = 1 + seed % 3;
    const auto h = random_instance(spec);
    const auto expected = naive_densest(h);
    const auto [sol, trace] = solve_exact(h);
    ASSERT_EQ(sol.density, expected.density) << "seed " << seed;
    ASSERT_EQ(sol.vertices, expected.set) << "seed " << seed;
    ASSERT_EQ(density(h, sol.vertices), sol.density);
  }
}

TEST(SolveExact, FractionalWeights) {
  const auto h = make_instance(4, {{{0, 1, 2}, row({"0", "1/3", "1", "5/2"})},
                                   {{2, 3}, row({"0", "1/7", "2/7"})}});
  const auto expected = naive_densest(h);
  const auto [sol, trace] = solve_exact(h);
  EXPECT_EQ(sol.density, expected.density);
  EXPECT_EQ(sol.vertices, expected.set);
}

TEST(SolveExact, HugeWeightsTakeBigIntegerPath) {
  const auto h = make_instance(
      3, {{{0, 1}, row({"0", "0", "300000000000000000000"})},
          {{0, 1, 2}, row({"0", "100000000000000000000", "200000000000000000000",
                           "700000000000000000000"})}});
  const auto expected = naive_densest(h);
  const auto [sol, trace] = solve_exact(h);
  EXPECT_EQ(sol.density, expected.density);
  EXPECT_EQ(sol.vertices, expected.set);
}

TEST(SolveEps, SquaresEdgeFindsOptimum) {
  const auto [sol, trace] = solve_eps(squares(), Q("1/10"));
  EXPECT_EQ(trace.initial_lower, Q("3"));
  EXPECT_EQ(trace.initial_upper, Q("9"));
  EXPECT_GE(sol.density, Q("27/10"));
  EXPECT_EQ(sol.vertices, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(sol.density, Q("3"));
  EXPECT_LE(trace.steps.size(), eps_iteration_bound(3, 1, Q("1/10")));
}

TEST(SolveEps, LargeEpsilonExitsQuickly) {
  const auto [sol, trace] = solve_eps(squares(), Q("9/10"));
  EXPECT_TRUE(trace.steps.empty());
  EXPECT_GE(sol.density, Q("3") / Q("10"));
}

TEST(SolveEps, DisjointUnitEdges) {
  const auto h = make_instance(4, {{{0, 1}, kUnitEdge}, {{2, 3}, kUnitEdge}});
  const auto [sol, trace] = solve_eps(h, Q("1/2"));
  EXPECT_EQ(trace.initial_lower, Q("1/2"));
  EXPECT_EQ(trace.initial_upper, Q("2"));
  EXPECT_GE(sol.density, Q("1/4"));
  EXPECT_EQ(density(h, sol.vertices), sol.density);
}

TEST(SolveEps, Errors) {
  EXPECT_THROW(solve_eps(squares(), Q("0")), InvalidArgumentError);
  EXPECT_THROW(solve_eps(squares(), Q("1")), InvalidArgumentError);
  const auto zero = make_instance(2, {{{0, 1}, row({"0", "0", "0"})}});
  EXPECT_THROW(solve_eps(zero, Q("1/2")), InvalidArgumentError);
}

TEST(SolveEps, RatioHalvesInLogScalePerIteration) {
  // Geometric means are rounded down on a grid with denominator at least
  // n^2 r 2^16 D, so each step loses a relative 1/(2^16 n^2) <= 3.9e-6 at
  // most; compounded over the halving steps that stays below 2 * 3.9e-6.
  constexpr double kRoundingSlack = 1e-5;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const auto h = random_instance(corpus_spec(seed));
    if (h.total_weight().is_zero()) continue;
    for (const char* eps : {"1/2", "1/4", "1/10"}) {
      const auto [sol, trace] = solve_eps(h, Q(eps));
      const double ratio0 = (trace.initial_upper / trace.initial_lower).to_double();
      for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& step = trace.steps[i];
        EXPECT_LT(trace.initial_lower, step.upper);
        const double ratio = (step.upper / step.lower).to_double();
        const double bound = std::pow(ratio0, 1.0 / std::pow(2.0, static_cast<double>(i + 1)));
        EXPECT_LE(ratio, bound * (1 + kRoundingSlack)) << "seed " << seed << " step " << i;
      }
      const auto expected = naive_densest(h);
      EXPECT_GE(sol.density, (Rational(1) - Q(eps)) * expected.density);
      EXPECT_LE(trace.steps.size(), eps_iteration_bound(h.graph().rank(), h.edge_count(), Q(eps)));
    }
  }
}

TEST(EpsIterationBound, Formula) {
  // ceil(log2(ln(6) / ln(2))) + 2 = ceil(log2(2.585)) + 2 = 4
  EXPECT_EQ(eps_iteration_bound(3, 2, Q("1/2")), 4u);
  EXPECT_EQ(eps_iteration_bound(1, 1, Q("1/2")), 2u);
}

TEST(TraceJson, Keys) {
  const auto [sol, trace] = solve_exact(squares());
  const auto doc = nlohmann::json::parse(trace_to_json(trace));
  EXPECT_EQ(doc["initial_ub"], "9/1");
  ASSERT_FALSE(doc["iterations"].empty());
  const auto& first = doc["iterations"][0];
  EXPECT_EQ(first["lambda"], "9/2");
  EXPECT_TRUE(first["branch"] == "raise_lb" || first["branch"] == "lower_ub");
}

}  // namespace
}  // namespace densest
