#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "densest/errors.hpp"
#include "densest/flow_network.hpp"
#include "densest/max_flow.hpp"
#include "densest/oracle.hpp"
#include "reference.hpp"

namespace densest {
namespace {

using testing::enumerate_min_cut;
using testing::lemma_cut;
using testing::make_instance;
using testing::naive_weight;
using testing::Q;
using testing::row;
using testing::side_cost;

BigInt scaled(const Rational& value, const BigInt& scale) {
  const Rational s = value * Rational(scale);
  EXPECT_TRUE(s.is_integer());
  return s.numerator();
}

TEST(Alpha, SpecExamples) {
  EXPECT_EQ(alpha_coefficients(WeightFn::table(row({"0", "1", "3", "6"}))), row({"1", "1", "1"}));
  EXPECT_EQ(alpha_coefficients(WeightFn::linear(3, Q("5/2"))), row({"5/2", "0", "0"}));
  EXPECT_EQ(alpha_coefficients(WeightFn::all_or_nothing(3, Q("7"))), row({"0", "0", "7"}));
  EXPECT_THROW(alpha_coefficients(WeightFn::table(row({"0", "2", "3"}))), NotConvexError);
}

TEST(Alpha, TelescopesToIncrements) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    RandomSpec spec;
    spec.seed = seed;
    spec.vertex_count = 7;
    spec.edge_count = 6;
    spec.max_edge_size = 7;
    spec.max_weight = 30;
    const auto h = random_instance(spec);
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      const WeightFn& f = h.weight(e);
      const auto alpha = alpha_coefficients(f);
      Rational sum;
      for (std::size_t j = 0; j < alpha.size(); ++j) {
        EXPECT_GE(alpha[j].sign(), 0);
        sum += alpha[j];
        EXPECT_EQ(sum, f(j + 1) - f(j));
      }
    }
  }
}

TEST(BuildNetwork, SpecTwoVertexExample) {
  const auto h = make_instance(2, {{{0, 1}, row({"0", "1", "3"})}});
  const FlowNetwork net = build_network(h, Q("3/2"));
  EXPECT_EQ(net.scale, 2);
  EXPECT_EQ(net.node_count, 2u + 2u + 2u);
  const std::uint32_t u0 = net.gadget_offset[0], u1 = u0 + 1;
  std::multiset<std::tuple<std::uint32_t, std::uint32_t, long>> got, want;
  for (const auto& a : net.arcs) got.emplace(a.from, a.to, a.capacity.get_si());
  const long c = 2;  // every capacity doubled by the scale
  want = {{net.source, u0, 2 * c}, {net.source, u1, 1 * c}, {u0, 0, c}, {u0, 1, c},
          {u1, 0, c},              {u1, 1, c},              {0, net.sink, 3}, {1, net.sink, 3}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(net.scaled_total_weight, 6);
}

TEST(BuildNetwork, ZeroArcsOmittedAndRejections) {
  const auto aon = make_instance(3, {{{0, 1, 2}, row({"0", "0", "0", "4"})}});
  const FlowNetwork net = build_network(aon, Q("0"));
  // Only u_2 carries capacity: one source arc plus a fan of three.
  EXPECT_EQ(net.arcs.size(), 4u);
  EXPECT_THROW(build_network(aon, Q("-1")), InvalidArgumentError);
  const auto concave = make_instance(2, {{{0, 1}, row({"0", "2", "3"})}});
  EXPECT_THROW(build_network(concave, Q("1")), NotConvexError);
}

TEST(MinCut, SizeOneEdge) {
  const auto h = make_instance(1, {{{0}, row({"0", "5"})}});
  const FlowNetwork net = build_network(h, Q("1"));
  const CutResult cut = min_cut(net, CutVariant::kMinimalSource);
  EXPECT_EQ(cut.cut_value, 1);
  EXPECT_EQ(cut.cut_value, enumerate_min_cut(net));
  EXPECT_EQ(cut.source_side_vertices, std::vector<VertexId>{0});
}

TEST(MinCut, TwoVertexExampleAtSeveralThresholds) {
  const auto h = make_instance(2, {{{0, 1}, row({"0", "1", "3"})}});
  {
    const FlowNetwork net = build_network(h, Q("1"));
    const CutResult cut = min_cut(net, CutVariant::kMaximalSource);
    // (Psi + lambda * 2 - F({0,1})) in the network's own scale.
    EXPECT_EQ(cut.cut_value, scaled(Q("3") + Q("2") - Q("3"), net.scale));
    EXPECT_LT(cut.cut_value, net.scaled_total_weight);
    EXPECT_EQ(cut.source_side_vertices, (std::vector<VertexId>{0, 1}));
    EXPECT_EQ(cut.cut_value, enumerate_min_cut(net));
  }
  {
    const FlowNetwork net = build_network(h, Q("10"));
    const CutResult cut = min_cut(net, CutVariant::kMinimalSource);
    EXPECT_EQ(cut.cut_value, net.scaled_total_weight);
    EXPECT_TRUE(cut.source_side_vertices.empty());
  }
  {
    const FlowNetwork net = build_network(h, Q("0"));
    EXPECT_EQ(min_cut(net, CutVariant::kMinimalSource).cut_value, 0);
  }
}

TEST(MinCut, ParallelPathNetwork) {
  FlowNetwork net;
  net.node_count = 3;
  net.source = 0;
  net.sink = 2;
  net.arcs = {{0, 1, BigInt(3)}, {1, 2, BigInt(2)}};
  const CutResult minimal = min_cut(net, CutVariant::kMinimalSource);
  EXPECT_EQ(minimal.cut_value, 2);
  EXPECT_TRUE(minimal.source_side[1]);
  const CutResult maximal = min_cut(net, CutVariant::kMaximalSource);
  EXPECT_EQ(maximal.cut_value, 2);
  EXPECT_TRUE(maximal.source_side[1]);
}

TEST(MinCut, VariantsBracketEveryMinimumCut) {
  // Tied optimum at lambda = 1: S = {} and S = {0, 1} both cost Psi.
  const auto h = make_instance(2, {{{0, 1}, row({"0", "0", "2"})}});
  const FlowNetwork net = build_network(h, Q("1"));
  const CutResult minimal = min_cut(net, CutVariant::kMinimalSource);
  const CutResult maximal = min_cut(net, CutVariant::kMaximalSource);
  EXPECT_EQ(minimal.cut_value, maximal.cut_value);
  EXPECT_TRUE(minimal.source_side_vertices.empty());
  EXPECT_EQ(maximal.source_side_vertices, (std::vector<VertexId>{0, 1}));
}

TEST(MinCut, RandomNetworksMatchEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    FlowNetwork net;
    net.node_count = 2 + rng() % 13;
    net.source = 0;
    net.sink = static_cast<std::uint32_t>(net.node_count - 1);
    const std::size_t arcs = rng() % (3 * net.node_count);
    const bool huge = trial % 3 == 0;
    for (std::size_t i = 0; i < arcs; ++i) {
      const auto a = static_cast<std::uint32_t>(rng() % net.node_count);
      const auto b = static_cast<std::uint32_t>(rng() % net.node_count);
      if (a == b) continue;
      BigInt cap = static_cast<unsigned long>(rng() % 20);
      if (huge) cap *= BigInt("100000000000000000000");
      net.arcs.push_back({a, b, cap});
    }
    const BigInt expected = enumerate_min_cut(net);
    for (const auto variant : {CutVariant::kMinimalSource, CutVariant::kMaximalSource}) {
      const CutResult cut = min_cut(net, variant);
      ASSERT_EQ(cut.cut_value, expected) << "trial " << trial;
      ASSERT_EQ(cut.cut_value, cut_capacity(net, cut.source_side));
    }
  }
}

TEST(MaxFlow, FlowValueEqualsEnumeratedCut) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    FlowNetwork net;
    net.node_count = 2 + rng() % 13;
    net.source = 0;
    net.sink = 1;
    for (std::size_t i = 0; i < 4 * net.node_count; ++i) {
      const auto a = static_cast<std::uint32_t>(rng() % net.node_count);
      const auto b = static_cast<std::uint32_t>(rng() % net.node_count);
      if (a != b) net.arcs.push_back({a, b, BigInt(static_cast<unsigned long>(rng() % 9))});
    }
    PushRelabel<std::int64_t> fast(net.node_count);
    PushRelabel<BigInt> exact(net.node_count);
    for (const auto& a : net.arcs) {
      fast.add_arc(a.from, a.to, a.capacity.get_si());
      exact.add_arc(a.from, a.to, a.capacity);
    }
    const BigInt expected = enumerate_min_cut(net);
    ASSERT_EQ(BigInt(static_cast<long>(fast.run(0, 1))), expected);
    ASSERT_EQ(exact.run(0, 1), expected);
  }
}

TEST(CutIdentity, LemmaCutCostOnRandomInstances) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    RandomSpec spec;
    spec.seed = seed;
    spec.vertex_count = 3 + seed % 4;
    spec.edge_count = 1 + seed % 3;
    spec.max_edge_size = 3;
    spec.max_weight = 9;
    const auto h = random_instance(spec);
    const Rational lambda(BigInt(static_cast<unsigned long>(rng() % 40)), BigInt(1 + rng() % 7));
    const FlowNetwork net = build_network(h, lambda);
    const std::size_t n = h.vertex_count();
    BigInt best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const Rational expected = h.total_weight() +
                                lambda * Rational(static_cast<long long>(std::popcount(mask))) -
                                naive_weight(h, mask);
      const BigInt cost = side_cost(net, lemma_cut(h, net, mask));
      ASSERT_EQ(cost, scaled(expected, net.scale));
      if (best < 0 || cost < best) best = cost;
    }
    EXPECT_EQ(min_cut(net, CutVariant::kMinimalSource).cut_value, best);
    EXPECT_LE(best, net.scaled_total_weight);
    if (net.node_count <= 16) EXPECT_EQ(enumerate_min_cut(net), best);
  }
}

TEST(Dimacs, HeaderTerminalsAndArcs) {
  const auto h = make_instance(1, {{{0}, row({"0", "5"})}});
  const FlowNetwork net = build_network(h, Q("1"));
  std::ostringstream out;
  write_dimacs(out, net);
  const std::string text = out.str();
  EXPECT_NE(text.find("p max 4 3\n"), std::string::npos);
  EXPECT_NE(text.find("n 3 s\n"), std::string::npos);
  EXPECT_NE(text.find("n 4 t\n"), std::string::npos);
  EXPECT_NE(text.find("a 1 4 1\n"), std::string::npos);
  EXPECT_NE(text.find("a 3 2 5\n"), std::string::npos);
}

TEST(ForceSourceSide, PinsVertex) {
  const auto h = make_instance(3, {{{0, 1}, row({"0", "0", "2"})}});
  FlowNetwork net = build_network(h, Q("1"));
  force_source_side(net, 2);
  const CutResult cut = min_cut(net, CutVariant::kMinimalSource);
  EXPECT_EQ(cut.source_side_vertices, std::vector<VertexId>{2});
}

}  // namespace
}  // namespace densest
