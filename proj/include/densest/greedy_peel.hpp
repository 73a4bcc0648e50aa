#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "densest/hypergraph.hpp"
#include "densest/rational.hpp"

namespace densest {

struct RemovalStep {
  VertexId vertex = 0;
  Rational delta;                        // F(S) - F(S \ {v}) at removal
  std::optional<Rational> density_after;  // empty once S is exhausted
};

/// Greedy peeling: repeatedly drops the vertex whose removal loses the
/// least weight (smallest id on ties) and keeps the densest set seen,
/// starting from S = V. 1/r-approximate when every table is convex; runs
/// on any non-decreasing tables. O(p r log n) with a lazily invalidated
/// heap. Throws EmptyGraphError for n = 0.
std::pair<Solution, std::vector<RemovalStep>> solve_greedy(
    const WeightedHypergraph& instance);

/// Batched peeling: each round removes every vertex whose delta is at most
/// r(1+ε) F(S)/|S|, all measured against the same S.
/// 1/(r(1+ε))-approximate; at most ⌈log_{1+ε} n⌉ + 1 rounds.
/// Throws InvalidArgumentError for ε <= 0, NotConvexError for non-convex
/// tables, EmptyGraphError for n = 0.
std::pair<Solution, std::size_t> solve_para(const WeightedHypergraph& instance,
                                            const Rational& epsilon);

/// Smallest k with (1+ε)^k >= n, plus one.
std::size_t para_round_bound(std::size_t vertex_count, const Rational& epsilon);

/// Best single vertex by Σ_{e∋v} f_e(1); optimal when every table is
/// concave. Throws NotAllConcaveError otherwise.
Solution solve_concave(const WeightedHypergraph& instance);

/// CSV `rank,vertex,delta,density_after` with exact fractions.
void write_removal_csv(std::ostream& out, const std::vector<RemovalStep>& order);

}  // namespace densest
