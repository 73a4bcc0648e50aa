#pragma once

#include <string>
#include <utility>
#include <vector>

#include "densest/hypergraph.hpp"
#include "densest/rational.hpp"

namespace densest {

struct SearchStep {
  enum class Branch { kRaiseLower, kLowerUpper };
  Rational lambda;
  BigInt cut_value;  // in the scale of that step's network
  BigInt scaled_total_weight;
  Branch branch = Branch::kRaiseLower;
  Rational lower;  // bounds after the step
  Rational upper;
};

struct SearchTrace {
  std::vector<SearchStep> steps;
  Rational initial_lower;
  Rational initial_upper;
  Rational final_lower;
  Rational final_upper;
  /// Min cuts spent resolving ties among optimal sets after the search.
  std::size_t tie_break_cuts = 0;
};

/// JSON text of the trace (exact fractions as strings).
std::string trace_to_json(const SearchTrace& trace);

/// Exact densest subset by bisection on the density threshold.
///
/// Each step builds the gadget at λ = (lo + hi) / 2 and compares the min
/// cut with Ψ: a cut strictly below Ψ proves a set denser than λ. The
/// search stops once hi - lo drops below 1/(n(n-1)) measured with integer
/// weights, which separates any two achievable densities. The optimal
/// sets are then ranked by the global tie-break.
///
/// Requires every weight function convex (NotConvexError) and n > 0
/// (EmptyGraphError). With Ψ = 0 the answer is {0} at density 0.
std::pair<Solution, SearchTrace> solve_exact(const WeightedHypergraph& instance);

/// (1 - ε)-approximation by geometric search between
/// max_e f_e(|e|)/|e| and Ψ. Requires 0 < ε < 1 and Ψ > 0
/// (InvalidArgumentError), convex weights (NotConvexError).
std::pair<Solution, SearchTrace> solve_eps(const WeightedHypergraph& instance,
                                           const Rational& epsilon);

/// ⌈log2(ln(r m) / ln(1/(1-ε)))⌉ + 2, clamped below at 2.
std::size_t eps_iteration_bound(std::size_t rank, std::size_t edge_count,
                                const Rational& epsilon);

}  // namespace densest
