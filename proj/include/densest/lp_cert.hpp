#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "densest/hypergraph.hpp"
#include "densest/rational.hpp"

namespace densest {

/// A candidate point of the relaxation: one x per vertex, one y per edge.
struct FractionalSolution {
  std::vector<Rational> x;
  std::vector<Rational> y;
};

struct Separation {
  Rational value;
  /// Vertices of the edge ordered by non-increasing x (ties by id).
  std::vector<VertexId> permutation;
};

/// min over orderings π of e of Σ_i (f(i) - f(i-1)) x_{π(i)}. Pairing the
/// largest x with the smallest increment attains it when f is convex.
/// Throws NotConvexError for a non-convex edge and DimensionMismatchError
/// when x does not have one entry per vertex.
Separation separate(const WeightedHypergraph& instance,
                    const std::vector<Rational>& x, EdgeId e);

/// Σ_i (f(i) - f(i-1)) x_{order(i)} for an explicit ordering of e.
Rational ordering_value(const WeightedHypergraph& instance,
                        const std::vector<Rational>& x, EdgeId e,
                        const std::vector<VertexId>& order);

struct FeasibilityVerdict {
  enum class Violation {
    kNone,
    kNegativeX,
    kNegativeY,
    kSimplex,      // Σ x > 1
    kEdgeOrdering  // some ordering of an edge undercuts y_e
  };
  bool feasible = true;
  Violation violation = Violation::kNone;
  std::optional<std::size_t> index;  // vertex or edge
  Separation witness;                // for kEdgeOrdering
};

/// Throws DimensionMismatchError when x or y has the wrong length.
FeasibilityVerdict check_feasible(const WeightedHypergraph& instance,
                                  const FractionalSolution& solution);

/// x_v = 1/|S| on S and y_e = f_e(|e ∩ S|)/|S|; its objective is the
/// density of S.
FractionalSolution uniform_solution(const WeightedHypergraph& instance,
                                    std::span<const VertexId> set);

/// Best level set {v : x_v >= t} over the distinct positive values t of x.
/// Throws InvalidArgumentError when x has no positive entry.
Solution sweep_round(const WeightedHypergraph& instance,
                     const FractionalSolution& solution);

enum class LpExportMode {
  kCallback,  // objective, simplex row, bounds; ordering rows via separation
  kFull       // every ordering row; needs r! · m <= 100000
};

/// Writes the relaxation in LP text format. Coefficients of each ordering
/// row are scaled to integers. Throws TooLargeError in full mode above the
/// size limit and NotConvexError for non-convex tables.
void export_lp(std::ostream& out, const WeightedHypergraph& instance,
               LpExportMode mode);

}  // namespace densest
