#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "densest/hypergraph.hpp"
#include "densest/rational.hpp"

namespace densest {

inline constexpr std::size_t kBruteForceLimit = 24;
inline constexpr std::size_t kFullTableLimit = 16;

struct OracleResult {
  std::vector<VertexId> best_set;
  Rational best_density;
  /// (subset bitmask, density) for every nonempty subset, when requested
  /// and n <= kFullTableLimit.
  std::vector<std::pair<std::uint32_t, Rational>> table;
};

/// Exhaustive maximum over all nonempty subsets, enumerated in Gray-code
/// order so each step touches only the toggled vertex's edges. Ties follow
/// the global rule. Throws TooLargeError above kBruteForceLimit vertices.
OracleResult brute_force(const WeightedHypergraph& instance,
                         bool keep_table = false);

enum class TableShape { kConvex, kConcave, kMixed };

std::optional<TableShape> parse_table_shape(std::string_view name);
std::string_view to_string(TableShape shape);

struct RandomSpec {
  std::uint64_t seed = 1;
  std::size_t vertex_count = 6;
  std::size_t edge_count = 8;
  std::size_t max_edge_size = 3;
  std::size_t min_edge_size = 1;
  TableShape shape = TableShape::kConvex;
  std::uint64_t max_weight = 5;
};

/// Deterministic random instance. Edge sizes are uniform in
/// [min_edge_size, max_edge_size]; each table's top value is uniform in
/// [0, max_weight] and split into non-negative increments sorted ascending
/// (convex) or descending (concave). Mixed instances alternate at random
/// and force one strictly convex and one strictly concave table when
/// m >= 2 and max_edge_size >= 2. Throws InvalidArgumentError on bad
/// parameters.
WeightedHypergraph random_instance(const RandomSpec& spec);

}  // namespace densest
