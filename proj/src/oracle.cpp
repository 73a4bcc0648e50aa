#include "densest/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "densest/errors.hpp"

namespace densest {

namespace {

template <typename Num>
Num narrow(const BigInt& v) {
  if constexpr (std::is_same_v<Num, BigInt>) {
    return v;
  } else {
    return to_int64(v);
  }
}

template <typename Num>
BigInt widen(const Num& v) {
  if constexpr (std::is_same_v<Num, BigInt>) {
    return v;
  } else {
    return BigInt(static_cast<long>(v));
  }
}

template <typename Num>
bool denser(const Num& fa, unsigned ka, const Num& fb, unsigned kb) {
  if constexpr (std::is_same_v<Num, BigInt>) {
    return fa * kb > fb * ka;
  } else {
    return static_cast<__int128>(fa) * kb > static_cast<__int128>(fb) * ka;
  }
}

// Among equal-size sets, the one holding the smallest differing id comes
// first in sorted-list order.
bool lex_smaller(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

template <typename Num>
OracleResult enumerate(const WeightedHypergraph& instance, bool keep_table) {
  const Hypergraph& g = instance.graph();
  const std::size_t n = g.vertex_count();
  const auto big_tables = instance.scaled_tables();
  std::vector<Num> tables;
  tables.reserve(big_tables.size());
  for (const BigInt& v : big_tables) tables.push_back(narrow<Num>(v));
  auto f = [&](EdgeId e, std::uint32_t i) -> const Num& {
    return tables[g.edge_offset(e) + e + i];
  };

  std::vector<std::uint32_t> counts(g.edge_count(), 0);
  Num weight = 0;
  std::uint32_t mask = 0;
  bool have_best = false;
  Num best_weight = 0;
  unsigned best_size = 0;
  std::uint32_t best_mask = 0;

  OracleResult out;
  const bool table = keep_table && n <= kFullTableLimit;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto v = static_cast<VertexId>(std::countr_zero(i));
    const bool adding = (mask & (1u << v)) == 0;
    mask ^= (1u << v);
    for (EdgeId e : g.incident_edges(v)) {
      if (adding) {
        weight += f(e, counts[e] + 1) - f(e, counts[e]);
        ++counts[e];
      } else {
        weight -= f(e, counts[e]) - f(e, counts[e] - 1);
        --counts[e];
      }
    }
    const auto size = static_cast<unsigned>(std::popcount(mask));
    if (table) {
      out.table.emplace_back(
          mask, Rational(widen(weight), BigInt(size) * instance.weight_denominator()));
    }
    bool take = !have_best;
    if (!take) {
      if (denser(weight, size, best_weight, best_size)) {
        take = true;
      } else if (!denser(best_weight, best_size, weight, size)) {
        take = size < best_size || (size == best_size && lex_smaller(mask, best_mask));
      }
    }
    if (take) {
      have_best = true;
      best_weight = weight;
      best_size = size;
      best_mask = mask;
    }
  }

  for (VertexId v = 0; v < n; ++v) {
    if (best_mask & (1u << v)) out.best_set.push_back(v);
  }
  out.best_density =
      Rational(widen(best_weight), BigInt(best_size) * instance.weight_denominator());
  return out;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi] by rejection, independent of the standard
  // library's distribution implementations.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo;
    if (span == std::numeric_limits<std::uint64_t>::max()) return engine_();
    const std::uint64_t range = span + 1;
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return lo + draw % range;
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<VertexId> sample_edge(Sampler& rng, std::size_t n, std::size_t k) {
  std::vector<VertexId> out;
  out.reserve(k);
  if (k * 2 > n) {
    // Partial Fisher-Yates over all ids.
    std::vector<VertexId> ids(n);
    for (VertexId v = 0; v < n; ++v) ids[v] = v;
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(ids[i], ids[rng.uniform(i, n - 1)]);
      out.push_back(ids[i]);
    }
  } else {
    while (out.size() < k) {
      const auto v = static_cast<VertexId>(rng.uniform(0, n - 1));
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Splits `top` into k non-negative increments, sorted ascending or
// descending, and returns the running sums.
std::vector<Rational> shaped_table(Sampler& rng, std::size_t k, std::uint64_t top,
                                   bool ascending) {
  std::vector<std::uint64_t> cuts{0, top};
  for (std::size_t i = 0; i + 1 < k; ++i) cuts.push_back(rng.uniform(0, top));
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::uint64_t> steps;
  for (std::size_t i = 1; i < cuts.size(); ++i) steps.push_back(cuts[i] - cuts[i - 1]);
  if (ascending) {
    std::sort(steps.begin(), steps.end());
  } else {
    std::sort(steps.begin(), steps.end(), std::greater<>());
  }
  std::vector<Rational> values{Rational(0)};
  std::uint64_t sum = 0;
  for (std::uint64_t s : steps) {
    sum += s;
    values.emplace_back(static_cast<long long>(sum));
  }
  return values;
}

}  // namespace

OracleResult brute_force(const WeightedHypergraph& instance, bool keep_table) {
  const std::size_t n = instance.vertex_count();
  if (n > kBruteForceLimit) {
    throw TooLargeError("brute force is limited to " +
                        std::to_string(kBruteForceLimit) + " vertices, got " +
                        std::to_string(n));
  }
  if (n == 0) throw EmptyGraphError("instance has no vertices");
  static const BigInt limit = BigInt(1) << 62;
  const Rational scaled =
      instance.total_weight() * Rational(instance.weight_denominator());
  if (scaled.numerator() < limit) {
    return enumerate<std::int64_t>(instance, keep_table);
  }
  return enumerate<BigInt>(instance, keep_table);
}

std::optional<TableShape> parse_table_shape(std::string_view name) {
  if (name == "convex") return TableShape::kConvex;
  if (name == "concave") return TableShape::kConcave;
  if (name == "mixed") return TableShape::kMixed;
  return std::nullopt;
}

std::string_view to_string(TableShape shape) {
  switch (shape) {
    case TableShape::kConvex:
      return "convex";
    case TableShape::kConcave:
      return "concave";
    case TableShape::kMixed:
      return "mixed";
  }
  return "?";
}

WeightedHypergraph random_instance(const RandomSpec& spec) {
  if (spec.vertex_count == 0) throw InvalidArgumentError("n must be positive");
  if (spec.min_edge_size == 0 || spec.min_edge_size > spec.max_edge_size) {
    throw InvalidArgumentError("edge sizes must satisfy 1 <= min <= max");
  }
  if (spec.max_edge_size > spec.vertex_count) {
    throw InvalidArgumentError("max edge size " + std::to_string(spec.max_edge_size) +
                               " exceeds n = " + std::to_string(spec.vertex_count));
  }
  if (spec.max_weight == 0) throw InvalidArgumentError("max weight must be positive");
  if (spec.vertex_count > std::numeric_limits<VertexId>::max()) {
    throw InvalidArgumentError("n too large");
  }

  Sampler rng(spec.seed);
  const bool mixed = spec.shape == TableShape::kMixed;
  const bool force_both = mixed && spec.edge_count >= 2 && spec.max_edge_size >= 2;

  std::vector<std::vector<VertexId>> edges;
  std::vector<WeightFn> weights;
  edges.reserve(spec.edge_count);
  weights.reserve(spec.edge_count);
  for (std::size_t j = 0; j < spec.edge_count; ++j) {
    std::size_t k = rng.uniform(spec.min_edge_size, spec.max_edge_size);
    if (force_both && j < 2) k = std::max<std::size_t>(k, 2);
    edges.push_back(sample_edge(rng, spec.vertex_count, k));
    const std::uint64_t top = rng.uniform(0, spec.max_weight);
    bool ascending = spec.shape != TableShape::kConcave;
    if (mixed) ascending = rng.uniform(0, 1) == 0;
    std::vector<Rational> values;
    if (force_both && j < 2) {
      // j = 0: (0, .., 0, W) strictly convex; j = 1: (0, W, .., W) strictly
      // concave.
      values.assign(k + 1, Rational(0));
      const Rational w(static_cast<long long>(spec.max_weight));
      if (j == 0) {
        values[k] = w;
      } else {
        for (std::size_t i = 1; i <= k; ++i) values[i] = w;
      }
    } else {
      values = shaped_table(rng, k, top, ascending);
    }
    weights.push_back(WeightFn::table(std::move(values)));
  }
  return WeightedHypergraph(Hypergraph(spec.vertex_count, edges), std::move(weights));
}

}  // namespace densest
