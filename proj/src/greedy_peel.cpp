#include "densest/greedy_peel.hpp"

#include <cstdint>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "densest/errors.hpp"

namespace densest {

namespace {

// Integer arithmetic on weights pre-multiplied by the common denominator.
// int64 is used whenever Ψ (which bounds every F, delta and table entry)
// stays below 2^62; products for density comparisons widen to 128 bits.
struct FastNum {
  using Type = std::int64_t;
  static Type from(const BigInt& v) { return to_int64(v); }
  static BigInt big(Type v) { return BigInt(static_cast<long>(v)); }
  static bool denser(Type fa, std::size_t ka, Type fb, std::size_t kb) {
    return static_cast<__int128>(fa) * static_cast<__int128>(kb) >
           static_cast<__int128>(fb) * static_cast<__int128>(ka);
  }
};

struct BigNum {
  using Type = BigInt;
  static Type from(const BigInt& v) { return v; }
  static BigInt big(const Type& v) { return v; }
  static bool denser(const Type& fa, std::size_t ka, const Type& fb,
                     std::size_t kb) {
    return fa * static_cast<unsigned long>(kb) >
           fb * static_cast<unsigned long>(ka);
  }
};

bool fast_path(const WeightedHypergraph& instance) {
  static const BigInt limit = BigInt(1) << 62;
  const Rational scaled =
      instance.total_weight() * Rational(instance.weight_denominator());
  return scaled.numerator() < limit;
}

template <typename Ops>
class Peeler {
 public:
  using Num = typename Ops::Type;

  explicit Peeler(const WeightedHypergraph& instance)
      : instance_(instance), graph_(instance.graph()) {
    const auto big = instance.scaled_tables();
    tables_.reserve(big.size());
    for (const BigInt& v : big) tables_.push_back(Ops::from(v));
    counts_.resize(graph_.edge_count());
    for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
      counts_[e] = static_cast<std::uint32_t>(graph_.edge_size(e));
      total_ += f(e, counts_[e]);
    }
    alive_.assign(graph_.vertex_count(), true);
    size_ = graph_.vertex_count();
  }

  const Num& f(EdgeId e, std::uint32_t i) const {
    return tables_[graph_.edge_offset(e) + e + i];
  }

  Num increment(EdgeId e, std::uint32_t c) const { return f(e, c) - f(e, c - 1); }

  Num delta_of(VertexId v) const {
    Num d = 0;
    for (EdgeId e : graph_.incident_edges(v)) d += increment(e, counts_[e]);
    return d;
  }

  Rational as_rational(const Num& v) const {
    return Rational(Ops::big(v), instance_.weight_denominator());
  }

  Rational current_density() const {
    return Rational(Ops::big(total_),
                    BigInt(static_cast<unsigned long>(size_)) *
                        instance_.weight_denominator());
  }

  std::pair<Solution, std::vector<RemovalStep>> greedy() {
    const std::size_t n = graph_.vertex_count();
    std::vector<Num> delta(n);
    std::vector<std::uint32_t> version(n, 0);
    std::vector<std::uint32_t> touched_at(n, 0);
    using Entry = std::tuple<Num, VertexId, std::uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (VertexId v = 0; v < n; ++v) {
      delta[v] = delta_of(v);
      heap.emplace(delta[v], v, 0);
    }

    std::vector<RemovalStep> order;
    order.reserve(n);
    Num best_total = total_;
    std::size_t best_size = size_;
    std::size_t best_removed = 0;
    std::vector<VertexId> touched;

    while (size_ > 0) {
      auto [d, v, stamp] = heap.top();
      heap.pop();
      if (!alive_[v] || stamp != version[v]) continue;

      alive_[v] = false;
      --size_;
      total_ -= d;
      touched.clear();
      const auto mark = static_cast<std::uint32_t>(order.size() + 1);
      for (EdgeId e : graph_.incident_edges(v)) {
        const std::uint32_t c = counts_[e];
        if (c >= 2) {
          const Num change = increment(e, c - 1) - increment(e, c);
          for (VertexId u : graph_.edge(e)) {
            if (!alive_[u]) continue;
            delta[u] += change;
            if (touched_at[u] != mark) {
              touched_at[u] = mark;
              touched.push_back(u);
            }
          }
        }
        counts_[e] = c - 1;
      }
      for (VertexId u : touched) heap.emplace(delta[u], u, ++version[u]);

      RemovalStep step{v, as_rational(d), std::nullopt};
      if (size_ > 0) {
        step.density_after = current_density();
        // Later prefixes are smaller, so an equal density wins the tie.
        if (!Ops::denser(best_total, best_size, total_, size_)) {
          best_total = total_;
          best_size = size_;
          best_removed = order.size() + 1;
        }
      }
      order.push_back(std::move(step));
    }

    std::vector<bool> dropped(n, false);
    for (std::size_t i = 0; i < best_removed; ++i) dropped[order[i].vertex] = true;
    Solution out;
    for (VertexId v = 0; v < n; ++v) {
      if (!dropped[v]) out.vertices.push_back(v);
    }
    out.density = Rational(Ops::big(best_total),
                           BigInt(static_cast<unsigned long>(best_size)) *
                               instance_.weight_denominator());
    out.algorithm = Algorithm::kGreedy;
    out.iterations = order.size();
    return {std::move(out), std::move(order)};
  }

  std::pair<Solution, std::size_t> para(const Rational& epsilon) {
    const std::size_t n = graph_.vertex_count();
    const Rational grow = Rational(1) + epsilon;
    // delta <= r (1+ε) F/|S|  <=>  delta |S| den <= r num F.
    const BigInt grow_num = grow.numerator() *
                            static_cast<unsigned long>(graph_.rank());
    const BigInt grow_den = grow.denominator();

    std::vector<VertexId> members(n);
    for (VertexId v = 0; v < n; ++v) members[v] = v;
    std::vector<VertexId> best = members;
    Num best_total = total_;
    std::size_t rounds = 0;

    std::vector<VertexId> batch;
    std::vector<VertexId> keep;
    while (!members.empty()) {
      ++rounds;
      const BigInt bound = grow_num * Ops::big(total_);
      const BigInt size_den = grow_den * static_cast<unsigned long>(members.size());
      batch.clear();
      keep.clear();
      for (VertexId v : members) {
        if (Ops::big(delta_of(v)) * size_den <= bound) {
          batch.push_back(v);
        } else {
          keep.push_back(v);
        }
      }
      // |S \ Δ| < |S| / (1+ε)
      if (!(grow * Rational(static_cast<long long>(keep.size())) <
            Rational(static_cast<long long>(members.size())))) {
        throw std::logic_error("batched peeling failed to shrink the set");
      }
      for (VertexId v : batch) {
        alive_[v] = false;
        for (EdgeId e : graph_.incident_edges(v)) {
          const std::uint32_t c = counts_[e];
          total_ -= increment(e, c);
          counts_[e] = c - 1;
        }
      }
      size_ = keep.size();
      members.swap(keep);
      if (!members.empty() &&
          !Ops::denser(best_total, best.size(), total_, members.size())) {
        best_total = total_;
        best = members;
      }
    }

    Solution out;
    out.vertices = std::move(best);
    out.density = Rational(Ops::big(best_total),
                           BigInt(static_cast<unsigned long>(out.vertices.size())) *
                               instance_.weight_denominator());
    out.algorithm = Algorithm::kPara;
    out.iterations = rounds;
    return {std::move(out), rounds};
  }

 private:
  const WeightedHypergraph& instance_;
  const Hypergraph& graph_;
  std::vector<Num> tables_;
  std::vector<std::uint32_t> counts_;
  std::vector<bool> alive_;
  Num total_ = 0;
  std::size_t size_ = 0;
};

}  // namespace

std::pair<Solution, std::vector<RemovalStep>> solve_greedy(
    const WeightedHypergraph& instance) {
  if (instance.vertex_count() == 0) {
    throw EmptyGraphError("instance has no vertices");
  }
  if (fast_path(instance)) return Peeler<FastNum>(instance).greedy();
  return Peeler<BigNum>(instance).greedy();
}

std::pair<Solution, std::size_t> solve_para(const WeightedHypergraph& instance,
                                            const Rational& epsilon) {
  if (epsilon.sign() <= 0) {
    throw InvalidArgumentError("epsilon must be positive, got " + epsilon.str());
  }
  if (instance.vertex_count() == 0) {
    throw EmptyGraphError("instance has no vertices");
  }
  for (EdgeId e = 0; e < instance.edge_count(); ++e) {
    if (!instance.weight(e).is_convex()) {
      throw NotConvexError("edge " + std::to_string(e) +
                           ": weight function is not convex");
    }
  }
  if (fast_path(instance)) return Peeler<FastNum>(instance).para(epsilon);
  return Peeler<BigNum>(instance).para(epsilon);
}

std::size_t para_round_bound(std::size_t vertex_count, const Rational& epsilon) {
  const Rational grow = Rational(1) + epsilon;
  const Rational target(static_cast<long long>(vertex_count));
  Rational power(1);
  std::size_t k = 0;
  while (power < target) {
    power *= grow;
    ++k;
  }
  return k + 1;
}

Solution solve_concave(const WeightedHypergraph& instance) {
  const std::size_t n = instance.vertex_count();
  if (n == 0) throw EmptyGraphError("instance has no vertices");
  for (EdgeId e = 0; e < instance.edge_count(); ++e) {
    if (!instance.weight(e).is_concave()) {
      throw NotAllConcaveError("edge " + std::to_string(e) +
                               ": weight function is not concave");
    }
  }
  std::vector<Rational> score(n);
  for (EdgeId e = 0; e < instance.edge_count(); ++e) {
    const Rational& first = instance.weight(e)(1);
    if (first.is_zero()) continue;
    for (VertexId v : instance.graph().edge(e)) score[v] += first;
  }
  VertexId best = 0;
  for (VertexId v = 1; v < n; ++v) {
    if (score[v] > score[best]) best = v;
  }
  Solution out;
  out.vertices = {best};
  out.density = score[best];
  out.algorithm = Algorithm::kConcave;
  out.iterations = 1;
  return out;
}

void write_removal_csv(std::ostream& out, const std::vector<RemovalStep>& order) {
  out << "rank,vertex,delta,density_after\n";
  for (std::size_t i = 0; i < order.size(); ++i) {
    const RemovalStep& step = order[i];
    out << i + 1 << ',' << step.vertex << ',' << step.delta.str() << ',';
    if (step.density_after) out << step.density_after->str();
    out << '\n';
  }
}

}  // namespace densest
