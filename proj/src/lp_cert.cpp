#include "densest/lp_cert.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

#include "densest/errors.hpp"

namespace densest {

namespace {

void check_x(const WeightedHypergraph& instance, const std::vector<Rational>& x) {
  if (x.size() != instance.vertex_count()) {
    throw DimensionMismatchError("expected " +
                                 std::to_string(instance.vertex_count()) +
                                 " vertex values, got " + std::to_string(x.size()));
  }
}

std::vector<VertexId> sorted_by_x(const WeightedHypergraph& instance,
                                  const std::vector<Rational>& x, EdgeId e) {
  const auto members = instance.graph().edge(e);
  std::vector<VertexId> order(members.begin(), members.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return x[a] > x[b]; });
  return order;
}

}  // namespace

Rational ordering_value(const WeightedHypergraph& instance,
                        const std::vector<Rational>& x, EdgeId e,
                        const std::vector<VertexId>& order) {
  const WeightFn& f = instance.weight(e);
  Rational total;
  for (std::size_t i = 1; i <= order.size(); ++i) {
    const Rational step = f(i) - f(i - 1);
    if (!step.is_zero()) total += step * x[order[i - 1]];
  }
  return total;
}

Separation separate(const WeightedHypergraph& instance,
                    const std::vector<Rational>& x, EdgeId e) {
  check_x(instance, x);
  if (!instance.weight(e).is_convex()) {
    throw NotConvexError("edge " + std::to_string(e) +
                         ": weight function is not convex");
  }
  Separation out;
  out.permutation = sorted_by_x(instance, x, e);
  out.value = ordering_value(instance, x, e, out.permutation);
  return out;
}

FeasibilityVerdict check_feasible(const WeightedHypergraph& instance,
                                  const FractionalSolution& solution) {
  check_x(instance, solution.x);
  if (solution.y.size() != instance.edge_count()) {
    throw DimensionMismatchError("expected " +
                                 std::to_string(instance.edge_count()) +
                                 " edge values, got " +
                                 std::to_string(solution.y.size()));
  }
  using V = FeasibilityVerdict::Violation;
  FeasibilityVerdict verdict;
  auto fail = [&](V violation, std::size_t index) {
    verdict.feasible = false;
    verdict.violation = violation;
    verdict.index = index;
    return verdict;
  };

  Rational sum;
  for (std::size_t v = 0; v < solution.x.size(); ++v) {
    if (solution.x[v].sign() < 0) return fail(V::kNegativeX, v);
    sum += solution.x[v];
  }
  for (std::size_t e = 0; e < solution.y.size(); ++e) {
    if (solution.y[e].sign() < 0) return fail(V::kNegativeY, e);
  }
  if (sum > Rational(1)) {
    verdict.feasible = false;
    verdict.violation = V::kSimplex;
    return verdict;
  }
  for (EdgeId e = 0; e < instance.edge_count(); ++e) {
    Separation sep = separate(instance, solution.x, e);
    if (sep.value < solution.y[e]) {
      fail(V::kEdgeOrdering, e);
      verdict.witness = std::move(sep);
      return verdict;
    }
  }
  return verdict;
}

FractionalSolution uniform_solution(const WeightedHypergraph& instance,
                                    std::span<const VertexId> set) {
  const IntersectionCounts counts(instance.graph(), set);
  if (counts.size() == 0) throw EmptySetError("set must be nonempty");
  const Rational share = Rational(1) / Rational(static_cast<long long>(counts.size()));
  FractionalSolution out;
  out.x.assign(instance.vertex_count(), Rational());
  for (VertexId v = 0; v < instance.vertex_count(); ++v) {
    if (counts.contains(v)) out.x[v] = share;
  }
  out.y.resize(instance.edge_count());
  for (EdgeId e = 0; e < instance.edge_count(); ++e) {
    out.y[e] = instance.weight(e)(counts.count(e)) * share;
  }
  return out;
}

Solution sweep_round(const WeightedHypergraph& instance,
                     const FractionalSolution& solution) {
  check_x(instance, solution.x);
  const auto& x = solution.x;
  std::vector<VertexId> order;
  for (VertexId v = 0; v < x.size(); ++v) {
    if (x[v].sign() > 0) order.push_back(v);
  }
  if (order.empty()) throw InvalidArgumentError("x has no positive entry");
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return x[a] > x[b]; });

  const Hypergraph& g = instance.graph();
  IntersectionCounts counts(g, {});
  Rational weight;
  Solution best;
  std::size_t thresholds = 0;
  for (std::size_t i = 0; i < order.size();) {
    // Add the whole level {v : x_v == x[order[i]]}.
    const Rational level = x[order[i]];
    for (; i < order.size() && x[order[i]] == level; ++i) {
      const VertexId v = order[i];
      for (EdgeId e : g.incident_edges(v)) {
        const auto c = counts.count(e);
        weight += instance.weight(e)(c + 1) - instance.weight(e)(c);
      }
      counts.insert(g, v);
    }
    ++thresholds;
    std::vector<VertexId> level_set(order.begin(), order.begin() + i);
    std::sort(level_set.begin(), level_set.end());
    const Rational d = weight / Rational(static_cast<long long>(level_set.size()));
    if (best.vertices.empty() || preferred(d, level_set, best.density, best.vertices)) {
      best.vertices = std::move(level_set);
      best.density = d;
    }
  }
  best.algorithm = Algorithm::kSweep;
  best.iterations = thresholds;
  return best;
}

namespace {

std::string coefficient(const BigInt& value) { return value.get_str(); }

void write_row(std::ostream& out, const std::string& name,
               const std::vector<std::pair<std::string, BigInt>>& terms,
               const char* sense, const char* rhs) {
  out << ' ' << name << ':';
  bool first = true;
  for (const auto& [var, c] : terms) {
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      out << (negative ? " -" : " ");
    } else {
      out << (negative ? " - " : " + ");
    }
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (magnitude != 1) out << coefficient(magnitude) << ' ';
    out << var;
    first = false;
  }
  if (first) out << " 0 x0";
  if (*sense != '\0') out << ' ' << sense << ' ' << rhs;
  out << '\n';
}

}  // namespace

void export_lp(std::ostream& out, const WeightedHypergraph& instance,
               LpExportMode mode) {
  const Hypergraph& g = instance.graph();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!instance.weight(e).is_convex()) {
      throw NotConvexError("edge " + std::to_string(e) +
                           ": weight function is not convex");
    }
  }
  if (mode == LpExportMode::kFull) {
    unsigned long long rows = g.edge_count();
    for (std::size_t k = 2; k <= g.rank(); ++k) {
      rows *= k;
      if (rows > 100000) break;
    }
    if (g.edge_count() > 100000 || rows > 100000) {
      throw TooLargeError("full ordering export needs r! * m <= 100000");
    }
  }

  out << "\\ Densest sub-hypergraph relaxation: n = " << g.vertex_count()
      << ", m = " << g.edge_count() << ", rank = " << g.rank() << '\n';
  out << "\\ Variables: x<v> per vertex, y<e> per edge.\n";
  if (mode == LpExportMode::kCallback) {
    out << "\\\n"
           "\\ Separation contract (rows omitted from this file):\n"
           "\\   For every edge e and every ordering (v_1 .. v_k) of its k vertices\n"
           "\\   the row  sum_i (f_e(i) - f_e(i-1)) x_{v_i} - y_e >= 0  must hold.\n"
           "\\   Given a candidate x, the most violated ordering of e sorts its\n"
           "\\   vertices by non-increasing x; add that row whenever its left-hand\n"
           "\\   side evaluates below zero and re-solve. The increments per edge:\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      out << "\\   e" << e << " {";
      const auto members = g.edge(e);
      for (std::size_t i = 0; i < members.size(); ++i) {
        out << (i ? " " : "") << members[i];
      }
      out << "} increments";
      const WeightFn& f = instance.weight(e);
      for (std::size_t i = 1; i <= f.edge_size(); ++i) {
        out << ' ' << (f(i) - f(i - 1)).str();
      }
      out << '\n';
    }
    out << "\\\n";
  }

  out << "Maximize\n";
  {
    std::vector<std::pair<std::string, BigInt>> terms;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      terms.emplace_back("y" + std::to_string(e), BigInt(1));
    }
    write_row(out, "density", terms, "", "");
  }
  out << "Subject To\n";
  {
    std::vector<std::pair<std::string, BigInt>> terms;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      terms.emplace_back("x" + std::to_string(v), BigInt(1));
    }
    write_row(out, "simplex", terms, "<=", "1");
  }
  if (mode == LpExportMode::kFull) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const WeightFn& f = instance.weight(e);
      BigInt common = 1;
      for (std::size_t i = 1; i <= f.edge_size(); ++i) {
        common = lcm(common, (f(i) - f(i - 1)).denominator());
      }
      const auto members = g.edge(e);
      std::vector<VertexId> order(members.begin(), members.end());
      std::size_t index = 0;
      do {
        std::vector<std::pair<std::string, BigInt>> terms;
        for (std::size_t i = 1; i <= order.size(); ++i) {
          const Rational step = (f(i) - f(i - 1)) * Rational(common);
          terms.emplace_back("x" + std::to_string(order[i - 1]), step.numerator());
        }
        terms.emplace_back("y" + std::to_string(e), BigInt(-common));
        write_row(out, "e" + std::to_string(e) + "_p" + std::to_string(index++),
                  terms, ">=", "0");
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
  out << "Bounds\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << " x" << v << " >= 0\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) out << " y" << e << " >= 0\n";
  out << "End\n";
}

}  // namespace densest
