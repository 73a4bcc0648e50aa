#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace densest {

/// Highest-label push-relabel (first phase only) with gap relabeling and
/// periodic global relabeling. `Cap` is any exact integer type with the
/// usual arithmetic and comparison operators (int64_t, mpz_class).
///
/// run() computes a maximum preflow, whose value equals the maximum flow.
/// The residual graph of a maximum preflow determines the maximal
/// source-side minimum cut: every node that cannot reach the sink.
template <typename Cap>
class PushRelabel {
 public:
  using Node = std::uint32_t;

  explicit PushRelabel(std::size_t node_count) : node_count_(node_count) {}

  void add_arc(Node from, Node to, const Cap& capacity) {
    tails_.push_back(from);
    heads_.push_back(to);
    caps_.push_back(capacity);
  }

  Cap run(Node source, Node sink) {
    source_ = source;
    sink_ = sink;
    build();
    const auto n = static_cast<std::uint32_t>(node_count_);
    height_.assign(node_count_, 0);
    excess_.assign(node_count_, Cap(0));
    current_.assign(first_.begin(), first_.end() - 1);
    height_[source_] = n;

    for (std::size_t a = first_[source_]; a < first_[source_ + 1]; ++a) {
      if (residual_[a] > 0) {
        const Node w = head_[a];
        excess_[w] += residual_[a];
        residual_[reverse_[a]] += residual_[a];
        residual_[a] = 0;
      }
    }
    global_relabel();

    while (true) {
      while (top_ >= 0 && buckets_[top_].empty()) --top_;
      if (top_ < 0) break;
      const Node v = buckets_[top_].back();
      buckets_[top_].pop_back();
      discharge(v);
      if (work_ > relabel_threshold_) global_relabel();
    }
    return excess_[sink_];
  }

  /// Nodes with a residual path to the sink (valid after run()).
  std::vector<bool> reaches_sink() const {
    std::vector<bool> seen(node_count_, false);
    std::vector<Node> queue{sink_};
    seen[sink_] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Node u = queue[qi];
      for (std::size_t a = first_[u]; a < first_[u + 1]; ++a) {
        const Node w = head_[a];
        if (!seen[w] && residual_[reverse_[a]] > 0) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    return seen;
  }

 private:
  void build() {
    const std::size_t m = tails_.size();
    first_.assign(node_count_ + 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
      ++first_[tails_[i] + 1];
      ++first_[heads_[i] + 1];
    }
    for (std::size_t v = 0; v < node_count_; ++v) first_[v + 1] += first_[v];
    head_.assign(2 * m, 0);
    reverse_.assign(2 * m, 0);
    residual_.assign(2 * m, Cap(0));
    std::vector<std::size_t> fill(first_.begin(), first_.end() - 1);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t fwd = fill[tails_[i]]++;
      const std::size_t bwd = fill[heads_[i]]++;
      head_[fwd] = heads_[i];
      head_[bwd] = tails_[i];
      reverse_[fwd] = bwd;
      reverse_[bwd] = fwd;
      residual_[fwd] = caps_[i];
    }
    relabel_threshold_ = 6 * node_count_ + first_[node_count_] / 2;
  }

  // Exact distances to the sink in the residual graph; unreachable nodes
  // are parked at height n and never processed again.
  void global_relabel() {
    work_ = 0;
    const auto n = static_cast<std::uint32_t>(node_count_);
    for (Node v = 0; v < node_count_; ++v) {
      if (v != source_) height_[v] = n;
    }
    height_[sink_] = 0;
    std::vector<Node> queue{sink_};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Node u = queue[qi];
      for (std::size_t a = first_[u]; a < first_[u + 1]; ++a) {
        const Node w = head_[a];
        if (height_[w] == n && w != source_ && residual_[reverse_[a]] > 0) {
          height_[w] = height_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    buckets_.assign(node_count_, {});
    count_.assign(node_count_, 0);
    top_ = -1;
    for (Node v = 0; v < node_count_; ++v) {
      current_[v] = first_[v];
      if (height_[v] >= n) continue;
      ++count_[height_[v]];
      if (v != sink_ && excess_[v] > 0) activate(v);
    }
  }

  void activate(Node v) {
    const auto h = static_cast<std::ptrdiff_t>(height_[v]);
    buckets_[h].push_back(v);
    top_ = std::max(top_, h);
  }

  void discharge(Node v) {
    const auto n = static_cast<std::uint32_t>(node_count_);
    while (excess_[v] > 0) {
      if (current_[v] == first_[v + 1]) {
        relabel(v);
        if (height_[v] >= n) return;
        continue;
      }
      const std::size_t a = current_[v];
      const Node w = head_[a];
      if (residual_[a] > 0 && height_[v] == height_[w] + 1) {
        const bool was_idle = !(excess_[w] > 0);
        const Cap delta = excess_[v] < residual_[a] ? excess_[v] : residual_[a];
        residual_[a] -= delta;
        residual_[reverse_[a]] += delta;
        excess_[v] -= delta;
        excess_[w] += delta;
        if (was_idle && w != sink_ && w != source_) activate(w);
        if (!(excess_[v] > 0)) return;
      }
      ++current_[v];
    }
  }

  void relabel(Node v) {
    const auto n = static_cast<std::uint32_t>(node_count_);
    const std::uint32_t old = height_[v];
    std::uint32_t best = n;
    for (std::size_t a = first_[v]; a < first_[v + 1]; ++a) {
      if (residual_[a] > 0) best = std::min(best, height_[head_[a]] + 1);
    }
    work_ += first_[v + 1] - first_[v] + 12;
    current_[v] = first_[v];
    --count_[old];
    if (count_[old] == 0) {
      // Gap: nothing above `old` can reach the sink any more.
      for (Node u = 0; u < node_count_; ++u) {
        if (height_[u] > old && height_[u] < n && u != source_) {
          --count_[height_[u]];
          height_[u] = n;
        }
      }
      height_[v] = n;
      return;
    }
    height_[v] = std::min(best, n);
    if (height_[v] < n) ++count_[height_[v]];
  }

  std::size_t node_count_;
  Node source_ = 0;
  Node sink_ = 0;

  std::vector<Node> tails_;
  std::vector<Node> heads_;
  std::vector<Cap> caps_;

  std::vector<std::size_t> first_;
  std::vector<Node> head_;
  std::vector<std::size_t> reverse_;
  std::vector<Cap> residual_;

  std::vector<std::uint32_t> height_;
  std::vector<Cap> excess_;
  std::vector<std::size_t> current_;
  std::vector<std::vector<Node>> buckets_;
  std::vector<std::size_t> count_;
  std::ptrdiff_t top_ = -1;
  std::size_t work_ = 0;
  std::size_t relabel_threshold_ = 0;
};

}  // namespace densest
