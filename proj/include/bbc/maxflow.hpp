#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace bbc {

/// Dinic maximum flow on integer capacities.
class FlowNetwork {
 public:
  using Cap = std::int64_t;
  static constexpr Cap infinity = std::numeric_limits<Cap>::max() / 4;

  explicit FlowNetwork(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

  void add_edge(int from, int to, Cap cap) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  Cap max_flow(int s, int t) {
    Cap total = 0;
    while (bfs(s, t)) {
      it_.assign(adj_.size(), 0);
      while (Cap f = dfs(s, t, infinity)) total += f;
    }
    return total;
  }

  /// Nodes reachable from s in the residual network after max_flow: the
  /// source side of a minimum cut.
  std::vector<bool> source_side(int s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int id : adj_[x])
        if (arcs_[id].cap > 0 && !seen[arcs_[id].to]) {
          seen[arcs_[id].to] = true;
          stack.push_back(arcs_[id].to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    Cap cap;
  };

  bool bfs(int s, int t) {
    level_.assign(adj_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int id : adj_[x])
        if (arcs_[id].cap > 0 && level_[arcs_[id].to] < 0) {
          level_[arcs_[id].to] = level_[x] + 1;
          q.push(arcs_[id].to);
        }
    }
    return level_[t] >= 0;
  }

  Cap dfs(int x, int t, Cap pushed) {
    if (x == t) return pushed;
    for (auto& i = it_[x]; i < adj_[x].size(); ++i) {
      int id = adj_[x][i];
      Arc& a = arcs_[id];
      if (a.cap <= 0 || level_[a.to] != level_[x] + 1) continue;
      if (Cap got = dfs(a.to, t, std::min(pushed, a.cap))) {
        a.cap -= got;
        arcs_[id ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

}  // namespace bbc
