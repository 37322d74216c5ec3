#include "polyresolve/matching.hpp"

#include <limits>
#include <queue>

namespace polyresolve {

int BipartiteMultigraph::add_edge(int left, int right) {
  const int id = static_cast<int>(left_.size());
  left_.push_back(left);
  right_.push_back(right);
  alive_.push_back(1);
  adj_[left].push_back(id);
  return id;
}

std::vector<int> BipartiteMultigraph::maximum_matching() const {
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> match_left(n_, -1);   // left vertex -> edge id
  std::vector<int> match_right(n_, -1);  // right vertex -> edge id
  std::vector<int> dist(n_);
  std::vector<std::size_t> it(n_);

  // Layered BFS from free left vertices; returns true if an augmenting path exists.
  auto bfs = [&]() {
    std::queue<int> q;
    for (int v = 0; v < n_; ++v) {
      dist[v] = match_left[v] < 0 ? 0 : kInf;
      if (match_left[v] < 0) q.push(v);
    }
    bool found = false;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e : adj_[v]) {
        if (!alive_[e]) continue;
        int mate_edge = match_right[right_[e]];
        if (mate_edge < 0) {
          found = true;
        } else {
          int w = left_[mate_edge];
          if (dist[w] == kInf) {
            dist[w] = dist[v] + 1;
            q.push(w);
          }
        }
      }
    }
    return found;
  };

  // Iterative DFS along the layering to keep stack depth bounded.
  auto augment = [&](int root) {
    std::vector<int> stack{root};
    std::vector<int> via;  // edge used to leave each stacked vertex
    while (!stack.empty()) {
      int v = stack.back();
      bool advanced = false;
      while (it[v] < adj_[v].size()) {
        int e = adj_[v][it[v]];
        if (!alive_[e]) {
          ++it[v];
          continue;
        }
        int mate_edge = match_right[right_[e]];
        if (mate_edge < 0) {
          // Flip the path root ... v, e.
          via.push_back(e);
          for (std::size_t k = 0; k < via.size(); ++k) {
            int edge = via[k];
            match_left[left_[edge]] = edge;
            match_right[right_[edge]] = edge;
          }
          return true;
        }
        int w = left_[mate_edge];
        if (dist[w] == dist[v] + 1) {
          via.push_back(e);
          stack.push_back(w);
          advanced = true;
          break;
        }
        ++it[v];
      }
      if (!advanced) {
        dist[v] = kInf;
        stack.pop_back();
        if (!via.empty()) {
          int back = stack.empty() ? -1 : stack.back();
          via.pop_back();
          if (back >= 0) ++it[back];
        }
      }
    }
    return false;
  };

  while (bfs()) {
    for (int v = 0; v < n_; ++v) it[v] = 0;
    for (int v = 0; v < n_; ++v) {
      if (match_left[v] < 0) augment(v);
    }
  }
  return match_left;
}

}  // namespace polyresolve
