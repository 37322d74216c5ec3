#pragma once

// Hopcroft-Karp maximum matching on a bipartite multigraph with equal-sized
// sides.  Used to peel perfect matchings off regular bipartite graphs.

#include <vector>

namespace polyresolve {

class BipartiteMultigraph {
 public:
  explicit BipartiteMultigraph(int side_size) : n_(side_size), adj_(side_size) {}

  // Adds an edge left -> right and returns its id.
  int add_edge(int left, int right);
  void remove_edge(int id) { alive_[id] = 0; }
  bool alive(int id) const { return alive_[id] != 0; }
  int left(int id) const { return left_[id]; }
  int right(int id) const { return right_[id]; }
  int side_size() const { return n_; }

  // Maximum matching over live edges: entry v is the edge id matched at left
  // vertex v, or -1.  Deterministic: edges are tried in insertion order.
  std::vector<int> maximum_matching() const;

 private:
  int n_;
  std::vector<std::vector<int>> adj_;  // left vertex -> edge ids
  std::vector<int> left_;
  std::vector<int> right_;
  std::vector<char> alive_;
};

}  // namespace polyresolve
