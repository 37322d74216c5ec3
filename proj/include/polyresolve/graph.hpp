#pragma once

// Labeled simple graphs, directed multigraphs and edge-set algebra.
//
// Vertices are dense integers 0..n-1.  An undirected edge is stored in
// canonical form (min, max); an EdgeSet is a sorted, duplicate-free vector of
// such edges, so set operations are linear merges and equality is plain vector
// equality.

#include <algorithm>
#include <compare>
#include <span>
#include <vector>

namespace polyresolve {

struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool has(int x) const { return u == x || v == x; }
  int other(int x) const { return x == u ? v : u; }
  auto operator<=>(const Edge&) const = default;
};

using EdgeSet = std::vector<Edge>;

// Sorts and deduplicates; throws InvalidInput on a loop edge.
EdgeSet make_edge_set(std::vector<Edge> edges);

bool contains(const EdgeSet& set, Edge e);
EdgeSet set_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_minus(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_intersection(const EdgeSet& a, const EdgeSet& b);
bool edge_disjoint(const EdgeSet& a, const EdgeSet& b);

// Edge present iff it occurs in an odd number of parts.
EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b);
EdgeSet symmetric_difference(std::span<const EdgeSet> parts);

// Sorted list of vertices touched by the edges, V(E).
std::vector<int> vertex_set(const EdgeSet& edges);
// Largest endpoint + 1, or 0 for an empty set.
int vertex_bound(const EdgeSet& edges);

// Sorted-vector set helpers for vertex sets.
std::vector<int> vertex_intersection(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> vertex_symmetric_difference(const std::vector<int>& a,
                                             const std::vector<int>& b);
bool has_vertex(const std::vector<int>& sorted, int x);

// Connected components of the graph formed by the edges (isolated vertices are
// not reported), ordered by smallest vertex.
std::vector<EdgeSet> edge_components(const EdgeSet& edges);

// Vertex sequence of a cycle edge set: starts at its smallest vertex and
// proceeds toward the smaller of its two neighbours.  Precondition: the edges
// form a single cycle.
std::vector<int> cycle_order(const EdgeSet& cycle);
// Vertex sequence of a path edge set, starting at its smaller endpoint.
std::vector<int> path_order(const EdgeSet& path);
// Edge set of the closed walk v0 v1 ... vk v0.
EdgeSet cycle_edges(std::span<const int> order);
// Edge set of the open walk v0 v1 ... vk.
EdgeSet path_edges(std::span<const int> order);

class SimpleGraph {
 public:
  SimpleGraph() = default;
  // Throws InvalidInput on loops or endpoints outside 0..n-1.  Parallel edges
  // collapse (set semantics).
  SimpleGraph(int n, std::vector<Edge> edges);
  SimpleGraph(int n, EdgeSet edges, bool already_canonical);

  int n() const { return n_; }
  const EdgeSet& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(Edge e) const { return contains(edges_, e); }
  std::vector<int> degree_vector() const;
  // Sorted neighbour lists.
  std::vector<std::vector<int>> adjacency() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  int n_ = 0;
  EdgeSet edges_;
};

class Digraph {
 public:
  Digraph() = default;
  // Loops and parallel arcs are allowed.  Throws InvalidInput on endpoints
  // outside 0..n-1 and SizeMismatch if tail and head lengths differ.
  Digraph(int n, std::vector<int> tail, std::vector<int> head);

  int n() const { return n_; }
  int m() const { return static_cast<int>(tail_.size()); }
  int tail(int e) const { return tail_[e]; }
  int head(int e) const { return head_[e]; }
  bool is_loop(int e) const { return tail_[e] == head_[e]; }
  const std::vector<int>& tails() const { return tail_; }
  const std::vector<int>& heads() const { return head_; }

  std::vector<int> out_degrees() const;
  std::vector<int> in_degrees() const;
  bool is_eulerian() const;

  bool operator==(const Digraph&) const = default;

 private:
  int n_ = 0;
  std::vector<int> tail_;
  std::vector<int> head_;
};

struct DegreeSummary {
  int delta = 0;    // maximum degree
  int v_odd = 0;    // number of odd-degree vertices
  int delta_e = 0;  // 2 * ceil(delta / 2)
  std::vector<int> degree;
};

DegreeSummary degrees(const SimpleGraph& g);
bool is_eulerian(const SimpleGraph& g);

// Orients every edge so that in-degree equals out-degree everywhere, following
// Hierholzer circuits component by component.  Arc i of the result is an
// orientation of edge i of g.edges().  Throws NotEulerian on odd degrees.
Digraph eulerian_orientation(const SimpleGraph& g);

enum class Shape { Empty, Path, Cycle, Polycycle, LinearForest, Other };

const char* shape_name(Shape s);

// Shape of the subgraph formed by the edges.  A single path is reported as
// Path and a single cycle as Cycle; use the predicates below for the
// "every component is ..." readings.
Shape classify(const EdgeSet& edges);
// Same, after checking every endpoint lies in 0..n-1 (InvalidInput otherwise).
Shape classify(const EdgeSet& edges, int n);
bool is_path_shape(Shape s);           // Path
bool is_cycle_shape(Shape s);          // Cycle
bool is_polycycle_shape(Shape s);      // Empty, Cycle or Polycycle
bool is_linear_forest_shape(Shape s);  // Empty, Path or LinearForest

}  // namespace polyresolve
