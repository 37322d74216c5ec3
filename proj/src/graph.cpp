#include "polyresolve/graph.hpp"

#include <map>
#include <numeric>
#include <string>

#include "polyresolve/error.hpp"

namespace polyresolve {

EdgeSet make_edge_set(std::vector<Edge> edges) {
  for (const Edge& e : edges) {
    if (e.u == e.v) throw Error(Errc::InvalidInput, "loop edge at vertex " + std::to_string(e.u));
    if (e.u < 0) throw Error(Errc::InvalidInput, "negative vertex id");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

bool contains(const EdgeSet& set, Edge e) {
  return std::binary_search(set.begin(), set.end(), e);
}

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet set_minus(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet set_intersection(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool edge_disjoint(const EdgeSet& a, const EdgeSet& b) {
  return set_intersection(a, b).empty();
}

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

EdgeSet symmetric_difference(std::span<const EdgeSet> parts) {
  EdgeSet acc;
  for (const EdgeSet& part : parts) acc = symmetric_difference(acc, part);
  return acc;
}

std::vector<int> vertex_set(const EdgeSet& edges) {
  std::vector<int> vs;
  vs.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    vs.push_back(e.u);
    vs.push_back(e.v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

int vertex_bound(const EdgeSet& edges) {
  int bound = 0;
  for (const Edge& e : edges) bound = std::max(bound, e.v + 1);
  return bound;
}

std::vector<int> vertex_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> vertex_symmetric_difference(const std::vector<int>& a,
                                             const std::vector<int>& b) {
  std::vector<int> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

bool has_vertex(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

namespace {

// Adjacency over the vertices touched by an edge set, keyed by vertex id.
std::map<int, std::vector<int>> local_adjacency(const EdgeSet& edges) {
  std::map<int, std::vector<int>> adj;
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& [v, list] : adj) std::sort(list.begin(), list.end());
  return adj;
}

}  // namespace

std::vector<EdgeSet> edge_components(const EdgeSet& edges) {
  const int bound = vertex_bound(edges);
  std::vector<int> parent(bound);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) parent[find(e.u)] = find(e.v);
  // Group edges by root, then order groups by their smallest vertex.
  std::map<int, EdgeSet> by_root;
  for (const Edge& e : edges) by_root[find(e.u)].push_back(e);
  std::vector<EdgeSet> out;
  for (auto& [root, part] : by_root) out.push_back(std::move(part));
  std::sort(out.begin(), out.end(),
            [](const EdgeSet& a, const EdgeSet& b) { return a.front().u < b.front().u; });
  return out;
}

std::vector<int> cycle_order(const EdgeSet& cycle) {
  if (cycle.empty()) return {};
  auto adj = local_adjacency(cycle);
  const int start = adj.begin()->first;
  std::vector<int> order{start};
  int prev = start;
  int cur = adj.at(start).front();
  while (cur != start) {
    order.push_back(cur);
    const auto& nb = adj.at(cur);
    if (nb.size() != 2) throw Error(Errc::PreconditionViolated, "edge set is not a cycle");
    int next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    if (order.size() > cycle.size()) throw Error(Errc::PreconditionViolated, "edge set is not a cycle");
  }
  if (order.size() != cycle.size()) throw Error(Errc::PreconditionViolated, "edge set is not a single cycle");
  return order;
}

std::vector<int> path_order(const EdgeSet& path) {
  if (path.empty()) return {};
  auto adj = local_adjacency(path);
  int start = -1;
  for (const auto& [v, nb] : adj) {
    if (nb.size() == 1) {
      start = v;
      break;
    }
  }
  if (start < 0) throw Error(Errc::PreconditionViolated, "edge set is not a path");
  std::vector<int> order{start};
  int prev = -1;
  int cur = start;
  while (true) {
    const auto& nb = adj.at(cur);
    int next = -1;
    for (int w : nb) {
      if (w != prev) {
        next = w;
        break;
      }
    }
    if (next < 0) break;
    if (nb.size() > 2 || order.size() > path.size()) {
      throw Error(Errc::PreconditionViolated, "edge set is not a path");
    }
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  if (order.size() != path.size() + 1) throw Error(Errc::PreconditionViolated, "edge set is not a single path");
  return order;
}

EdgeSet cycle_edges(std::span<const int> order) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < order.size(); ++i) {
    es.emplace_back(order[i], order[(i + 1) % order.size()]);
  }
  return make_edge_set(std::move(es));
}

EdgeSet path_edges(std::span<const int> order) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) es.emplace_back(order[i], order[i + 1]);
  return make_edge_set(std::move(es));
}

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw Error(Errc::InvalidInput, "negative vertex count");
  edges_ = make_edge_set(std::move(edges));
  if (vertex_bound(edges_) > n) throw Error(Errc::InvalidInput, "edge endpoint out of range");
}

SimpleGraph::SimpleGraph(int n, EdgeSet edges, bool already_canonical) : n_(n) {
  if (!already_canonical) edges = make_edge_set(std::move(edges));
  if (vertex_bound(edges) > n) throw Error(Errc::InvalidInput, "edge endpoint out of range");
  edges_ = std::move(edges);
}

std::vector<int> SimpleGraph::degree_vector() const {
  std::vector<int> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

Digraph::Digraph(int n, std::vector<int> tail, std::vector<int> head)
    : n_(n), tail_(std::move(tail)), head_(std::move(head)) {
  if (tail_.size() != head_.size()) throw Error(Errc::SizeMismatch, "tail and head lengths differ");
  for (std::size_t e = 0; e < tail_.size(); ++e) {
    if (tail_[e] < 0 || tail_[e] >= n || head_[e] < 0 || head_[e] >= n) {
      throw Error(Errc::InvalidInput, "arc endpoint out of range", static_cast<int>(e));
    }
  }
}

std::vector<int> Digraph::out_degrees() const {
  std::vector<int> deg(n_, 0);
  for (int t : tail_) ++deg[t];
  return deg;
}

std::vector<int> Digraph::in_degrees() const {
  std::vector<int> deg(n_, 0);
  for (int h : head_) ++deg[h];
  return deg;
}

bool Digraph::is_eulerian() const { return out_degrees() == in_degrees(); }

DegreeSummary degrees(const SimpleGraph& g) {
  DegreeSummary s;
  s.degree = g.degree_vector();
  for (int d : s.degree) {
    s.delta = std::max(s.delta, d);
    if (d % 2 != 0) ++s.v_odd;
  }
  s.delta_e = 2 * ((s.delta + 1) / 2);
  return s;
}

bool is_eulerian(const SimpleGraph& g) { return degrees(g).v_odd == 0; }

Digraph eulerian_orientation(const SimpleGraph& g) {
  if (!is_eulerian(g)) throw Error(Errc::NotEulerian, "graph has odd-degree vertices");
  const EdgeSet& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  // Incidence lists of edge ids, in sorted neighbour order for determinism.
  std::vector<std::vector<int>> inc(g.n());
  for (int i = 0; i < m; ++i) {
    inc[edges[i].u].push_back(i);
    inc[edges[i].v].push_back(i);
  }
  std::vector<std::size_t> cursor(g.n(), 0);
  std::vector<char> used(m, 0);
  std::vector<int> tail(m), head(m);
  // Iterative Hierholzer walk; each edge is oriented in the direction it is
  // first traversed.  Every closed trail balances in- and out-degree, so the
  // final orientation is Eulerian.
  for (int start = 0; start < g.n(); ++start) {
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      auto& cur = cursor[v];
      while (cur < inc[v].size() && used[inc[v][cur]]) ++cur;
      if (cur == inc[v].size()) {
        stack.pop_back();
        continue;
      }
      int e = inc[v][cur];
      used[e] = 1;
      int w = edges[e].other(v);
      tail[e] = v;
      head[e] = w;
      stack.push_back(w);
    }
  }
  Digraph d(g.n(), std::move(tail), std::move(head));
  ensure(d.is_eulerian(), "orientation is not balanced");
  return d;
}

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::Empty: return "empty";
    case Shape::Path: return "path";
    case Shape::Cycle: return "cycle";
    case Shape::Polycycle: return "polycycle";
    case Shape::LinearForest: return "linear forest";
    case Shape::Other: return "other";
  }
  return "other";
}

Shape classify(const EdgeSet& edges) {
  if (edges.empty()) return Shape::Empty;
  const int bound = vertex_bound(edges);
  std::vector<int> deg(bound, 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  bool all_paths = true;
  bool all_cycles = true;
  const auto comps = edge_components(edges);
  for (const EdgeSet& comp : comps) {
    const auto vs = vertex_set(comp);
    int max_deg = 0;
    for (int v : vs) max_deg = std::max(max_deg, deg[v]);
    const bool is_path = max_deg <= 2 && comp.size() + 1 == vs.size();
    const bool is_cycle = max_deg == 2 && comp.size() == vs.size();
    all_paths = all_paths && is_path;
    all_cycles = all_cycles && is_cycle;
  }
  if (comps.size() == 1) {
    if (all_paths) return Shape::Path;
    if (all_cycles) return Shape::Cycle;
    return Shape::Other;
  }
  if (all_paths) return Shape::LinearForest;
  if (all_cycles) return Shape::Polycycle;
  return Shape::Other;
}

Shape classify(const EdgeSet& edges, int n) {
  if (vertex_bound(edges) > n) throw Error(Errc::InvalidInput, "edge endpoint out of range");
  return classify(edges);
}

bool is_path_shape(Shape s) { return s == Shape::Path; }
bool is_cycle_shape(Shape s) { return s == Shape::Cycle; }
bool is_polycycle_shape(Shape s) {
  return s == Shape::Empty || s == Shape::Cycle || s == Shape::Polycycle;
}
bool is_linear_forest_shape(Shape s) {
  return s == Shape::Empty || s == Shape::Path || s == Shape::LinearForest;
}

}  // namespace polyresolve
