#include "polyresolve/instances.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "polyresolve/error.hpp"
#include "polyresolve/oracles.hpp"

namespace polyresolve {

std::pair<Partition, Partition> random_instance_with_shape(Rng& rng, const std::vector<int>& shape) {
  std::vector<int> assign;
  for (std::size_t c = 0; c < shape.size(); ++c) assign.insert(assign.end(), shape[c], static_cast<int>(c));
  std::shuffle(assign.begin(), assign.end(), rng);
  const Partition p(static_cast<int>(shape.size()), assign);
  std::vector<int> perm(assign.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return {p, p.after(Permutation(perm))};
}

namespace {

std::vector<int> random_shape(Rng& rng, int max_m, int max_n, int kappa1) {
  std::uniform_int_distribution<int> pick_n(2, max_n);
  while (true) {
    const int n = pick_n(rng);
    const int hi = kappa1 > 0 ? kappa1 : std::max(1, max_m / n);
    std::uniform_int_distribution<int> size(1, hi);
    std::vector<int> shape(n);
    for (int& k : shape) k = size(rng);
    if (kappa1 > 0) shape[std::uniform_int_distribution<int>(0, n - 1)(rng)] = kappa1;
    if (std::accumulate(shape.begin(), shape.end(), 0) <= max_m) return shape;
  }
}

}  // namespace

std::pair<Partition, Partition> random_instance(Rng& rng, int max_m, int max_n) {
  return random_instance_with_shape(rng, random_shape(rng, max_m, max_n, 0));
}

std::pair<Partition, Partition> random_instance_with_kappa1(Rng& rng, int kappa1, int max_m, int max_n) {
  return random_instance_with_shape(rng, random_shape(rng, max_m, max_n, kappa1));
}

SimpleGraph random_eulerian_graph(Rng& rng, int n, int delta) {
  if (delta < 2 || delta % 2 != 0 || n <= delta) {
    throw Error(Errc::InvalidInput, "need an even degree at least 2 and more than delta vertices");
  }
  std::vector<int> verts(n);
  std::iota(verts.begin(), verts.end(), 0);
  std::uniform_int_distribution<int> len(3, n);
  // Keeps the last accepted graph whose maximum degree hits the target (the
  // final state alone can cycle back to empty on tiny vertex sets).
  while (true) {
    EdgeSet edges;
    std::optional<EdgeSet> hit;
    for (int step = 0; step < 40 * n; ++step) {
      std::shuffle(verts.begin(), verts.end(), rng);
      const int l = len(rng);
      EdgeSet cand = symmetric_difference(edges, cycle_edges(std::span<const int>(verts.data(), l)));
      const int d = degrees(SimpleGraph(n, cand, true)).delta;
      if (d > delta) continue;
      edges = std::move(cand);
      if (d == delta) hit = edges;
    }
    if (hit) return SimpleGraph(n, *hit, true);
  }
}

SimpleGraph random_graph(Rng& rng, int n, double prob) {
  std::bernoulli_distribution coin(prob);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) es.emplace_back(u, v);
    }
  }
  return SimpleGraph(n, es);
}

SimpleGraph random_bounded_degree_graph(Rng& rng, int n, int delta) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<int> deg(n, 0);
  std::vector<Edge> es;
  for (const Edge& e : all) {
    if (deg[e.u] < delta && deg[e.v] < delta) {
      es.push_back(e);
      ++deg[e.u];
      ++deg[e.v];
    }
  }
  return SimpleGraph(n, es);
}

SimpleGraph complete_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  }
  return SimpleGraph(n, es);
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  std::vector<Edge> es(a.edges().begin(), a.edges().end());
  for (const Edge& e : b.edges()) es.emplace_back(e.u + a.n(), e.v + a.n());
  return SimpleGraph(a.n() + b.n(), es);
}

SimpleGraph petersen_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);          // outer cycle
    es.emplace_back(i, i + 5);                // spokes
    es.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return SimpleGraph(10, es);
}

SimpleGraph graph_from_mask(int k, unsigned mask) {
  std::vector<Edge> es;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) {
      if (mask & (1u << edge_bit(k, u, v))) es.emplace_back(u, v);
    }
  }
  return SimpleGraph(k, es);
}

std::pair<Partition, Partition> example_small_cdg() {
  return {Partition(4, {0, 0, 1, 1, 2, 2, 3, 3, 3}), Partition(4, {1, 2, 0, 0, 3, 3, 1, 2, 3})};
}

SimpleGraph example_two_k5() { return disjoint_union(complete_graph(5), complete_graph(5)); }

OddCoverCert example_two_k5_cycle_cover() {
  const std::vector<int> black{3, 4, 0, 1, 2, 5, 6, 7, 8, 9};
  const std::vector<int> red{2, 0, 3, 1, 4, 8, 6, 9, 7, 5};
  const std::vector<int> blue{4, 2, 3, 9, 5, 8};
  return {PartKind::Cycle, {cycle_edges(black), cycle_edges(red), cycle_edges(blue)}};
}

}  // namespace polyresolve
