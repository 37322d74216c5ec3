#pragma once

// Seeded random generators and fixed example instances.

#include <random>
#include <utility>
#include <vector>

#include "polyresolve/graph.hpp"
#include "polyresolve/odd_cover.hpp"
#include "polyresolve/permutation.hpp"

namespace polyresolve {

using Rng = std::mt19937_64;

// Random pair of partitions with a common shape: n in [2, max_n], sizes >= 1
// with total m <= max_m, p a random assignment of that shape and q = p after
// a uniformly random permutation of the items.
std::pair<Partition, Partition> random_instance(Rng& rng, int max_m = 30, int max_n = 10);

// Same, with every cluster of size <= kappa1 and at least one of size kappa1.
std::pair<Partition, Partition> random_instance_with_kappa1(Rng& rng, int kappa1, int max_m = 30, int max_n = 10);

// Random partition pair with the given shape.
std::pair<Partition, Partition> random_instance_with_shape(Rng& rng, const std::vector<int>& shape);

// Random Eulerian graph on n vertices with maximum degree exactly delta
// (built by xoring random cycles).  Requires delta even, n > delta.
SimpleGraph random_eulerian_graph(Rng& rng, int n, int delta);

// Erdos-Renyi graph G(n, prob).
SimpleGraph random_graph(Rng& rng, int n, double prob);

// Random graph with maximum degree at most delta (random edges added while the
// degree cap allows).
SimpleGraph random_bounded_degree_graph(Rng& rng, int n, int delta);

SimpleGraph complete_graph(int n);
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);
SimpleGraph petersen_graph();

// Graph on all labeled vertices [k] given by an edge bitmask in the order of
// edge_bit.
SimpleGraph graph_from_mask(int k, unsigned mask);

// Small CDG instance with four clusters and nine items, loop on item 8.
std::pair<Partition, Partition> example_small_cdg();

// Two disjoint K5 on c1..c5 = 0..4 and d1..d5 = 5..9 with a three-cycle
// odd-cover (two Hamiltonian-like cycles and a hexagon).
SimpleGraph example_two_k5();
OddCoverCert example_two_k5_cycle_cover();

}  // namespace polyresolve
