#pragma once

// Decompositions of Eulerian (di)graphs into polycycles, the factorization of
// a cluster difference graph into cluster-balanced permutations, and two-part
// odd-covers of a single polycycle.

#include <vector>

#include "polyresolve/graph.hpp"
#include "polyresolve/permutation.hpp"

namespace polyresolve {

enum class CoverKind { Path, Cycle };

const char* cover_kind_name(CoverKind k);

// Parts are lists of arc ids of the host digraph (loops never appear).
struct DirectedDecomposition {
  std::vector<std::vector<int>> parts;
  int cycle_suffix_len = 0;
};

struct UndirectedDecomposition {
  std::vector<EdgeSet> parts;
  int cycle_suffix_len = 0;
};

// Splits the non-loop arcs of an Eulerian digraph into D edge-disjoint directed
// polycycles, D = maximum out-degree (loops included).  When t < D, exactly one
// vertex v may have out-degree above t; the last D - t parts are then single
// directed cycles through v (or empty when v runs out of non-loop arcs).
// Errors: NotEulerian, ThresholdViolated, PreconditionViolated (t outside 0..D).
DirectedDecomposition directed_polycycle_decomposition(const Digraph& g, int t);
DirectedDecomposition directed_polycycle_decomposition(const Digraph& g);

// True iff the arcs form a directed polycycle (in = out = 1 on touched vertices).
bool is_directed_polycycle(const Digraph& g, const std::vector<int>& arcs);

// Splits an Eulerian graph into Delta/2 edge-disjoint polycycles via an
// Eulerian orientation.  With t < Delta/2, at most one vertex may have degree
// above 2t and the trailing Delta/2 - t parts are single cycles.
UndirectedDecomposition undirected_polycycle_decomposition(const SimpleGraph& g, int t);
UndirectedDecomposition undirected_polycycle_decomposition(const SimpleGraph& g);

struct BalancedFactorization {
  // Cycles from the suffix of the decomposition (non-trivial ones only); they
  // act after all pis: q = p * sigma_k ... sigma_1 * pi_l ... pi_1.
  std::vector<CycleSeq> sigmas;
  // Cluster-balanced permutations, one per remaining polycycle (identities dropped).
  std::vector<Permutation> pis;
};

// Factorizes CDG(p, q) into cycles and balanced permutations with pairwise
// disjoint supports.  Errors: ShapeMismatch.
BalancedFactorization balanced_permutation_factorization(const Partition& p, const Partition& q);

// Two paths (kind Path) or at most two cycles (kind Cycle) whose symmetric
// difference is the polycycle h.  Empty input gives an empty list.
// Errors: NotPolycycle.
std::vector<EdgeSet> polycycle_odd_cover(const EdgeSet& h, CoverKind kind);

}  // namespace polyresolve
