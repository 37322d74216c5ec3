#pragma once

// Linear-forest triples, transversal matchings of polycycles, and path/cycle
// odd-covers.  All parts live in the complete graph on V(G): they may use edges
// outside G but only vertices of G.

#include <optional>
#include <string>
#include <vector>

#include "polyresolve/graph.hpp"
#include "polyresolve/polycycle.hpp"

namespace polyresolve {

struct TransversalPair {
  EdgeSet m1;
  EdgeSet m2;
};

// True iff m is a matching holding exactly one edge of every component of the
// polycycle h.
bool is_transversal(const EdgeSet& h, const EdgeSet& m);

struct ForestStats {
  std::vector<int> end1, end2, end3;  // endpoint sets end(F_i)
  std::vector<int> r12, r13, r23;     // R_ij = end(F_i) and end(F_j)
  // Straddling components: for F_i, components with one endpoint in R_ij and
  // the other in R_ik.
  std::vector<EdgeSet> t1, t2, t3;
  int parity = 0;

  int r_sum() const { return static_cast<int>(r12.size() + r13.size() + r23.size()); }
};

struct ForestTriple {
  EdgeSet f1, f2, f3;
  ForestStats stats;
};

// Endpoint bookkeeping for three linear forests whose union (or symmetric
// difference) is Eulerian.  Errors: NotLinearForest; PreconditionViolated if a
// vertex is an endpoint of all three forests.  The common parity of all r_ij
// and t_i is asserted.
ForestTriple forest_stats(const EdgeSet& f1, const EdgeSet& f2, const EdgeSet& f3);

// F1 = (H1 - M1) + M', F2 = M1 + (M2 - M'), F3 = H2 - M2, where M' takes one M2
// edge from each cycle of M1 + M2.  Errors: NotPolycycle, NotEdgeDisjoint,
// NotTransversal.
ForestTriple linear_forests_from_transversal(const EdgeSet& h1, const EdgeSet& h2,
                                             const TransversalPair& tp);

struct FlexibleChoice {
  std::vector<int> chosen_v;
  Edge e0;  // meets chosen_v in an even number of vertices
  Edge e1;  // meets chosen_v in an odd number of vertices
};

// For a cycle c, a vertex set v, x in V(c) and v, and z outside v, returns
// v or v + z - x together with a witness pair of edges showing that c is
// flexible with respect to it.  Errors: PreconditionViolated.
FlexibleChoice flexible_exchange(const EdgeSet& c, const std::vector<int>& v, int x, int z);

// Transversal pair with |V(M1) and V(M2)| odd.  Errors: NoCommonVertex.
TransversalPair transversal_odd_intersection(const EdgeSet& h1, const EdgeSet& h2);

struct CrossingHint {
  EdgeSet c1, c1p;  // distinct components of h1
  EdgeSet c2, c2p;  // distinct components of h2
};

struct EvenTransversal {
  TransversalPair pair;
  int u = -1;
  int v1 = -1;
  int v2 = -1;
  // Which case of the construction produced the pair: "1a", "1b" or "2".
  std::string branch;
};

// Transversal pair with |V(M1) and V(M2)| even, plus witness edges u v1 in M1
// and u v2 in M2 with v1 outside V(M2) and v2 outside V(M1).  The hint, when
// given, is tried first.  Errors: CrossingPairMissing.
EvenTransversal transversal_even_intersection(const EdgeSet& h1, const EdgeSet& h2,
                                              const std::optional<CrossingHint>& hint = std::nullopt);

// True iff some component pair of h1 and component pair of h2 cross
// (V(C1) meets V(C2) and V(C1') meets V(C2') with C1 != C1', C2 != C2').
bool has_crossing_pair(const EdgeSet& h1, const EdgeSet& h2);

enum class PartKind { Path, Cycle, LinearForest };

const char* part_kind_name(PartKind k);

struct OddCoverCert {
  PartKind kind = PartKind::Path;
  std::vector<EdgeSet> parts;
};

// At most three paths for Eulerian g with maximum degree <= 4.  Errors:
// NotEulerian, PreconditionViolated (degree above 4).
OddCoverCert path_odd_cover_delta4(const SimpleGraph& g);
// At most three cycles for Eulerian g with maximum degree <= 4.
OddCoverCert cycle_odd_cover_delta4(const SimpleGraph& g);
// Size <= ceil(3 Delta / 4) for paths, <= d1/2 + ceil(d2/4) for cycles, where
// d1 >= d2 are the two largest degrees.  Errors: NotEulerian.
OddCoverCert odd_cover_eulerian(const SimpleGraph& g, CoverKind kind);
// Path odd-cover of any graph, size <= v_odd/2 + ceil(3 Delta_e / 4).
OddCoverCert path_odd_cover_general(const SimpleGraph& g);

int path_cover_bound_eulerian(const SimpleGraph& g);
int cycle_cover_bound_eulerian(const SimpleGraph& g);
int path_cover_bound_general(const SimpleGraph& g);

// Decomposes a graph with maximum degree Delta into edge-disjoint linear
// forests: 3 forests when Delta <= 4, ceil(3 Delta_e / 4) in general.  The
// graph is first embedded in an Eulerian graph of the same maximum even degree
// (two copies joined at odd vertices), decomposed, and restricted back.
std::vector<EdgeSet> linear_forest_decomposition(const SimpleGraph& g);

struct CheckResult {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// xor(parts) = g, every part has the required shape, parts only use vertices
// of g.
CheckResult check_odd_cover(const SimpleGraph& g, const OddCoverCert& cert);
// Parts pairwise edge-disjoint, union = g, every part a linear forest.
CheckResult check_linear_forest_decomposition(const SimpleGraph& g, const std::vector<EdgeSet>& parts);

}  // namespace polyresolve
