#pragma once

// Independent brute-force and pruned-search oracles used to validate the
// constructions on small inputs.

#include <optional>
#include <string>
#include <vector>

#include "polyresolve/graph.hpp"
#include "polyresolve/odd_cover.hpp"
#include "polyresolve/permutation.hpp"
#include "polyresolve/polycycle.hpp"

namespace polyresolve {

// State-count cap for the polytope searches: POLYRESOLVE_CAP when set to a
// positive integer, otherwise 100000.
long long default_cap();

// Combinatorial diameter of the partition polytope with the given cluster
// sizes.  The polytope graph is vertex-transitive (items can be relabeled), so
// one breadth-first search from a fixed vertex suffices; states are reduced
// modulo relabelings of items inside a starting cluster.  Errors: TooLarge
// when the vertex count m!/prod(k_i!) exceeds the cap, BadShape.
int exact_diameter_bfs(const std::vector<int>& shape, long long cap = default_cap());

// Length of a shortest resolution of (p, q) by breadth-first search over
// states reduced modulo relabelings of items with equal (p(x), q(x)).
// Errors: ShapeMismatch, TooLarge when more than `cap` states are visited.
int min_resolution_length(const Partition& p, const Partition& q, long long cap = default_cap());

// Progress bookkeeping for one cyclic exchange applied at `cur`: a whole move
// takes an item from p(x) straight to q(x), a half move does only one of the
// two.  gain = 2 * whole + half bounds the increase of the progress measure.
struct MoveAccounting {
  int whole_moves = 0;
  int half_moves = 0;
  int gain = 0;
};

MoveAccounting account_moves(const Partition& p, const Partition& q, const Partition& cur, const CycleSeq& tau);

// Progress measure: items with p(x) != q(x) count 1 once they have left p(x)
// and 1 more once they sit in q(x).
int progress_measure(const Partition& p, const Partition& q, const Partition& cur);

struct PrunedSearchResult {
  bool no_short_resolution = false;
  long long nodes = 0;           // states expanded
  bool first_step_fixed = false;  // the symmetric first exchange was imposed
  std::vector<CycleSeq> witness;  // a resolution of length <= L when one exists
};

// Depth-first search over resolutions of length <= L.  Each step must gain at
// least what the remaining budget requires under the family gain cap; states
// are reduced modulo relabelings of items with equal (p(x), q(x)) and failed
// (state, steps-left) pairs are memoized.  With fix_first_step on the
// (3,3,3,3,3,3) instance, the first exchange is fixed to
// (a11 b11 a21 b21 a31 b31) as allowed by symmetry.  Errors: FamilyMismatch.
PrunedSearchResult pruned_search(const Partition& p, const Partition& q, int L, bool fix_first_step);

// True iff no resolution of length <= L exists (first step fixed on the
// (3,3,3,3,3,3) instance).
bool pruned_no_short_resolution(const Partition& p, const Partition& q, int L);

// Smallest s <= max_size such that s paths (or cycles) of the complete graph
// on [g.n()] have symmetric difference g; nullopt if none.  Exact for up to 7
// vertices (breadth-first search over all edge subsets); on 8 vertices sizes
// up to 4 (cycles) or 3 (paths) are decided by meet-in-the-middle.  Errors:
// TooLarge.
std::optional<int> min_odd_cover_exhaustive(const SimpleGraph& g, CoverKind kind, int max_size);

// Distances from the empty graph for every graph on k <= 7 labeled vertices:
// entry `mask` (bit i = edge i in lexicographic (u, v) order) holds the
// minimum cover size, or 255 when unreachable.  Cached per (k, kind).
const std::vector<unsigned char>& odd_cover_distance_table(int k, CoverKind kind);

// Bit index of edge (u, v), u < v, in the k-vertex edge order used by
// odd_cover_distance_table.
int edge_bit(int k, int u, int v);

// Hamiltonian cycle on all g.n() vertices (bitmask dynamic programming).
// Errors: TooLarge above 20 vertices.
bool is_hamiltonian(const SimpleGraph& g);

struct Report {
  std::string check;
  bool pass = false;
  std::string detail;
  long long elapsed_ms = 0;
};

Report verify_certificate(const Partition& p, const Partition& q, const std::vector<CycleSeq>& taus);
Report verify_certificate(const SimpleGraph& g, const OddCoverCert& cert);
Report verify_certificate(const SimpleGraph& g, const std::vector<EdgeSet>& linear_forests);

}  // namespace polyresolve
