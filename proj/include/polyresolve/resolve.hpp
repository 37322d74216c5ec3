#pragma once

// Short resolutions between partitions with equal shapes, the lower-bound
// instance families and the progress-measure bound.

#include <string>
#include <utility>
#include <vector>

#include "polyresolve/graph.hpp"
#include "polyresolve/permutation.hpp"

namespace polyresolve {

// Two-coloring of the clusters such that every edge of both matchings has one
// endpoint in each class.  Isolated clusters go to s1.
struct ColorClasses {
  std::vector<int> s1;
  std::vector<int> s2;
};

// Errors: NotAMatching (a cluster repeated inside one matching, or a loop).
ColorClasses two_color_matchings(const EdgeSet& m1, const EdgeSet& m2, int n);

// Writes a balanced permutation as s2 * s1 with two cycles of p.  Either output
// may be trivial (empty).  Errors: NotBalanced.
std::pair<CycleSeq, CycleSeq> pcycles_from_balanced(const Partition& p, const Permutation& pi);

// For balanced pi1, pi2 with disjoint supports, returns at most three cycles
// (s1, s2, s3), listed in application order, with
// p * s3 * s2 * s1 = p * pi2 * pi1 and the same support.
// Errors: NotBalanced, SupportsOverlap.
std::vector<CycleSeq> pcycles_from_pair(const Partition& p, const Permutation& pi1,
                                        const Permutation& pi2);

// Upper bound kappa_1 + ceil(kappa_2 / 2) on the resolution length.
int resolution_length_bound(const Partition& p);

// A verified resolution of (p, q) of length at most kappa_1 + ceil(kappa_2/2),
// trivial steps dropped.  Errors: ShapeMismatch.
Resolution resolve(const Partition& p, const Partition& q);

enum class LowerBoundFamily { Even2Cycles, Odd2Cycles3Cycle };

const char* family_name(LowerBoundFamily f);

struct LowerBoundInstance {
  Partition p;
  Partition q;
  int bound = 0;
  LowerBoundFamily family = LowerBoundFamily::Even2Cycles;
};

// The disjoint-2-cycle construction for a non-increasing shape with n >= 4
// clusters: clusters (0,1), (2,3), ... exchange kappa_2, kappa_4, ... items in
// both directions; for odd n the last three clusters carry a 3-cycle of
// multiplicity kappa_n instead.  Remaining items are loops.
// Errors: BadShape.
LowerBoundInstance gen_lower_bound_instance(const std::vector<int>& shape);

// The closed-form bound of the family for a non-increasing shape.
int lower_bound_formula(const std::vector<int>& shape);

struct ProgressBound {
  int value = 0;
  // Per-step gain cap used: 3n/2 or (3n+1)/2 for the family, 2n otherwise.
  int gain_cap = 0;
  // True when CDG(p, q) belongs to the disjoint-2-cycle family, so the cap is
  // the family cap; otherwise the (weaker) generic cap is used.
  bool family_specific = false;
};

// ceil(2|S| / cap), |S| the number of non-loop CDG arcs.  Errors: ShapeMismatch.
ProgressBound progress_lower_bound(const Partition& p, const Partition& q);

// Detects the disjoint-2-cycle family (doubled 2-cycles, plus at most one
// 3-cycle when n is odd, plus loops).
bool in_lower_bound_family(const Partition& p, const Partition& q);

// Family gain cap for n clusters: 3n/2 (n even) or (3n+1)/2 (n odd).
int family_gain_cap(int n);

// Shape (3,3,3,3,3,3) instance.  Clusters 0,1,2 are A_1..A_3 and 3,4,5 are
// B_1..B_3.  Items 3(i-1)+(j-1) are a_i^j with p = B_i, q = A_i; items
// 9 + 3(i-1)+(j-1) are b_i^j with p = A_i, q = B_i.
std::pair<Partition, Partition> gen_pp36_instance();

}  // namespace polyresolve
