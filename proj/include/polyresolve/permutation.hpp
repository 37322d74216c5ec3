#pragma once

// Partitions, permutations, cluster-balanced cycles and the conversions between
// resolutions and cycle decompositions.
//
// Conventions used throughout the library:
//   * Composition is right-to-left: (a * b)(x) = a(b(x)).
//   * A partition acted on by a permutation is the function composition
//     (p.after(pi))(x) = p(pi(x)).  A decomposition (s_1, ..., s_t) maps p to
//     p * s_t * ... * s_1, so s_1 is applied to positions first.
//   * A resolution (t_1, ..., t_t) replays as p_i = p_{i-1} * t_i.

#include <span>
#include <string>
#include <vector>

#include "polyresolve/graph.hpp"

namespace polyresolve {

// Ordered list of distinct items (x_1 ... x_t) denoting the cyclic permutation
// x_1 -> x_2 -> ... -> x_t -> x_1.  The empty list (or a single item) is the
// trivial cycle.
using CycleSeq = std::vector<int>;

class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidInput unless image is a bijection of 0..size-1.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int m);
  // Throws InvalidInput on repeated or out-of-range items.
  static Permutation from_cycle(int m, const CycleSeq& cycle);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[x]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  std::vector<int> support() const;
  bool is_identity() const;
  // Non-trivial cycles, each starting at its smallest item, ordered by that item.
  std::vector<CycleSeq> cycles() const;
  // True for the identity and for single cycles.
  bool is_cycle() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

// (a * b)(x) = a(b(x)).  Throws SizeMismatch.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation operator*(const Permutation& a, const Permutation& b);

class Partition {
 public:
  Partition() = default;
  // Throws InvalidInput if a cluster id is outside 0..n-1.
  Partition(int n, std::vector<int> assign);

  int m() const { return static_cast<int>(assign_.size()); }
  int n() const { return n_; }
  int operator()(int item) const { return assign_[item]; }
  const std::vector<int>& assignment() const { return assign_; }
  // Cluster sizes, indexed by cluster.
  std::vector<int> shape() const;
  // Items of each cluster, in increasing order.
  std::vector<std::vector<int>> clusters() const;

  // p.after(pi) = p * pi, i.e. x -> p(pi(x)).  Throws SizeMismatch.
  Partition after(const Permutation& pi) const;
  Partition after_cycle(const CycleSeq& cycle) const;

  bool operator==(const Partition&) const = default;

 private:
  int n_ = 0;
  std::vector<int> assign_;
};

// Cluster sizes sorted in decreasing order.
std::vector<int> sorted_shape(const Partition& p);
bool same_shape(const Partition& p, const Partition& q);

bool is_p_balanced(const Permutation& pi, const Partition& p);
bool is_p_cycle(const Permutation& sigma, const Partition& p);
// Same predicate on a cycle sequence; also checks the items are distinct.
bool is_p_cycle(const CycleSeq& sigma, const Partition& p);

// Drops trivial cycles (length <= 1) and returns the rest.
std::vector<CycleSeq> drop_trivial(std::vector<CycleSeq> cycles);
// Rotates a cycle sequence so it starts at its smallest item.
CycleSeq canonical_rotation(CycleSeq cycle);

// CDG(p, q): one arc per item j from p(j) to q(j).  Throws SizeMismatch.
Digraph cdg(const Partition& p, const Partition& q);

struct Resolution {
  Partition start;
  std::vector<CycleSeq> taus;

  bool operator==(const Resolution&) const = default;
};

// Replays the resolution and returns the final partition.  Throws
// InvalidResolution(index) on the first step that is not a cycle of the
// current partition.
Partition replay(const Partition& p, std::span<const CycleSeq> taus);

// t_i = (s_{i-1} ... s_1)^-1 s_i (s_{i-1} ... s_1).  Lengths are preserved
// (trivial cycles map to the empty sequence).  Throws NotPCycle(index).
Resolution resolution_from_decomposition(const Partition& p, std::span<const CycleSeq> sigmas);

// s_i = (t_1 ... t_{i-1}) t_i (t_1 ... t_{i-1})^-1.  Throws
// InvalidResolution(index).
std::vector<CycleSeq> decomposition_from_resolution(const Resolution& r);

struct VerifyResult {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// True iff every t_i is a cycle of the replayed partition p_{i-1} and the
// final partition equals q.  Never throws; a failure carries a reason.
VerifyResult verify_resolution(const Partition& p, const Partition& q,
                               std::span<const CycleSeq> taus);

}  // namespace polyresolve
