#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyresolve/error.hpp"
#include "polyresolve/instances.hpp"
#include "polyresolve/polycycle.hpp"

using namespace polyresolve;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::Internal;
}

// Every non-loop arc appears in exactly one part and every part is a polycycle.
void check_directed(const Digraph& g, const DirectedDecomposition& d) {
  std::vector<int> seen(g.m(), 0);
  for (const auto& part : d.parts) {
    CHECK(is_directed_polycycle(g, part));
    for (int a : part) ++seen[a];
  }
  for (int e = 0; e < g.m(); ++e) CHECK(seen[e] == (g.is_loop(e) ? 0 : 1));
}

void check_undirected(const SimpleGraph& g, const UndirectedDecomposition& d) {
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    CHECK(is_polycycle_shape(classify(d.parts[i])));
    for (std::size_t j = i + 1; j < d.parts.size(); ++j) CHECK(edge_disjoint(d.parts[i], d.parts[j]));
  }
  EdgeSet all;
  for (const auto& part : d.parts) all = set_union(all, part);
  CHECK(all == g.edges());
}

}  // namespace

TEST_CASE("directed polycycle decompositions") {
  const Digraph tri(3, {0, 1, 2}, {1, 2, 0});
  const auto d1 = directed_polycycle_decomposition(tri, 1);
  REQUIRE(d1.parts.size() == 1);
  CHECK(d1.parts[0].size() == 3);

  const Digraph doubled(2, {0, 0, 1, 1}, {1, 1, 0, 0});
  const auto d2 = directed_polycycle_decomposition(doubled, 2);
  REQUIRE(d2.parts.size() == 2);
  for (const auto& part : d2.parts) CHECK(part.size() == 2);
  check_directed(doubled, d2);

  CHECK(code_of([] { directed_polycycle_decomposition(Digraph(2, {0}, {1})); }) == Errc::NotEulerian);
  CHECK(code_of([&] { directed_polycycle_decomposition(doubled, 3); }) == Errc::PreconditionViolated);
}

TEST_CASE("suffix cycles through the largest cluster") {
  // Shape (3,2,2): cluster 0 sends one item to each of 1 and 2 and keeps a
  // 2-cycle with cluster 1 on top.
  const Partition p(3, {0, 0, 0, 1, 1, 2, 2});
  const Partition q(3, {1, 2, 1, 0, 0, 0, 2});
  const Digraph g = cdg(p, q);
  const auto d = directed_polycycle_decomposition(g, 2);
  CHECK(d.parts.size() == 3);
  CHECK(d.cycle_suffix_len == 1);
  check_directed(g, d);
  const auto& last = d.parts.back();
  bool through0 = false;
  for (int a : last) through0 = through0 || g.tail(a) == 0;
  CHECK(through0);
  std::vector<int> tails;
  for (int a : last) tails.push_back(g.tail(a));
  std::sort(tails.begin(), tails.end());
  CHECK(std::adjacent_find(tails.begin(), tails.end()) == tails.end());

  // Two vertices above the threshold.
  const Digraph two_big(2, {0, 0, 0, 1, 1, 1}, {1, 1, 1, 0, 0, 0});
  CHECK(code_of([&] { directed_polycycle_decomposition(two_big, 2); }) == Errc::ThresholdViolated);
}

TEST_CASE("random cluster difference graphs decompose") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto [p, q] = random_instance(rng, 30, 8);
    const Digraph g = cdg(p, q);
    const auto shape = sorted_shape(p);
    const int k2 = shape.size() > 1 ? shape[1] : 0;
    const auto d = directed_polycycle_decomposition(g, k2);
    CHECK(static_cast<int>(d.parts.size()) == shape[0]);
    check_directed(g, d);
  }
}

TEST_CASE("undirected polycycle decompositions") {
  const std::vector<int> c6{0, 1, 2, 3, 4, 5};
  const SimpleGraph cyc(6, cycle_edges(c6), true);
  const auto d6 = undirected_polycycle_decomposition(cyc);
  REQUIRE(d6.parts.size() == 1);
  CHECK(d6.parts[0] == cyc.edges());

  const SimpleGraph k5 = complete_graph(5);
  const auto dk5 = undirected_polycycle_decomposition(k5);
  REQUIRE(dk5.parts.size() == 2);
  for (const auto& part : dk5.parts) CHECK(vertex_set(part).size() == 5);
  check_undirected(k5, dk5);

  const SimpleGraph two = example_two_k5();
  const auto d2 = undirected_polycycle_decomposition(two);
  REQUIRE(d2.parts.size() == 2);
  for (const auto& part : d2.parts) CHECK(edge_components(part).size() == 2);
  check_undirected(two, d2);

  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const SimpleGraph g = random_eulerian_graph(rng, 14, 8);
    const auto d = undirected_polycycle_decomposition(g);
    CHECK(d.parts.size() == 4);
    check_undirected(g, d);
  }
}

TEST_CASE("balanced factorization") {
  const Partition p(3, {0, 1, 2});
  const auto id = balanced_permutation_factorization(p, p);
  CHECK(id.sigmas.empty());
  CHECK(id.pis.empty());

  const Partition a(2, {0, 0, 1, 1});
  const Partition b(2, {1, 1, 0, 0});
  const auto f = balanced_permutation_factorization(a, b);
  CHECK(f.sigmas.empty());
  REQUIRE(f.pis.size() == 2);
  for (const auto& pi : f.pis) {
    CHECK(pi.cycles().size() == 1);
    CHECK(pi.cycles()[0].size() == 2);
    CHECK(is_p_balanced(pi, a));
  }
  CHECK(a.after(f.pis[1] * f.pis[0]) == b);

  // Shape (2,1,1): cluster 0 sends one item to each of clusters 1 and 2, and
  // both send theirs back.
  const Partition c(3, {0, 0, 1, 2});
  const Partition d(3, {1, 2, 0, 0});
  const auto g = balanced_permutation_factorization(c, d);
  CHECK(g.sigmas.size() == 1);
  CHECK(g.pis.size() == 1);
  Permutation prod = Permutation::identity(4);
  for (const auto& s : g.sigmas) prod = Permutation::from_cycle(4, s) * prod;
  Permutation pis = Permutation::identity(4);
  for (const auto& pi : g.pis) pis = pi * pis;
  CHECK(c.after(prod * pis) == d);

  CHECK(code_of([] { balanced_permutation_factorization(Partition(2, {0, 0}), Partition(2, {0, 1})); }) ==
        Errc::ShapeMismatch);
}

TEST_CASE("random factorizations replay") {
  Rng rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const auto [p, q] = random_instance(rng, 30, 8);
    const auto f = balanced_permutation_factorization(p, q);
    const auto shape = sorted_shape(p);
    const int k2 = shape.size() > 1 ? shape[1] : 0;
    CHECK(static_cast<int>(f.sigmas.size()) <= shape[0] - k2);
    CHECK(static_cast<int>(f.pis.size()) <= k2);
    Permutation total = Permutation::identity(p.m());
    std::vector<int> used(p.m(), 0);
    for (const auto& pi : f.pis) {
      CHECK(is_p_balanced(pi, p));
      for (int x : pi.support()) ++used[x];
      total = pi * total;
    }
    for (const auto& s : f.sigmas) {
      CHECK(is_p_cycle(s, p));
      for (int x : s) ++used[x];
      total = Permutation::from_cycle(p.m(), s) * total;
    }
    for (int u : used) CHECK(u <= 1);
    CHECK(p.after(total) == q);
  }
}

TEST_CASE("odd-covers of one polycycle") {
  const std::vector<int> t{0, 1, 2};
  const EdgeSet tri = cycle_edges(t);
  const auto cyc = polycycle_odd_cover(tri, CoverKind::Cycle);
  REQUIRE(cyc.size() == 1);
  CHECK(cyc[0] == tri);
  const auto paths = polycycle_odd_cover(tri, CoverKind::Path);
  REQUIRE(paths.size() == 2);
  for (const auto& part : paths) CHECK(classify(part) == Shape::Path);
  CHECK(symmetric_difference(paths) == tri);

  // Three components: a triangle, a square and a pentagon.
  const std::vector<int> sq{3, 4, 5, 6};
  const std::vector<int> pent{7, 8, 9, 10, 11};
  const EdgeSet h = set_union(set_union(tri, cycle_edges(sq)), cycle_edges(pent));
  for (CoverKind kind : {CoverKind::Path, CoverKind::Cycle}) {
    const auto cover = polycycle_odd_cover(h, kind);
    REQUIRE(cover.size() == 2);
    for (const auto& part : cover) {
      CHECK(classify(part) == (kind == CoverKind::Path ? Shape::Path : Shape::Cycle));
    }
    CHECK(symmetric_difference(cover) == h);
  }
  CHECK(polycycle_odd_cover({}, CoverKind::Path).empty());
  CHECK(code_of([] { polycycle_odd_cover({{0, 1}}, CoverKind::Path); }) == Errc::NotPolycycle);
}
