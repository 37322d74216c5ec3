#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyresolve/error.hpp"
#include "polyresolve/instances.hpp"
#include "polyresolve/odd_cover.hpp"
#include "polyresolve/oracles.hpp"

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

EdgeSet cyc(std::vector<int> order) { return cycle_edges(order); }

int meets(Edge e, const std::vector<int>& v) { return has_vertex(v, e.u) + has_vertex(v, e.v); }

int common(const TransversalPair& tp) {
  return static_cast<int>(vertex_intersection(vertex_set(tp.m1), vertex_set(tp.m2)).size());
}

void check_triple(const EdgeSet& h1, const EdgeSet& h2, const ForestTriple& t) {
  for (const EdgeSet* f : {&t.f1, &t.f2, &t.f3}) CHECK(is_linear_forest_shape(classify(*f)));
  const std::vector<EdgeSet> parts{t.f1, t.f2, t.f3};
  CHECK(symmetric_difference(parts) == set_union(h1, h2));
}

}  // namespace

TEST_CASE("forest statistics") {
  const ForestTriple k3 = forest_stats({{0, 1}}, {{1, 2}}, {{0, 2}});
  CHECK(k3.stats.r12.size() == 1);
  CHECK(k3.stats.r13.size() == 1);
  CHECK(k3.stats.r23.size() == 1);
  CHECK(k3.stats.t1.size() == 1);
  CHECK(k3.stats.t2.size() == 1);
  CHECK(k3.stats.t3.size() == 1);
  CHECK(k3.stats.parity == 1);

  const ForestTriple none = forest_stats({}, {}, {});
  CHECK(none.stats.r_sum() == 0);
  CHECK(none.stats.parity == 0);

  // Two triangles split the same way give even counts.
  const ForestTriple two = forest_stats({{0, 1}, {3, 4}}, {{1, 2}, {4, 5}}, {{0, 2}, {3, 5}});
  CHECK(two.stats.parity == 0);
  CHECK(two.stats.r_sum() == 6);

  CHECK(code_of([] { forest_stats({{0, 1}, {1, 2}, {0, 2}}, {}, {}); }) == Errc::NotLinearForest);
}

TEST_CASE("flexible exchange") {
  const EdgeSet tri = cyc({0, 1, 2});
  const FlexibleChoice a = flexible_exchange(tri, {0}, 0, 5);
  CHECK(a.chosen_v == std::vector<int>{0});
  CHECK(a.e1 == Edge(0, 1));
  CHECK(a.e0 == Edge(1, 2));

  const FlexibleChoice b = flexible_exchange(tri, {0, 1, 2}, 0, 5);
  CHECK(b.chosen_v == std::vector<int>{1, 2, 5});
  CHECK(meets(b.e0, b.chosen_v) % 2 == 0);
  CHECK(meets(b.e1, b.chosen_v) % 2 == 1);
  CHECK(b.e1.has(0));

  const EdgeSet sq = cyc({0, 1, 2, 3});
  const FlexibleChoice c = flexible_exchange(sq, {0, 2}, 0, 7);
  CHECK(contains(sq, c.e0));
  CHECK(contains(sq, c.e1));
  CHECK(meets(c.e0, c.chosen_v) % 2 == 0);
  CHECK(meets(c.e1, c.chosen_v) == 1);

  CHECK(code_of([&] { flexible_exchange(tri, {0}, 0, 0); }) == Errc::PreconditionViolated);
}

TEST_CASE("transversals with odd intersection") {
  const EdgeSet h1 = cyc({0, 1, 2});
  const EdgeSet h2 = cyc({0, 3, 4});
  const TransversalPair tp = transversal_odd_intersection(h1, h2);
  CHECK(is_transversal(h1, tp.m1));
  CHECK(is_transversal(h2, tp.m2));
  CHECK(common(tp) == 1);
  check_triple(h1, h2, linear_forests_from_transversal(h1, h2, tp));

  const EdgeSet k1 = cyc({0, 1, 2, 3, 4});
  const EdgeSet k2 = cyc({0, 2, 4, 1, 3});
  const TransversalPair kp = transversal_odd_intersection(k1, k2);
  CHECK(common(kp) % 2 == 1);
  const ForestTriple kt = linear_forests_from_transversal(k1, k2, kp);
  check_triple(k1, k2, kt);
  CHECK(set_union(set_union(kt.f1, kt.f2), kt.f3) == complete_graph(5).edges());

  CHECK(code_of([&] { transversal_odd_intersection(h1, cyc({5, 6, 7})); }) == Errc::NoCommonVertex);
}

TEST_CASE("linear forests from disjoint squares") {
  const EdgeSet h1 = cyc({0, 1, 2, 3});
  const EdgeSet h2 = cyc({4, 5, 6, 7});
  const TransversalPair tp{{{0, 1}}, {{4, 5}}};
  const ForestTriple t = linear_forests_from_transversal(h1, h2, tp);
  check_triple(h1, h2, t);
  CHECK(classify(t.f3) == Shape::Path);
  CHECK(t.f1 == set_minus(h1, tp.m1));

  const ForestTriple empty = linear_forests_from_transversal({}, {}, {});
  CHECK(empty.f1.empty());
  CHECK(empty.f2.empty());
  CHECK(empty.f3.empty());
  CHECK(code_of([&] { linear_forests_from_transversal(h1, h2, {{{1, 2}}, {}}); }) == Errc::NotTransversal);
  CHECK(code_of([&] { linear_forests_from_transversal(h1, h1, tp); }) == Errc::NotEdgeDisjoint);
}

TEST_CASE("transversals with even intersection") {
  // h1 = two triangles, h2 = two triangles, crossing in both pairs.
  const EdgeSet h1 = set_union(cyc({0, 1, 2}), cyc({3, 4, 5}));
  const EdgeSet h2 = set_union(cyc({0, 6, 7}), cyc({3, 8, 9}));
  CHECK(has_crossing_pair(h1, h2));
  const EvenTransversal et = transversal_even_intersection(h1, h2);
  CHECK(is_transversal(h1, et.pair.m1));
  CHECK(is_transversal(h2, et.pair.m2));
  CHECK(common(et.pair) % 2 == 0);
  CHECK(contains(et.pair.m1, Edge(et.u, et.v1)));
  CHECK(contains(et.pair.m2, Edge(et.u, et.v2)));
  CHECK_FALSE(has_vertex(vertex_set(et.pair.m2), et.v1));
  CHECK_FALSE(has_vertex(vertex_set(et.pair.m1), et.v2));

  // Rigid configuration: two alternating 4-cycles through u1, x1 and w, v.
  // h1 components {u1 v1 ...}, h2 components interleave so that only the
  // even-cycle construction applies.
  const EdgeSet r1 = set_union(cyc({0, 1, 2, 3}), cyc({4, 5, 6, 7}));
  const EdgeSet r2 = set_union(cyc({0, 8, 4, 9}), cyc({2, 10, 6, 11}));
  if (has_crossing_pair(r1, r2)) {
    const EvenTransversal rt = transversal_even_intersection(r1, r2);
    CHECK(is_transversal(r1, rt.pair.m1));
    CHECK(is_transversal(r2, rt.pair.m2));
    CHECK(common(rt.pair) % 2 == 0);
  }

  CHECK_FALSE(has_crossing_pair(cyc({0, 1, 2}), cyc({0, 3, 4})));
  CHECK(code_of([] { transversal_even_intersection(cyc({0, 1, 2}), cyc({0, 3, 4})); }) ==
        Errc::CrossingPairMissing);
}

TEST_CASE("random even transversals") {
  Rng rng(17);
  int tried = 0;
  for (int trial = 0; trial < 2000 && tried < 200; ++trial) {
    const SimpleGraph g = random_eulerian_graph(rng, 12, 4);
    const auto d = undirected_polycycle_decomposition(g);
    if (d.parts.size() != 2 || !has_crossing_pair(d.parts[0], d.parts[1])) continue;
    ++tried;
    const EvenTransversal et = transversal_even_intersection(d.parts[0], d.parts[1]);
    CHECK(is_transversal(d.parts[0], et.pair.m1));
    CHECK(is_transversal(d.parts[1], et.pair.m2));
    CHECK(common(et.pair) % 2 == 0);
    check_triple(d.parts[0], d.parts[1], linear_forests_from_transversal(d.parts[0], d.parts[1], et.pair));
  }
  CHECK(tried > 0);
}

TEST_CASE("covers for maximum degree four") {
  const SimpleGraph c5(5, cyc({0, 1, 2, 3, 4}), true);
  const OddCoverCert p5 = path_odd_cover_delta4(c5);
  CHECK(p5.parts.size() == 2);
  CHECK(check_odd_cover(c5, p5).ok);
  const OddCoverCert q5 = cycle_odd_cover_delta4(c5);
  CHECK(q5.parts.size() == 1);
  CHECK(check_odd_cover(c5, q5).ok);

  const SimpleGraph k5 = complete_graph(5);
  const OddCoverCert pk = path_odd_cover_delta4(k5);
  CHECK(pk.parts.size() == 3);
  CHECK(check_odd_cover(k5, pk).ok);

  const SimpleGraph two = example_two_k5();
  const OddCoverCert ck = cycle_odd_cover_delta4(two);
  CHECK(ck.parts.size() == 3);
  CHECK(check_odd_cover(two, ck).ok);
  CHECK(check_odd_cover(two, example_two_k5_cycle_cover()).ok);

  CHECK(path_odd_cover_delta4(SimpleGraph(4, std::vector<Edge>{})).parts.empty());
  CHECK(code_of([] { path_odd_cover_delta4(complete_graph(7)); }) == Errc::PreconditionViolated);
  CHECK(code_of([] { cycle_odd_cover_delta4(complete_graph(4)); }) == Errc::NotEulerian);

  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const SimpleGraph g = random_eulerian_graph(rng, 16, 4);
    const OddCoverCert a = path_odd_cover_delta4(g);
    const OddCoverCert b = cycle_odd_cover_delta4(g);
    CHECK(a.parts.size() <= 3);
    CHECK(b.parts.size() <= 3);
    CHECK(check_odd_cover(g, a).ok);
    CHECK(check_odd_cover(g, b).ok);
  }
}

TEST_CASE("eulerian covers") {
  Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const SimpleGraph g = random_eulerian_graph(rng, 14, 6);
    for (CoverKind kind : {CoverKind::Path, CoverKind::Cycle}) {
      const OddCoverCert c = odd_cover_eulerian(g, kind);
      CHECK(check_odd_cover(g, c).ok);
      const int bound = kind == CoverKind::Path ? path_cover_bound_eulerian(g) : cycle_cover_bound_eulerian(g);
      CHECK(static_cast<int>(c.parts.size()) <= bound);
    }
  }
  const SimpleGraph k7 = complete_graph(7);
  CHECK(path_cover_bound_eulerian(k7) == 5);
  CHECK(cycle_cover_bound_eulerian(k7) == 5);
  const SimpleGraph c4(4, cyc({0, 1, 2, 3}), true);
  CHECK(odd_cover_eulerian(c4, CoverKind::Path).parts.size() <= 2);
}

TEST_CASE("general path covers") {
  const SimpleGraph edge(2, {{0, 1}});
  CHECK(path_odd_cover_general(edge).parts.size() == 1);

  const SimpleGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const OddCoverCert s = path_odd_cover_general(star);
  CHECK(s.parts.size() <= 5);
  CHECK(check_odd_cover(star, s).ok);
  CHECK(path_cover_bound_general(star) == 5);

  const SimpleGraph pet = petersen_graph();
  const OddCoverCert pc = path_odd_cover_general(pet);
  CHECK(check_odd_cover(pet, pc).ok);
  CHECK(static_cast<int>(pc.parts.size()) <= path_cover_bound_general(pet));

  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const SimpleGraph g = random_graph(rng, 12, 0.35);
    const OddCoverCert c = path_odd_cover_general(g);
    CHECK(check_odd_cover(g, c).ok);
    CHECK(static_cast<int>(c.parts.size()) <= path_cover_bound_general(g));
  }
}

TEST_CASE("linear forest decompositions") {
  const SimpleGraph pet = petersen_graph();
  const auto parts = linear_forest_decomposition(pet);
  CHECK(parts.size() <= 3);
  CHECK(check_linear_forest_decomposition(pet, parts).ok);

  Rng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const SimpleGraph g = random_bounded_degree_graph(rng, 14, 1 + trial % 7);
    const auto lf = linear_forest_decomposition(g);
    CHECK(check_linear_forest_decomposition(g, lf).ok);
    const int de = degrees(g).delta_e;
    CHECK(static_cast<int>(lf.size()) <= (degrees(g).delta <= 4 ? 3 : (3 * de + 3) / 4));
  }
}

TEST_CASE("certificate checks reject bad covers") {
  const SimpleGraph tri(3, cyc({0, 1, 2}), true);
  const CheckResult wrong_xor = check_odd_cover(tri, {PartKind::Path, {{{0, 1}}}});
  CHECK_FALSE(wrong_xor.ok);
  const CheckResult wrong_shape = check_odd_cover(tri, {PartKind::Path, {cyc({0, 1, 2})}});
  CHECK_FALSE(wrong_shape.ok);
  CHECK_FALSE(check_odd_cover(tri, {PartKind::Cycle, {cyc({0, 1, 5})}}).ok);
  CHECK_FALSE(check_linear_forest_decomposition(tri, {cyc({0, 1, 2})}).ok);
  CHECK_FALSE(check_linear_forest_decomposition(tri, {{{0, 1}, {1, 2}}, {{0, 1}, {0, 2}}}).ok);
}
