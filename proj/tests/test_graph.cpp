#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyresolve/error.hpp"
#include "polyresolve/graph.hpp"
#include "polyresolve/instances.hpp"

using namespace polyresolve;

namespace {

SimpleGraph star3() { return SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}}); }

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::Internal;
}

}  // namespace

TEST_CASE("degree summary") {
  const DegreeSummary empty = degrees(SimpleGraph(3, std::vector<Edge>{}));
  CHECK(empty.delta == 0);
  CHECK(empty.v_odd == 0);
  CHECK(empty.delta_e == 0);
  CHECK(empty.degree == std::vector<int>{0, 0, 0});

  const DegreeSummary k5 = degrees(complete_graph(5));
  CHECK(k5.delta == 4);
  CHECK(k5.v_odd == 0);
  CHECK(k5.delta_e == 4);
  CHECK(k5.degree == std::vector<int>{4, 4, 4, 4, 4});

  const DegreeSummary star = degrees(star3());
  CHECK(star.delta == 3);
  CHECK(star.v_odd == 4);
  CHECK(star.delta_e == 4);
  CHECK(star.degree == std::vector<int>{3, 1, 1, 1});
}

TEST_CASE("edge sets are canonical") {
  CHECK(Edge(3, 1) == Edge(1, 3));
  const EdgeSet s = make_edge_set({{2, 1}, {0, 1}, {1, 2}});
  CHECK(s == EdgeSet{{0, 1}, {1, 2}});
  CHECK(code_of([] { make_edge_set({{1, 1}}); }) == Errc::InvalidInput);
  CHECK(code_of([] { SimpleGraph(2, {{0, 2}}); }) == Errc::InvalidInput);
  CHECK(vertex_set({{4, 2}, {2, 7}}) == std::vector<int>{2, 4, 7});
  CHECK(vertex_bound({}) == 0);
  CHECK(vertex_bound({{4, 2}}) == 5);
}

TEST_CASE("symmetric difference") {
  const std::vector<EdgeSet> cancel{{{0, 1}}, {{0, 1}}};
  CHECK(symmetric_difference(cancel).empty());
  const std::vector<EdgeSet> two{{{0, 1}, {1, 2}}, {{1, 2}, {0, 2}}};
  CHECK(symmetric_difference(two) == EdgeSet{{0, 1}, {0, 2}});
  const OddCoverCert three = example_two_k5_cycle_cover();
  CHECK(symmetric_difference(three.parts) == example_two_k5().edges());
}

TEST_CASE("shape classification") {
  CHECK(classify({}) == Shape::Empty);
  CHECK(classify({{0, 1}, {1, 2}}) == Shape::Path);
  CHECK(classify({{0, 1}, {1, 2}, {0, 2}}) == Shape::Cycle);
  CHECK(classify({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}) == Shape::Polycycle);
  CHECK(classify({{0, 1}, {2, 3}}) == Shape::LinearForest);
  CHECK(classify(star3().edges()) == Shape::Other);
  CHECK(classify({{0, 1}, {1, 2}, {0, 2}, {3, 4}}) == Shape::Other);
  CHECK(code_of([] { classify({{0, 5}}, 3); }) == Errc::InvalidInput);
  CHECK(is_polycycle_shape(Shape::Empty));
  CHECK(is_linear_forest_shape(Shape::Path));
  CHECK_FALSE(is_linear_forest_shape(Shape::Cycle));
}

TEST_CASE("cycle and path orders") {
  const std::vector<int> walk{3, 0, 2, 1};
  const EdgeSet c = cycle_edges(walk);
  CHECK(cycle_order(c) == std::vector<int>{0, 2, 1, 3});
  const std::vector<int> pw{4, 1, 3};
  CHECK(path_order(path_edges(pw)) == std::vector<int>{3, 1, 4});
  CHECK(edge_components({{5, 6}, {0, 1}, {1, 2}}).size() == 2);
}

TEST_CASE("eulerian orientation") {
  const std::vector<int> c4{0, 1, 2, 3};
  const Digraph d4 = eulerian_orientation(SimpleGraph(4, cycle_edges(c4), true));
  CHECK(d4.m() == 4);
  CHECK(d4.out_degrees() == std::vector<int>{1, 1, 1, 1});
  CHECK(d4.in_degrees() == std::vector<int>{1, 1, 1, 1});

  CHECK(eulerian_orientation(SimpleGraph(3, std::vector<Edge>{})).m() == 0);

  const SimpleGraph k5 = complete_graph(5);
  const Digraph dk5 = eulerian_orientation(k5);
  CHECK(dk5.out_degrees() == std::vector<int>(5, 2));
  CHECK(dk5.in_degrees() == std::vector<int>(5, 2));
  for (int e = 0; e < dk5.m(); ++e) CHECK(Edge(dk5.tail(e), dk5.head(e)) == k5.edges()[e]);

  CHECK(code_of([] { eulerian_orientation(star3()); }) == Errc::NotEulerian);
}

TEST_CASE("random eulerian orientations balance degrees") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const SimpleGraph g = random_eulerian_graph(rng, 12, 6);
    CHECK(is_eulerian(g));
    CHECK(degrees(g).delta == 6);
    const Digraph d = eulerian_orientation(g);
    CHECK(d.is_eulerian());
    CHECK(d.out_degrees() == d.in_degrees());
  }
}

TEST_CASE("digraph validation") {
  CHECK(code_of([] { Digraph(2, {0}, {0, 1}); }) == Errc::SizeMismatch);
  CHECK(code_of([] { Digraph(2, {0}, {2}); }) == Errc::InvalidInput);
  const Digraph loop(1, {0}, {0});
  CHECK(loop.is_loop(0));
  CHECK(loop.is_eulerian());
}
