#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyresolve/error.hpp"
#include "polyresolve/instances.hpp"
#include "polyresolve/oracles.hpp"
#include "polyresolve/resolve.hpp"

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

SimpleGraph cycle_graph(int n, std::vector<int> order) { return SimpleGraph(n, cycle_edges(order), true); }

}  // namespace

TEST_CASE("exact diameters") {
  CHECK(exact_diameter_bfs({2, 2}) == 2);
  CHECK(exact_diameter_bfs({1, 1, 1, 1}) == 2);
  CHECK(exact_diameter_bfs({2, 2, 2, 2}) == 3);
  CHECK(exact_diameter_bfs({3}) == 0);
  CHECK(exact_diameter_bfs({2, 1}) == 1);
  CHECK(code_of([] { exact_diameter_bfs({3, 3, 3, 3, 3, 3}, 1000); }) == Errc::TooLarge);
  CHECK(code_of([] { exact_diameter_bfs({}); }) == Errc::BadShape);
}

TEST_CASE("shortest resolutions") {
  const Partition a(2, {0, 0, 1, 1});
  const Partition b(2, {1, 1, 0, 0});
  CHECK(min_resolution_length(a, b) == 2);
  CHECK(min_resolution_length(a, a) == 0);
  CHECK(min_resolution_length(a, Partition(2, {1, 0, 0, 1})) == 1);
  CHECK(code_of([&] { min_resolution_length(a, Partition(2, {0, 0, 0, 1})); }) == Errc::ShapeMismatch);

  // The construction never beats the exact optimum and meets the bound.
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto [p, q] = random_instance(rng, 8, 4);
    const int best = min_resolution_length(p, q);
    const int got = static_cast<int>(resolve(p, q).taus.size());
    CHECK(best <= got);
    CHECK(got <= resolution_length_bound(p));
  }
}

TEST_CASE("move accounting bounds the progress gain") {
  Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const auto [p, q] = random_instance(rng, 16, 6);
    const Resolution r = resolve(p, q);
    Partition cur = p;
    CHECK(progress_measure(p, q, cur) == 0);
    for (const auto& tau : r.taus) {
      const MoveAccounting acc = account_moves(p, q, cur, tau);
      CHECK(acc.gain == 2 * acc.whole_moves + acc.half_moves);
      const Partition next = cur.after_cycle(tau);
      CHECK(progress_measure(p, q, next) - progress_measure(p, q, cur) <= acc.gain);
      cur = next;
    }
    int moved = 0;
    for (int x = 0; x < p.m(); ++x) moved += p(x) != q(x);
    CHECK(progress_measure(p, q, cur) == 2 * moved);
  }
}

TEST_CASE("pruned search") {
  const auto lb = gen_lower_bound_instance({2, 2, 2, 2});
  CHECK(pruned_search(lb.p, lb.q, 2, false).no_short_resolution);
  const PrunedSearchResult found = pruned_search(lb.p, lb.q, 3, false);
  CHECK_FALSE(found.no_short_resolution);
  CHECK(found.witness.size() <= 3);
  CHECK(verify_resolution(lb.p, lb.q, found.witness).ok);

  const auto [p, q] = gen_pp36_instance();
  const PrunedSearchResult fixed = pruned_search(p, q, 4, true);
  CHECK(fixed.no_short_resolution);
  CHECK(fixed.first_step_fixed);
  const PrunedSearchResult free = pruned_search(p, q, 4, false);
  CHECK(free.no_short_resolution);
  CHECK_FALSE(free.first_step_fixed);
  const PrunedSearchResult five = pruned_search(p, q, 5, false);
  CHECK_FALSE(five.no_short_resolution);
  CHECK(verify_resolution(p, q, five.witness).ok);
  CHECK(pruned_no_short_resolution(p, q, 4));

  CHECK(code_of([&] { pruned_search(Partition(4, {0, 1, 2, 3}), Partition(4, {1, 2, 3, 0}), 2, false); }) ==
        Errc::FamilyMismatch);
}

TEST_CASE("exhaustive odd-covers") {
  const SimpleGraph tri = cycle_graph(3, {0, 1, 2});
  CHECK(min_odd_cover_exhaustive(tri, CoverKind::Cycle, 4) == 1);
  CHECK(min_odd_cover_exhaustive(tri, CoverKind::Path, 4) == 2);
  const SimpleGraph p3(3, {{0, 1}, {1, 2}});
  CHECK(min_odd_cover_exhaustive(p3, CoverKind::Path, 4) == 1);
  CHECK(min_odd_cover_exhaustive(complete_graph(5), CoverKind::Path, 5) == 3);
  CHECK(min_odd_cover_exhaustive(complete_graph(5), CoverKind::Cycle, 5) == 2);
  const SimpleGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(min_odd_cover_exhaustive(star, CoverKind::Path, 5) == 2);
  CHECK(min_odd_cover_exhaustive(SimpleGraph(4, std::vector<Edge>{}), CoverKind::Path, 3) == 0);
  // An odd-degree graph has no cycle odd-cover.
  CHECK_FALSE(min_odd_cover_exhaustive(star, CoverKind::Cycle, 6).has_value());
  CHECK(min_odd_cover_exhaustive(tri, CoverKind::Path, 1) == std::nullopt);

  const auto& table = odd_cover_distance_table(4, CoverKind::Cycle);
  CHECK(table.size() == 64u);
  CHECK(table[0] == 0);
  int unreachable = 0;
  for (unsigned char d : table) unreachable += d == 255;
  // Exactly the graphs with all degrees even are reachable: 2^(6-4+1) = 8.
  CHECK(64 - unreachable == 8);
  CHECK(edge_bit(4, 0, 1) == 0);
  CHECK(edge_bit(4, 2, 3) == 5);
  CHECK(graph_from_mask(4, 1u << edge_bit(4, 1, 3)).edges() == EdgeSet{{1, 3}});

  const SimpleGraph c8 = cycle_graph(8, {0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(min_odd_cover_exhaustive(c8, CoverKind::Cycle, 4) == 1);
  CHECK(code_of([] { min_odd_cover_exhaustive(complete_graph(9), CoverKind::Path, 3); }) == Errc::TooLarge);
}

TEST_CASE("hamiltonicity") {
  CHECK(is_hamiltonian(complete_graph(5)));
  CHECK_FALSE(is_hamiltonian(petersen_graph()));
  CHECK_FALSE(is_hamiltonian(example_two_k5()));
  CHECK(is_hamiltonian(cycle_graph(6, {0, 2, 4, 1, 3, 5})));
  CHECK(code_of([] { is_hamiltonian(complete_graph(21)); }) == Errc::TooLarge);
}

TEST_CASE("certificate reports") {
  const auto [p, q] = gen_pp36_instance();
  const Report ok = verify_certificate(p, q, resolve(p, q).taus);
  CHECK(ok.pass);
  CHECK(ok.check == "resolution");
  const Report bad = verify_certificate(p, q, std::vector<CycleSeq>{});
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.detail.empty());

  const SimpleGraph two = example_two_k5();
  const Report cover = verify_certificate(two, example_two_k5_cycle_cover());
  CHECK(cover.pass);
  CHECK(cover.check == "odd_cover");
  const Report lf = verify_certificate(petersen_graph(), linear_forest_decomposition(petersen_graph()));
  CHECK(lf.pass);
  CHECK(lf.check == "linear_forest_decomposition");
}
