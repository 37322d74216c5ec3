#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyresolve/error.hpp"
#include "polyresolve/instances.hpp"
#include "polyresolve/permutation.hpp"

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

// Random cycle of p with 2..n items, one per chosen cluster.
CycleSeq random_p_cycle(Rng& rng, const Partition& p) {
  auto clusters = p.clusters();
  std::vector<int> order(clusters.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::shuffle(order.begin(), order.end(), rng);
  const int len = std::uniform_int_distribution<int>(2, p.n())(rng);
  CycleSeq c;
  for (int cl : order) {
    if (static_cast<int>(c.size()) == len) break;
    const auto& items = clusters[cl];
    c.push_back(items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)]);
  }
  return c;
}

}  // namespace

TEST_CASE("composition is right to left") {
  const Permutation a = Permutation::from_cycle(3, {0, 1});
  const Permutation b = Permutation::from_cycle(3, {1, 2});
  const Permutation ab = a * b;
  CHECK(ab(0) == 1);
  CHECK(ab(1) == 2);
  CHECK(ab(2) == 0);
  CHECK(Permutation::identity(3) * a == a);
  CHECK(a * a.inverse() == Permutation::identity(3));
  CHECK(code_of([&] { compose(a, Permutation::identity(4)); }) == Errc::SizeMismatch);
  CHECK(code_of([] { Permutation({0, 0}); }) == Errc::InvalidInput);
  CHECK(code_of([] { Permutation::from_cycle(3, {0, 0}); }) == Errc::InvalidInput);
}

TEST_CASE("cycle structure") {
  const Permutation p = Permutation::from_cycle(6, {4, 2, 5});
  CHECK(p.cycles() == std::vector<CycleSeq>{{2, 5, 4}});
  CHECK(p.support() == std::vector<int>{2, 4, 5});
  CHECK(p.is_cycle());
  CHECK(Permutation::identity(4).is_cycle());
  CHECK_FALSE((Permutation::from_cycle(4, {0, 1}) * Permutation::from_cycle(4, {2, 3})).is_cycle());
  CHECK(canonical_rotation({5, 3, 4}) == CycleSeq{3, 4, 5});
  CHECK(drop_trivial({{}, {1}, {1, 2}}) == std::vector<CycleSeq>{{1, 2}});
}

TEST_CASE("balanced permutations and cycles of a partition") {
  const Partition p(4, {0, 1, 2, 3, 0, 1, 2, 3});
  CHECK(is_p_balanced(Permutation::identity(8), p));
  CHECK(is_p_cycle(Permutation::identity(8), p));
  CHECK(is_p_cycle(Permutation::from_cycle(8, {0, 1, 2, 3}), p));
  CHECK_FALSE(is_p_cycle(Permutation::from_cycle(8, {0, 4}), p));
  const Partition same(1, {0, 0});
  CHECK_FALSE(is_p_balanced(Permutation::from_cycle(2, {0, 1}), same));
  CHECK_FALSE(is_p_cycle(CycleSeq{0, 1, 0}, p));
  CHECK_FALSE(is_p_cycle(Permutation::from_cycle(8, {0, 1}) * Permutation::from_cycle(8, {2, 3}), p));
  CHECK(is_p_balanced(Permutation::from_cycle(8, {0, 1}) * Permutation::from_cycle(8, {2, 3}), p));
}

TEST_CASE("partition actions and shapes") {
  const Partition p(3, {0, 0, 1, 2});
  CHECK(p.shape() == std::vector<int>{2, 1, 1});
  CHECK(sorted_shape(Partition(3, {2, 1, 1, 1})) == std::vector<int>{3, 1, 0});
  const Partition moved = p.after_cycle({1, 2});
  CHECK(moved.assignment() == std::vector<int>{0, 1, 0, 2});
  CHECK(same_shape(p, moved));
  CHECK(code_of([] { Partition(2, {0, 2}); }) == Errc::InvalidInput);
}

TEST_CASE("cluster difference graph") {
  const auto [p, q] = example_small_cdg();
  const Digraph g = cdg(p, q);
  CHECK(g.m() == 9);
  int loops = 0;
  for (int e = 0; e < g.m(); ++e) loops += g.is_loop(e);
  CHECK(loops == 1);
  CHECK(g.is_loop(8));
  CHECK(g.tail(8) == 3);
  CHECK(g.is_eulerian());

  const Digraph id = cdg(p, p);
  for (int e = 0; e < id.m(); ++e) CHECK(id.is_loop(e));

  const Partition a(2, {0, 0, 1, 1});
  const Partition b(2, {1, 1, 0, 0});
  const Digraph two = cdg(a, b);
  CHECK(two.tails() == std::vector<int>{0, 0, 1, 1});
  CHECK(two.heads() == std::vector<int>{1, 1, 0, 0});
}

TEST_CASE("decomposition to resolution") {
  const Partition p(3, {0, 1, 2});
  const std::vector<CycleSeq> sigmas{{0, 1}, {0, 2}};
  const Resolution r = resolution_from_decomposition(p, sigmas);
  REQUIRE(r.taus.size() == 2);
  CHECK(canonical_rotation(r.taus[0]) == CycleSeq{0, 1});
  CHECK(canonical_rotation(r.taus[1]) == CycleSeq{1, 2});
  const Permutation t1 = Permutation::from_cycle(3, r.taus[0]);
  const Permutation t2 = Permutation::from_cycle(3, r.taus[1]);
  const Permutation s1 = Permutation::from_cycle(3, sigmas[0]);
  const Permutation s2 = Permutation::from_cycle(3, sigmas[1]);
  CHECK(t1 * t2 == s2 * s1);
  CHECK((s2 * s1).is_cycle());
  const auto back = decomposition_from_resolution(r);
  REQUIRE(back.size() == 2);
  CHECK(canonical_rotation(back[0]) == CycleSeq{0, 1});
  CHECK(canonical_rotation(back[1]) == CycleSeq{0, 2});

  const std::vector<CycleSeq> one{{2, 0}};
  CHECK(resolution_from_decomposition(p, one).taus == one);
  CHECK(resolution_from_decomposition(p, std::vector<CycleSeq>{}).taus.empty());
  const std::vector<CycleSeq> bad{{0, 1}, {0, 0}};
  CHECK(code_of([&] { resolution_from_decomposition(p, bad); }) == Errc::NotPCycle);
}

TEST_CASE("random round trips preserve the final partition") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto [p, unused] = random_instance(rng, 20, 7);
    std::vector<CycleSeq> sigmas;
    Permutation prod = Permutation::identity(p.m());
    for (int i = 0; i < 5; ++i) {
      sigmas.push_back(random_p_cycle(rng, p));
      prod = Permutation::from_cycle(p.m(), sigmas.back()) * prod;
    }
    const Resolution r = resolution_from_decomposition(p, sigmas);
    const Partition target = p.after(prod);
    CHECK(replay(p, r.taus) == target);
    CHECK(verify_resolution(p, target, r.taus).ok);
    const auto back = decomposition_from_resolution(r);
    REQUIRE(back.size() == sigmas.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
      CHECK(canonical_rotation(back[i]) == canonical_rotation(sigmas[i]));
    }
  }
}

TEST_CASE("verify resolution") {
  // Twelve items, each its own cluster; pi has cycles of lengths 4, 5, 3.
  std::vector<int> ident(12);
  for (int i = 0; i < 12; ++i) ident[i] = i;
  const Partition p(12, ident);
  const Permutation pi = Permutation::from_cycle(12, {0, 1, 2, 3}) * Permutation::from_cycle(12, {4, 5, 6, 7, 8}) *
                         Permutation::from_cycle(12, {9, 10, 11});
  const Partition q = p.after(pi);
  const std::vector<CycleSeq> sigmas{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, {9, 4, 0}};
  const Resolution r = resolution_from_decomposition(p, sigmas);
  CHECK(verify_resolution(p, q, r.taus).ok);

  CHECK(verify_resolution(p, p, std::vector<CycleSeq>{}).ok);
  const Partition two(2, {0, 0, 1});
  const std::vector<CycleSeq> clash{{0, 1}};
  const VerifyResult bad = verify_resolution(two, two, clash);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.reason.empty());
  CHECK(code_of([&] { replay(two, clash); }) == Errc::InvalidResolution);
}
