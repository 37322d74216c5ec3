#include "polyresolve/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <sstream>

#include "polyresolve/error.hpp"
#include "polyresolve/instances.hpp"
#include "polyresolve/odd_cover.hpp"
#include "polyresolve/oracles.hpp"
#include "polyresolve/permutation.hpp"
#include "polyresolve/resolve.hpp"

namespace polyresolve {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// Collects the first failure of a criterion.
struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  bool check(bool cond, const std::string& why) {
    if (!cond) fail(why);
    return cond;
  }
};

std::string shape_str(const std::vector<int>& shape) {
  std::string s = "(";
  for (std::size_t i = 0; i < shape.size(); ++i) s += (i ? "," : "") + std::to_string(shape[i]);
  return s + ")";
}

int ceil_div(long long a, long long b) { return static_cast<int>((a + b - 1) / b); }

Outcome upper_bound(Rng& rng) {
  Outcome o;
  const auto t0 = Clock::now();
  int longest = 0;
  for (int i = 0; i < 10000 && o.pass; ++i) {
    const auto [p, q] = random_instance(rng, 30, 10);
    const Resolution r = resolve(p, q);
    const VerifyResult v = verify_resolution(p, q, r.taus);
    o.check(v.ok, "instance " + std::to_string(i) + ": " + v.reason);
    const int bound = resolution_length_bound(p);
    o.check(static_cast<int>(r.taus.size()) <= bound, "instance " + std::to_string(i) + " exceeds the bound");
    longest = std::max(longest, static_cast<int>(r.taus.size()));
  }
  const long long ms = ms_since(t0);
  o.check(ms < 30000, "took " + std::to_string(ms) + " ms");
  if (o.pass) o.detail = "10000 instances verified within kappa1+ceil(kappa2/2), longest " + std::to_string(longest);
  return o;
}

Outcome kappa1_two(Rng& rng) {
  Outcome o;
  for (int i = 0; i < 2000 && o.pass; ++i) {
    const auto [p, q] = random_instance_with_kappa1(rng, 2, 30, 10);
    const Resolution r = resolve(p, q);
    const VerifyResult v = verify_resolution(p, q, r.taus);
    o.check(v.ok, "instance " + std::to_string(i) + ": " + v.reason);
    o.check(r.taus.size() <= 3, "instance " + std::to_string(i) + " has length " + std::to_string(r.taus.size()));
  }
  if (o.pass) o.detail = "2000 instances with kappa1 = 2 resolved in at most 3 steps";
  return o;
}

Outcome exact_diameters() {
  Outcome o;
  for (auto [shape, want] : {std::pair{std::vector<int>{1, 1, 1, 1}, 2}, std::pair{std::vector<int>{2, 2, 2, 2}, 3}}) {
    const auto t0 = Clock::now();
    const int d = exact_diameter_bfs(shape);
    const long long ms = ms_since(t0);
    o.check(d == want, "diameter of " + shape_str(shape) + " is " + std::to_string(d));
    o.check(ms < 10000, shape_str(shape) + " took " + std::to_string(ms) + " ms");
  }
  if (o.pass) o.detail = "PP(1,1,1,1) = 2, PP(2,2,2,2) = 3";
  return o;
}

// Independent evaluation of the displayed closed form (1-based indices).
int displayed_formula(const std::vector<int>& shape) {
  const int n = static_cast<int>(shape.size());
  auto kappa = [&](int i) { return static_cast<long long>(shape[i - 1]); };
  long long sum = 0;
  if (n % 2 == 0) {
    for (int i = 2; i <= n; i += 2) sum += 2 * kappa(i);
    return ceil_div(4 * sum, 3LL * n);
  }
  for (int i = 2; i <= n - 3; i += 2) sum += 2 * kappa(i);
  sum += 3 * kappa(n);
  return ceil_div(4 * sum, 3LL * n + 1);
}

void non_increasing_shapes(int n, int hi, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  const int top = cur.empty() ? hi : cur.back();
  for (int k = top; k >= 1; --k) {
    cur.push_back(k);
    non_increasing_shapes(n, hi, cur, out);
    cur.pop_back();
  }
}

Outcome lower_bound_grid() {
  Outcome o;
  int count = 0;
  for (int n = 4; n <= 11 && o.pass; ++n) {
    std::vector<std::vector<int>> shapes;
    std::vector<int> cur;
    non_increasing_shapes(n, 4, cur, shapes);
    for (const auto& shape : shapes) {
      const LowerBoundInstance inst = gen_lower_bound_instance(shape);
      const std::string tag = shape_str(shape);
      o.check(inst.bound == displayed_formula(shape), tag + ": bound differs from the closed form");
      o.check(progress_lower_bound(inst.p, inst.q).value == inst.bound, tag + ": progress bound differs");
      const Resolution r = resolve(inst.p, inst.q);
      o.check(verify_resolution(inst.p, inst.q, r.taus).ok, tag + ": resolution does not verify");
      o.check(static_cast<int>(r.taus.size()) >= inst.bound, tag + ": resolution shorter than the bound");
      ++count;
      if (!o.pass) break;
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " shapes: bound matches the closed form and every resolution respects it";
  return o;
}

Outcome pp36() {
  Outcome o;
  const auto [p, q] = gen_pp36_instance();
  const Resolution r = resolve(p, q);
  o.check(verify_resolution(p, q, r.taus).ok, "resolution does not verify");
  o.check(r.taus.size() <= 5, "resolution has length " + std::to_string(r.taus.size()));
  const auto t0 = Clock::now();
  const PrunedSearchResult s = pruned_search(p, q, 4, true);
  const long long ms = ms_since(t0);
  o.check(s.no_short_resolution, "pruned search found a resolution of length 4");
  o.check(ms < 600000, "pruned search took " + std::to_string(ms) + " ms");
  if (o.pass) {
    o.detail = "resolution of length " + std::to_string(r.taus.size()) + "; no resolution of length <= 4 (" +
               std::to_string(s.nodes) + " states); diameter 5";
  }
  return o;
}

Outcome delta4_covers(Rng& rng) {
  Outcome o;
  const auto t0 = Clock::now();
  std::uniform_int_distribution<int> size(5, 16);
  for (int i = 0; i < 500 && o.pass; ++i) {
    const SimpleGraph g = random_eulerian_graph(rng, size(rng), 4);
    const OddCoverCert pc = path_odd_cover_delta4(g);
    const OddCoverCert cc = cycle_odd_cover_delta4(g);
    const std::string tag = "graph " + std::to_string(i);
    o.check(check_odd_cover(g, pc).ok && pc.parts.size() <= 3, tag + ": path cover fails");
    o.check(check_odd_cover(g, cc).ok && cc.parts.size() <= 3, tag + ": cycle cover fails");
  }
  const long long ms = ms_since(t0);
  o.check(ms < 60000, "took " + std::to_string(ms) + " ms");
  if (o.pass) o.detail = "500 graphs: path and cycle odd-covers with at most 3 parts, all verified";
  return o;
}

Outcome two_k5() {
  Outcome o;
  const SimpleGraph g = example_two_k5();
  const OddCoverCert c = cycle_odd_cover_delta4(g);
  o.check(check_odd_cover(g, c).ok, "constructed cover does not verify");
  o.check(c.parts.size() == 3, "cover has " + std::to_string(c.parts.size()) + " parts");
  o.check(check_odd_cover(g, example_two_k5_cycle_cover()).ok, "reference three-cycle cover does not verify");
  o.check(!is_hamiltonian(g), "two disjoint K5 reported Hamiltonian");
  const DegreeSummary d = degrees(g);
  o.check(static_cast<int>(g.edge_count()) == 20 && 2 * 20 == d.delta * g.n(), "edge count is not Delta n / 2");
  if (o.pass) {
    o.detail =
        "3-cycle cover verified; not Hamiltonian and |E| = 20 = Delta n / 2, so no 2-cycle odd-cover exists";
  }
  return o;
}

Outcome eulerian_bounds(Rng& rng) {
  Outcome o;
  int count = 0;
  for (int delta : {2, 4, 6, 8}) {
    std::uniform_int_distribution<int> size(delta + 1, 16);
    for (int i = 0; i < 50 && o.pass; ++i, ++count) {
      const SimpleGraph g = random_eulerian_graph(rng, size(rng), delta);
      const OddCoverCert pc = odd_cover_eulerian(g, CoverKind::Path);
      const OddCoverCert cc = odd_cover_eulerian(g, CoverKind::Cycle);
      const std::string tag = "Delta " + std::to_string(delta) + " graph " + std::to_string(i);
      o.check(check_odd_cover(g, pc).ok, tag + ": path cover does not verify");
      o.check(check_odd_cover(g, cc).ok, tag + ": cycle cover does not verify");
      o.check(static_cast<int>(pc.parts.size()) <= (3 * delta + 3) / 4, tag + ": path cover too large");
      o.check(static_cast<int>(cc.parts.size()) <= cycle_cover_bound_eulerian(g), tag + ": cycle cover too large");
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " graphs within ceil(3 Delta/4) paths and d1/2+ceil(d2/4) cycles";
  return o;
}

int trivial_bound(const SimpleGraph& g) {
  const DegreeSummary d = degrees(g);
  return std::max(d.v_odd / 2, (d.delta + 1) / 2);
}

// Compares oracle and construction on one small graph.
void compare_with_oracle(const SimpleGraph& g, unsigned mask, bool construct, Outcome& o) {
  const int k = g.n();
  const auto& paths = odd_cover_distance_table(k, CoverKind::Path);
  const int opt_path = paths[mask];
  const std::string tag = "graph " + std::to_string(mask) + " on " + std::to_string(k) + " vertices";
  o.check(opt_path != 255 && opt_path >= trivial_bound(g), tag + ": path optimum below the trivial bound");
  const bool eulerian = is_eulerian(g);
  int opt_cycle = 255;
  if (eulerian) {
    opt_cycle = odd_cover_distance_table(k, CoverKind::Cycle)[mask];
    o.check(opt_cycle != 255 && opt_cycle >= trivial_bound(g), tag + ": cycle optimum below the trivial bound");
  }
  if (!construct) return;
  const OddCoverCert pc = path_odd_cover_general(g);
  o.check(check_odd_cover(g, pc).ok, tag + ": path cover does not verify");
  o.check(static_cast<int>(pc.parts.size()) >= opt_path, tag + ": path cover beats the oracle optimum");
  if (eulerian) {
    const OddCoverCert cc = odd_cover_eulerian(g, CoverKind::Cycle);
    o.check(check_odd_cover(g, cc).ok, tag + ": cycle cover does not verify");
    o.check(static_cast<int>(cc.parts.size()) >= opt_cycle, tag + ": cycle cover beats the oracle optimum");
  }
}

Outcome general_graphs(Rng& rng) {
  Outcome o;
  std::uniform_int_distribution<int> size(2, 14);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int i = 0; i < 500 && o.pass; ++i) {
    const SimpleGraph g = random_graph(rng, size(rng), density(rng));
    const OddCoverCert c = path_odd_cover_general(g);
    o.check(check_odd_cover(g, c).ok, "random graph " + std::to_string(i) + ": cover does not verify");
    o.check(static_cast<int>(c.parts.size()) <= path_cover_bound_general(g),
            "random graph " + std::to_string(i) + ": cover exceeds v_odd/2 + ceil(3 Delta_e/4)");
  }
  // Every labeled graph on up to 6 vertices: oracle and construction.
  long long exhaustive = 0;
  for (int k = 1; k <= 6 && o.pass; ++k) {
    const unsigned total = 1u << (k * (k - 1) / 2);
    for (unsigned mask = 0; mask < total && o.pass; ++mask, ++exhaustive) {
      compare_with_oracle(graph_from_mask(k, mask), mask, true, o);
    }
  }
  // Every labeled graph on 7 vertices, same checks.
  for (unsigned mask = 0; mask < (1u << 21) && o.pass; ++mask, ++exhaustive) {
    compare_with_oracle(graph_from_mask(7, mask), mask, true, o);
  }
  if (o.pass) {
    o.detail = "500 random graphs within v_odd/2 + ceil(3 Delta_e/4); all " + std::to_string(exhaustive) +
               " labeled graphs on <= 7 vertices: optimum >= trivial bound, constructions verified and never "
               "below the optimum";
  }
  return o;
}

Outcome linear_arboricity(Rng& rng) {
  Outcome o;
  std::uniform_int_distribution<int> size(5, 16);
  int done = 0;
  while (done < 200 && o.pass) {
    const SimpleGraph g = random_bounded_degree_graph(rng, size(rng), 4);
    if (degrees(g).delta != 4) continue;
    const auto forests = linear_forest_decomposition(g);
    const CheckResult c = check_linear_forest_decomposition(g, forests);
    o.check(c.ok, "graph " + std::to_string(done) + ": " + c.reason);
    o.check(forests.size() <= 3, "graph " + std::to_string(done) + " needs " + std::to_string(forests.size()));
    ++done;
  }
  if (o.pass) o.detail = "200 graphs with Delta = 4 split into at most 3 edge-disjoint linear forests";
  return o;
}

CycleSeq random_p_cycle(Rng& rng, const Partition& p) {
  auto clusters = p.clusters();
  std::vector<int> nonempty;
  for (int c = 0; c < p.n(); ++c) {
    if (!clusters[c].empty()) nonempty.push_back(c);
  }
  std::shuffle(nonempty.begin(), nonempty.end(), rng);
  const int len = std::uniform_int_distribution<int>(2, static_cast<int>(nonempty.size()))(rng);
  CycleSeq cyc;
  for (int i = 0; i < len; ++i) {
    const auto& items = clusters[nonempty[i]];
    cyc.push_back(items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)]);
  }
  return cyc;
}

bool prefix_identity(int m, const std::vector<CycleSeq>& taus, const std::vector<CycleSeq>& sigmas) {
  Permutation t = Permutation::identity(m), s = Permutation::identity(m);
  for (std::size_t i = 0; i < taus.size(); ++i) {
    t = t * Permutation::from_cycle(m, taus[i]);
    s = Permutation::from_cycle(m, sigmas[i]) * s;
    if (t != s) return false;
  }
  return true;
}

Outcome round_trip(Rng& rng) {
  Outcome o;
  std::uniform_int_distribution<int> steps(1, 6);
  for (int i = 0; i < 1000 && o.pass; ++i) {
    const auto [p, q] = random_instance(rng, 20, 8);
    const std::string tag = "sample " + std::to_string(i);
    // Decomposition -> resolution -> decomposition.
    std::vector<CycleSeq> sigmas;
    const int d = steps(rng);
    for (int k = 0; k < d; ++k) sigmas.push_back(random_p_cycle(rng, p));
    const Resolution r = resolution_from_decomposition(p, sigmas);
    o.check(prefix_identity(p.m(), r.taus, sigmas), tag + ": prefix identity fails");
    o.check(decomposition_from_resolution(r) == sigmas, tag + ": decomposition does not round-trip");
    // Resolution (a random walk) -> decomposition -> resolution.
    Resolution walk{p, {}};
    Partition cur = p;
    for (int k = 0; k < d; ++k) {
      walk.taus.push_back(random_p_cycle(rng, cur));
      cur = cur.after_cycle(walk.taus.back());
    }
    const auto back = decomposition_from_resolution(walk);
    o.check(prefix_identity(p.m(), walk.taus, back), tag + ": prefix identity fails on the walk");
    o.check(resolution_from_decomposition(p, back) == walk, tag + ": resolution does not round-trip");
  }
  if (o.pass) o.detail = "1000 decompositions and 1000 resolutions round-trip with every prefix identity holding";
  return o;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  struct Entry {
    int id;
    const char* name;
    std::function<Outcome(Rng&)> run;
  };
  const std::vector<Entry> entries{
      {1, "resolution upper bound", upper_bound},
      {2, "kappa1 = 2 bound", kappa1_two},
      {3, "exact diameters", [](Rng&) { return exact_diameters(); }},
      {4, "lower-bound family grid", [](Rng&) { return lower_bound_grid(); }},
      {5, "PP(3,3,3,3,3,3) diameter 5", [](Rng&) { return pp36(); }},
      {6, "Delta = 4 odd-covers", delta4_covers},
      {7, "two disjoint K5", [](Rng&) { return two_k5(); }},
      {8, "general Eulerian bounds", eulerian_bounds},
      {9, "general graphs and exhaustive oracle", general_graphs},
      {10, "linear arboricity for Delta = 4", linear_arboricity},
      {11, "decomposition/resolution round-trip", round_trip},
  };
  std::vector<CriterionResult> out;
  for (const Entry& e : entries) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), e.id) == opts.only.end()) continue;
    Rng rng(opts.seed + static_cast<std::uint64_t>(e.id));
    CriterionResult r{e.id, e.name, false, "", 0};
    const auto t0 = Clock::now();
    try {
      const Outcome o = e.run(rng);
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.elapsed_ms = ms_since(t0);
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << ": " << r.detail << " (" << r.elapsed_ms
     << " ms)";
  return os.str();
}

}  // namespace polyresolve
