#include "polyresolve/resolve.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "polyresolve/error.hpp"
#include "polyresolve/polycycle.hpp"

namespace polyresolve {

ColorClasses two_color_matchings(const EdgeSet& m1, const EdgeSet& m2, int n) {
  std::vector<std::vector<int>> adj(n);
  for (const EdgeSet* m : {&m1, &m2}) {
    std::vector<char> used(n, 0);
    for (const Edge& e : *m) {
      if (e.u == e.v || e.u < 0 || e.v >= n) throw Error(Errc::NotAMatching, "invalid matching edge");
      if (used[e.u] || used[e.v]) throw Error(Errc::NotAMatching, "a cluster is covered twice by one matching");
      used[e.u] = used[e.v] = 1;
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  }
  // The union of two matchings has only even cycles, so BFS 2-colors it.
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          q.push(w);
        }
        ensure(color[w] != color[v], "union of two matchings has an odd cycle");
      }
    }
  }
  ColorClasses cc;
  for (int v = 0; v < n; ++v) (color[v] == 0 ? cc.s1 : cc.s2).push_back(v);
  return cc;
}

std::pair<CycleSeq, CycleSeq> pcycles_from_balanced(const Partition& p, const Permutation& pi) {
  if (!is_p_balanced(pi, p)) throw Error(Errc::NotBalanced, "permutation is not balanced");
  const auto cycles = pi.cycles();
  CycleSeq s1, s2;
  for (const auto& c : cycles) s1.insert(s1.end(), c.begin(), c.end());
  if (cycles.size() >= 2) {
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) s2.push_back(it->front());
  }
  const int m = p.m();
  ensure(is_p_cycle(s1, p) && is_p_cycle(s2, p), "split factors are not cycles of p");
  ensure(Permutation::from_cycle(m, s2) * Permutation::from_cycle(m, s1) == pi,
         "split factors do not compose to the permutation");
  return {s1, s2};
}

namespace {

CycleSeq rotate_to(CycleSeq c, int item) {
  auto it = std::find(c.begin(), c.end(), item);
  ensure(it != c.end(), "rotation target not in cycle");
  std::rotate(c.begin(), it, c.end());
  return c;
}

void check_cycles(const Partition& p, const std::vector<CycleSeq>& sigmas, const Permutation& target) {
  Permutation total = Permutation::identity(p.m());
  for (const auto& s : sigmas) {
    ensure(is_p_cycle(s, p), "constructed factor is not a cycle of p");
    total = Permutation::from_cycle(p.m(), s) * total;
  }
  ensure(total.support() == target.support(), "constructed factors change the support");
  ensure(p.after(total) == p.after(target), "constructed factors do not reproduce the moves");
}

}  // namespace

std::vector<CycleSeq> pcycles_from_pair(const Partition& p, const Permutation& pi1,
                                        const Permutation& pi2) {
  if (!is_p_balanced(pi1, p) || !is_p_balanced(pi2, p)) {
    throw Error(Errc::NotBalanced, "factor is not balanced");
  }
  const auto supp1 = pi1.support();
  const auto supp2 = pi2.support();
  if (!vertex_intersection(supp1, supp2).empty()) throw Error(Errc::SupportsOverlap, "supports intersect");
  const int m = p.m();
  const Permutation product = pi2 * pi1;

  if (is_p_balanced(product, p)) {
    auto [s1, s2] = pcycles_from_balanced(p, product);
    return drop_trivial({s1, s2});
  }

  // Pivot: lexicographically smallest (x, y) with p(x) = p(y).
  int x = -1, y = -1;
  for (int a : supp1) {
    for (int b : supp2) {
      if (p(a) == p(b)) {
        x = a;
        y = b;
        break;
      }
    }
    if (x >= 0) break;
  }
  ensure(x >= 0, "unbalanced product without a colliding pair");

  // C_1 holds x, D_s holds y; the others keep canonical order.
  std::vector<CycleSeq> cs, ds;
  for (auto& c : pi1.cycles()) {
    if (std::find(c.begin(), c.end(), x) != c.end()) {
      cs.insert(cs.begin(), rotate_to(c, x));
    } else {
      cs.push_back(c);
    }
  }
  CycleSeq d_last;
  for (auto& d : pi2.cycles()) {
    if (std::find(d.begin(), d.end(), y) != d.end()) {
      d_last = rotate_to(d, pi2(y));
    } else {
      ds.push_back(d);
    }
  }
  ds.push_back(d_last);

  // Cluster pairs e_i (from C_i) and f_i (from D_i), then a 2-coloring.
  std::vector<Edge> e_list, f_list;
  for (const auto& c : cs) e_list.emplace_back(p(c[0]), p(c[1]));
  for (const auto& d : ds) f_list.emplace_back(p(d[0]), p(d.back() == y ? d.back() : d[1]));
  const EdgeSet m1 = make_edge_set(e_list);
  const EdgeSet m2 = make_edge_set(f_list);
  ColorClasses cc = two_color_matchings(m1, m2, p.n());
  if (!has_vertex(cc.s1, p(x))) std::swap(cc.s1, cc.s2);
  for (const Edge& e : e_list) ensure(has_vertex(cc.s1, e.u) != has_vertex(cc.s1, e.v), "pair e_i not split");
  for (const Edge& f : f_list) ensure(has_vertex(cc.s1, f.u) != has_vertex(cc.s1, f.v), "pair f_i not split");

  // Rotations: C_i (i >= 2) lead with an item in S1, D_i (i < s) with one in S2.
  for (std::size_t i = 1; i < cs.size(); ++i) {
    const int lead = has_vertex(cc.s1, p(cs[i][0])) ? cs[i][0] : cs[i][1];
    cs[i] = rotate_to(cs[i], lead);
  }
  for (std::size_t i = 0; i + 1 < ds.size(); ++i) {
    const int lead = has_vertex(cc.s2, p(ds[i][0])) ? ds[i][0] : ds[i][1];
    ds[i] = rotate_to(ds[i], lead);
  }
  const std::size_t t = cs.size();
  const std::size_t s = ds.size();
  ensure(ds[s - 1].back() == y, "last D-cycle must end at the pivot");

  CycleSeq sigma1, sigma2, sigma3;
  for (const auto& c : cs) sigma1.insert(sigma1.end(), c.begin(), c.end());
  for (std::size_t i = 0; i < s; ++i) {
    const auto& d = ds[i];
    sigma2.insert(sigma2.end(), d.begin(), i + 1 == s ? d.end() - 1 : d.end());
  }
  sigma2.push_back(cs[0][0]);
  for (std::size_t i = s; i-- > 0;) sigma3.push_back(ds[i][0]);
  for (std::size_t i = t; i-- > 1;) sigma3.push_back(cs[i][0]);
  sigma3.push_back(y);

  // The three-step identity: (x y) pi2 pi1 = sigma3 sigma2 sigma1.
  const Permutation swap_xy = Permutation::from_cycle(m, {x, y});
  const Permutation composite = Permutation::from_cycle(m, sigma3) * Permutation::from_cycle(m, sigma2) *
                                Permutation::from_cycle(m, sigma1);
  ensure(swap_xy * product == composite, "three-step identity failed");
  std::vector<CycleSeq> out{sigma1, sigma2, sigma3};
  check_cycles(p, out, product);
  return out;
}

int resolution_length_bound(const Partition& p) {
  const auto shape = sorted_shape(p);
  const int k1 = shape.empty() ? 0 : shape[0];
  const int k2 = shape.size() >= 2 ? shape[1] : 0;
  return k1 + (k2 + 1) / 2;
}

Resolution resolve(const Partition& p, const Partition& q) {
  if (!same_shape(p, q)) throw Error(Errc::ShapeMismatch, "partitions have different shapes");
  if (p == q) return Resolution{p, {}};
  const BalancedFactorization f = balanced_permutation_factorization(p, q);

  // Groups have pairwise disjoint supports, so they commute; each group's
  // cycles are listed in application order.
  std::vector<CycleSeq> sigmas;
  std::size_t i = 0;
  for (; i + 1 < f.pis.size(); i += 2) {
    for (auto& c : pcycles_from_pair(p, f.pis[i], f.pis[i + 1])) sigmas.push_back(std::move(c));
  }
  if (i < f.pis.size()) {
    auto [s1, s2] = pcycles_from_balanced(p, f.pis[i]);
    sigmas.push_back(std::move(s1));
    sigmas.push_back(std::move(s2));
  }
  for (const auto& c : f.sigmas) sigmas.push_back(c);
  sigmas = drop_trivial(std::move(sigmas));

  Resolution r = resolution_from_decomposition(p, sigmas);
  r.taus = drop_trivial(std::move(r.taus));
  const VerifyResult v = verify_resolution(p, q, r.taus);
  ensure(v.ok, "constructed resolution does not verify");
  ensure(static_cast<int>(r.taus.size()) <= resolution_length_bound(p), "resolution exceeds the length bound");
  return r;
}

const char* family_name(LowerBoundFamily f) {
  return f == LowerBoundFamily::Even2Cycles ? "even2cycles" : "odd2cycles3cycle";
}

namespace {

void check_lower_bound_shape(const std::vector<int>& shape) {
  if (shape.size() < 4) throw Error(Errc::BadShape, "lower-bound family needs at least 4 clusters");
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] < 0) throw Error(Errc::BadShape, "negative cluster size");
    if (i > 0 && shape[i] > shape[i - 1]) throw Error(Errc::BadShape, "shape must be non-increasing");
  }
}

int ceil_div(long long a, long long b) { return static_cast<int>((a + b - 1) / b); }

}  // namespace

int family_gain_cap(int n) { return n % 2 == 0 ? 3 * n / 2 : (3 * n + 1) / 2; }

int lower_bound_formula(const std::vector<int>& shape) {
  check_lower_bound_shape(shape);
  const int n = static_cast<int>(shape.size());
  // 0-based: kappa_2, kappa_4, ... are shape[1], shape[3], ...
  long long arcs = 0;
  if (n % 2 == 0) {
    for (int j = 1; j < n; j += 2) arcs += 2LL * shape[j];
    return ceil_div(4 * arcs, 3LL * n);
  }
  for (int j = 1; j <= n - 4; j += 2) arcs += 2LL * shape[j];
  arcs += 3LL * shape[n - 1];
  return ceil_div(4 * arcs, 3LL * n + 1);
}

LowerBoundInstance gen_lower_bound_instance(const std::vector<int>& shape) {
  check_lower_bound_shape(shape);
  const int n = static_cast<int>(shape.size());
  std::vector<int> p_assign, q_assign;
  auto add = [&](int from, int to, int count) {
    for (int k = 0; k < count; ++k) {
      p_assign.push_back(from);
      q_assign.push_back(to);
    }
  };
  const int pair_end = n % 2 == 0 ? n : n - 3;
  for (int a = 0; a < pair_end; a += 2) {
    const int b = a + 1;
    const int mult = shape[b];
    add(a, b, mult);
    add(a, a, shape[a] - mult);
    add(b, a, mult);
  }
  if (n % 2 != 0) {
    const int a = n - 3, b = n - 2, c = n - 1;
    const int mult = shape[c];
    add(a, b, mult);
    add(a, a, shape[a] - mult);
    add(b, c, mult);
    add(b, b, shape[b] - mult);
    add(c, a, mult);
  }
  LowerBoundInstance inst;
  inst.p = Partition(n, p_assign);
  inst.q = Partition(n, q_assign);
  inst.bound = lower_bound_formula(shape);
  inst.family = n % 2 == 0 ? LowerBoundFamily::Even2Cycles : LowerBoundFamily::Odd2Cycles3Cycle;
  ensure(inst.p.shape() == shape && inst.q.shape() == shape, "lower-bound instance has the wrong shape");
  return inst;
}

bool in_lower_bound_family(const Partition& p, const Partition& q) {
  if (p.m() != q.m() || p.n() != q.n()) return false;
  const int n = p.n();
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (int x = 0; x < p.m(); ++x) {
    if (p(x) != q(x)) ++mult[p(x)][q(x)];
  }
  auto out_targets = [&](int a) {
    std::vector<int> ts;
    for (int b = 0; b < n; ++b) {
      if (mult[a][b] > 0) ts.push_back(b);
    }
    return ts;
  };
  auto in_sources = [&](int b) {
    std::vector<int> ss;
    for (int a = 0; a < n; ++a) {
      if (mult[a][b] > 0) ss.push_back(a);
    }
    return ss;
  };
  int three_cycles = 0;
  std::vector<char> done(n, 0);
  for (int a = 0; a < n; ++a) {
    if (done[a]) continue;
    const auto outs = out_targets(a);
    const auto ins = in_sources(a);
    if (outs.empty() && ins.empty()) continue;
    if (outs.size() != 1 || ins.size() != 1) return false;
    const int b = outs[0];
    if (ins[0] == b) {
      // Doubled 2-cycle a <-> b.
      if (mult[a][b] != mult[b][a]) return false;
      if (out_targets(b).size() != 1 || in_sources(b).size() != 1) return false;
      done[a] = done[b] = 1;
      continue;
    }
    // Directed 3-cycle a -> b -> c -> a with equal multiplicities.
    const auto outs_b = out_targets(b);
    if (outs_b.size() != 1 || in_sources(b).size() != 1) return false;
    const int c = outs_b[0];
    const auto outs_c = out_targets(c);
    if (outs_c.size() != 1 || outs_c[0] != a || in_sources(c).size() != 1) return false;
    if (mult[a][b] != mult[b][c] || mult[b][c] != mult[c][a]) return false;
    ++three_cycles;
    done[a] = done[b] = done[c] = 1;
  }
  return three_cycles == 0 || (three_cycles == 1 && n % 2 == 1);
}

ProgressBound progress_lower_bound(const Partition& p, const Partition& q) {
  if (!same_shape(p, q)) throw Error(Errc::ShapeMismatch, "partitions have different shapes");
  long long moved = 0;
  for (int x = 0; x < p.m(); ++x) moved += p(x) != q(x) ? 1 : 0;
  ProgressBound b;
  b.family_specific = p.n() >= 4 && in_lower_bound_family(p, q);
  b.gain_cap = b.family_specific ? family_gain_cap(p.n()) : 2 * p.n();
  b.value = moved == 0 ? 0 : ceil_div(2 * moved, b.gain_cap);
  return b;
}

std::pair<Partition, Partition> gen_pp36_instance() {
  std::vector<int> p(18), q(18);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int a = 3 * i + j;
      const int b = 9 + 3 * i + j;
      p[a] = 3 + i;  // a_i^j starts in B_i
      q[a] = i;      // and belongs in A_i
      p[b] = i;      // b_i^j starts in A_i
      q[b] = 3 + i;  // and belongs in B_i
    }
  }
  return {Partition(6, p), Partition(6, q)};
}

}  // namespace polyresolve
