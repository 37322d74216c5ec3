#include "polyresolve/odd_cover.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "polyresolve/error.hpp"

namespace polyresolve {

namespace {

// A cycle component with its cyclic vertex order and sorted vertex list.
struct Comp {
  EdgeSet edges;
  std::vector<int> order;
  std::vector<int> verts;

  bool has(int x) const { return has_vertex(verts, x); }
  bool meets(const Comp& other) const { return !vertex_intersection(verts, other.verts).empty(); }
  std::size_t len() const { return order.size(); }
  int at(std::size_t i) const { return order[i % order.size()]; }
  // The two neighbours of x along the cycle.
  std::array<int, 2> neighbours(int x) const {
    auto it = std::find(order.begin(), order.end(), x);
    ensure(it != order.end(), "vertex not on component");
    const std::size_t i = static_cast<std::size_t>(it - order.begin());
    return {at(i + len() - 1), at(i + 1)};
  }
};

std::vector<Comp> cycle_components(const EdgeSet& h) {
  std::vector<Comp> out;
  for (auto& c : edge_components(h)) {
    Comp comp;
    comp.order = cycle_order(c);
    comp.verts = vertex_set(c);
    comp.edges = std::move(c);
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<int> matching_vertices(const EdgeSet& m) { return vertex_set(m); }

int intersection_size(const EdgeSet& m1, const EdgeSet& m2) {
  return static_cast<int>(vertex_intersection(vertex_set(m1), vertex_set(m2)).size());
}

// Picks one edge per component: the forced edge where given, otherwise the
// first edge in cycle order avoiding every vertex in `avoid`.
EdgeSet choose_transversal(const std::vector<Comp>& comps, const std::map<std::size_t, Edge>& forced,
                           const std::vector<int>& avoid) {
  std::vector<Edge> m;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    auto f = forced.find(c);
    if (f != forced.end()) {
      ensure(contains(comps[c].edges, f->second), "forced edge not on its component");
      m.push_back(f->second);
      continue;
    }
    bool picked = false;
    for (std::size_t i = 0; i < comps[c].len() && !picked; ++i) {
      const Edge e(comps[c].at(i), comps[c].at(i + 1));
      if (!has_vertex(avoid, e.u) && !has_vertex(avoid, e.v)) {
        m.push_back(e);
        picked = true;
      }
    }
    ensure(picked, "no transversal edge avoids the excluded vertices");
  }
  return make_edge_set(std::move(m));
}

std::vector<int> sorted_vertices(std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// Degree-1 vertices of an edge set.
std::vector<int> endpoints(const EdgeSet& f) {
  std::map<int, int> deg;
  for (const Edge& e : f) {
    ++deg[e.u];
    ++deg[e.v];
  }
  std::vector<int> out;
  for (const auto& [v, d] : deg) {
    if (d == 1) out.push_back(v);
  }
  return out;
}

// Other endpoint of the path component of f that ends at x.
int path_partner(const EdgeSet& f, int x) {
  for (const auto& comp : edge_components(f)) {
    const auto ends = endpoints(comp);
    if (ends.size() == 2 && (ends[0] == x || ends[1] == x)) return ends[0] == x ? ends[1] : ends[0];
  }
  throw Error(Errc::Internal, "vertex is not a path endpoint");
}

}  // namespace

bool is_transversal(const EdgeSet& h, const EdgeSet& m) {
  std::vector<int> seen;
  for (const Edge& e : m) {
    if (!contains(h, e)) return false;
    seen.push_back(e.u);
    seen.push_back(e.v);
  }
  if (sorted_vertices(seen).size() != seen.size()) return false;
  for (const auto& comp : edge_components(h)) {
    if (set_intersection(comp, m).size() != 1) return false;
  }
  return true;
}

ForestTriple forest_stats(const EdgeSet& f1, const EdgeSet& f2, const EdgeSet& f3) {
  for (const EdgeSet* f : {&f1, &f2, &f3}) {
    if (!is_linear_forest_shape(classify(*f))) throw Error(Errc::NotLinearForest, "part is not a linear forest");
  }
  ForestTriple tr{f1, f2, f3, {}};
  ForestStats& s = tr.stats;
  s.end1 = endpoints(f1);
  s.end2 = endpoints(f2);
  s.end3 = endpoints(f3);
  s.r12 = vertex_intersection(s.end1, s.end2);
  s.r13 = vertex_intersection(s.end1, s.end3);
  s.r23 = vertex_intersection(s.end2, s.end3);
  for (int v : s.end1) {
    const int count = 1 + has_vertex(s.end2, v) + has_vertex(s.end3, v);
    if (count != 2) throw Error(Errc::PreconditionViolated, "endpoint sets are inconsistent with an Eulerian union");
  }
  for (int v : s.end2) {
    const int count = 1 + has_vertex(s.end1, v) + has_vertex(s.end3, v);
    if (count != 2) throw Error(Errc::PreconditionViolated, "endpoint sets are inconsistent with an Eulerian union");
  }
  for (int v : s.end3) {
    const int count = 1 + has_vertex(s.end1, v) + has_vertex(s.end2, v);
    if (count != 2) throw Error(Errc::PreconditionViolated, "endpoint sets are inconsistent with an Eulerian union");
  }
  auto straddling = [](const EdgeSet& f, const std::vector<int>& ra, const std::vector<int>& rb) {
    std::vector<EdgeSet> out;
    for (auto& comp : edge_components(f)) {
      const auto ends = endpoints(comp);
      if (ends.size() != 2) continue;
      const bool cross = (has_vertex(ra, ends[0]) && has_vertex(rb, ends[1])) ||
                         (has_vertex(ra, ends[1]) && has_vertex(rb, ends[0]));
      if (cross) out.push_back(std::move(comp));
    }
    return out;
  };
  s.t1 = straddling(f1, s.r12, s.r13);
  s.t2 = straddling(f2, s.r12, s.r23);
  s.t3 = straddling(f3, s.r13, s.r23);
  const std::array<std::size_t, 6> values{s.r12.size(), s.r13.size(), s.r23.size(),
                                          s.t1.size(),  s.t2.size(),  s.t3.size()};
  s.parity = static_cast<int>(values[0] % 2);
  for (std::size_t v : values) ensure(static_cast<int>(v % 2) == s.parity, "endpoint counts disagree in parity");
  return tr;
}

ForestTriple linear_forests_from_transversal(const EdgeSet& h1, const EdgeSet& h2,
                                             const TransversalPair& tp) {
  if (!is_polycycle_shape(classify(h1)) || !is_polycycle_shape(classify(h2))) {
    throw Error(Errc::NotPolycycle, "input is not a polycycle");
  }
  if (!edge_disjoint(h1, h2)) throw Error(Errc::NotEdgeDisjoint, "polycycles share an edge");
  if (h1.empty() && h2.empty()) {
    if (!tp.m1.empty() || !tp.m2.empty()) throw Error(Errc::NotTransversal, "matchings must be empty");
    return forest_stats({}, {}, {});
  }
  if (h1.empty() || h2.empty()) throw Error(Errc::NotTransversal, "both polycycles must be non-empty");
  if (!is_transversal(h1, tp.m1) || !is_transversal(h2, tp.m2)) {
    throw Error(Errc::NotTransversal, "matching is not transversal to its polycycle");
  }
  // M': the smallest M2 edge of every cycle component of M1 + M2.
  EdgeSet m_prime;
  for (const auto& comp : edge_components(set_union(tp.m1, tp.m2))) {
    if (classify(comp) != Shape::Cycle) continue;
    for (const Edge& e : comp) {
      if (contains(tp.m2, e)) {
        m_prime.push_back(e);
        break;
      }
    }
  }
  m_prime = make_edge_set(std::move(m_prime));
  const EdgeSet f1 = set_union(set_minus(h1, tp.m1), m_prime);
  const EdgeSet f2 = set_union(tp.m1, set_minus(tp.m2, m_prime));
  const EdgeSet f3 = set_minus(h2, tp.m2);
  ForestTriple tr = forest_stats(f1, f2, f3);

  // Endpoint bookkeeping of the construction.
  const auto vm1 = matching_vertices(tp.m1);
  const auto vm2 = matching_vertices(tp.m2);
  ensure(tr.stats.end1 == vertex_symmetric_difference(vm1, vertex_set(set_intersection(tp.m2, f1))),
         "end(F1) identity failed");
  ensure(tr.stats.end2 == vertex_symmetric_difference(vm1, vertex_set(set_intersection(tp.m2, f2))),
         "end(F2) identity failed");
  ensure(tr.stats.end3 == vm2, "end(F3) identity failed");
  ensure(tr.stats.parity == static_cast<int>(vertex_intersection(vm1, vm2).size() % 2),
         "parity differs from the matching intersection parity");
  ensure(symmetric_difference(std::vector<EdgeSet>{f1, f2, f3}) == set_union(h1, h2),
         "forests do not decompose the polycycles");
  return tr;
}

FlexibleChoice flexible_exchange(const EdgeSet& c, const std::vector<int>& v, int x, int z) {
  if (classify(c) != Shape::Cycle) throw Error(Errc::PreconditionViolated, "first argument is not a cycle");
  const std::vector<int> vs = sorted_vertices(v);
  const auto cv = vertex_set(c);
  if (x == z || !has_vertex(vs, x) || !has_vertex(cv, x) || has_vertex(vs, z)) {
    throw Error(Errc::PreconditionViolated, "need x in V(c) and v, z outside v, x != z");
  }
  const auto order = cycle_order(c);
  auto scan = [&](const std::vector<int>& set, FlexibleChoice& out) {
    bool have0 = false, have1 = false;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Edge e(order[i], order[(i + 1) % order.size()]);
      const int hits = has_vertex(set, e.u) + has_vertex(set, e.v);
      if (hits % 2 == 0 && !have0) {
        out.e0 = e;
        have0 = true;
      }
      if (hits % 2 == 1 && !have1) {
        out.e1 = e;
        have1 = true;
      }
    }
    return have0 && have1;
  };
  FlexibleChoice out;
  out.chosen_v = vs;
  if (scan(vs, out)) return out;
  std::vector<int> alt = vs;
  alt.erase(std::find(alt.begin(), alt.end(), x));
  alt.push_back(z);
  out.chosen_v = sorted_vertices(alt);
  ensure(scan(out.chosen_v, out), "cycle is flexible for neither vertex set");
  return out;
}

TransversalPair transversal_odd_intersection(const EdgeSet& h1, const EdgeSet& h2) {
  const auto comps1 = cycle_components(h1);
  const auto comps2 = cycle_components(h2);
  // First intersecting pair C (of h1) and D (of h2) with a shared vertex x1.
  for (std::size_t ci = 0; ci < comps1.size(); ++ci) {
    for (std::size_t di = 0; di < comps2.size(); ++di) {
      const auto shared = vertex_intersection(comps1[ci].verts, comps2[di].verts);
      if (shared.empty()) continue;
      const Comp& c = comps1[ci];
      const Comp& d = comps2[di];
      const int x1 = shared.front();
      auto pos = static_cast<std::size_t>(std::find(c.order.begin(), c.order.end(), x1) - c.order.begin());
      const int x2 = c.at(pos + 1);
      const int x3 = c.at(pos + 2);

      std::vector<Comp> others1;
      for (std::size_t k = 0; k < comps1.size(); ++k) {
        if (k != ci) others1.push_back(comps1[k]);
      }
      const EdgeSet m1_rest = choose_transversal(others1, {}, {});
      std::vector<int> v = vertex_set(m1_rest);
      v.push_back(x1);
      v.push_back(x2);
      const FlexibleChoice fc = flexible_exchange(d.edges, v, x1, x3);
      const bool kept = fc.chosen_v == sorted_vertices(v);
      EdgeSet m1 = m1_rest;
      m1.push_back(kept ? Edge(x1, x2) : Edge(x2, x3));
      m1 = make_edge_set(std::move(m1));
      ensure(vertex_set(m1) == fc.chosen_v, "chosen vertex set differs from V(M1)");

      std::vector<Comp> others2;
      for (std::size_t k = 0; k < comps2.size(); ++k) {
        if (k != di) others2.push_back(comps2[k]);
      }
      EdgeSet m2 = choose_transversal(others2, {}, {});
      const bool odd = intersection_size(m1, m2) % 2 == 1;
      m2.push_back(odd ? fc.e0 : fc.e1);
      m2 = make_edge_set(std::move(m2));

      TransversalPair tp{m1, m2};
      ensure(is_transversal(h1, m1) && is_transversal(h2, m2), "odd-intersection pair is not transversal");
      ensure(intersection_size(m1, m2) % 2 == 1, "odd-intersection pair has even intersection");
      return tp;
    }
  }
  throw Error(Errc::NoCommonVertex, "polycycles share no vertex");
}

bool has_crossing_pair(const EdgeSet& h1, const EdgeSet& h2) {
  const auto a = cycle_components(h1);
  const auto b = cycle_components(h2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!a[i].meets(b[j])) continue;
      for (std::size_t k = 0; k < a.size(); ++k) {
        for (std::size_t l = 0; l < b.size(); ++l) {
          if (k != i && l != j && a[k].meets(b[l])) return true;
        }
      }
    }
  }
  return false;
}

namespace {

struct EvenContext {
  const EdgeSet& ha;  // polycycle in the first role
  const EdgeSet& hb;  // polycycle in the second role
  std::vector<Comp> a;
  std::vector<Comp> b;
};

bool check_even(const EdgeSet& h1, const EdgeSet& h2, const EvenTransversal& r) {
  const auto& [m1, m2] = r.pair;
  if (!is_transversal(h1, m1) || !is_transversal(h2, m2)) return false;
  if (intersection_size(m1, m2) % 2 != 0) return false;
  if (!contains(m1, Edge(r.u, r.v1)) || !contains(m2, Edge(r.u, r.v2))) return false;
  const auto vm1 = vertex_set(m1);
  const auto vm2 = vertex_set(m2);
  return !has_vertex(vm2, r.v1) && !has_vertex(vm1, r.v2);
}

// Completes M2 on C2' with e0 or e1 so that |V(M1) and V(M2)| is even.
EdgeSet finish_m2(const EvenContext& ctx, std::size_t i2, std::size_t i2p, int u, int v2, int v1,
                  const EdgeSet& m1, const FlexibleChoice& fc) {
  std::vector<Comp> rest;
  std::map<std::size_t, Edge> rest_forced;
  for (std::size_t k = 0; k < ctx.b.size(); ++k) {
    if (k == i2p) continue;
    if (k == i2) rest_forced[rest.size()] = Edge(u, v2);
    rest.push_back(ctx.b[k]);
  }
  EdgeSet m2 = choose_transversal(rest, rest_forced, {v1});
  const bool even = intersection_size(m1, m2) % 2 == 0;
  m2.push_back(even ? fc.e0 : fc.e1);
  return make_edge_set(std::move(m2));
}

// Transversal of ctx.a minus the component `skip`, with forced edges and one
// excluded vertex.
EdgeSet transversal_without(const std::vector<Comp>& comps, std::size_t skip,
                            const std::map<std::size_t, Edge>& forced, int avoid) {
  std::vector<Comp> rest;
  std::map<std::size_t, Edge> rest_forced;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (k == skip) continue;
    auto f = forced.find(k);
    if (f != forced.end()) rest_forced[rest.size()] = f->second;
    rest.push_back(comps[k]);
  }
  return choose_transversal(rest, rest_forced, {avoid});
}

// Subcase with a path (x, y, z) on C1' starting in V(C2'): flexible exchange on C2'.
std::optional<EvenTransversal> case_1a(const EvenContext& ctx, std::size_t i1, std::size_t i1p, std::size_t i2,
                                       std::size_t i2p, int u, int v1, int v2) {
  const Comp& c1p = ctx.a[i1p];
  const Comp& c2p = ctx.b[i2p];
  for (std::size_t pos = 0; pos < c1p.len(); ++pos) {
    const int x = c1p.at(pos);
    if (!c2p.has(x)) continue;
    const int y = c1p.at(pos + 1);
    const int z = c1p.at(pos + 2);
    const EdgeSet m1_rest = transversal_without(ctx.a, i1p, {{i1, Edge(u, v1)}}, v2);
    std::vector<int> v = vertex_set(m1_rest);
    v.push_back(x);
    v.push_back(y);
    if (has_vertex(vertex_set(m1_rest), z)) continue;
    const FlexibleChoice fc = flexible_exchange(c2p.edges, v, x, z);
    const bool kept = fc.chosen_v == sorted_vertices(v);
    EdgeSet m1 = m1_rest;
    m1.push_back(kept ? Edge(x, y) : Edge(y, z));
    m1 = make_edge_set(std::move(m1));
    EvenTransversal r;
    r.pair.m1 = m1;
    r.pair.m2 = finish_m2(ctx, i2, i2p, u, v2, v1, m1, fc);
    r.u = u;
    r.v1 = v1;
    r.v2 = v2;
    r.branch = "1a";
    return r;
  }
  return std::nullopt;
}

std::optional<EvenTransversal> case_1(const EvenContext& ctx, std::size_t i1, std::size_t i1p, std::size_t i2,
                                      std::size_t i2p) {
  const Comp& c1 = ctx.a[i1];
  const Comp& c1p = ctx.a[i1p];
  const Comp& c2 = ctx.b[i2];
  const Comp& c2p = ctx.b[i2p];
  // Edge u v1 of C1 with u in V(C2) and v1 outside V(C2').
  int u = -1, v1 = -1;
  for (std::size_t pos = 0; pos < c1.len() && u < 0; ++pos) {
    const int a = c1.at(pos), b = c1.at(pos + 1);
    if (c2.has(a) && !c2p.has(b)) {
      u = a;
      v1 = b;
    } else if (c2.has(b) && !c2p.has(a)) {
      u = b;
      v1 = a;
    }
  }
  if (u < 0) return std::nullopt;
  const auto nb = c2.neighbours(u);
  for (int v2 : nb) {
    if (!c1p.has(v2)) return case_1a(ctx, i1, i1p, i2, i2p, u, v1, v2);
  }
  // Both C2-neighbours of u lie on C1'.  Another component of ctx.a meeting C2'
  // takes the place of C1'.
  for (std::size_t k = 0; k < ctx.a.size(); ++k) {
    if (k == i1 || k == i1p || !ctx.a[k].meets(c2p)) continue;
    if (auto r = case_1a(ctx, i1, k, i2, i2p, u, v1, nb[0])) return r;
  }
  // Edge x y of C1' with {x, y} and V(C2') = {x}; v2 the neighbour other than y.
  for (std::size_t pos = 0; pos < c1p.len(); ++pos) {
    for (int flip = 0; flip < 2; ++flip) {
      const int x = flip ? c1p.at(pos + 1) : c1p.at(pos);
      const int y = flip ? c1p.at(pos) : c1p.at(pos + 1);
      if (!c2p.has(x) || c2p.has(y)) continue;
      const int v2 = nb[0] != y ? nb[0] : nb[1];
      std::map<std::size_t, Edge> forced{{i1, Edge(u, v1)}, {i1p, Edge(x, y)}};
      const EdgeSet m1 = choose_transversal(ctx.a, forced, {v2});
      const auto vm1 = vertex_set(m1);
      // C2' meets V(M1) exactly in x, so it is flexible: scan for e0, e1.
      FlexibleChoice fc;
      fc.chosen_v = vm1;
      bool have0 = false, have1 = false;
      for (std::size_t i = 0; i < c2p.len(); ++i) {
        const Edge e(c2p.at(i), c2p.at(i + 1));
        const int hits = has_vertex(vm1, e.u) + has_vertex(vm1, e.v);
        if (hits % 2 == 0 && !have0) {
          fc.e0 = e;
          have0 = true;
        }
        if (hits % 2 == 1 && !have1) {
          fc.e1 = e;
          have1 = true;
        }
      }
      if (!have0 || !have1) continue;
      EvenTransversal r;
      r.pair.m1 = m1;
      r.pair.m2 = finish_m2(ctx, i2, i2p, u, v2, v1, m1, fc);
      r.u = u;
      r.v1 = v1;
      r.v2 = v2;
      r.branch = "1b";
      return r;
    }
  }
  return std::nullopt;
}

// The rigid configuration: C1, C1' alternate between V(C2) and V(C2'), and so
// do C2, C2'.  Returns nullopt when the structure is not present.
std::optional<EvenTransversal> case_2(const EvenContext& ctx, std::size_t i1, std::size_t i1p, std::size_t i2,
                                      std::size_t i2p) {
  const Comp& c1 = ctx.a[i1];
  const Comp& c1p = ctx.a[i1p];
  const Comp& c2 = ctx.b[i2];
  const Comp& c2p = ctx.b[i2p];
  auto alternates = [](const Comp& c, const Comp& p, const Comp& q) {
    if (c.len() % 2 != 0) return false;
    const bool start_p = p.has(c.at(0));
    for (std::size_t i = 0; i < c.len(); ++i) {
      const bool want_p = (i % 2 == 0) == start_p;
      if (want_p ? !p.has(c.at(i)) : !q.has(c.at(i))) return false;
    }
    return true;
  };
  if (!alternates(c1, c2, c2p) || !alternates(c1p, c2, c2p) || !alternates(c2, c1, c1p) ||
      !alternates(c2p, c1, c1p)) {
    return std::nullopt;
  }
  const int u1 = c2.has(c1.at(0)) ? c1.at(0) : c1.at(1);
  const int v1 = c1.neighbours(u1)[1];
  const int w1 = c2.has(c1p.at(0)) ? c1p.at(0) : c1p.at(1);
  const int x1 = c1p.neighbours(w1)[1];
  const auto nu = c2.neighbours(u1);
  const int w = nu[0] != w1 ? nu[0] : nu[1];
  const auto nx = c2p.neighbours(x1);
  const int v = nx[0] != v1 ? nx[0] : nx[1];
  EvenTransversal r;
  r.pair.m1 = choose_transversal(ctx.a, {{i1, Edge(u1, v1)}, {i1p, Edge(w1, x1)}}, {});
  r.pair.m2 = choose_transversal(ctx.b, {{i2, Edge(u1, w)}, {i2p, Edge(v, x1)}}, {});
  r.u = u1;
  r.v1 = v1;
  r.v2 = w;
  r.branch = "2";
  return r;
}

struct Quad {
  std::size_t i1, i1p, i2, i2p;
};

std::vector<Quad> crossing_quads(const std::vector<Comp>& a, const std::vector<Comp>& b) {
  std::vector<Quad> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!a[i].meets(b[j])) continue;
      for (std::size_t k = 0; k < a.size(); ++k) {
        for (std::size_t l = 0; l < b.size(); ++l) {
          if (k != i && l != j && a[k].meets(b[l])) out.push_back({i, k, j, l});
        }
      }
    }
  }
  return out;
}

std::size_t index_of(const std::vector<Comp>& comps, const EdgeSet& edges) {
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (comps[k].edges == edges) return k;
  }
  throw Error(Errc::CrossingPairMissing, "hint component is not a component of its polycycle");
}

}  // namespace

EvenTransversal transversal_even_intersection(const EdgeSet& h1, const EdgeSet& h2,
                                              const std::optional<CrossingHint>& hint) {
  EvenContext forward{h1, h2, cycle_components(h1), cycle_components(h2)};
  EvenContext backward{h2, h1, forward.b, forward.a};
  std::vector<Quad> quads = crossing_quads(forward.a, forward.b);
  if (quads.empty()) throw Error(Errc::CrossingPairMissing, "no two disjoint intersecting component pairs");
  if (hint) {
    Quad q{index_of(forward.a, hint->c1), index_of(forward.a, hint->c1p), index_of(forward.b, hint->c2),
           index_of(forward.b, hint->c2p)};
    if (!forward.a[q.i1].meets(forward.b[q.i2]) || !forward.a[q.i1p].meets(forward.b[q.i2p]) || q.i1 == q.i1p ||
        q.i2 == q.i2p) {
      throw Error(Errc::CrossingPairMissing, "hint components do not cross");
    }
    quads.insert(quads.begin(), q);
  }

  auto swapped = [](EvenTransversal r) {
    std::swap(r.pair.m1, r.pair.m2);
    std::swap(r.v1, r.v2);
    return r;
  };
  // Case 1 in both role orders over every crossing quadruple, in the proof's
  // order of preference.
  for (const Quad& q : quads) {
    if (auto r = case_1(forward, q.i1, q.i1p, q.i2, q.i2p); r && check_even(h1, h2, *r)) return *r;
    if (auto r = case_1(backward, q.i2, q.i2p, q.i1, q.i1p)) {
      EvenTransversal s = swapped(*r);
      if (check_even(h1, h2, s)) return s;
    }
  }
  for (const Quad& q : quads) {
    if (auto r = case_2(forward, q.i1, q.i1p, q.i2, q.i2p); r && check_even(h1, h2, *r)) return *r;
  }
  throw Error(Errc::Internal, "even-intersection construction found no applicable case");
}

const char* part_kind_name(PartKind k) {
  switch (k) {
    case PartKind::Path: return "path";
    case PartKind::Cycle: return "cycle";
    case PartKind::LinearForest: return "linear_forest";
  }
  return "path";
}

namespace {

PartKind part_kind(CoverKind k) { return k == CoverKind::Path ? PartKind::Path : PartKind::Cycle; }

void require_delta4(const SimpleGraph& g) {
  if (!is_eulerian(g)) throw Error(Errc::NotEulerian, "graph has odd-degree vertices");
  if (degrees(g).delta > 4) throw Error(Errc::PreconditionViolated, "maximum degree exceeds 4");
}

std::pair<EdgeSet, EdgeSet> two_polycycles(const SimpleGraph& g) {
  const auto dec = undirected_polycycle_decomposition(g);
  ensure(dec.parts.size() == 2, "degree-4 graph must split into two polycycles");
  return {dec.parts[0], dec.parts[1]};
}

struct Triple {
  std::array<EdgeSet, 3> f;
  ForestStats st;

  void refresh() { st = forest_stats(f[0], f[1], f[2]).stats; }
  const std::vector<int>& r(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i == 0 && j == 1) return st.r12;
    if (i == 0 && j == 2) return st.r13;
    return st.r23;
  }
  const std::vector<EdgeSet>& t(int i) const { return i == 0 ? st.t1 : (i == 1 ? st.t2 : st.t3); }
  // R_ij endpoint of a component of F_i that lies in T_i.
  int r_end(int i, int j, const EdgeSet& comp) const {
    for (int e : endpoints(comp)) {
      if (has_vertex(r(i, j), e)) return e;
    }
    throw Error(Errc::Internal, "straddling component has no endpoint in R_ij");
  }
  void join(int i, int j, int u, int v) {
    const Edge e(u, v);
    ensure(!contains(f[i], e) && !contains(f[j], e), "join edge already present");
    f[i] = set_union(f[i], {e});
    f[j] = set_union(f[j], {e});
  }
};

// Pair (i, j), i < j, whose R_ij has at least `limit` vertices, or (-1, -1).
std::pair<int, int> oversized_pair(const Triple& tr, std::size_t limit) {
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    if (tr.r(i, j).size() >= limit) return {i, j};
  }
  return {-1, -1};
}

// Greedy join loop for three paths: while some r_ij >= 3, join u (the R_ij end
// of a straddling F_i component) to a v in R_ij outside u's F_j component.
void reduce_to_paths(Triple& tr) {
  while (true) {
    auto [i, j] = oversized_pair(tr, 3);
    if (i < 0) break;
    ensure(!tr.t(i).empty(), "no straddling component in the reducing forest");
    const int u = tr.r_end(i, j, tr.t(i).front());
    const int partner = path_partner(tr.f[j], u);
    int v = -1;
    for (int cand : tr.r(i, j)) {
      if (cand != u && cand != partner) {
        v = cand;
        break;
      }
    }
    ensure(v >= 0, "no join partner available");
    const int before = tr.st.r_sum();
    const int parity = tr.st.parity;
    tr.join(i, j, u, v);
    tr.refresh();
    ensure(tr.st.r_sum() == before - 2, "join did not reduce the endpoint count");
    ensure(tr.st.parity == parity, "join changed the parity");
  }
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    ensure(tr.r(i, j).size() == 1, "path reduction did not end with single common endpoints");
  }
}

// Greedy join loop for three cycles: while some r_ij >= 4, join with the
// witness rules that keep every t_i positive.
void reduce_to_cycles(Triple& tr) {
  while (true) {
    auto [i, j] = oversized_pair(tr, 4);
    if (i < 0) break;
    ensure(tr.t(i).size() >= 2 && tr.t(j).size() >= 2, "straddling components missing");
    const int u = tr.r_end(i, j, tr.t(i)[0]);
    const int x1 = tr.r_end(i, j, tr.t(i)[1]);
    int x2 = -1;
    for (const auto& comp : tr.t(j)) {
      const int e = tr.r_end(j, i, comp);
      if (e != u) {
        x2 = e;
        break;
      }
    }
    ensure(x2 >= 0, "no straddling component of F_j avoids u");
    const int w = path_partner(tr.f[j], u);
    const auto& rij = tr.r(i, j);
    const std::array<int, 3> excluded = has_vertex(rij, w) ? std::array<int, 3>{u, x1, w}
                                                            : std::array<int, 3>{u, x1, x2};
    int v = -1;
    for (int cand : rij) {
      if (std::find(excluded.begin(), excluded.end(), cand) == excluded.end()) {
        v = cand;
        break;
      }
    }
    ensure(v >= 0, "no join partner available");
    const int before = tr.st.r_sum();
    tr.join(i, j, u, v);
    tr.refresh();
    ensure(tr.st.r_sum() == before - 2, "join did not reduce the endpoint count");
    ensure(tr.st.parity == 0, "join changed the parity");
    ensure(!tr.st.t1.empty() && !tr.st.t2.empty() && !tr.st.t3.empty(), "join emptied a straddling class");
  }
}

OddCoverCert finish(const SimpleGraph& g, OddCoverCert cert) {
  std::erase_if(cert.parts, [](const EdgeSet& p) { return p.empty(); });
  const CheckResult c = check_odd_cover(g, cert);
  ensure(c.ok, ("constructed odd-cover fails verification: " + c.reason).c_str());
  return cert;
}

SimpleGraph graph_of(int n, const EdgeSet& edges) { return SimpleGraph(n, edges, true); }

}  // namespace

OddCoverCert path_odd_cover_delta4(const SimpleGraph& g) {
  require_delta4(g);
  OddCoverCert cert{PartKind::Path, {}};
  if (g.edges().empty()) return cert;
  if (degrees(g).delta <= 2) {
    cert.parts = polycycle_odd_cover(g.edges(), CoverKind::Path);
    return finish(g, cert);
  }
  const auto [h1, h2] = two_polycycles(g);
  const TransversalPair tp = transversal_odd_intersection(h1, h2);
  const ForestTriple ft = linear_forests_from_transversal(h1, h2, tp);
  ensure(ft.stats.parity == 1, "odd-intersection pair gave even parity");
  Triple tr{{ft.f1, ft.f2, ft.f3}, ft.stats};
  reduce_to_paths(tr);
  cert.parts = {tr.f[0], tr.f[1], tr.f[2]};
  return finish(g, cert);
}

OddCoverCert cycle_odd_cover_delta4(const SimpleGraph& g) {
  require_delta4(g);
  OddCoverCert cert{PartKind::Cycle, {}};
  if (g.edges().empty()) return cert;
  if (degrees(g).delta <= 2) {
    cert.parts = polycycle_odd_cover(g.edges(), CoverKind::Cycle);
    return finish(g, cert);
  }
  const auto [h1, h2] = two_polycycles(g);
  if (!has_crossing_pair(h1, h2)) {
    // Some component C of one polycycle meets every component of the other
    // that meets anything, so the rest is a polycycle: cover it and add C.
    const auto a = cycle_components(h1);
    const auto b = cycle_components(h2);
    auto covers_all = [&](const std::vector<Comp>& own, const std::vector<Comp>& other, std::size_t idx) {
      for (std::size_t k = 0; k < own.size(); ++k) {
        if (k == idx) continue;
        for (const auto& o : other) {
          if (own[k].meets(o)) return false;
        }
      }
      return true;
    };
    EdgeSet single;
    EdgeSet rest;
    for (std::size_t k = 0; k < a.size() && single.empty(); ++k) {
      if (covers_all(a, b, k)) {
        single = a[k].edges;
        rest = set_union(h2, set_minus(h1, single));
      }
    }
    for (std::size_t k = 0; k < b.size() && single.empty(); ++k) {
      if (covers_all(b, a, k)) {
        single = b[k].edges;
        rest = set_union(h1, set_minus(h2, single));
      }
    }
    ensure(!single.empty(), "no covering component without a crossing pair");
    ensure(is_polycycle_shape(classify(rest)), "remainder is not a polycycle");
    cert.parts = polycycle_odd_cover(rest, CoverKind::Cycle);
    cert.parts.push_back(single);
    return finish(g, cert);
  }
  const EvenTransversal et = transversal_even_intersection(h1, h2);
  const ForestTriple ft = linear_forests_from_transversal(h1, h2, et.pair);
  ensure(ft.stats.parity == 0, "even-intersection pair gave odd parity");
  ensure(ft.stats.t1.size() >= 2 && ft.stats.t2.size() >= 2 && ft.stats.t3.size() >= 2,
         "even-intersection forests lack straddling components");
  Triple tr{{ft.f1, ft.f2, ft.f3}, ft.stats};
  reduce_to_cycles(tr);
  const Edge e12(tr.st.r12[0], tr.st.r12[1]);
  const Edge e13(tr.st.r13[0], tr.st.r13[1]);
  const Edge e23(tr.st.r23[0], tr.st.r23[1]);
  cert.parts = {set_union(tr.f[0], make_edge_set({e12, e13})), set_union(tr.f[1], make_edge_set({e12, e23})),
                set_union(tr.f[2], make_edge_set({e13, e23}))};
  return finish(g, cert);
}

namespace {

// Covers the union of a pair of edge-disjoint polycycles with the degree-4
// constructions.
std::vector<EdgeSet> cover_pair(int n, const EdgeSet& a, const EdgeSet& b, CoverKind kind) {
  const SimpleGraph pair_graph = graph_of(n, set_union(a, b));
  const OddCoverCert c =
      kind == CoverKind::Path ? path_odd_cover_delta4(pair_graph) : cycle_odd_cover_delta4(pair_graph);
  return c.parts;
}

std::pair<int, int> top_two_degrees(const SimpleGraph& g) {
  auto deg = g.degree_vector();
  std::sort(deg.begin(), deg.end(), std::greater<>());
  return {deg.empty() ? 0 : deg[0], deg.size() >= 2 ? deg[1] : 0};
}

}  // namespace

int path_cover_bound_eulerian(const SimpleGraph& g) { return (3 * degrees(g).delta + 3) / 4; }

int cycle_cover_bound_eulerian(const SimpleGraph& g) {
  const auto [d1, d2] = top_two_degrees(g);
  return d1 / 2 + (d2 + 3) / 4;
}

int path_cover_bound_general(const SimpleGraph& g) {
  const auto s = degrees(g);
  return s.v_odd / 2 + (3 * s.delta_e + 3) / 4;
}

OddCoverCert odd_cover_eulerian(const SimpleGraph& g, CoverKind kind) {
  if (!is_eulerian(g)) throw Error(Errc::NotEulerian, "graph has odd-degree vertices");
  OddCoverCert cert{part_kind(kind), {}};
  if (g.edges().empty()) return cert;
  int threshold = degrees(g).delta / 2;
  if (kind == CoverKind::Cycle) threshold = top_two_degrees(g).second / 2;
  const auto dec = undirected_polycycle_decomposition(g, threshold);
  const std::size_t paired = dec.parts.size() - dec.cycle_suffix_len;
  std::size_t i = 0;
  for (; i + 1 < paired; i += 2) {
    for (auto& p : cover_pair(g.n(), dec.parts[i], dec.parts[i + 1], kind)) cert.parts.push_back(std::move(p));
  }
  if (i < paired) {
    for (auto& p : polycycle_odd_cover(dec.parts[i], kind)) cert.parts.push_back(std::move(p));
  }
  for (std::size_t k = paired; k < dec.parts.size(); ++k) {
    if (!dec.parts[k].empty()) cert.parts.push_back(dec.parts[k]);
  }
  cert = finish(g, cert);
  const int bound = kind == CoverKind::Path ? path_cover_bound_eulerian(g) : cycle_cover_bound_eulerian(g);
  ensure(static_cast<int>(cert.parts.size()) <= bound, "Eulerian odd-cover exceeds its bound");
  return cert;
}

OddCoverCert path_odd_cover_general(const SimpleGraph& g) {
  const auto s = degrees(g);
  std::vector<int> odd;
  for (int v = 0; v < g.n(); ++v) {
    if (s.degree[v] % 2 != 0) odd.push_back(v);
  }
  std::vector<Edge> m;
  for (std::size_t k = 0; k + 1 < odd.size(); k += 2) m.emplace_back(odd[k], odd[k + 1]);
  const EdgeSet matching = make_edge_set(std::move(m));
  const SimpleGraph eulerian = graph_of(g.n(), symmetric_difference(g.edges(), matching));
  OddCoverCert cert = odd_cover_eulerian(eulerian, CoverKind::Path);
  for (const Edge& e : matching) cert.parts.push_back({e});
  cert = finish(g, cert);
  ensure(static_cast<int>(cert.parts.size()) <= path_cover_bound_general(g), "general path cover exceeds its bound");
  return cert;
}

std::vector<EdgeSet> linear_forest_decomposition(const SimpleGraph& g) {
  const auto s = degrees(g);
  if (g.edges().empty()) return {};
  const int n = g.n();
  // Two copies of g, with every odd vertex joined to its copy.
  std::vector<Edge> doubled;
  for (const Edge& e : g.edges()) {
    doubled.push_back(e);
    doubled.emplace_back(e.u + n, e.v + n);
  }
  for (int v = 0; v < n; ++v) {
    if (s.degree[v] % 2 != 0) doubled.emplace_back(v, v + n);
  }
  const SimpleGraph big(2 * n, std::move(doubled));
  const auto dec = undirected_polycycle_decomposition(big);

  std::vector<EdgeSet> forests;
  auto split_single = [&](const EdgeSet& h) {
    const auto comps = cycle_components(h);
    const EdgeSet m = choose_transversal(comps, {}, {});
    forests.push_back(set_minus(h, m));
    forests.push_back(m);
  };
  std::size_t i = 0;
  for (; i + 1 < dec.parts.size(); i += 2) {
    const EdgeSet& a = dec.parts[i];
    const EdgeSet& b = dec.parts[i + 1];
    if (a.empty() || b.empty()) {
      if (!a.empty()) split_single(a);
      if (!b.empty()) split_single(b);
      continue;
    }
    TransversalPair tp{choose_transversal(cycle_components(a), {}, {}),
                       choose_transversal(cycle_components(b), {}, {})};
    const ForestTriple ft = linear_forests_from_transversal(a, b, tp);
    forests.push_back(ft.f1);
    forests.push_back(ft.f2);
    forests.push_back(ft.f3);
  }
  if (i < dec.parts.size() && !dec.parts[i].empty()) split_single(dec.parts[i]);

  std::vector<EdgeSet> out;
  for (const auto& f : forests) {
    EdgeSet restricted;
    for (const Edge& e : f) {
      if (e.v < n) restricted.push_back(e);
    }
    if (!restricted.empty()) out.push_back(std::move(restricted));
  }
  const CheckResult c = check_linear_forest_decomposition(g, out);
  ensure(c.ok, ("linear forest decomposition fails verification: " + c.reason).c_str());
  ensure(static_cast<int>(out.size()) <= (3 * s.delta_e + 3) / 4, "too many linear forests");
  return out;
}

CheckResult check_odd_cover(const SimpleGraph& g, const OddCoverCert& cert) {
  for (std::size_t i = 0; i < cert.parts.size(); ++i) {
    const EdgeSet& part = cert.parts[i];
    const std::string label = "part " + std::to_string(i);
    if (make_edge_set(part) != part) return {false, label + " is not a canonical edge set"};
    const Shape s = classify(part);
    switch (cert.kind) {
      case PartKind::Path:
        if (s != Shape::Path) return {false, label + " not a path"};
        break;
      case PartKind::Cycle:
        if (s != Shape::Cycle) return {false, label + " not a cycle"};
        break;
      case PartKind::LinearForest:
        if (!is_linear_forest_shape(s)) return {false, label + " not a linear forest"};
        break;
    }
    for (int v : vertex_set(part)) {
      if (v < 0 || v >= g.n()) return {false, label + " uses vertex " + std::to_string(v) + " outside V(G)"};
    }
  }
  if (symmetric_difference(cert.parts) != g.edges()) return {false, "symmetric difference of parts differs from G"};
  return {true, ""};
}

CheckResult check_linear_forest_decomposition(const SimpleGraph& g, const std::vector<EdgeSet>& parts) {
  EdgeSet all;
  std::size_t total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (make_edge_set(parts[i]) != parts[i]) return {false, "part " + std::to_string(i) + " is not a canonical edge set"};
    if (!is_linear_forest_shape(classify(parts[i]))) {
      return {false, "part " + std::to_string(i) + " not a linear forest"};
    }
    total += parts[i].size();
    all = set_union(all, parts[i]);
  }
  if (all.size() != total) return {false, "parts are not edge-disjoint"};
  if (all != g.edges()) return {false, "union of parts differs from G"};
  return {true, ""};
}

}  // namespace polyresolve
