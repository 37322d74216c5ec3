#include "polyresolve/polycycle.hpp"

#include <algorithm>
#include <string>

#include "polyresolve/error.hpp"
#include "polyresolve/matching.hpp"

namespace polyresolve {

const char* cover_kind_name(CoverKind k) { return k == CoverKind::Path ? "path" : "cycle"; }

bool is_directed_polycycle(const Digraph& g, const std::vector<int>& arcs) {
  std::vector<int> out(g.n(), 0), in(g.n(), 0);
  for (int e : arcs) {
    if (e < 0 || e >= g.m() || g.is_loop(e)) return false;
    ++out[g.tail(e)];
    ++in[g.head(e)];
  }
  for (int v = 0; v < g.n(); ++v) {
    if (out[v] != in[v] || out[v] > 1) return false;
  }
  return true;
}

namespace {

// Removes one closed trail through v from the live arcs and returns it as a
// directed cycle through v.  The walk always takes the lowest-id live non-loop
// arc; when it revisits a vertex other than v, the closed sub-walk is set aside
// (it is balanced, so the residual stays Eulerian) and restored afterwards.
// Returns an empty list when v has no live non-loop arc.
std::vector<int> extract_cycle_through(const Digraph& g, int v,
                                       const std::vector<std::vector<int>>& out_arcs,
                                       std::vector<char>& live) {
  auto next_arc = [&](int x) {
    for (int e : out_arcs[x]) {
      if (live[e] && !g.is_loop(e)) return e;
    }
    return -1;
  };
  if (next_arc(v) < 0) return {};
  std::vector<int> walk;           // arcs of the current walk from v
  std::vector<int> position(g.n(), -1);  // vertex -> index in walk where it is the tail
  std::vector<int> blocked;
  int cur = v;
  position[v] = 0;
  while (true) {
    int e = next_arc(cur);
    ensure(e >= 0, "walk through the high vertex got stuck");
    live[e] = 0;
    walk.push_back(e);
    int w = g.head(e);
    if (w == v) break;
    if (position[w] >= 0) {
      // Closed sub-walk from w back to w: set it aside.
      const int from = position[w];
      for (std::size_t k = from; k < walk.size(); ++k) {
        blocked.push_back(walk[k]);
        if (k > static_cast<std::size_t>(from)) position[g.tail(walk[k])] = -1;
      }
      walk.resize(from);
      position[w] = from;
      cur = w;
      continue;
    }
    position[w] = static_cast<int>(walk.size());
    cur = w;
  }
  for (int e : blocked) live[e] = 1;
  return walk;
}

}  // namespace

DirectedDecomposition directed_polycycle_decomposition(const Digraph& g) {
  int delta = 0;
  for (int d : g.out_degrees()) delta = std::max(delta, d);
  return directed_polycycle_decomposition(g, delta);
}

DirectedDecomposition directed_polycycle_decomposition(const Digraph& g, int t) {
  if (!g.is_eulerian()) throw Error(Errc::NotEulerian, "digraph is not balanced");
  const auto out = g.out_degrees();
  int delta = 0;
  for (int d : out) delta = std::max(delta, d);
  if (t < 0 || t > delta) throw Error(Errc::PreconditionViolated, "threshold outside 0..max out-degree");

  std::vector<std::vector<int>> out_arcs(g.n());
  for (int e = 0; e < g.m(); ++e) out_arcs[g.tail(e)].push_back(e);
  std::vector<char> live(g.m(), 1);

  DirectedDecomposition result;
  std::vector<std::vector<int>> suffix;
  if (t < delta) {
    int high = -1;
    for (int v = 0; v < g.n(); ++v) {
      if (out[v] > t) {
        if (high >= 0) throw Error(Errc::ThresholdViolated, "two vertices exceed the threshold");
        high = v;
      }
    }
    for (int k = 0; k < delta - t; ++k) {
      std::vector<int> cycle = extract_cycle_through(g, high, out_arcs, live);
      if (cycle.empty()) {
        // No non-loop arc left at the high vertex: consume a loop, which stands
        // for the trivial cycle.
        auto loop = std::find_if(out_arcs[high].begin(), out_arcs[high].end(),
                                 [&](int e) { return live[e] && g.is_loop(e); });
        ensure(loop != out_arcs[high].end(), "high vertex has no arc left");
        live[*loop] = 0;
      }
      suffix.push_back(std::move(cycle));
    }
  }

  // Pad the residual to a t-regular bipartite multigraph (tails on the left,
  // heads on the right) and peel t perfect matchings.
  BipartiteMultigraph bip(g.n());
  std::vector<int> arc_of;  // bipartite edge id -> arc id, or -1 for padding
  std::vector<int> residual_out(g.n(), 0);
  for (int e = 0; e < g.m(); ++e) {
    if (live[e] && !g.is_loop(e)) {
      bip.add_edge(g.tail(e), g.head(e));
      arc_of.push_back(e);
      ++residual_out[g.tail(e)];
    }
  }
  for (int v = 0; v < g.n(); ++v) {
    ensure(residual_out[v] <= t, "residual out-degree exceeds threshold");
    for (int k = residual_out[v]; k < t; ++k) {
      bip.add_edge(v, v);
      arc_of.push_back(-1);
    }
  }
  for (int round = 0; round < t; ++round) {
    const auto matching = bip.maximum_matching();
    std::vector<int> part;
    for (int v = 0; v < g.n(); ++v) {
      ensure(matching[v] >= 0, "regular bipartite graph lacks a perfect matching");
      bip.remove_edge(matching[v]);
      if (arc_of[matching[v]] >= 0) part.push_back(arc_of[matching[v]]);
    }
    std::sort(part.begin(), part.end());
    result.parts.push_back(std::move(part));
  }
  result.cycle_suffix_len = static_cast<int>(suffix.size());
  for (auto& c : suffix) result.parts.push_back(std::move(c));

  // Certify: every part is a polycycle, suffix parts are single cycles, and the
  // parts partition the non-loop arcs.
  std::vector<int> count(g.m(), 0);
  for (std::size_t i = 0; i < result.parts.size(); ++i) {
    ensure(is_directed_polycycle(g, result.parts[i]), "part is not a directed polycycle");
    for (int e : result.parts[i]) ++count[e];
  }
  for (int e = 0; e < g.m(); ++e) {
    ensure(count[e] == (g.is_loop(e) ? 0 : 1), "parts do not partition the non-loop arcs");
  }
  return result;
}

UndirectedDecomposition undirected_polycycle_decomposition(const SimpleGraph& g) {
  return undirected_polycycle_decomposition(g, degrees(g).delta / 2);
}

UndirectedDecomposition undirected_polycycle_decomposition(const SimpleGraph& g, int t) {
  const Digraph d = eulerian_orientation(g);
  const DirectedDecomposition dd = directed_polycycle_decomposition(d, t);
  UndirectedDecomposition result;
  result.cycle_suffix_len = dd.cycle_suffix_len;
  for (const auto& part : dd.parts) {
    std::vector<Edge> es;
    for (int e : part) es.push_back(g.edges()[e]);
    result.parts.push_back(make_edge_set(std::move(es)));
  }
  const std::size_t first_suffix = result.parts.size() - result.cycle_suffix_len;
  for (std::size_t i = 0; i < result.parts.size(); ++i) {
    const Shape s = classify(result.parts[i]);
    ensure(is_polycycle_shape(s), "part is not a polycycle");
    if (i >= first_suffix) ensure(s == Shape::Cycle || s == Shape::Empty, "suffix part is not a single cycle");
  }
  return result;
}

namespace {

// Successor map along a directed polycycle: item e goes to the arc of the same
// part whose tail is head(e).
Permutation successor_permutation(const Digraph& g, const std::vector<int>& part) {
  std::vector<int> arc_from(g.n(), -1);
  for (int e : part) arc_from[g.tail(e)] = e;
  std::vector<int> image(g.m());
  for (int x = 0; x < g.m(); ++x) image[x] = x;
  for (int e : part) image[e] = arc_from[g.head(e)];
  return Permutation(std::move(image));
}

}  // namespace

BalancedFactorization balanced_permutation_factorization(const Partition& p, const Partition& q) {
  if (!same_shape(p, q)) throw Error(Errc::ShapeMismatch, "partitions have different shapes");
  const auto shape = sorted_shape(p);
  const int t = shape.size() >= 2 ? shape[1] : 0;
  const Digraph g = cdg(p, q);
  const DirectedDecomposition dec = directed_polycycle_decomposition(g, std::min(t, shape.empty() ? 0 : shape[0]));

  BalancedFactorization f;
  const std::size_t first_suffix = dec.parts.size() - dec.cycle_suffix_len;
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    if (dec.parts[i].empty()) continue;
    Permutation pi = successor_permutation(g, dec.parts[i]);
    ensure(is_p_balanced(pi, p), "successor permutation is not balanced");
    if (i < first_suffix) {
      f.pis.push_back(std::move(pi));
    } else {
      auto cycles = pi.cycles();
      ensure(cycles.size() == 1, "suffix part is not a single cycle");
      f.sigmas.push_back(std::move(cycles[0]));
    }
  }

  // Certify q = p * sigmas... * pis...
  Permutation total = Permutation::identity(p.m());
  for (const auto& pi : f.pis) total = pi * total;
  for (const auto& s : f.sigmas) total = Permutation::from_cycle(p.m(), s) * total;
  ensure(p.after(total) == q, "factorization does not map p to q");
  return f;
}

std::vector<EdgeSet> polycycle_odd_cover(const EdgeSet& h, CoverKind kind) {
  const Shape s = classify(h);
  if (!is_polycycle_shape(s)) throw Error(Errc::NotPolycycle, "input is not a polycycle");
  if (h.empty()) return {};
  const auto comps = edge_components(h);
  const std::size_t t = comps.size();
  if (kind == CoverKind::Cycle && t == 1) return {h};

  std::vector<std::vector<int>> orders;
  for (const auto& c : comps) orders.push_back(cycle_order(c));
  // Component i contributes the selected edge u_i v_i = order[0] order[1].
  std::vector<Edge> p1, p2;
  for (std::size_t i = 0; i < t; ++i) {
    const auto& ord = orders[i];
    const Edge selected(ord[0], ord[1]);
    for (const Edge& e : comps[i]) {
      if (e != selected) p1.push_back(e);
    }
    p2.push_back(selected);
    const bool link = i + 1 < t || (kind == CoverKind::Cycle && t >= 2);
    if (link) {
      const Edge connector(ord[1], orders[(i + 1) % t][0]);
      p1.push_back(connector);
      p2.push_back(connector);
    }
  }
  std::vector<EdgeSet> parts{make_edge_set(std::move(p1)), make_edge_set(std::move(p2))};
  ensure(symmetric_difference(parts) == h, "polycycle cover does not reproduce the input");
  for (const auto& part : parts) {
    const Shape ps = classify(part);
    ensure(kind == CoverKind::Path ? ps == Shape::Path : ps == Shape::Cycle,
           "polycycle cover part has the wrong shape");
  }
  return parts;
}

}  // namespace polyresolve
