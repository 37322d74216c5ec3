#include "polyresolve/oracles.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "polyresolve/error.hpp"
#include "polyresolve/resolve.hpp"

namespace polyresolve {

long long default_cap() {
  if (const char* env = std::getenv("POLYRESOLVE_CAP")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 100000;
}

namespace {

// ---------------------------------------------------------------------------
// Polytope state space.  A state is the cluster of every item, stored as a
// byte string.  Items of one class are interchangeable; the canonical form
// sorts the clusters within each class.

using State = std::string;

struct ItemClasses {
  std::vector<std::vector<int>> groups;  // items of each class, ascending
  std::vector<int> class_of;
};

ItemClasses classes_by(const std::vector<int>& key_a, const std::vector<int>& key_b) {
  std::map<std::pair<int, int>, int> ids;
  ItemClasses c;
  c.class_of.resize(key_a.size());
  for (std::size_t x = 0; x < key_a.size(); ++x) {
    auto [it, fresh] = ids.emplace(std::pair{key_a[x], key_b[x]}, static_cast<int>(ids.size()));
    if (fresh) c.groups.emplace_back();
    c.class_of[x] = it->second;
    c.groups[it->second].push_back(static_cast<int>(x));
  }
  return c;
}

void canonicalize(State& s, const ItemClasses& c) {
  std::string buf;
  for (const auto& g : c.groups) {
    buf.clear();
    for (int x : g) buf.push_back(s[x]);
    std::sort(buf.begin(), buf.end());
    for (std::size_t i = 0; i < g.size(); ++i) s[g[i]] = buf[i];
  }
}

State state_of(const Partition& p) {
  State s(p.m(), '\0');
  for (int x = 0; x < p.m(); ++x) s[x] = static_cast<char>(p(x));
  return s;
}

// Representatives: for each cluster, one item per class present in it.
std::vector<std::vector<int>> representatives(const State& s, int n, const ItemClasses& c) {
  std::vector<std::vector<int>> reps(n);
  std::vector<std::vector<char>> seen(n, std::vector<char>(c.groups.size(), 0));
  for (std::size_t x = 0; x < s.size(); ++x) {
    const int cl = static_cast<unsigned char>(s[x]);
    const int k = c.class_of[x];
    if (!seen[cl][k]) {
      seen[cl][k] = 1;
      reps[cl].push_back(static_cast<int>(x));
    }
  }
  return reps;
}

// Enumerates cyclic exchanges (x_0 .. x_{k-1}), k >= 2, with x_i a
// representative of cluster c_i, c_0 the smallest cluster of the cycle.  Item
// x_i moves to c_{i+1}.  `gain(x, to)` scores a move (at most 2); cycles whose
// total score is below `need` are skipped, with branch-and-bound on partial
// cycles.  The callback returns false to stop the enumeration.
bool enumerate_exchanges(const std::vector<std::vector<int>>& reps, int n, int need,
                         const std::function<int(int, int)>& gain,
                         const std::function<bool(const CycleSeq&)>& visit) {
  CycleSeq items;
  std::vector<int> clusters;
  std::vector<char> used(n, 0);
  std::function<bool(int)> extend = [&](int score) -> bool {
    const int len = static_cast<int>(items.size());
    if (len >= 2) {
      const int total = score + gain(items.back(), clusters.front());
      if (total >= need && !visit(items)) return false;
    }
    if (len == n) return true;
    // After adding one more cluster, len moves are fixed and at most n - len
    // remain (including the closing move).
    for (int c = clusters.front() + 1; c < n; ++c) {
      if (used[c] || reps[c].empty()) continue;
      const int step = gain(items.back(), c);
      if (score + step + 2 * (n - len) < need) continue;
      used[c] = 1;
      clusters.push_back(c);
      for (int y : reps[c]) {
        items.push_back(y);
        const bool go_on = extend(score + step);
        items.pop_back();
        if (!go_on) return false;
      }
      clusters.pop_back();
      used[c] = 0;
    }
    return true;
  };
  for (int c0 = 0; c0 < n; ++c0) {
    if (reps[c0].empty()) continue;
    used[c0] = 1;
    clusters.push_back(c0);
    for (int x0 : reps[c0]) {
      items.push_back(x0);
      const bool go_on = extend(0);
      items.pop_back();
      if (!go_on) return false;
    }
    clusters.pop_back();
    used[c0] = 0;
  }
  return true;
}

void apply_exchange(State& s, const CycleSeq& cyc) {
  const char first = s[cyc[0]];
  for (std::size_t i = 0; i + 1 < cyc.size(); ++i) s[cyc[i]] = s[cyc[i + 1]];
  s[cyc.back()] = first;
}

const std::function<int(int, int)> kNoGain = [](int, int) { return 0; };

}  // namespace

int exact_diameter_bfs(const std::vector<int>& shape, long long cap) {
  if (shape.empty()) throw Error(Errc::BadShape, "shape is empty");
  int m = 0;
  for (int k : shape) {
    if (k < 0) throw Error(Errc::BadShape, "negative cluster size");
    m += k;
  }
  if (m > 255) throw Error(Errc::TooLarge, "too many items");
  // Vertex count m! / prod k_i! via log-gamma (only compared against the cap).
  long double logv = std::lgamma(static_cast<long double>(m) + 1);
  for (int k : shape) logv -= std::lgamma(static_cast<long double>(k) + 1);
  if (logv > std::log(static_cast<long double>(cap)) + 1e-9) {
    throw Error(Errc::TooLarge, "polytope has more vertices than the cap");
  }
  const int n = static_cast<int>(shape.size());
  std::vector<int> start;
  for (int c = 0; c < n; ++c) start.insert(start.end(), shape[c], c);
  const ItemClasses cls = classes_by(start, std::vector<int>(m, 0));

  State root(m, '\0');
  for (int x = 0; x < m; ++x) root[x] = static_cast<char>(start[x]);
  std::unordered_set<State> seen{root};
  std::vector<State> frontier{root};
  int depth = 0;
  while (true) {
    std::vector<State> next;
    for (const State& s : frontier) {
      const auto reps = representatives(s, n, cls);
      enumerate_exchanges(reps, n, INT_MIN, kNoGain, [&](const CycleSeq& cyc) {
        State t = s;
        apply_exchange(t, cyc);
        canonicalize(t, cls);
        if (seen.insert(t).second) next.push_back(std::move(t));
        return true;
      });
    }
    if (next.empty()) return depth;
    ++depth;
    frontier = std::move(next);
  }
}

int min_resolution_length(const Partition& p, const Partition& q, long long cap) {
  if (!same_shape(p, q) || p.n() != q.n()) throw Error(Errc::ShapeMismatch, "partitions have different shapes");
  if (p.m() > 255 || p.n() > 255) throw Error(Errc::TooLarge, "instance too large for the state encoding");
  const ItemClasses cls = classes_by(p.assignment(), q.assignment());
  State root = state_of(p);
  const State target = state_of(q);
  if (root == target) return 0;
  std::unordered_set<State> seen{root};
  std::vector<State> frontier{root};
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<State> next;
    bool found = false;
    for (const State& s : frontier) {
      const auto reps = representatives(s, p.n(), cls);
      enumerate_exchanges(reps, p.n(), INT_MIN, kNoGain, [&](const CycleSeq& cyc) {
        State t = s;
        apply_exchange(t, cyc);
        canonicalize(t, cls);
        if (t == target) {
          found = true;
          return false;
        }
        if (seen.insert(t).second) {
          if (static_cast<long long>(seen.size()) > cap) throw Error(Errc::TooLarge, "visited states exceed the cap");
          next.push_back(std::move(t));
        }
        return true;
      });
      if (found) return depth;
    }
    frontier = std::move(next);
  }
  throw Error(Errc::Internal, "target unreachable in a connected polytope graph");
}

MoveAccounting account_moves(const Partition& p, const Partition& q, const Partition& cur, const CycleSeq& tau) {
  MoveAccounting acc;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    const int x = tau[i];
    if (p(x) == q(x)) continue;
    const int from = cur(x);
    const int to = cur(tau[(i + 1) % tau.size()]);
    const bool departs = from == p(x);
    const bool arrives = to == q(x);
    if (departs && arrives) {
      ++acc.whole_moves;
    } else if (departs || arrives) {
      ++acc.half_moves;
    }
  }
  acc.gain = 2 * acc.whole_moves + acc.half_moves;
  return acc;
}

int progress_measure(const Partition& p, const Partition& q, const Partition& cur) {
  int s = 0;
  for (int x = 0; x < p.m(); ++x) {
    if (p(x) == q(x)) continue;
    s += (cur(x) != p(x)) + (cur(x) == q(x));
  }
  return s;
}

namespace {

struct PrunedSearch {
  const Partition& p;
  const Partition& q;
  int n;
  int cap;
  int target_score;
  ItemClasses cls;
  State target;
  std::unordered_map<State, int> failed;  // state -> largest failed budget
  long long nodes = 0;
  std::vector<CycleSeq> path;

  int score(const State& s) const {
    int total = 0;
    for (int x = 0; x < p.m(); ++x) {
      if (p(x) == q(x)) continue;
      const int c = static_cast<unsigned char>(s[x]);
      total += (c != p(x)) + (c == q(x));
    }
    return total;
  }

  bool solve(const State& s, int budget) {
    if (s == target) return true;
    if (budget == 0) return false;
    auto it = failed.find(s);
    if (it != failed.end() && it->second >= budget) return false;
    ++nodes;
    const int need = target_score - score(s) - cap * (budget - 1);
    auto gain = [&](int x, int to) {
      if (p(x) == q(x)) return 0;
      const int from = static_cast<unsigned char>(s[x]);
      return ((to != p(x)) - (from != p(x))) + ((to == q(x)) - (from == q(x)));
    };
    bool ok = false;
    const auto reps = representatives(s, n, cls);
    enumerate_exchanges(reps, n, need, gain, [&](const CycleSeq& cyc) {
      State t = s;
      apply_exchange(t, cyc);
      canonicalize(t, cls);
      path.push_back(cyc);
      if (solve(t, budget - 1)) {
        ok = true;
        return false;
      }
      path.pop_back();
      return true;
    });
    if (!ok) failed[s] = std::max(failed[s], budget);
    return ok;
  }
};

// Re-expresses a path of exchanges on canonical states as a resolution on the
// actual items: each canonical step is conjugated by the relabeling that maps
// the actual state to its canonical form.
std::vector<CycleSeq> realize(const Partition& p, const ItemClasses& cls, const std::vector<CycleSeq>& steps) {
  State actual = state_of(p);
  std::vector<CycleSeq> out;
  for (const auto& cyc : steps) {
    // relabel[canonical item] = actual item with the same class and cluster.
    std::vector<int> relabel(actual.size(), -1);
    for (const auto& g : cls.groups) {
      std::vector<std::pair<char, int>> act, can;
      State canon = actual;
      canonicalize(canon, cls);
      for (int x : g) {
        act.emplace_back(actual[x], x);
        can.emplace_back(canon[x], x);
      }
      std::sort(act.begin(), act.end());
      std::sort(can.begin(), can.end());
      for (std::size_t i = 0; i < g.size(); ++i) relabel[can[i].second] = act[i].second;
    }
    CycleSeq real;
    for (int x : cyc) real.push_back(relabel[x]);
    apply_exchange(actual, real);
    out.push_back(std::move(real));
  }
  return out;
}

}  // namespace

PrunedSearchResult pruned_search(const Partition& p, const Partition& q, int L, bool fix_first_step) {
  if (!same_shape(p, q) || p.n() != q.n()) throw Error(Errc::ShapeMismatch, "partitions have different shapes");
  if (!in_lower_bound_family(p, q)) throw Error(Errc::FamilyMismatch, "instance is not in the disjoint 2-cycle family");
  if (L < 0) throw Error(Errc::InvalidInput, "negative length bound");
  PrunedSearch search{p, q, p.n(), family_gain_cap(p.n()), 0, classes_by(p.assignment(), q.assignment()),
                      state_of(q), {}, 0, {}};
  for (int x = 0; x < p.m(); ++x) search.target_score += 2 * (p(x) != q(x));

  PrunedSearchResult result;
  State root = state_of(p);
  const auto pp36 = gen_pp36_instance();
  if (fix_first_step && L >= 1 && p == pp36.first && q == pp36.second) {
    const CycleSeq tau1{0, 9, 3, 12, 6, 15};
    result.first_step_fixed = true;
    State s = root;
    apply_exchange(s, tau1);
    canonicalize(s, search.cls);
    search.path.push_back(tau1);
    const bool found = root == search.target || search.solve(s, L - 1);
    result.no_short_resolution = !found;
  } else {
    result.no_short_resolution = !search.solve(root, L);
  }
  result.nodes = search.nodes;
  if (!result.no_short_resolution) {
    result.witness = realize(p, search.cls, search.path);
    const VerifyResult v = verify_resolution(p, q, result.witness);
    ensure(v.ok, ("pruned search witness does not verify: " + v.reason).c_str());
  }
  return result;
}

bool pruned_no_short_resolution(const Partition& p, const Partition& q, int L) {
  return pruned_search(p, q, L, true).no_short_resolution;
}

// ---------------------------------------------------------------------------
// Exhaustive odd-covers.

int edge_bit(int k, int u, int v) {
  if (u > v) std::swap(u, v);
  // Edges (0,1), (0,2), ..., (0,k-1), (1,2), ...
  return u * (2 * k - u - 1) / 2 + (v - u - 1);
}

namespace {

std::vector<std::uint32_t> generators(int k, CoverKind kind) {
  std::vector<std::uint32_t> out;
  std::vector<int> walk;
  std::vector<char> used(k, 0);
  std::function<void(std::uint32_t)> grow = [&](std::uint32_t mask) {
    const int last = walk.back();
    const int first = walk.front();
    if (walk.size() >= 2) {
      if (kind == CoverKind::Path && last > first) out.push_back(mask);
      if (kind == CoverKind::Cycle && walk.size() >= 3 && walk[1] < last) {
        out.push_back(mask | (1u << edge_bit(k, last, first)));
      }
    }
    for (int v = 0; v < k; ++v) {
      if (used[v]) continue;
      if (kind == CoverKind::Cycle && v < first) continue;
      used[v] = 1;
      walk.push_back(v);
      grow(mask | (1u << edge_bit(k, last, v)));
      walk.pop_back();
      used[v] = 0;
    }
  };
  for (int s = 0; s < k; ++s) {
    used[s] = 1;
    walk.push_back(s);
    grow(0);
    walk.pop_back();
    used[s] = 0;
  }
  return out;
}

// Permutes the 64 bits of w by i -> i ^ lo.
std::uint64_t xor_permute(std::uint64_t w, unsigned lo) {
  static constexpr std::array<std::uint64_t, 6> kMasks{
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
      0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
  for (unsigned j = 0; j < 6; ++j) {
    if (lo & (1u << j)) {
      const unsigned shift = 1u << j;
      w = ((w & kMasks[j]) << shift) | ((w >> shift) & kMasks[j]);
    }
  }
  return w;
}

std::vector<unsigned char> build_table(int k, CoverKind kind) {
  const int e = k * (k - 1) / 2;
  const std::size_t states = std::size_t{1} << e;
  std::vector<unsigned char> dist(states, 255);
  dist[0] = 0;
  const auto gens = generators(k, kind);
  if (e <= 16) {
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
      const std::uint32_t s = queue.front();
      queue.pop_front();
      for (std::uint32_t g : gens) {
        const std::uint32_t t = s ^ g;
        if (dist[t] == 255) {
          dist[t] = static_cast<unsigned char>(dist[s] + 1);
          queue.push_back(t);
        }
      }
    }
    return dist;
  }
  // Layered search on bitsets: xor by a generator permutes bits inside each
  // 64-bit word (low 6 bits) and permutes words (high bits).
  const std::size_t words = states / 64;
  std::map<unsigned, std::vector<std::uint32_t>> by_low;
  for (std::uint32_t g : gens) by_low[g & 63u].push_back(g >> 6);
  std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words), moved(words);
  visited[0] = frontier[0] = 1;
  for (int layer = 1;; ++layer) {
    std::fill(next.begin(), next.end(), 0);
    for (const auto& [lo, highs] : by_low) {
      for (std::size_t w = 0; w < words; ++w) moved[w] = xor_permute(frontier[w], lo);
      for (std::uint32_t hi : highs) {
        for (std::size_t w = 0; w < words; ++w) next[w ^ hi] |= moved[w];
      }
    }
    bool any = false;
    for (std::size_t w = 0; w < words; ++w) {
      next[w] &= ~visited[w];
      if (!next[w]) continue;
      any = true;
      visited[w] |= next[w];
      std::uint64_t bits = next[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        dist[w * 64 + b] = static_cast<unsigned char>(layer);
        bits &= bits - 1;
      }
    }
    if (!any) break;
    frontier.swap(next);
  }
  return dist;
}

// Eight-vertex meet-in-the-middle: all xors of at most two generators.
struct PairTable {
  std::vector<std::uint32_t> gens;
  std::vector<std::uint64_t> bits;  // 2^28 bits
  bool has(std::uint32_t s) const { return (bits[s >> 6] >> (s & 63)) & 1u; }
};

PairTable build_pairs(CoverKind kind) {
  PairTable t;
  t.gens = generators(8, kind);
  t.bits.assign((std::size_t{1} << 28) / 64, 0);
  t.bits[0] |= 1;
  const std::size_t g = t.gens.size();
  const unsigned threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned id = 0; id < threads; ++id) {
    pool.emplace_back([&, id] {
      for (std::size_t i = id; i < g; i += threads) {
        const std::uint32_t a = t.gens[i];
        std::atomic_ref<std::uint64_t>(t.bits[a >> 6]).fetch_or(std::uint64_t{1} << (a & 63));
        for (std::size_t j = i + 1; j < g; ++j) {
          const std::uint32_t s = a ^ t.gens[j];
          std::atomic_ref<std::uint64_t>(t.bits[s >> 6]).fetch_or(std::uint64_t{1} << (s & 63));
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  return t;
}

const PairTable& pair_table(CoverKind kind) {
  static std::mutex mu;
  static std::map<CoverKind, std::unique_ptr<PairTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[kind];
  if (!slot) slot = std::make_unique<PairTable>(build_pairs(kind));
  return *slot;
}

}  // namespace

const std::vector<unsigned char>& odd_cover_distance_table(int k, CoverKind kind) {
  if (k < 0 || k > 7) throw Error(Errc::TooLarge, "distance tables exist for at most 7 vertices");
  static std::mutex mu;
  static std::map<std::pair<int, CoverKind>, std::unique_ptr<std::vector<unsigned char>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{k, kind}];
  if (!slot) slot = std::make_unique<std::vector<unsigned char>>(build_table(k, kind));
  return *slot;
}

std::optional<int> min_odd_cover_exhaustive(const SimpleGraph& g, CoverKind kind, int max_size) {
  const int k = g.n();
  if (k > 8) throw Error(Errc::TooLarge, "exhaustive odd-cover search is limited to 8 vertices");
  if (g.edges().empty()) return max_size >= 0 ? std::optional<int>(0) : std::nullopt;
  if (kind == CoverKind::Cycle && !is_eulerian(g)) return std::nullopt;
  std::uint32_t mask = 0;
  for (const Edge& e : g.edges()) mask |= 1u << edge_bit(k, e.u, e.v);
  if (k <= 7) {
    const int d = odd_cover_distance_table(k, kind)[mask];
    if (d == 255 || d > max_size) return std::nullopt;
    return d;
  }
  const int decidable = kind == CoverKind::Cycle ? 4 : 3;
  const PairTable& t = pair_table(kind);
  auto found = [&](int size) -> bool {
    switch (size) {
      case 1: return std::find(t.gens.begin(), t.gens.end(), mask) != t.gens.end();
      case 2: return t.has(mask);
      case 3:
        return std::any_of(t.gens.begin(), t.gens.end(), [&](std::uint32_t a) { return t.has(mask ^ a); });
      default:
        for (std::size_t i = 0; i < t.gens.size(); ++i) {
          for (std::size_t j = i + 1; j < t.gens.size(); ++j) {
            if (t.has(mask ^ t.gens[i] ^ t.gens[j])) return true;
          }
        }
        return false;
    }
  };
  for (int size = 1; size <= std::min(max_size, decidable); ++size) {
    if (found(size)) return size;
  }
  if (max_size > decidable) throw Error(Errc::TooLarge, "cover size beyond the eight-vertex search depth");
  return std::nullopt;
}

bool is_hamiltonian(const SimpleGraph& g) {
  const int n = g.n();
  if (n > 20) throw Error(Errc::TooLarge, "Hamiltonicity check is limited to 20 vertices");
  if (n < 3) return false;
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  for (int v = 0; v < n; ++v) {
    if (std::popcount(adj[v]) < 2) return false;
  }
  // reach[mask] = set of end vertices of paths from vertex 0 covering mask
  // (mask always contains vertex 0).
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  reach[1] = 1;
  for (std::uint32_t mask = 1; mask <= full; mask += 2) {
    std::uint32_t ends = reach[mask];
    while (ends) {
      const int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t nxt = adj[v] & ~mask;
      while (nxt) {
        const int w = std::countr_zero(nxt);
        nxt &= nxt - 1;
        reach[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return (reach[full] & adj[0] & ~1u) != 0;
}

namespace {

long long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Report verify_certificate(const Partition& p, const Partition& q, const std::vector<CycleSeq>& taus) {
  const auto t0 = std::chrono::steady_clock::now();
  const VerifyResult v = verify_resolution(p, q, taus);
  return {"resolution", v.ok, v.ok ? "length " + std::to_string(taus.size()) : v.reason, ms_since(t0)};
}

Report verify_certificate(const SimpleGraph& g, const OddCoverCert& cert) {
  const auto t0 = std::chrono::steady_clock::now();
  const CheckResult c = check_odd_cover(g, cert);
  const std::string detail =
      c.ok ? std::to_string(cert.parts.size()) + " " + part_kind_name(cert.kind) + " parts" : c.reason;
  return {"odd_cover", c.ok, detail, ms_since(t0)};
}

Report verify_certificate(const SimpleGraph& g, const std::vector<EdgeSet>& linear_forests) {
  const auto t0 = std::chrono::steady_clock::now();
  const CheckResult c = check_linear_forest_decomposition(g, linear_forests);
  const std::string detail = c.ok ? std::to_string(linear_forests.size()) + " linear forests" : c.reason;
  return {"linear_forest_decomposition", c.ok, detail, ms_since(t0)};
}

}  // namespace polyresolve
