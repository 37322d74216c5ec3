#include "polyresolve/permutation.hpp"

#include <algorithm>
#include <functional>

#include "polyresolve/error.hpp"

namespace polyresolve {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int y : image_) {
    if (y < 0 || y >= size() || seen[y]) throw Error(Errc::InvalidInput, "image is not a bijection");
    seen[y] = 1;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> image(m);
  for (int i = 0; i < m; ++i) image[i] = i;
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

Permutation Permutation::from_cycle(int m, const CycleSeq& cycle) {
  Permutation p = identity(m);
  std::vector<char> seen(m, 0);
  for (int x : cycle) {
    if (x < 0 || x >= m || seen[x]) throw Error(Errc::InvalidInput, "cycle has repeated or out-of-range items");
    seen[x] = 1;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    p.image_[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv = identity(size());
  for (int x = 0; x < size(); ++x) inv.image_[image_[x]] = x;
  return inv;
}

std::vector<int> Permutation::support() const {
  std::vector<int> s;
  for (int x = 0; x < size(); ++x) {
    if (image_[x] != x) s.push_back(x);
  }
  return s;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < size(); ++x) {
    if (image_[x] != x) return false;
  }
  return true;
}

std::vector<CycleSeq> Permutation::cycles() const {
  std::vector<CycleSeq> out;
  std::vector<char> seen(size(), 0);
  for (int x = 0; x < size(); ++x) {
    if (seen[x] || image_[x] == x) continue;
    CycleSeq c;
    for (int y = x; !seen[y]; y = image_[y]) {
      seen[y] = 1;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool Permutation::is_cycle() const { return cycles().size() <= 1; }

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(Errc::SizeMismatch, "permutations of different sizes");
  std::vector<int> image(a.size());
  for (int x = 0; x < a.size(); ++x) image[x] = a(b(x));
  return Permutation(std::move(image));
}

Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

Partition::Partition(int n, std::vector<int> assign) : n_(n), assign_(std::move(assign)) {
  for (int c : assign_) {
    if (c < 0 || c >= n_) throw Error(Errc::InvalidInput, "cluster id out of range");
  }
}

std::vector<int> Partition::shape() const {
  std::vector<int> s(n_, 0);
  for (int c : assign_) ++s[c];
  return s;
}

std::vector<std::vector<int>> Partition::clusters() const {
  std::vector<std::vector<int>> out(n_);
  for (int x = 0; x < m(); ++x) out[assign_[x]].push_back(x);
  return out;
}

Partition Partition::after(const Permutation& pi) const {
  if (pi.size() != m()) throw Error(Errc::SizeMismatch, "permutation and partition sizes differ");
  std::vector<int> assign(m());
  for (int x = 0; x < m(); ++x) assign[x] = assign_[pi(x)];
  Partition q;
  q.n_ = n_;
  q.assign_ = std::move(assign);
  return q;
}

Partition Partition::after_cycle(const CycleSeq& cycle) const {
  Partition q = *this;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    q.assign_[cycle[i]] = assign_[cycle[(i + 1) % cycle.size()]];
  }
  return q;
}

std::vector<int> sorted_shape(const Partition& p) {
  auto s = p.shape();
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

bool same_shape(const Partition& p, const Partition& q) {
  return p.m() == q.m() && p.n() == q.n() && p.shape() == q.shape();
}

bool is_p_balanced(const Permutation& pi, const Partition& p) {
  if (pi.size() != p.m()) throw Error(Errc::SizeMismatch, "permutation and partition sizes differ");
  std::vector<char> hit(p.n(), 0);
  for (int x : pi.support()) {
    if (hit[p(x)]) return false;
    hit[p(x)] = 1;
  }
  return true;
}

bool is_p_cycle(const Permutation& sigma, const Partition& p) {
  return is_p_balanced(sigma, p) && sigma.is_cycle();
}

bool is_p_cycle(const CycleSeq& sigma, const Partition& p) {
  if (sigma.size() <= 1) {
    return sigma.empty() || (sigma[0] >= 0 && sigma[0] < p.m());
  }
  std::vector<char> item_seen(p.m(), 0);
  std::vector<char> cluster_seen(p.n(), 0);
  for (int x : sigma) {
    if (x < 0 || x >= p.m() || item_seen[x] || cluster_seen[p(x)]) return false;
    item_seen[x] = 1;
    cluster_seen[p(x)] = 1;
  }
  return true;
}

std::vector<CycleSeq> drop_trivial(std::vector<CycleSeq> cycles) {
  std::erase_if(cycles, [](const CycleSeq& c) { return c.size() <= 1; });
  return cycles;
}

CycleSeq canonical_rotation(CycleSeq cycle) {
  if (cycle.empty()) return cycle;
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

Digraph cdg(const Partition& p, const Partition& q) {
  if (p.m() != q.m() || p.n() != q.n()) throw Error(Errc::SizeMismatch, "partitions of different sizes");
  return Digraph(p.n(), p.assignment(), q.assignment());
}

Partition replay(const Partition& p, std::span<const CycleSeq> taus) {
  Partition cur = p;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (!is_p_cycle(taus[i], cur)) {
      throw Error(Errc::InvalidResolution, "step " + std::to_string(i) + " is not a cycle of the current partition",
                  static_cast<int>(i));
    }
    cur = cur.after_cycle(taus[i]);
  }
  return cur;
}

namespace {

CycleSeq normalize_trivial(const CycleSeq& c) { return c.size() <= 1 ? CycleSeq{} : c; }

CycleSeq map_items(const Permutation& f, const CycleSeq& c) {
  CycleSeq out;
  out.reserve(c.size());
  for (int x : c) out.push_back(f(x));
  return out;
}

}  // namespace

Resolution resolution_from_decomposition(const Partition& p, std::span<const CycleSeq> sigmas) {
  const int m = p.m();
  Resolution r{p, {}};
  // prefix_sigma = s_{i-1} ... s_1 ; prefix_tau = t_1 ... t_{i-1}.
  Permutation prefix_sigma = Permutation::identity(m);
  Permutation prefix_tau = Permutation::identity(m);
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    if (!is_p_cycle(sigmas[i], p)) {
      throw Error(Errc::NotPCycle, "factor " + std::to_string(i) + " is not a cycle of the start partition",
                  static_cast<int>(i));
    }
    const CycleSeq sigma = normalize_trivial(sigmas[i]);
    // Conjugation relabels the cycle entries: P^-1 (x_1 ... x_t) P = (P^-1 x_1 ... P^-1 x_t).
    CycleSeq tau = map_items(prefix_sigma.inverse(), sigma);
    const Permutation sigma_perm = Permutation::from_cycle(m, sigma);
    const Permutation tau_perm = Permutation::from_cycle(m, tau);
    prefix_sigma = sigma_perm * prefix_sigma;
    prefix_tau = prefix_tau * tau_perm;
    ensure(prefix_sigma == prefix_tau, "prefix identity t_1...t_i = s_i...s_1 failed");
    r.taus.push_back(std::move(tau));
  }
  return r;
}

std::vector<CycleSeq> decomposition_from_resolution(const Resolution& r) {
  const Partition& p = r.start;
  const int m = p.m();
  std::vector<CycleSeq> sigmas;
  Partition cur = p;
  Permutation prefix_tau = Permutation::identity(m);    // t_1 ... t_{i-1}
  Permutation prefix_sigma = Permutation::identity(m);  // s_{i-1} ... s_1
  for (std::size_t i = 0; i < r.taus.size(); ++i) {
    if (!is_p_cycle(r.taus[i], cur)) {
      throw Error(Errc::InvalidResolution, "step " + std::to_string(i) + " is not a cycle of the current partition",
                  static_cast<int>(i));
    }
    const CycleSeq tau = normalize_trivial(r.taus[i]);
    CycleSeq sigma = map_items(prefix_tau, tau);
    ensure(is_p_cycle(sigma, p), "conjugated step is not a cycle of the start partition");
    prefix_tau = prefix_tau * Permutation::from_cycle(m, tau);
    prefix_sigma = Permutation::from_cycle(m, sigma) * prefix_sigma;
    ensure(prefix_sigma == prefix_tau, "prefix identity t_1...t_i = s_i...s_1 failed");
    cur = cur.after_cycle(tau);
    sigmas.push_back(std::move(sigma));
  }
  return sigmas;
}

VerifyResult verify_resolution(const Partition& p, const Partition& q,
                               std::span<const CycleSeq> taus) {
  if (p.m() != q.m() || p.n() != q.n()) return {false, "start and target partitions have different sizes"};
  Partition cur = p;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (!is_p_cycle(taus[i], cur)) {
      return {false, "step " + std::to_string(i) + " is not a cycle of the current partition"};
    }
    cur = cur.after_cycle(taus[i]);
  }
  if (!(cur == q)) return {false, "replayed partition differs from the target"};
  return {true, ""};
}

}  // namespace polyresolve
