#include "cfl/cluster.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace cfl {

// ---------------------------------------------------------- ClusterRegistry

ClusterRegistry::ClusterRegistry(std::size_t rank) : rank_(rank) {
  for (std::size_t i = 0; i < rank; ++i) intern(LaurentPoly::variable(rank, i));
}

VarId ClusterRegistry::intern(const LaurentPoly& p) {
  if (p.rank() != rank_) throw std::invalid_argument("ClusterRegistry::intern: rank mismatch");
  auto [it, inserted] = index_.try_emplace(p, variables_.size() + 1);
  if (inserted) variables_.push_back(p);
  return it->second;
}

std::optional<VarId> ClusterRegistry::find(const LaurentPoly& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ------------------------------------------------------------------- Seeds

Subcluster Seed::sorted_cluster() const {
  Subcluster out = cluster;
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

LaurentPoly exchange_from(const std::vector<const LaurentPoly*>& vals, const ExchangeMatrix& m, std::size_t k,
                          std::size_t rank) {
  LaurentPoly plus = LaurentPoly::one(rank), minus = LaurentPoly::one(rank);
  for (std::size_t i = 0; i < m.rank(); ++i) {
    int e = m(i, k);
    if (e > 0) plus *= vals[i]->pow(static_cast<unsigned>(e));
    else if (e < 0) minus *= vals[i]->pow(static_cast<unsigned>(-e));
  }
  return plus + minus;
}

std::vector<const LaurentPoly*> seed_values(const ClusterRegistry& reg, const Seed& s) {
  std::vector<const LaurentPoly*> vals;
  for (VarId id : s.cluster) vals.push_back(&reg.expansion(id));
  return vals;
}

bool two_finite(const ExchangeMatrix& m) {
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = i + 1; j < m.rank(); ++j)
      if (std::abs(static_cast<long>(m(i, j)) * m(j, i)) >= 4) return false;
  return true;
}

// Evaluations of cluster variables at random points modulo a Mersenne prime.
// Equal Laurent polynomials have equal fingerprints; distinct ones collide
// only with negligible probability, and verify_exact mode checks every match.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
constexpr std::size_t kPoints = 2;
using Fingerprint = std::array<std::uint64_t, kPoints>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

Fingerprint exchange_fingerprint(const std::vector<Fingerprint>& fps, const Seed& s, std::size_t k) {
  Fingerprint out{};
  for (std::size_t t = 0; t < kPoints; ++t) {
    std::uint64_t plus = 1, minus = 1;
    for (std::size_t i = 0; i < s.cluster.size(); ++i) {
      int e = s.matrix(i, k);
      std::uint64_t v = fps[s.cluster[i] - 1][t];
      if (e > 0) plus = mulmod(plus, powmod(v, static_cast<std::uint64_t>(e)));
      else if (e < 0) minus = mulmod(minus, powmod(v, static_cast<std::uint64_t>(-e)));
    }
    std::uint64_t sum = plus + minus;
    if (sum >= kPrime) sum -= kPrime;
    std::uint64_t den = fps[s.cluster[k] - 1][t];
    if (den == 0) throw std::runtime_error("fingerprint: zero value modulo prime");
    out[t] = mulmod(sum, powmod(den, kPrime - 2));
  }
  return out;
}

}  // namespace

LaurentPoly exchange_polynomial(const ClusterRegistry& reg, const Seed& s, std::size_t k) {
  return exchange_from(seed_values(reg, s), s.matrix, k, reg.rank());
}

Seed mutate_seed(ClusterRegistry& reg, const Seed& s, std::size_t k) {
  if (k >= s.cluster.size()) throw std::out_of_range("mutate_seed: position out of range");
  LaurentPoly fresh = exact_div(exchange_polynomial(reg, s, k), reg.expansion(s.cluster[k]));
  Seed out{s.cluster, mutate_matrix(s.matrix, k)};
  out.cluster[k] = reg.intern(fresh);
  return out;
}

// ------------------------------------------------------------- SeedPattern

std::optional<std::size_t> SeedPattern::find_cluster(const Subcluster& ids) const {
  auto it = cluster_index.find(ids);
  if (it == cluster_index.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> SeedPattern::containing_seeds(const Subcluster& c) const {
  if (c.empty()) {
    std::vector<std::size_t> all(seeds.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }
  for (VarId id : c)
    if (id == 0 || id > seeds_of_variable.size()) return {};
  std::vector<std::size_t> acc = seeds_of_variable[c[0] - 1];
  for (std::size_t i = 1; i < c.size() && !acc.empty(); ++i) {
    const auto& other = seeds_of_variable[c[i] - 1];
    std::vector<std::size_t> next;
    std::set_intersection(acc.begin(), acc.end(), other.begin(), other.end(), std::back_inserter(next));
    acc = std::move(next);
  }
  return acc;
}

bool SeedPattern::compatible(VarId a, VarId b) const {
  Subcluster c = a == b ? Subcluster{a} : Subcluster{std::min(a, b), std::max(a, b)};
  return !containing_seeds(c).empty();
}

Pattern enumerate_pattern(const ExchangeMatrix& m, const EnumerationOptions& opts) {
  const std::size_t r = m.rank();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  Pattern out{ClusterRegistry(r), {}};
  ClusterRegistry& reg = out.registry;
  SeedPattern& pat = out.pattern;

  std::mt19937_64 rng(0x5eedc1u);
  std::uniform_int_distribution<std::uint64_t> dist(2, kPrime - 1);
  std::vector<Fingerprint> fps;
  std::map<Fingerprint, VarId> by_fingerprint;
  for (std::size_t i = 0; i < r; ++i) {
    Fingerprint f;
    for (auto& v : f) v = dist(rng);
    fps.push_back(f);
    by_fingerprint.emplace(f, i + 1);
  }

  Seed initial;
  for (std::size_t i = 0; i < r; ++i) initial.cluster.push_back(i + 1);
  initial.matrix = m;
  pat.seeds.push_back(initial);
  pat.neighbors.emplace_back(r, none);
  pat.cluster_index.emplace(initial.sorted_cluster(), 0);

  auto finish = [&](bool finite, std::string reason) {
    pat.finite = finite;
    pat.reason = std::move(reason);
    pat.seeds_of_variable.assign(reg.size(), {});
    for (std::size_t s = 0; s < pat.seeds.size(); ++s)
      for (VarId id : pat.seeds[s].cluster) pat.seeds_of_variable[id - 1].push_back(s);
    return std::move(out);
  };
  const std::string infinite_reason = "exchange matrix with |M_ij * M_ji| >= 4 reached: infinite type";
  if (!two_finite(m)) return finish(false, infinite_reason);

  for (std::size_t s = 0; s < pat.seeds.size(); ++s) {
    for (std::size_t k = 0; k < r; ++k) {
      if (pat.neighbors[s][k] != none) continue;
      const Seed cur = pat.seeds[s];
      Fingerprint f = exchange_fingerprint(fps, cur, k);
      VarId id;
      if (auto it = by_fingerprint.find(f); it != by_fingerprint.end()) {
        id = it->second;
        if (opts.verify_exact) {
          LaurentPoly exact = exact_div(exchange_polynomial(reg, cur, k), reg.expansion(cur.cluster[k]));
          if (exact != reg.expansion(id)) throw std::logic_error("fingerprint collision between distinct cluster variables");
        }
      } else {
        LaurentPoly exact = exact_div(exchange_polynomial(reg, cur, k), reg.expansion(cur.cluster[k]));
        std::size_t before = reg.size();
        id = reg.intern(exact);
        if (reg.size() == before) throw std::logic_error("known cluster variable with a new fingerprint");
        fps.push_back(f);
        by_fingerprint.emplace(f, id);
      }

      Seed next{cur.cluster, mutate_matrix(cur.matrix, k)};
      next.cluster[k] = id;
      Subcluster key = next.sorted_cluster();
      std::size_t t;
      if (auto it = pat.cluster_index.find(key); it != pat.cluster_index.end()) {
        t = it->second;
        const Seed& known = pat.seeds[t];
        std::map<VarId, std::size_t> pos;
        for (std::size_t i = 0; i < r; ++i) pos[known.cluster[i]] = i;
        for (std::size_t a = 0; a < r; ++a)
          for (std::size_t b = 0; b < r; ++b)
            if (next.matrix(a, b) != known.matrix(pos[next.cluster[a]], pos[next.cluster[b]]))
              throw std::logic_error("two seeds share a cluster but not an exchange matrix");
      } else {
        if (pat.seeds.size() >= opts.cap)
          return finish(false, "seed cap of " + std::to_string(opts.cap) + " exceeded");
        if (!two_finite(next.matrix)) return finish(false, infinite_reason);
        t = pat.seeds.size();
        pat.seeds.push_back(std::move(next));
        pat.neighbors.emplace_back(r, none);
        pat.cluster_index.emplace(std::move(key), t);
      }
      pat.neighbors[s][k] = t;
      const Seed& back = pat.seeds[t];
      for (std::size_t i = 0; i < r; ++i)
        if (back.cluster[i] == id) pat.neighbors[t][i] = s;
    }
  }
  return finish(true, "");
}

Subcluster make_subcluster(const SeedPattern& p, std::vector<VarId> ids) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::invalid_argument("subcluster has repeated variables");
  if (!p.is_subcluster(ids)) throw std::invalid_argument("variables are not contained in a common cluster");
  return ids;
}

std::vector<Subcluster> enumerate_subclusters(const SeedPattern& p) {
  auto by_size = [](const Subcluster& a, const Subcluster& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  std::set<Subcluster, decltype(by_size)> all(by_size);
  all.insert(Subcluster{});
  for (const auto& s : p.seeds) {
    Subcluster c = s.sorted_cluster();
    const std::size_t r = c.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask) {
      Subcluster sub;
      for (std::size_t i = 0; i < r; ++i)
        if (mask >> i & 1) sub.push_back(c[i]);
      all.insert(std::move(sub));
    }
  }
  return {all.begin(), all.end()};
}

// ------------------------------------------------------------------ charts

std::vector<LaurentPoly> expand_in_seed(const ClusterRegistry& reg, const SeedPattern& p, std::size_t seed) {
  const std::size_t r = p.rank();
  const std::size_t n = reg.size();
  std::vector<std::optional<LaurentPoly>> known(n);
  std::size_t count = 0;
  for (std::size_t i = 0; i < r; ++i) {
    known[p.seeds[seed].cluster[i] - 1] = LaurentPoly::variable(r, i);
    ++count;
  }
  std::vector<bool> visited(p.seeds.size(), false);
  std::deque<std::size_t> queue{seed};
  visited[seed] = true;
  while (!queue.empty() && count < n) {
    std::size_t s = queue.front();
    queue.pop_front();
    const Seed& cur = p.seeds[s];
    for (std::size_t k = 0; k < r; ++k) {
      std::size_t t = p.neighbors[s][k];
      if (t >= p.seeds.size() || visited[t]) continue;
      visited[t] = true;
      queue.push_back(t);
      VarId fresh = 0;
      for (VarId id : p.seeds[t].cluster)
        if (std::find(cur.cluster.begin(), cur.cluster.end(), id) == cur.cluster.end()) fresh = id;
      if (fresh == 0 || known[fresh - 1]) continue;
      std::vector<const LaurentPoly*> vals;
      for (VarId id : cur.cluster) vals.push_back(&*known[id - 1]);
      known[fresh - 1] = exact_div(exchange_from(vals, cur.matrix, k, r), *vals[k]);
      ++count;
    }
  }
  if (count < n) throw std::logic_error("expand_in_seed: exchange graph does not reach every variable");
  std::vector<LaurentPoly> out;
  out.reserve(n);
  for (auto& v : known) out.push_back(std::move(*v));
  return out;
}

const std::vector<LaurentPoly>& Atlas::chart(std::size_t seed) const {
  std::lock_guard lock(mu_);
  auto& slot = charts_[seed];
  if (!slot) {
    if (seed == 0) slot = std::make_unique<std::vector<LaurentPoly>>(reg_->variables());
    else slot = std::make_unique<std::vector<LaurentPoly>>(expand_in_seed(*reg_, *p_, seed));
  }
  return *slot;
}

// ---------------------------------------------------------------- deletion

Deletion delete_subcluster_at(const SeedPattern& p, const Subcluster& c, std::size_t seed) {
  Deletion d;
  d.seed = seed;
  const Seed& s = p.seeds.at(seed);
  for (std::size_t i = 0; i < s.cluster.size(); ++i)
    if (!std::binary_search(c.begin(), c.end(), s.cluster[i])) d.kept.push_back(i);
  if (s.cluster.size() - d.kept.size() != c.size())
    throw std::invalid_argument("delete_subcluster: seed does not contain the subcluster");
  d.matrix = s.matrix.submatrix(d.kept);
  d.type = recognize_dynkin(d.matrix);
  return d;
}

Deletion delete_subcluster(const SeedPattern& p, const Subcluster& c) {
  auto seeds = p.containing_seeds(c);
  if (seeds.empty()) throw std::invalid_argument("delete_subcluster: not a subcluster");
  for (std::size_t s : seeds) {
    Deletion d = delete_subcluster_at(p, c, s);
    if (d.matrix.is_acyclic()) return d;
  }
  return delete_subcluster_at(p, c, seeds.front());
}

LaurentPoly deletion_map_image(const Atlas& atlas, const Deletion& d, const Subcluster& c, VarId y) {
  const auto& chart = atlas.chart(d.seed);
  const Seed& s = atlas.pattern().seeds[d.seed];
  std::vector<std::size_t> drop;
  for (std::size_t i = 0; i < s.cluster.size(); ++i)
    if (std::binary_search(c.begin(), c.end(), s.cluster[i])) drop.push_back(i);
  return chart.at(y - 1).specialize_to_one(drop);
}

LaurentPoly deletion_map_image(const Atlas& atlas, const Subcluster& c, VarId y) {
  return deletion_map_image(atlas, delete_subcluster(atlas.pattern(), c), c, y);
}

}  // namespace cfl
