#include "cfl/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace cfl {

// ------------------------------------------------------------- DynkinType

std::string DynkinComponent::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

namespace {

DynkinComponent normalize(DynkinComponent c) {
  if (c.rank < 1) throw std::invalid_argument("Dynkin component rank must be positive");
  switch (c.family) {
    case Family::A:
      break;
    case Family::B:
    case Family::C:
      if (c.rank == 1) c.family = Family::A;
      else if (c.rank == 2) c.family = Family::B;
      break;
    case Family::D:
      if (c.rank < 4) throw std::invalid_argument("type D needs rank at least 4");
      break;
    case Family::E:
      if (c.rank < 6 || c.rank > 8) throw std::invalid_argument("type E needs rank 6, 7 or 8");
      break;
    case Family::F:
      if (c.rank != 4) throw std::invalid_argument("type F needs rank 4");
      break;
    case Family::G:
      if (c.rank != 2) throw std::invalid_argument("type G needs rank 2");
      break;
  }
  return c;
}

}  // namespace

DynkinType::DynkinType(std::vector<DynkinComponent> components) : components_(std::move(components)) {
  for (auto& c : components_) c = normalize(c);
  std::sort(components_.begin(), components_.end());
}

DynkinType DynkinType::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (s.empty() || s == "EMPTY") return DynkinType();
  std::vector<DynkinComponent> comps;
  std::size_t pos = 0;
  while (pos < s.size()) {
    char f = s[pos++];
    if (std::string_view("ABCDEFG").find(f) == std::string_view::npos)
      throw std::invalid_argument("unknown Dynkin family in '" + std::string(text) + "'");
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("missing rank in '" + std::string(text) + "'");
    int rank = std::stoi(s.substr(start, pos - start));
    comps.push_back({static_cast<Family>(f), rank});
    if (pos < s.size()) {
      if (s[pos] != 'X') throw std::invalid_argument("expected 'x' between components in '" + std::string(text) + "'");
      ++pos;
      if (pos == s.size()) throw std::invalid_argument("trailing 'x' in '" + std::string(text) + "'");
    }
  }
  return DynkinType(std::move(comps));
}

int DynkinType::rank() const {
  int r = 0;
  for (const auto& c : components_) r += c.rank;
  return r;
}

std::string DynkinType::to_string() const {
  if (components_.empty()) return "empty";
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += 'x';
    out += c.name();
  }
  return out;
}

DynkinType operator*(const DynkinType& a, const DynkinType& b) {
  auto comps = a.components_;
  comps.insert(comps.end(), b.components_.begin(), b.components_.end());
  return DynkinType(std::move(comps));
}

int coxeter_number(const DynkinComponent& c) {
  switch (c.family) {
    case Family::A: return c.rank + 1;
    case Family::B:
    case Family::C: return 2 * c.rank;
    case Family::D: return 2 * c.rank - 2;
    case Family::E: return c.rank == 6 ? 12 : c.rank == 7 ? 18 : 30;
    case Family::F: return 12;
    case Family::G: return 6;
  }
  return 0;
}

// ---------------------------------------------------------- ExchangeMatrix

ExchangeMatrix::ExchangeMatrix(std::size_t rank)
    : rank_(rank), entries_(rank * rank, 0), symmetrizer_(rank, 1) {}

ExchangeMatrix::ExchangeMatrix(const std::vector<std::vector<int>>& rows) : rank_(rows.size()) {
  entries_.reserve(rank_ * rank_);
  for (const auto& row : rows) {
    if (row.size() != rank_) throw std::invalid_argument("exchange matrix must be square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  for (std::size_t i = 0; i < rank_; ++i)
    if ((*this)(i, i) != 0) throw std::invalid_argument("exchange matrix must have zero diagonal");
  derive_symmetrizer();
}

ExchangeMatrix ExchangeMatrix::from_arrows(std::size_t rank, std::span<const ValuedArrow> arrows) {
  std::vector<std::vector<int>> rows(rank, std::vector<int>(rank, 0));
  for (const auto& a : arrows) {
    if (a.from >= rank || a.to >= rank || a.from == a.to)
      throw std::invalid_argument("arrow endpoints out of range or equal");
    if (a.b <= 0 || a.c <= 0) throw std::invalid_argument("arrow values must be positive");
    rows[a.from][a.to] += a.b;
    rows[a.to][a.from] -= a.c;
  }
  return ExchangeMatrix(rows);
}

void ExchangeMatrix::derive_symmetrizer() {
  // Propagate d_j = -d_i M_ij / M_ji along each component as a fraction, then
  // clear denominators.
  std::vector<long> num(rank_, 0), den(rank_, 1);
  for (std::size_t root = 0; root < rank_; ++root) {
    if (num[root] != 0) continue;
    num[root] = 1;
    std::vector<std::size_t> comp{root};
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      for (std::size_t j = 0; j < rank_; ++j) {
        int mij = (*this)(i, j), mji = (*this)(j, i);
        if (mij == 0 && mji == 0) continue;
        if (mij == 0 || mji == 0 || (mij > 0) == (mji > 0))
          throw std::invalid_argument("exchange matrix is not sign-skew-symmetric");
        if (num[j] != 0) continue;
        long n = num[i] * std::abs(mij), d = den[i] * std::abs(mji);
        long g = std::gcd(n, d);
        num[j] = n / g;
        den[j] = d / g;
        comp.push_back(j);
        q.push(j);
      }
    }
    long l = 1;
    for (auto v : comp) l = std::lcm(l, den[v]);
    long g = 0;
    for (auto v : comp) g = std::gcd(g, num[v] * (l / den[v]));
    for (auto v : comp) {
      num[v] = num[v] * (l / den[v]) / g;
      den[v] = 1;
    }
  }
  symmetrizer_.assign(num.begin(), num.end());
  if (!is_skew_symmetrizable()) throw std::invalid_argument("exchange matrix is not skew-symmetrizable");
}

bool ExchangeMatrix::is_skew_symmetrizable() const {
  if (symmetrizer_.size() != rank_) return false;
  for (std::size_t i = 0; i < rank_; ++i) {
    if ((*this)(i, i) != 0 || symmetrizer_[i] <= 0) return false;
    for (std::size_t j = 0; j < rank_; ++j)
      if (static_cast<long>(symmetrizer_[i]) * (*this)(i, j) != -static_cast<long>(symmetrizer_[j]) * (*this)(j, i))
        return false;
  }
  return true;
}

std::vector<std::vector<int>> ExchangeMatrix::rows() const {
  std::vector<std::vector<int>> out(rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    out[i].assign(entries_.begin() + static_cast<long>(i * rank_), entries_.begin() + static_cast<long>((i + 1) * rank_));
  return out;
}

std::vector<ValuedArrow> ExchangeMatrix::arrows() const {
  std::vector<ValuedArrow> out;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      if ((*this)(i, j) > 0) out.push_back({i, j, (*this)(i, j), -(*this)(j, i)});
  return out;
}

ExchangeMatrix ExchangeMatrix::submatrix(std::span<const std::size_t> keep) const {
  ExchangeMatrix out(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    if (keep[a] >= rank_) throw std::out_of_range("submatrix: vertex out of range");
    out.symmetrizer_[a] = symmetrizer_[keep[a]];
    for (std::size_t b = 0; b < keep.size(); ++b) out.at(a, b) = (*this)(keep[a], keep[b]);
  }
  return out;
}

bool ExchangeMatrix::is_acyclic() const {
  std::vector<int> indeg(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      if ((*this)(i, j) > 0) ++indeg[j];
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < rank_; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  std::size_t seen = 0;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    ++seen;
    for (std::size_t j = 0; j < rank_; ++j)
      if ((*this)(i, j) > 0 && --indeg[j] == 0) stack.push_back(j);
  }
  return seen == rank_;
}

std::vector<std::vector<std::size_t>> ExchangeMatrix::components() const {
  std::vector<int> comp(rank_, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t root = 0; root < rank_; ++root) {
    if (comp[root] >= 0) continue;
    std::vector<std::size_t> members;
    std::vector<std::size_t> stack{root};
    comp[root] = static_cast<int>(out.size());
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      members.push_back(i);
      for (std::size_t j = 0; j < rank_; ++j)
        if ((*this)(i, j) != 0 && comp[j] < 0) {
          comp[j] = static_cast<int>(out.size());
          stack.push_back(j);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, std::size_t k) {
  if (k >= m.rank()) throw std::out_of_range("mutate_matrix: vertex out of range");
  ExchangeMatrix out(m);
  const std::size_t r = m.rank();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i == k || j == k) {
        out.at(i, j) = -m(i, j);
      } else {
        int mik = m(i, k), mkj = m(k, j);
        int p = mik * mkj;
        if (p > 0) out.at(i, j) = m(i, j) + (mik > 0 ? p : -p);
      }
    }
  }
  return out;
}

// -------------------------------------------------------------- from_dynkin

namespace {

// An undirected edge {u, v} of a Dynkin diagram with magnitudes |M_uv|, |M_vu|.
struct DiagramEdge {
  std::size_t u, v;
  int uv, vu;
};

std::vector<DiagramEdge> diagram_edges(const DynkinComponent& c) {
  const std::size_t n = static_cast<std::size_t>(c.rank);
  std::vector<DiagramEdge> e;
  auto path = [&](std::size_t len) {
    for (std::size_t i = 0; i + 1 < len; ++i) e.push_back({i, i + 1, 1, 1});
  };
  switch (c.family) {
    case Family::A:
      path(n);
      break;
    case Family::B:
      path(n);
      e.back().vu = 2;
      break;
    case Family::C:
      path(n);
      e.back().uv = 2;
      break;
    case Family::D:
      path(n - 1);
      e.push_back({n - 3, n - 1, 1, 1});
      break;
    case Family::E:
      // Chain 1..n-3 branching at n-3 to n-2, and n-3 -- n-1 -- n.
      path(n - 3);
      e.push_back({n - 4, n - 3, 1, 1});
      e.push_back({n - 4, n - 2, 1, 1});
      e.push_back({n - 2, n - 1, 1, 1});
      break;
    case Family::F:
      path(4);
      e[1].vu = 2;
      break;
    case Family::G:
      e.push_back({0, 1, 1, 3});
      break;
  }
  return e;
}

}  // namespace

ExchangeMatrix from_dynkin(const DynkinType& type, const Orientation& orientation) {
  const std::size_t r = static_cast<std::size_t>(type.rank());
  std::vector<std::vector<int>> rows(r, std::vector<int>(r, 0));
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::vector<DiagramEdge> all;
  std::vector<int> color(r, 0);
  std::size_t offset = 0;
  for (const auto& comp : type.components()) {
    auto local = diagram_edges(comp);
    const std::size_t n = static_cast<std::size_t>(comp.rank);
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto& e : local) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::vector<int> dist(n, -1);
    dist[0] = 0;
    std::queue<std::size_t> q;
    q.push(0);
    while (!q.empty()) {
      auto i = q.front();
      q.pop();
      for (auto j : adj[i])
        if (dist[j] < 0) {
          dist[j] = dist[i] + 1;
          q.push(j);
        }
    }
    for (std::size_t i = 0; i < n; ++i) color[offset + i] = dist[i] % 2;
    for (auto e : local) {
      e.u += offset;
      e.v += offset;
      edges.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
      all.push_back(e);
    }
    offset += n;
  }

  std::map<std::pair<std::size_t, std::size_t>, bool> chosen;  // key (min,max) -> min is source
  for (const auto& [from, to] : orientation) {
    auto key = std::make_pair(std::min(from, to), std::max(from, to));
    if (!edges.count(key)) throw std::invalid_argument("orientation names a pair that is not an edge of the diagram");
    if (chosen.count(key)) throw std::invalid_argument("orientation names an edge twice");
    chosen[key] = from < to;
  }
  for (const auto& e : all) {
    auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
    bool u_source;
    if (auto it = chosen.find(key); it != chosen.end()) u_source = (it->second == (e.u < e.v));
    else u_source = color[e.u] == 0;
    rows[e.u][e.v] = u_source ? e.uv : -e.uv;
    rows[e.v][e.u] = u_source ? -e.vu : e.vu;
  }
  return ExchangeMatrix(rows);
}

// --------------------------------------------------------- recognize_dynkin

namespace {

std::optional<DynkinComponent> recognize_component(const ExchangeMatrix& m, const std::vector<std::size_t>& verts) {
  const std::size_t n = verts.size();
  if (n == 1) return DynkinComponent{Family::A, 1};
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t edge_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> heavy;
  int heavy_product = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      int x = m(verts[a], verts[b]), y = m(verts[b], verts[a]);
      if (x == 0) continue;
      int p = std::abs(x * y);
      if (p > 3) return std::nullopt;
      adj[a].push_back(b);
      adj[b].push_back(a);
      ++edge_count;
      if (p > 1) {
        heavy.push_back({a, b});
        heavy_product = p;
      }
    }
  if (edge_count != n - 1) return std::nullopt;  // connected, so a tree iff n-1 edges
  std::size_t max_deg = 0;
  for (auto& a : adj) max_deg = std::max(max_deg, a.size());
  if (heavy.size() > 1) return std::nullopt;

  if (heavy.empty()) {
    if (max_deg <= 2) return DynkinComponent{Family::A, static_cast<int>(n)};
    if (max_deg > 3) return std::nullopt;
    std::size_t branch = n;
    for (std::size_t i = 0; i < n; ++i)
      if (adj[i].size() == 3) {
        if (branch != n) return std::nullopt;
        branch = i;
      }
    std::vector<int> arms;
    for (auto start : adj[branch]) {
      int len = 1;
      std::size_t prev = branch, cur = start;
      while (adj[cur].size() == 2) {
        std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return DynkinComponent{Family::D, static_cast<int>(n)};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
      return DynkinComponent{Family::E, static_cast<int>(n)};
    return std::nullopt;
  }

  if (max_deg > 2) return std::nullopt;
  if (heavy_product == 3) {
    if (n == 2) return DynkinComponent{Family::G, 2};
    return std::nullopt;
  }
  if (n == 2) return DynkinComponent{Family::B, 2};
  auto [a, b] = heavy.front();
  bool a_end = adj[a].size() == 1, b_end = adj[b].size() == 1;
  if (a_end || b_end) {
    std::size_t end = a_end ? a : b, nb = a_end ? b : a;
    bool long_end = std::abs(m(verts[end], verts[nb])) == 2;
    return DynkinComponent{long_end ? Family::B : Family::C, static_cast<int>(n)};
  }
  if (n == 4) return DynkinComponent{Family::F, 4};
  return std::nullopt;
}

}  // namespace

std::optional<DynkinType> recognize_dynkin(const ExchangeMatrix& m) {
  std::vector<DynkinComponent> comps;
  for (const auto& verts : m.components()) {
    auto c = recognize_component(m, verts);
    if (!c) return std::nullopt;
    comps.push_back(*c);
  }
  return DynkinType(std::move(comps));
}

}  // namespace cfl
