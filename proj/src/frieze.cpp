#include "cfl/frieze.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cfl {

namespace detail {

std::vector<std::size_t> topological_order(const ExchangeMatrix& base) {
  const std::size_t r = base.rank();
  std::vector<int> indeg(r, 0);
  for (std::size_t w = 0; w < r; ++w)
    for (std::size_t v = 0; v < r; ++v)
      if (base(w, v) > 0) ++indeg[v];
  std::vector<std::size_t> order, ready;
  for (std::size_t v = r; v-- > 0;)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    std::size_t w = ready.back();
    ready.pop_back();
    order.push_back(w);
    for (std::size_t v = r; v-- > 0;)
      if (base(w, v) > 0 && --indeg[v] == 0) ready.push_back(v);
  }
  if (order.size() != r) throw std::invalid_argument("knitting needs an acyclic quiver");
  return order;
}

}  // namespace detail

namespace {

using detail::topological_order;

Integer divide(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("frieze value is zero");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) throw std::domain_error("frieze value is not an integer");
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Rational divide(const Rational& num, const Rational& den) {
  if (sgn(den) == 0) throw std::domain_error("frieze value is zero");
  return num / den;
}

LaurentPoly divide(const LaurentPoly& num, const LaurentPoly& den) { return exact_div(num, den); }

void check_value(const Integer& v) {
  if (sgn(v) <= 0) throw std::domain_error("frieze value is not positive");
}
void check_value(const Rational& v) {
  if (sgn(v) <= 0) throw std::domain_error("frieze value is not positive");
}
void check_value(const LaurentPoly& v) {
  if (v.is_zero()) throw std::domain_error("frieze value is zero");
}

template <class T>
std::vector<T> step_forward(const ExchangeMatrix& base, const std::vector<std::size_t>& topo, const std::vector<T>& prev,
                            const T& one) {
  std::vector<T> next(prev.size());
  for (std::size_t v : topo) {
    T rhs = detail::mesh_rhs<T>(base, v, [&](std::size_t w) { return next[w]; }, [&](std::size_t w) { return prev[w]; },
                                one);
    next[v] = divide(rhs, prev[v]);
    check_value(next[v]);
  }
  return next;
}

template <class T>
std::vector<T> step_backward(const ExchangeMatrix& base, const std::vector<std::size_t>& topo,
                             const std::vector<T>& next, const T& one) {
  std::vector<T> prev(next.size());
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    std::size_t v = *it;
    T rhs = detail::mesh_rhs<T>(base, v, [&](std::size_t w) { return next[w]; }, [&](std::size_t w) { return prev[w]; },
                                one);
    prev[v] = divide(rhs, next[v]);
    check_value(prev[v]);
  }
  return prev;
}

template <class T>
Frieze<T> knit_impl(const ExchangeMatrix& base, const std::vector<T>& initial, std::size_t max_steps, const T& one) {
  if (initial.size() != base.rank()) throw std::invalid_argument("initial slice has the wrong length");
  for (const auto& v : initial) check_value(v);
  const auto topo = topological_order(base);
  Frieze<T> f;
  f.base = base;
  f.type = recognize_dynkin(base);
  f.slices.push_back(initial);
  if (base.rank() == 0) {
    f.period = 1;
    return f;
  }
  const std::size_t cap = max_steps ? max_steps : period_cap(base);
  for (std::size_t step = 1; step <= cap; ++step) {
    auto next = step_forward(base, topo, f.slices.back(), one);
    if (next == initial) {
      f.period = step;
      return f;
    }
    f.slices.push_back(std::move(next));
  }
  throw std::runtime_error("initial slice did not recur within " + std::to_string(cap) + " steps");
}

}  // namespace

std::size_t period_cap(const ExchangeMatrix& base) {
  auto type = recognize_dynkin(base);
  if (!type) return 1024;
  std::size_t l = 1;
  for (const auto& c : type->components()) l = std::lcm(l, static_cast<std::size_t>(coxeter_number(c) + 2));
  return 4 * l;
}

IntFrieze knit(const ExchangeMatrix& base, const std::vector<Integer>& initial, std::size_t max_steps) {
  return knit_impl<Integer>(base, initial, max_steps, Integer(1));
}

RationalFrieze knit(const ExchangeMatrix& base, const std::vector<Rational>& initial, std::size_t max_steps) {
  return knit_impl<Rational>(base, initial, max_steps, Rational(1));
}

LaurentFrieze knit(const ExchangeMatrix& base, const std::vector<LaurentPoly>& initial, std::size_t max_steps) {
  std::size_t rank = initial.empty() ? 0 : initial.front().rank();
  return knit_impl<LaurentPoly>(base, initial, max_steps, LaurentPoly::one(rank));
}

std::vector<std::vector<Rational>> knit_window(const ExchangeMatrix& base, const std::vector<Rational>& initial,
                                               long first, long last) {
  if (first > 0 || last < 0) throw std::invalid_argument("knit_window: window must contain slice 0");
  if (initial.size() != base.rank()) throw std::invalid_argument("initial slice has the wrong length");
  const auto topo = topological_order(base);
  std::vector<std::vector<Rational>> left{initial}, right;
  for (long m = -1; m >= first; --m) left.push_back(step_backward(base, topo, left.back(), Rational(1)));
  std::vector<Rational> cur = initial;
  for (long m = 1; m <= last; ++m) {
    cur = step_forward(base, topo, cur, Rational(1));
    right.push_back(cur);
  }
  std::reverse(left.begin(), left.end());
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

bool satisfies_mesh(const ExchangeMatrix& base, const std::vector<std::vector<Rational>>& columns) {
  for (std::size_t j = 1; j < columns.size(); ++j)
    for (std::size_t v = 0; v < base.rank(); ++v) {
      Rational rhs = detail::mesh_rhs<Rational>(base, v, [&](std::size_t w) { return columns[j][w]; },
                                                [&](std::size_t w) { return columns[j - 1][w]; }, Rational(1));
      if (columns[j][v] * columns[j - 1][v] != rhs) return false;
    }
  return true;
}

LaurentFrieze general_frieze(const ClusterRegistry& reg, const SeedPattern& p) {
  const std::size_t r = reg.rank();
  std::vector<LaurentPoly> initial;
  for (std::size_t i = 0; i < r; ++i) initial.push_back(LaurentPoly::variable(r, i));
  LaurentFrieze gf = knit(p.seeds.front().matrix, initial);
  general_frieze_ids(reg, gf);
  return gf;
}

std::vector<std::vector<VarId>> general_frieze_ids(const ClusterRegistry& reg, const LaurentFrieze& gf) {
  std::vector<std::vector<VarId>> out;
  for (const auto& slice : gf.slices) {
    std::vector<VarId> ids;
    for (const auto& v : slice) {
      auto id = reg.find(v);
      if (!id) throw std::logic_error("general frieze value is not a known cluster variable: " + v.to_string());
      ids.push_back(*id);
    }
    out.push_back(std::move(ids));
  }
  return out;
}

namespace {

template <class T>
void reduce_period(Frieze<T>& f) {
  for (std::size_t p = 1; p < f.period; ++p) {
    if (f.period % p) continue;
    bool ok = true;
    for (std::size_t m = p; m < f.period && ok; ++m) ok = f.slices[m] == f.slices[m - p];
    if (ok) {
      f.slices.resize(p);
      f.period = p;
      return;
    }
  }
}

}  // namespace

IntFrieze specialize(const LaurentFrieze& gf, const FriezePoint& fp) {
  IntFrieze f;
  f.base = gf.base;
  f.type = gf.type;
  f.period = gf.period;
  for (const auto& slice : gf.slices) {
    std::vector<Integer> values;
    for (const auto& p : slice) {
      Rational q = p.evaluate(std::span<const Integer>(fp.values));
      if (q.get_den() != 1 || sgn(q) <= 0) throw std::domain_error("specialize: not a frieze point");
      values.push_back(q.get_num());
    }
    f.slices.push_back(std::move(values));
  }
  reduce_period(f);
  return f;
}

std::vector<FriezePoint> find_frieze_points(const ClusterRegistry& reg, long bound) {
  const std::size_t r = reg.rank();
  std::vector<std::vector<SplitLaurent>> by_level(r);
  for (const auto& p : reg.variables()) {
    auto s = p.support();
    if (s.size() <= 1 && p.is_monomial()) continue;  // an initial variable
    std::size_t level = s.empty() ? 0 : s.back();
    by_level[level].emplace_back(p);
  }
  std::vector<FriezePoint> out;
  std::vector<Integer> point(r, 1);
  Integer value;
  auto dfs = [&](auto& self, std::size_t depth) -> void {
    if (depth == r) {
      out.push_back({point});
      return;
    }
    for (long x = 1; x <= bound; ++x) {
      point[depth] = x;
      bool ok = true;
      for (const auto& s : by_level[depth])
        if (!s.evaluate_integral(point, value) || sgn(value) <= 0) {
          ok = false;
          break;
        }
      if (ok) self(self, depth + 1);
    }
  };
  if (r == 0) out.push_back({});
  else dfs(dfs, 0);
  return out;
}

FriezeEnumeration enumerate_and_check(const ExchangeMatrix& base, const FriezeSearch& search) {
  FriezeEnumeration out;
  out.bound = search.bound > 0 ? search.bound : default_bound(base);
  FriezeSearch s = search;
  s.bound = out.bound;
  out.friezes = enumerate_friezes(base, s);
  if (auto type = recognize_dynkin(base)) {
    out.expected = frieze_count_closed_form(*type);
    if (out.expected && out.expected->value != static_cast<long>(out.friezes.size())) {
      out.diagnostic = "found " + std::to_string(out.friezes.size()) + " friezes of type " + type->to_string() +
                       " with bound " + std::to_string(out.bound) + ", but the closed form gives " +
                       out.expected->value.get_str() + (out.expected->conjectural ? " (conjectural)" : "") +
                       "; the bound may be too small";
    }
  }
  return out;
}

FriezeClass classify_frieze(const ClusterRegistry& reg, const SeedPattern& p, const IntFrieze& f) {
  if (!(f.base == p.seeds.front().matrix)) throw std::invalid_argument("frieze base differs from the pattern's initial matrix");
  FriezeClass out;
  const auto& point = f.slices.front();
  Integer value;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (!SplitLaurent(reg.variables()[i]).evaluate_integral(point, value) || sgn(value) <= 0)
      throw std::domain_error("classify_frieze: the initial slice is not a frieze point");
    if (value == 1) out.face.subcluster.push_back(i + 1);
  }
  if (!p.is_subcluster(out.face.subcluster)) throw std::logic_error("variables equal to 1 do not form a subcluster");
  out.is_unitary = out.face.subcluster.size() == reg.rank();
  return out;
}

IntFrieze unitary_extension(const Atlas& atlas, const Deletion& d, const Subcluster& c, const IntFrieze& inner) {
  if (!(inner.base == d.matrix)) {
    auto inner_type = recognize_dynkin(inner.base);
    bool same = inner_type && d.type && *inner_type == *d.type;
    throw std::invalid_argument(same ? "inner frieze has the deletion's type but a different orientation"
                                     : "inner frieze type does not match the deletion");
  }
  const SeedPattern& p = atlas.pattern();
  const Seed& seed = p.seeds.at(d.seed);
  const std::size_t r = p.rank();
  std::vector<Rational> coords(r, Rational(1));
  for (std::size_t j = 0; j < d.kept.size(); ++j) coords[d.kept[j]] = inner.slices.front()[j];
  for (std::size_t pos : d.kept)
    if (std::binary_search(c.begin(), c.end(), seed.cluster[pos]))
      throw std::invalid_argument("subcluster does not match the deletion");
  if (d.kept.size() + c.size() != r) throw std::invalid_argument("subcluster does not match the deletion");
  RationalPoint pt(coords);
  const auto& chart = atlas.chart(d.seed);
  std::vector<Integer> initial;
  for (std::size_t i = 0; i < r; ++i) {
    Rational v = chart[i].evaluate(pt);
    if (v.get_den() != 1) throw std::domain_error("unitary extension is not integral");
    initial.push_back(v.get_num());
  }
  return knit(p.seeds.front().matrix, initial);
}

IntFrieze unitary_extension(const Atlas& atlas, const Subcluster& c, const IntFrieze& inner) {
  return unitary_extension(atlas, delete_subcluster(atlas.pattern(), c), c, inner);
}

IntFrieze restrict_to_deletion(const Atlas& atlas, const Deletion& d, const IntFrieze& f) {
  const Seed& seed = atlas.pattern().seeds.at(d.seed);
  const auto& point = f.slices.front();
  std::vector<Integer> inner;
  Integer value;
  for (std::size_t pos : d.kept) {
    if (!SplitLaurent(atlas.registry().expansion(seed.cluster[pos])).evaluate_integral(point, value))
      throw std::domain_error("restrict_to_deletion: not a frieze point");
    inner.push_back(value);
  }
  return knit(d.matrix, inner);
}

}  // namespace cfl
