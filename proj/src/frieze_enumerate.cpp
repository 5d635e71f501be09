#include <algorithm>
#include <atomic>
#include <deque>
#include <thread>

#include "cfl/frieze.hpp"

namespace cfl {

namespace {

// Knitting a window of slices -L..L from a partially assigned initial slice.
// Each window cell is computed as soon as every cell it depends on is known,
// so a branch of the search dies at the first non-integral value.
struct Rule {
  std::size_t target;
  std::size_t divisor;
  std::vector<std::pair<std::size_t, int>> factors;
};

struct Plan {
  std::size_t rank = 0;
  long half_width = 0;
  std::vector<std::size_t> order;        // assignment order of initial vertices
  std::vector<std::vector<Rule>> rules;  // rules[d]: computable once order[0..d] are set

  std::size_t index(long m, std::size_t v) const { return static_cast<std::size_t>(m + half_width) * rank + v; }
  std::size_t cells() const { return static_cast<std::size_t>(2 * half_width + 1) * rank; }
};

Plan make_plan(const ExchangeMatrix& base) {
  Plan plan;
  const std::size_t r = base.rank();
  plan.rank = r;
  long h = 2;
  if (auto type = recognize_dynkin(base))
    for (const auto& c : type->components()) h = std::max<long>(h, coxeter_number(c));
  plan.half_width = (h + 2) / 2 + 1;

  std::vector<bool> seen(r, false);
  for (std::size_t root = 0; root < r; ++root) {
    if (seen[root]) continue;
    std::deque<std::size_t> q{root};
    seen[root] = true;
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop_front();
      plan.order.push_back(v);
      for (std::size_t w = 0; w < r; ++w)
        if (base(v, w) != 0 && !seen[w]) {
          seen[w] = true;
          q.push_back(w);
        }
    }
  }

  std::vector<long> level(plan.cells(), -1);
  for (std::size_t d = 0; d < r; ++d) level[plan.index(0, plan.order[d])] = static_cast<long>(d);
  plan.rules.assign(r, {});
  const auto topo = detail::topological_order(base);
  auto add = [&](long m, std::size_t v, long prev_m, long same_m, long other_m) {
    // same_m carries the factors with M(w,v) > 0, other_m those with M(w,v) < 0.
    Rule rule{plan.index(m, v), plan.index(prev_m, v), {}};
    long lv = level[rule.divisor];
    for (std::size_t w = 0; w < r; ++w) {
      int e = base(w, v);
      if (e == 0) continue;
      std::size_t cell = e > 0 ? plan.index(same_m, w) : plan.index(other_m, w);
      rule.factors.emplace_back(cell, std::abs(e));
      lv = std::max(lv, level[cell]);
    }
    level[rule.target] = lv;
    plan.rules[static_cast<std::size_t>(lv)].push_back(std::move(rule));
  };
  for (long m = 1; m <= plan.half_width; ++m)
    for (std::size_t v : topo) add(m, v, m - 1, m, m - 1);
  for (long m = -1; m >= -plan.half_width; --m)
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) add(m, *it, m + 1, m + 1, m);
  return plan;
}

class Searcher {
 public:
  Searcher(const ExchangeMatrix& base, const Plan& plan, long bound)
      : base_(base), plan_(plan), bound_(bound), vals_(plan.cells(), 0) {}

  /// Explores the subtree with the first assigned vertex fixed to x.
  std::vector<IntFrieze> run(long x) {
    found_.clear();
    if (plan_.rank == 0) {
      found_.push_back(knit(base_, std::vector<Integer>{}));
      return std::move(found_);
    }
    if (assign(0, x)) descend(1);
    return std::move(found_);
  }

 private:
  bool assign(std::size_t depth, long x) {
    vals_[plan_.index(0, plan_.order[depth])] = x;
    for (const auto& rule : plan_.rules[depth]) {
      num_ = 1;
      for (const auto& [cell, e] : rule.factors) {
        if (e == 1) {
          num_ *= vals_[cell];
        } else {
          mpz_pow_ui(pow_.get_mpz_t(), vals_[cell].get_mpz_t(), static_cast<unsigned long>(e));
          num_ *= pow_;
        }
      }
      num_ += 1;
      const Integer& den = vals_[rule.divisor];
      if (!mpz_divisible_p(num_.get_mpz_t(), den.get_mpz_t())) return false;
      mpz_divexact(vals_[rule.target].get_mpz_t(), num_.get_mpz_t(), den.get_mpz_t());
    }
    return true;
  }

  void descend(std::size_t depth) {
    if (depth == plan_.rank) {
      std::vector<Integer> initial(plan_.rank);
      for (std::size_t v = 0; v < plan_.rank; ++v) initial[v] = vals_[plan_.index(0, v)];
      try {
        found_.push_back(knit(base_, initial));
      } catch (const std::domain_error&) {
      }
      return;
    }
    for (long x = 1; x <= bound_; ++x)
      if (assign(depth, x)) descend(depth + 1);
  }

  const ExchangeMatrix& base_;
  const Plan& plan_;
  long bound_;
  std::vector<Integer> vals_;
  std::vector<IntFrieze> found_;
  Integer num_, pow_;
};

}  // namespace

long default_bound(const ExchangeMatrix& base) {
  if (base.rank() <= 2) return 32;
  auto type = recognize_dynkin(base);
  if (!type) return 64;
  // Largest entries of any positive integral frieze: 307 for F4 and E6, 272
  // for B6, 103 for B5 and D6. Every translate of a frieze is a frieze, so the
  // bound must cover the largest entry, not just the initial slice.
  long bound = 64;
  for (const auto& c : type->components()) {
    if (c.family == Family::F || c.family == Family::E) bound = std::max(bound, 320L);
    if ((c.family == Family::B || c.family == Family::C) && c.rank >= 5) bound = std::max(bound, 320L);
    if (c.family == Family::D && c.rank >= 6) bound = std::max(bound, 320L);
  }
  return bound;
}

std::vector<IntFrieze> enumerate_friezes(const ExchangeMatrix& base, const FriezeSearch& search) {
  const long bound = search.bound > 0 ? search.bound : default_bound(base);
  const Plan plan = make_plan(base);
  std::vector<IntFrieze> out;
  if (plan.rank == 0) return Searcher(base, plan, bound).run(1);

  std::vector<std::vector<IntFrieze>> by_first(static_cast<std::size_t>(bound) + 1);
  const unsigned jobs = std::max(1u, search.jobs);
  if (jobs == 1) {
    Searcher s(base, plan, bound);
    for (long x = 1; x <= bound; ++x) by_first[static_cast<std::size_t>(x)] = s.run(x);
  } else {
    std::atomic<long> next{1};
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j)
      workers.emplace_back([&] {
        Searcher s(base, plan, bound);
        for (long x = next++; x <= bound; x = next++) by_first[static_cast<std::size_t>(x)] = s.run(x);
      });
    for (auto& w : workers) w.join();
  }
  for (auto& part : by_first)
    for (auto& f : part) out.push_back(std::move(f));
  std::sort(out.begin(), out.end(), [](const IntFrieze& a, const IntFrieze& b) { return a.slices[0] < b.slices[0]; });
  return out;
}

}  // namespace cfl
