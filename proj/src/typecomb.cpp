#include "cfl/typecomb.hpp"

#include <set>
#include <stdexcept>

namespace cfl {

Rational order(const DynkinComponent& c) {
  Rational r(coxeter_number(c), 2);
  r.canonicalize();
  return r + 1;
}

int coxeter(const DynkinType& t) {
  if (!t.connected()) throw std::invalid_argument("coxeter number needs a connected type");
  return coxeter_number(t.components().front());
}

Rational order(const DynkinType& t) {
  if (!t.connected()) throw std::invalid_argument("order needs a connected type");
  return order(t.components().front());
}

long divisor_count(long n) {
  if (n <= 0) throw std::invalid_argument("divisor_count needs a positive integer");
  long count = 0;
  for (long d = 1; d * d <= n; ++d)
    if (n % d == 0) count += d * d == n ? 1 : 2;
  return count;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// ------------------------------------------------------------ TypeCounter

const std::vector<std::pair<Rational, DynkinType>>& TypeCounter::deletions_locked(const DynkinType& t) {
  auto it = deletions_.find(t);
  if (it != deletions_.end()) return it->second;
  std::vector<std::pair<Rational, DynkinType>> out;
  const auto& comps = t.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::vector<DynkinComponent> rest;
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (j != i) rest.push_back(comps[j]);
    const ExchangeMatrix m = from_dynkin(DynkinType(std::vector<DynkinComponent>{comps[i]}));
    const Rational ord = order(comps[i]);
    for (std::size_t v = 0; v < m.rank(); ++v) {
      std::vector<std::size_t> keep;
      for (std::size_t w = 0; w < m.rank(); ++w)
        if (w != v) keep.push_back(w);
      auto sub = recognize_dynkin(m.submatrix(keep));
      if (!sub) throw std::logic_error("vertex deletion left a non-Dynkin diagram");
      out.emplace_back(ord, *sub * DynkinType(rest));
    }
  }
  return deletions_.emplace(t, std::move(out)).first->second;
}

const std::vector<std::pair<Rational, DynkinType>>& TypeCounter::vertex_deletions(const DynkinType& t) {
  std::lock_guard lock(mu_);
  return deletions_locked(t);
}

Integer TypeCounter::multiplicity_locked(const DynkinType& sub, const DynkinType& amb) {
  const int k = amb.rank() - sub.rank();
  if (k < 0) return 0;
  if (k == 0) return sub == amb ? 1 : 0;
  auto key = std::make_pair(sub, amb);
  if (auto it = mu_memo_.find(key); it != mu_memo_.end()) return it->second;
  Rational sum = 0;
  for (const auto& [ord, rest] : deletions_locked(amb)) sum += ord * Rational(multiplicity_locked(sub, rest));
  sum /= k;
  if (sum.get_den() != 1) throw std::logic_error("face multiplicity recursion gave a non-integer");
  Integer value = sum.get_num();
  mu_memo_.emplace(std::move(key), value);
  return value;
}

Integer TypeCounter::multiplicity(const DynkinType& sub, const DynkinType& amb) {
  std::lock_guard lock(mu_);
  return multiplicity_locked(sub, amb);
}

Integer TypeCounter::cluster_count(const DynkinType& t) {
  std::lock_guard lock(mu_);
  if (auto it = n_memo_.find(t); it != n_memo_.end()) return it->second;
  Integer value = multiplicity_locked(DynkinType(), t);
  n_memo_.emplace(t, value);
  return value;
}

std::vector<DynkinType> TypeCounter::subtypes(const DynkinType& t) {
  std::lock_guard lock(mu_);
  if (auto it = subtypes_.find(t); it != subtypes_.end()) return it->second;
  std::set<DynkinType> seen{t};
  std::vector<DynkinType> frontier{t};
  while (!frontier.empty()) {
    std::vector<DynkinType> next;
    for (const auto& s : frontier)
      for (const auto& [ord, rest] : deletions_locked(s))
        if (seen.insert(rest).second) next.push_back(rest);
    frontier = std::move(next);
  }
  std::vector<DynkinType> out(seen.begin(), seen.end());
  subtypes_.emplace(t, out);
  return out;
}

TypeCounter& type_counter() {
  static TypeCounter counter;
  return counter;
}

Integer cluster_count(const DynkinType& t) { return type_counter().cluster_count(t); }
Integer multiplicity(const DynkinType& sub, const DynkinType& amb) { return type_counter().multiplicity(sub, amb); }

// ----------------------------------------------------------- closed forms

namespace {

Integer cluster_count_component(const DynkinComponent& c) {
  const long n = c.rank;
  switch (c.family) {
    case Family::A: return binomial(2 * n + 2, n + 1) / (n + 2);
    case Family::B:
    case Family::C: return binomial(2 * n, n);
    case Family::D: return binomial(2 * n - 2, n - 1) * (3 * n - 2) / n;
    case Family::E: return n == 6 ? 833 : n == 7 ? 4160 : 25080;
    case Family::F: return 105;
    case Family::G: return 8;
  }
  return 0;
}

Count frieze_count_component(const DynkinComponent& c) {
  const long n = c.rank;
  Count out{0, false, "closed-form"};
  switch (c.family) {
    case Family::A:
      out.value = binomial(2 * n + 2, n + 1) / (n + 2);
      break;
    case Family::B:
      for (long m = 1; m * m <= n + 1; ++m) out.value += binomial(2 * n - m * m + 1, n);
      break;
    case Family::C:
      out.value = binomial(2 * n, n);
      break;
    case Family::D:
      for (long m = 1; m <= n; ++m) out.value += binomial(2 * n - m - 1, n - m) * divisor_count(m);
      break;
    case Family::E:
      out.value = n == 6 ? 868 : n == 7 ? 4400 : 26952;
      out.conjectural = n != 6;
      out.provenance = out.conjectural ? "conjectural" : "literal";
      break;
    case Family::F:
      out.value = 112;
      out.provenance = "literal";
      break;
    case Family::G:
      out.value = 9;
      out.provenance = "literal";
      break;
  }
  return out;
}

bool is_square_minus_one(long n) {
  for (long k = 2; k * k - 1 <= n; ++k)
    if (k * k - 1 == n) return true;
  return false;
}

}  // namespace

Integer cluster_count_closed_form(const DynkinType& t) {
  Integer out = 1;
  for (const auto& c : t.components()) out *= cluster_count_component(c);
  return out;
}

std::optional<Count> frieze_count_closed_form(const DynkinType& t) {
  Count out{1, false, "closed-form"};
  for (const auto& c : t.components()) {
    Count part = frieze_count_component(c);
    out.value *= part.value;
    if (part.conjectural) out.conjectural = true;
  }
  if (t.connected()) out.provenance = frieze_count_component(t.components().front()).provenance;
  else if (out.conjectural) out.provenance = "conjectural";
  return out;
}

Count e_ledger(const DynkinComponent& c) {
  Count out{0, false, "ledger"};
  switch (c.family) {
    case Family::D:
      out.value = divisor_count(c.rank) - 2;
      break;
    case Family::B:
      out.value = is_square_minus_one(c.rank) ? 1 : 0;
      break;
    case Family::G:
      out.value = 1;
      break;
    case Family::E:
      out.value = c.rank == 8 ? 4 : 0;
      out.conjectural = c.rank != 6;
      break;
    case Family::A:
    case Family::C:
    case Family::F:
      break;
  }
  return out;
}

Count e_ledger(const DynkinType& t) {
  Count out{1, false, "ledger"};
  for (const auto& c : t.components()) {
    Count part = e_ledger(c);
    out.value *= part.value;
    out.conjectural = out.conjectural || part.conjectural;
  }
  return out;
}

Count frieze_count_via_faces(const DynkinType& t) {
  Count out{0, false, "recursion"};
  for (const auto& sub : type_counter().subtypes(t)) {
    Count e = e_ledger(sub);
    if (e.value == 0 && !e.conjectural) continue;
    out.value += e.value * multiplicity(sub, t);
    out.conjectural = out.conjectural || e.conjectural;
  }
  return out;
}

Count frieze_count_via_faces(const std::map<DynkinType, long>& census) {
  Count out{0, false, "face census"};
  for (const auto& [sub, n] : census) {
    Count e = e_ledger(sub);
    out.value += e.value * n;
    out.conjectural = out.conjectural || e.conjectural;
  }
  return out;
}

}  // namespace cfl
