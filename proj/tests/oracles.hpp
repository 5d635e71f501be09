#pragma once

// Reference computations for the tests. Nothing here calls the code under
// test except for plain data types (LaurentPoly construction, ExchangeMatrix
// entries).

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "cfl/laurent.hpp"
#include "cfl/quiver.hpp"

namespace oracle {

using cfl::ExchangeMatrix;
using cfl::Integer;
using cfl::LaurentPoly;
using cfl::Monomial;
using cfl::Rational;

inline std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::int64_t divisors(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

/// Number of clusters of a connected type.
inline std::int64_t clusters(char family, std::int64_t n) {
  switch (family) {
    case 'A': return binom(2 * n + 2, n + 1) / (n + 2);
    case 'B':
    case 'C': return binom(2 * n, n);
    case 'D': return (3 * n - 2) * binom(2 * n - 2, n - 1) / n;
    case 'E': return n == 6 ? 833 : n == 7 ? 4160 : 25080;
    case 'F': return 105;
    case 'G': return 8;
  }
  return -1;
}

/// Number of positive integral friezes of a connected type.
inline std::int64_t friezes(char family, std::int64_t n) {
  std::int64_t s = 0;
  switch (family) {
    case 'A': return binom(2 * n + 2, n + 1) / (n + 2);
    case 'B':
      for (std::int64_t m = 1; m * m <= n + 1; ++m) s += binom(2 * n - m * m + 1, n);
      return s;
    case 'C': return binom(2 * n, n);
    case 'D':
      for (std::int64_t m = 1; m <= n; ++m) s += divisors(m) * binom(2 * n - m - 1, n - m);
      return s;
    case 'E': return n == 6 ? 868 : n == 7 ? 4400 : 26952;
    case 'F': return 112;
    case 'G': return 9;
  }
  return -1;
}

/// Cluster values after applying the exchange relation numerically along a
/// sequence of mutations, starting from the given point.
inline std::vector<Rational> mutate_values(ExchangeMatrix m, std::vector<Rational> x,
                                           const std::vector<std::size_t>& sequence) {
  const std::size_t r = m.rank();
  for (std::size_t k : sequence) {
    Rational plus = 1, minus = 1;
    for (std::size_t i = 0; i < r; ++i) {
      int e = m(i, k);
      for (int t = 0; t < std::abs(e); ++t) (e > 0 ? plus : minus) *= x[i];
    }
    x[k] = (plus + minus) / x[k];
    std::vector<std::vector<int>> rows(r, std::vector<int>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        if (i == k || j == k) rows[i][j] = -m(i, j);
        else {
          int a = m(i, k), b = m(k, j);
          rows[i][j] = m(i, j) + (a > 0 && b > 0 ? a * b : a < 0 && b < 0 ? -a * b : 0);
        }
      }
    m = ExchangeMatrix(rows);
  }
  return x;
}

/// Mesh relation a(m,v) a(m-1,v) = 1 + prod over arrows into (m,v), checked
/// on consecutive columns.
inline bool mesh_ok(const ExchangeMatrix& base, const std::vector<std::vector<Rational>>& cols) {
  for (std::size_t j = 1; j < cols.size(); ++j)
    for (std::size_t v = 0; v < base.rank(); ++v) {
      Rational rhs = 1;
      for (std::size_t w = 0; w < base.rank(); ++w) {
        int e = base(w, v);
        for (int t = 0; t < std::abs(e); ++t) rhs *= e > 0 ? cols[j][w] : cols[j - 1][w];
      }
      if (cols[j][v] * cols[j - 1][v] != rhs + 1) return false;
    }
  return true;
}

/// Columns 0..count-1 of the frieze with the given initial column, knitted
/// left to right with rational arithmetic. The base must be acyclic.
inline std::vector<std::vector<Rational>> columns(const ExchangeMatrix& base, const std::vector<Rational>& first,
                                                  std::size_t count) {
  const std::size_t r = base.rank();
  std::vector<std::vector<Rational>> cols{first};
  while (cols.size() < count) {
    const auto& prev = cols.back();
    std::vector<Rational> next(r);
    std::vector<bool> done(r, false);
    for (std::size_t pass = 0; pass < r; ++pass)
      for (std::size_t v = 0; v < r; ++v) {
        if (done[v]) continue;
        bool ready = true;
        for (std::size_t w = 0; w < r; ++w)
          if (base(w, v) > 0 && !done[w]) ready = false;
        if (!ready) continue;
        Rational rhs = 1;
        for (std::size_t w = 0; w < r; ++w) {
          int e = base(w, v);
          for (int t = 0; t < std::abs(e); ++t) rhs *= e > 0 ? next[w] : prev[w];
        }
        next[v] = (rhs + 1) / prev[v];
        done[v] = true;
      }
    cols.push_back(next);
  }
  return cols;
}

/// Brute force over every initial column in [1, bound]^r: counts those whose
/// knitted columns 0..span-1 are all positive integers.
inline std::int64_t count_integral_friezes(const ExchangeMatrix& base, long bound, std::size_t span) {
  const std::size_t r = base.rank();
  std::vector<long> idx(r, 1);
  std::int64_t count = 0;
  while (true) {
    std::vector<Rational> first;
    for (long v : idx) first.emplace_back(v);
    bool ok = true;
    for (const auto& col : columns(base, first, span))
      for (const auto& q : col)
        if (q.get_den() != 1 || q <= 0) ok = false;
    count += ok;
    std::size_t i = 0;
    while (i < r && idx[i] == bound) idx[i++] = 1;
    if (i == r) break;
    ++idx[i];
  }
  return count;
}

/// Random Laurent polynomial with small exponents and coefficients.
inline LaurentPoly random_laurent(std::mt19937& rng, std::size_t rank, int terms = 4, int exp = 2, int coef = 5) {
  std::uniform_int_distribution<int> e(-exp, exp), c(-coef, coef), n(0, terms);
  LaurentPoly p(rank);
  int count = n(rng);
  for (int t = 0; t < count; ++t) {
    Monomial m(rank);
    for (std::size_t i = 0; i < rank; ++i) m[i] = e(rng);
    p += LaurentPoly::monomial(m, c(rng));
  }
  return p;
}

inline Rational random_positive_rational(std::mt19937& rng, int max = 9) {
  std::uniform_int_distribution<int> d(1, max);
  Rational q(d(rng), d(rng));
  q.canonicalize();
  return q;
}

}  // namespace oracle
