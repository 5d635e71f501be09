#pragma once

// Friezes on the repetition quiver of an acyclic valued quiver.
//
// A frieze assigns a value a(m, v) to each m in Z and vertex v, subject to the
// mesh relation
//
//   a(m, v) a(m-1, v) = 1 + prod_{M(w,v) > 0} a(m, w)^M(w,v)
//                         * prod_{M(w,v) < 0} a(m-1, w)^-M(w,v).
//
// Slice m = 0 is the initial slice; positive m lies to the right.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cfl/cluster.hpp"
#include "cfl/laurent.hpp"
#include "cfl/quiver.hpp"
#include "cfl/region.hpp"
#include "cfl/typecomb.hpp"

namespace cfl {

namespace detail {

template <class T>
T power(const T& base, int e, const T& one) {
  T out = one;
  for (int i = 0; i < e; ++i) out = out * base;
  return out;
}

inline Integer one_like(const Integer&) { return 1; }
inline Rational one_like(const Rational&) { return 1; }
inline LaurentPoly one_like(const LaurentPoly& p) { return LaurentPoly::one(p.rank()); }

/// Right-hand side of the mesh relation at (m, v), given accessors for
/// slices m and m - 1.
template <class T, class Cur, class Prev>
T mesh_rhs(const ExchangeMatrix& base, std::size_t v, Cur cur, Prev prev, const T& one) {
  T out = one;
  for (std::size_t w = 0; w < base.rank(); ++w) {
    int e = base(w, v);
    if (e > 0) out = out * power(cur(w), e, one);
    else if (e < 0) out = out * power(prev(w), -e, one);
  }
  return out + one;
}

/// Vertices ordered so that every arrow w -> v has w first. Throws
/// std::invalid_argument if the quiver has an oriented cycle.
std::vector<std::size_t> topological_order(const ExchangeMatrix& base);

}  // namespace detail

template <class T>
struct Frieze {
  ExchangeMatrix base;
  std::optional<DynkinType> type;
  std::size_t period = 0;
  /// slices[m][v] for 0 <= m < period.
  std::vector<std::vector<T>> slices;

  std::size_t rank() const { return base.rank(); }
  const T& at(long m, std::size_t v) const {
    long p = static_cast<long>(period);
    return slices[static_cast<std::size_t>(((m % p) + p) % p)][v];
  }

  /// Checks the mesh relation at every vertex of one period.
  bool satisfies_mesh() const {
    if (slices.empty()) return base.rank() == 0;
    const T one = detail::one_like(slices[0].empty() ? T() : slices[0][0]);
    for (long m = 0; m < static_cast<long>(period); ++m)
      for (std::size_t v = 0; v < base.rank(); ++v) {
        T rhs = detail::mesh_rhs<T>(base, v, [&](std::size_t w) { return at(m, w); },
                                    [&](std::size_t w) { return at(m - 1, w); }, one);
        if (!(at(m, v) * at(m - 1, v) == rhs)) return false;
      }
    return true;
  }

  friend bool operator==(const Frieze& a, const Frieze& b) {
    return a.base == b.base && a.period == b.period && a.slices == b.slices;
  }
};

using IntFrieze = Frieze<Integer>;
using RationalFrieze = Frieze<Rational>;
using LaurentFrieze = Frieze<LaurentPoly>;

/// Largest period knit() will look for: 4 * lcm of (h + 2) over the
/// components, or 1024 when the base is not of Dynkin type.
std::size_t period_cap(const ExchangeMatrix& base);

/// Knits from the initial slice until it recurs. The base must be acyclic.
/// Throws std::domain_error on a non-positive or non-invertible value (or a
/// non-integral quotient for Integer friezes) and std::runtime_error if no
/// period is found within max_steps (0 means period_cap).
IntFrieze knit(const ExchangeMatrix& base, const std::vector<Integer>& initial, std::size_t max_steps = 0);
RationalFrieze knit(const ExchangeMatrix& base, const std::vector<Rational>& initial, std::size_t max_steps = 0);
LaurentFrieze knit(const ExchangeMatrix& base, const std::vector<LaurentPoly>& initial, std::size_t max_steps = 0);

/// Slices first..last (first <= 0 <= last) knitted from slice 0 without
/// looking for a period.
std::vector<std::vector<Rational>> knit_window(const ExchangeMatrix& base, const std::vector<Rational>& initial,
                                               long first, long last);

/// Checks the mesh relation on consecutive slices columns[0..], which need
/// not be positive or periodic.
bool satisfies_mesh(const ExchangeMatrix& base, const std::vector<std::vector<Rational>>& columns);

/// The frieze of cluster variables knitted from the initial cluster of the
/// pattern, whose initial matrix must be acyclic.
LaurentFrieze general_frieze(const ClusterRegistry& reg, const SeedPattern& p);
/// Registry ids of the general frieze's values, slice by slice.
std::vector<std::vector<VarId>> general_frieze_ids(const ClusterRegistry& reg, const LaurentFrieze& gf);

/// Initial-cluster values at which every cluster variable is a positive
/// integer.
struct FriezePoint {
  std::vector<Integer> values;
  friend auto operator<=>(const FriezePoint&, const FriezePoint&) = default;
};

/// Throws std::domain_error if some value is not a positive integer.
IntFrieze specialize(const LaurentFrieze& gf, const FriezePoint& fp);

/// All frieze points with every initial coordinate in 1..bound, found by
/// evaluating the registry's Laurent polynomials (independent of knitting).
std::vector<FriezePoint> find_frieze_points(const ClusterRegistry& reg, long bound);

struct FriezeSearch {
  long bound = 0;
  unsigned jobs = 1;
};

/// Per-coordinate bound used when none is given.
long default_bound(const ExchangeMatrix& base);

/// All positive integral friezes on the acyclic base whose initial slice lies
/// in 1..bound, sorted by initial slice.
std::vector<IntFrieze> enumerate_friezes(const ExchangeMatrix& base, const FriezeSearch& search = {});

struct FriezeEnumeration {
  std::vector<IntFrieze> friezes;
  long bound = 0;
  std::optional<Count> expected;
  /// Empty when the count agrees with the closed form (or none is known).
  std::string diagnostic;
};

/// enumerate_friezes plus the cross-check against the closed-form count.
FriezeEnumeration enumerate_and_check(const ExchangeMatrix& base, const FriezeSearch& search = {});

struct FriezeClass {
  FaceLabel face;
  bool is_unitary = false;
};

/// The face of the frieze's point: variables equal to 1. The frieze's base
/// must be the pattern's initial matrix.
FriezeClass classify_frieze(const ClusterRegistry& reg, const SeedPattern& p, const IntFrieze& f);

/// The frieze whose point has c equal to 1 and the deletion's cluster equal
/// to the initial slice of inner. inner.base must be the matrix of
/// delete_subcluster(p, c); std::invalid_argument otherwise.
IntFrieze unitary_extension(const Atlas& atlas, const Subcluster& c, const IntFrieze& inner);
IntFrieze unitary_extension(const Atlas& atlas, const Deletion& d, const Subcluster& c, const IntFrieze& inner);

/// The frieze on the deletion of c, for the given seed, that f restricts to.
IntFrieze restrict_to_deletion(const Atlas& atlas, const Deletion& d, const IntFrieze& f);

}  // namespace cfl
