#pragma once

// Counting functions indexed by Dynkin types: Coxeter numbers and orders,
// cluster counts N, face multiplicities mu, and frieze counts.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfl/laurent.hpp"
#include "cfl/quiver.hpp"

namespace cfl {

/// h/2 + 1 for a connected type.
Rational order(const DynkinComponent& c);
/// Throws std::invalid_argument unless t is connected.
int coxeter(const DynkinType& t);
Rational order(const DynkinType& t);

/// Number of positive divisors of n.
long divisor_count(long n);
Integer binomial(long n, long k);

/// A count together with where it came from.
struct Count {
  Integer value;
  bool conjectural = false;
  std::string provenance;  // "closed-form", "recursion", "literal", ...
};

/// Memoized recursions. Safe to share between threads.
class TypeCounter {
 public:
  /// Number of clusters, by the vertex-deletion recursion.
  Integer cluster_count(const DynkinType& t);
  /// Number of faces of type sub in the generalized associahedron of amb.
  Integer multiplicity(const DynkinType& sub, const DynkinType& amb);
  /// Types reachable from t by deleting vertices, including t and the empty
  /// type.
  std::vector<DynkinType> subtypes(const DynkinType& t);
  /// For each vertex v of t: (ord of v's component, t with v deleted).
  const std::vector<std::pair<Rational, DynkinType>>& vertex_deletions(const DynkinType& t);

 private:
  std::mutex mu_;
  std::map<DynkinType, Integer> n_memo_;
  std::map<std::pair<DynkinType, DynkinType>, Integer> mu_memo_;
  std::map<DynkinType, std::vector<std::pair<Rational, DynkinType>>> deletions_;
  std::map<DynkinType, std::vector<DynkinType>> subtypes_;

  Integer multiplicity_locked(const DynkinType& sub, const DynkinType& amb);
  const std::vector<std::pair<Rational, DynkinType>>& deletions_locked(const DynkinType& t);
};

/// Process-wide counter used by the free functions below.
TypeCounter& type_counter();

Integer cluster_count(const DynkinType& t);
Integer multiplicity(const DynkinType& sub, const DynkinType& amb);

/// Closed forms for the number of clusters (product over components).
Integer cluster_count_closed_form(const DynkinType& t);

/// Number of positive integral friezes, product over components. E7 and E8
/// are flagged conjectural.
std::optional<Count> frieze_count_closed_form(const DynkinType& t);

/// Number of friezes of the given connected type with no entry equal to 1.
Count e_ledger(const DynkinComponent& c);
/// Multiplicative extension; 1 for the empty type.
Count e_ledger(const DynkinType& t);

/// Sum over subtypes t' of e(t') * mu(t', t).
Count frieze_count_via_faces(const DynkinType& t);
/// Same sum with face multiplicities taken from a census of realized faces.
Count frieze_count_via_faces(const std::map<DynkinType, long>& census);

}  // namespace cfl
