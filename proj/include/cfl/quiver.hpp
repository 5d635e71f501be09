#pragma once

// Skew-symmetrizable exchange matrices, valued quivers and Dynkin types.
//
// Vertex indices are 0-based throughout the C++ interface. An entry M(i,j) > 0
// is read as a valued arrow i -> j carrying (b, c) = (M(i,j), -M(j,i)).

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cfl {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinComponent {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;
  friend auto operator<=>(const DynkinComponent&, const DynkinComponent&) = default;
};

/// A finite multiset of connected Dynkin diagrams, possibly empty.
///
/// Components are validated, normalized (B1, C1 -> A1 and C2 -> B2) and kept
/// sorted, so equal types compare equal.
class DynkinType {
 public:
  DynkinType() = default;
  explicit DynkinType(std::vector<DynkinComponent> components);
  DynkinType(Family family, int rank) : DynkinType(std::vector<DynkinComponent>{{family, rank}}) {}

  /// Parses "A3", "d5", "A1xA1", "A2xG2". "empty" and "" give the empty type.
  /// Throws std::invalid_argument.
  static DynkinType parse(std::string_view text);

  const std::vector<DynkinComponent>& components() const { return components_; }
  int rank() const;
  bool empty() const { return components_.empty(); }
  bool connected() const { return components_.size() == 1; }

  /// Canonical name, e.g. "A1xA1"; the empty type renders as "empty".
  std::string to_string() const;

  friend DynkinType operator*(const DynkinType& a, const DynkinType& b);
  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;

 private:
  std::vector<DynkinComponent> components_;
};

struct ValuedArrow {
  std::size_t from = 0;
  std::size_t to = 0;
  int b = 1;
  int c = 1;
  friend bool operator==(const ValuedArrow&, const ValuedArrow&) = default;
};

class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  /// The zero matrix of the given rank.
  explicit ExchangeMatrix(std::size_t rank);
  /// Throws std::invalid_argument unless the matrix is square, has zero
  /// diagonal and is skew-symmetrizable.
  explicit ExchangeMatrix(const std::vector<std::vector<int>>& rows);

  static ExchangeMatrix from_arrows(std::size_t rank, std::span<const ValuedArrow> arrows);

  std::size_t rank() const { return rank_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }
  std::vector<std::vector<int>> rows() const;

  /// Arrows i -> j for every positive entry, ordered by (from, to).
  std::vector<ValuedArrow> arrows() const;

  /// Principal submatrix on the listed vertices, in the given order.
  ExchangeMatrix submatrix(std::span<const std::size_t> keep) const;

  bool is_skew_symmetrizable() const;
  /// True iff the quiver has no oriented cycle.
  bool is_acyclic() const;
  /// Vertex sets of the connected components of the underlying graph, each
  /// sorted, ordered by smallest vertex.
  std::vector<std::vector<std::size_t>> components() const;

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    return a.rank_ == b.rank_ && a.entries_ == b.entries_;
  }

 private:
  int& at(std::size_t i, std::size_t j) { return entries_[i * rank_ + j]; }
  void derive_symmetrizer();

  std::size_t rank_ = 0;
  std::vector<int> entries_;
  std::vector<int> symmetrizer_;

  friend ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, std::size_t k);
};

ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, std::size_t k);

/// Directed edges (from, to), 0-based in the block layout of from_dynkin.
using Orientation = std::vector<std::pair<std::size_t, std::size_t>>;

/// Realizes each component on consecutive vertices, using the standard
/// labeling of that diagram. Edges not named in `orientation` are oriented
/// bipartitely, with even distance from the component's first vertex meaning
/// source. Throws std::invalid_argument if an orientation entry is not an
/// edge of the diagram or names an edge twice.
ExchangeMatrix from_dynkin(const DynkinType& type, const Orientation& orientation = {});

/// The Dynkin type of the valued graph underlying m, if it is one.
std::optional<DynkinType> recognize_dynkin(const ExchangeMatrix& m);

/// Coxeter number of a connected type.
int coxeter_number(const DynkinComponent& c);

}  // namespace cfl
