#pragma once

// The totally positive region in cluster coordinates and its superunitary
// part: points where every cluster variable is at least 1.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cfl/cluster.hpp"

namespace cfl {

/// A point of the totally positive region, given by its coordinates in the
/// chart of one seed (coords[i] is the value of the variable at position i).
struct PositivePoint {
  std::size_t base_cluster = 0;
  RationalPoint coords{std::vector<Rational>{}};
};

struct FaceLabel {
  Subcluster subcluster;
  friend auto operator<=>(const FaceLabel&, const FaceLabel&) = default;
};

Rational eval_variable(const Atlas& atlas, const PositivePoint& pt, VarId y);
/// Values of all cluster variables, indexed by id - 1.
std::vector<Rational> eval_all(const Atlas& atlas, const PositivePoint& pt);

PositivePoint change_chart(const Atlas& atlas, const PositivePoint& pt, std::size_t new_cluster);

/// The face containing pt, or nothing if some cluster variable is below 1.
std::optional<FaceLabel> superunitary_membership(const Atlas& atlas, const PositivePoint& pt);

/// The point of the given seed's chart where its whole cluster equals 1.
PositivePoint unitary_point(const Atlas& atlas, std::size_t cluster);

struct FacePoset {
  std::size_t rank = 0;
  /// Every subcluster; the face of c has dimension rank - |c|.
  std::vector<FaceLabel> faces;
  /// f_vector[d] = number of faces of dimension d, for d = 0..rank.
  std::vector<long> f_vector;
  long euler_characteristic = 0;

  std::size_t dimension(const FaceLabel& f) const { return rank - f.subcluster.size(); }
  /// Faces are ordered by reverse inclusion of subclusters.
  static bool leq(const FaceLabel& a, const FaceLabel& b);
};

FacePoset face_poset(const SeedPattern& p);

/// Number of subclusters whose deletion has each Dynkin type.
std::map<DynkinType, long> face_type_census(const SeedPattern& p);

// ------------------------------------------------------------------ plots

struct PlotConfig {
  std::size_t resolution = 256;
  double width = 480;
  double height = 480;
  double margin = 40;
  /// Rank-3 oblique projection onto the page plane.
  std::array<std::array<double, 3>, 2> projection{{{1.0, 0.0, 0.35}, {0.0, 1.0, 0.49}}};
  double tolerance = 1e-9;
};

struct BoundarySample {
  double t = 0;
  std::vector<double> x;  // initial-chart coordinates
};

/// An edge of the superunitary region, i.e. the face of a subcluster of size
/// rank - 1, sampled along one free chart coordinate.
struct BoundaryCurve {
  Subcluster face;
  std::vector<BoundarySample> samples;
};

struct BoundaryPlot {
  std::size_t rank = 0;
  std::vector<BoundaryCurve> curves;
  /// Variables that have a boundary arc (rank 2) or edge (rank 3).
  std::vector<VarId> variables_with_arcs() const;
};

/// Throws std::invalid_argument unless the rank is 2 or 3.
BoundaryPlot sample_boundary(const Atlas& atlas, const PlotConfig& cfg = {});

std::string render_svg(const BoundaryPlot& plot, const PlotConfig& cfg = {});
std::string render_csv(const BoundaryPlot& plot);

}  // namespace cfl
