#include "cfl/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfl {

Rational eval_variable(const Atlas& atlas, const PositivePoint& pt, VarId y) {
  return atlas.chart(pt.base_cluster).at(y - 1).evaluate(pt.coords);
}

std::vector<Rational> eval_all(const Atlas& atlas, const PositivePoint& pt) {
  const auto& chart = atlas.chart(pt.base_cluster);
  std::vector<Rational> out;
  out.reserve(chart.size());
  for (const auto& p : chart) out.push_back(p.evaluate(pt.coords));
  return out;
}

PositivePoint change_chart(const Atlas& atlas, const PositivePoint& pt, std::size_t new_cluster) {
  if (new_cluster == pt.base_cluster) return pt;
  const auto& chart = atlas.chart(pt.base_cluster);
  std::vector<Rational> coords;
  for (VarId id : atlas.pattern().seeds.at(new_cluster).cluster) coords.push_back(chart[id - 1].evaluate(pt.coords));
  return {new_cluster, RationalPoint(std::move(coords))};
}

std::optional<FaceLabel> superunitary_membership(const Atlas& atlas, const PositivePoint& pt) {
  FaceLabel face;
  const auto values = eval_all(atlas, pt);
  for (std::size_t i = 0; i < values.size(); ++i) {
    int c = cmp(values[i], 1);
    if (c < 0) return std::nullopt;
    if (c == 0) face.subcluster.push_back(i + 1);
  }
  if (!atlas.pattern().is_subcluster(face.subcluster))
    throw std::logic_error("variables equal to 1 do not form a subcluster");
  return face;
}

PositivePoint unitary_point(const Atlas& atlas, std::size_t cluster) {
  return {cluster, RationalPoint::ones(atlas.pattern().rank())};
}

bool FacePoset::leq(const FaceLabel& a, const FaceLabel& b) {
  return std::includes(a.subcluster.begin(), a.subcluster.end(), b.subcluster.begin(), b.subcluster.end());
}

FacePoset face_poset(const SeedPattern& p) {
  FacePoset fp;
  fp.rank = p.rank();
  fp.f_vector.assign(fp.rank + 1, 0);
  for (auto& c : enumerate_subclusters(p)) {
    FaceLabel f{std::move(c)};
    const std::size_t d = fp.dimension(f);
    ++fp.f_vector[d];
    fp.euler_characteristic += d % 2 == 0 ? 1 : -1;
    fp.faces.push_back(std::move(f));
  }
  return fp;
}

std::map<DynkinType, long> face_type_census(const SeedPattern& p) {
  std::map<DynkinType, long> out;
  for (const auto& c : enumerate_subclusters(p)) {
    auto d = delete_subcluster_at(p, c, p.containing_seeds(c).front());
    if (!d.type) throw std::logic_error("deletion of a subcluster is not of Dynkin type");
    ++out[*d.type];
  }
  return out;
}

}  // namespace cfl
