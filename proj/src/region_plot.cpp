#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cfl/region.hpp"

namespace cfl {

std::vector<VarId> BoundaryPlot::variables_with_arcs() const {
  std::set<VarId> ids;
  for (const auto& c : curves)
    if (c.samples.size() >= 2) ids.insert(c.face.begin(), c.face.end());
  return {ids.begin(), ids.end()};
}

BoundaryPlot sample_boundary(const Atlas& atlas, const PlotConfig& cfg) {
  const SeedPattern& p = atlas.pattern();
  const std::size_t r = p.rank();
  if (r != 2 && r != 3) throw std::invalid_argument("boundary plots need rank 2 or 3");
  if (!p.finite) throw std::invalid_argument("boundary plots need a finite pattern");
  if (cfg.resolution < 2) throw std::invalid_argument("resolution must be at least 2");

  BoundaryPlot plot;
  plot.rank = r;
  for (const auto& c : enumerate_subclusters(p)) {
    if (c.size() != r - 1) continue;
    const std::size_t s = p.containing_seeds(c).front();
    const Seed& seed = p.seeds[s];
    std::size_t free = 0;
    while (std::binary_search(c.begin(), c.end(), seed.cluster[free])) ++free;
    // The edge runs from the unitary point of s to that of its neighbor
    // across the free position; the free coordinate is monotone along it.
    const std::size_t other = p.neighbors[s][free];
    const Integer stop = atlas.chart(other).at(seed.cluster[free] - 1).coefficient_sum();
    const auto& chart = atlas.chart(s);

    BoundaryCurve curve{c, {}};
    for (std::size_t j = 0; j < cfg.resolution; ++j) {
      Rational t = 1 + Rational(stop - 1) * Rational(static_cast<long>(j), static_cast<long>(cfg.resolution - 1));
      t.canonicalize();
      std::vector<Rational> coords(r, Rational(1));
      coords[free] = t;
      RationalPoint pt(coords);
      bool inside = true;
      for (const auto& poly : chart)
        if (poly.evaluate(pt).get_d() < 1.0 - cfg.tolerance) inside = false;
      if (!inside) continue;
      BoundarySample sample{t.get_d(), {}};
      for (std::size_t i = 0; i < r; ++i) sample.x.push_back(chart[i].evaluate(pt).get_d());
      curve.samples.push_back(std::move(sample));
    }
    plot.curves.push_back(std::move(curve));
  }
  return plot;
}

namespace {

std::pair<double, double> project(const BoundaryPlot& plot, const PlotConfig& cfg, const std::vector<double>& x) {
  if (plot.rank == 2) return {x[0], x[1]};
  const auto& P = cfg.projection;
  return {P[0][0] * x[0] + P[0][1] * x[1] + P[0][2] * x[2], P[1][0] * x[0] + P[1][1] * x[1] + P[1][2] * x[2]};
}

std::string face_name(const Subcluster& c) {
  std::string s;
  for (VarId id : c) {
    if (!s.empty()) s += ';';
    s += std::to_string(id);
  }
  return s;
}

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

}  // namespace

std::string render_svg(const BoundaryPlot& plot, const PlotConfig& cfg) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& c : plot.curves)
    for (const auto& s : c.samples) {
      auto [u, v] = project(plot, cfg, s.x);
      xmin = std::min(xmin, u);
      xmax = std::max(xmax, u);
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  if (xmin > xmax) xmin = ymin = 0, xmax = ymax = 1;
  double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  double scale = std::min(cfg.width, cfg.height) - 2 * cfg.margin;
  auto px = [&](double u) { return cfg.margin + (u - xmin) / span * scale; };
  auto py = [&](double v) { return cfg.height - cfg.margin - (v - ymin) / span * scale; };

  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cfg.width << "\" height=\"" << cfg.height
     << "\" viewBox=\"0 0 " << cfg.width << ' ' << cfg.height << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << cfg.width << "\" height=\"" << cfg.height << "\" fill=\"white\"/>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#444\">\n";
  os << "<text x=\"" << px(xmin) << "\" y=\"" << cfg.height - cfg.margin / 3 << "\">" << xmin << "</text>\n";
  os << "<text x=\"" << px(xmin + span) << "\" y=\"" << cfg.height - cfg.margin / 3 << "\" text-anchor=\"end\">"
     << xmin + span << "</text>\n";
  os << "<text x=\"4\" y=\"" << py(ymin) << "\">" << ymin << "</text>\n";
  os << "<text x=\"4\" y=\"" << py(ymin + span) + 10 << "\">" << ymin + span << "</text>\n";
  os << "</g>\n";
  os << "<line x1=\"" << px(xmin) << "\" y1=\"" << py(ymin) << "\" x2=\"" << px(xmin + span) << "\" y2=\"" << py(ymin)
     << "\" stroke=\"#bbb\"/>\n";
  os << "<line x1=\"" << px(xmin) << "\" y1=\"" << py(ymin) << "\" x2=\"" << px(xmin) << "\" y2=\"" << py(ymin + span)
     << "\" stroke=\"#bbb\"/>\n";

  std::size_t index = 0;
  for (const auto& c : plot.curves) {
    if (c.samples.size() < 2) continue;
    const char* colour = kPalette[index++ % std::size(kPalette)];
    os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" data-face=\"" << face_name(c.face)
       << "\" points=\"";
    for (std::size_t i = 0; i < c.samples.size(); ++i) {
      auto [u, v] = project(plot, cfg, c.samples[i].x);
      if (i) os << ' ';
      os << px(u) << ',' << py(v);
    }
    os << "\"/>\n";
    if (plot.rank == 2) {
      auto [u, v] = project(plot, cfg, c.samples[c.samples.size() / 2].x);
      os << "<text x=\"" << px(u) + 4 << "\" y=\"" << py(v) - 4 << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
         << colour << "\">x" << c.face.front() << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_csv(const BoundaryPlot& plot) {
  std::ostringstream os;
  os << std::setprecision(15);
  os << "variable_id,t";
  for (std::size_t i = 0; i < plot.rank; ++i) os << ",x" << i + 1;
  os << '\n';
  for (const auto& c : plot.curves)
    for (const auto& s : c.samples) {
      os << face_name(c.face) << ',' << s.t;
      for (double x : s.x) os << ',' << x;
      os << '\n';
    }
  return os.str();
}

}  // namespace cfl
