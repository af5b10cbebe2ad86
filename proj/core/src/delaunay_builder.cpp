#include "csd/delaunay_builder.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "csd/errors.hpp"

namespace csd {

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  for (const Point& p : points_) {
    if (p.size() != points_.front().size()) {
      throw Error("points of mixed dimension " + std::to_string(p.size()) + " and " +
                  std::to_string(points_.front().size()));
    }
    for (double c : p) {
      if (!std::isfinite(c)) throw Error("non-finite coordinate");
    }
  }
}

double distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

DistanceMatrix nearest_neighbor_matrix(const PointSet& witnesses, const PointSet& landmarks) {
  if (landmarks.empty()) throw EmptyLandmarks("no landmarks");
  if (!witnesses.empty() && witnesses.dimension() != landmarks.dimension()) {
    throw Error("witness dimension " + std::to_string(witnesses.dimension()) +
                " differs from landmark dimension " + std::to_string(landmarks.dimension()));
  }
  DistanceMatrix d;
  d.rows.reserve(witnesses.size());
  for (const Point& x : witnesses.points()) {
    std::vector<Neighbor> row;
    row.reserve(landmarks.size());
    for (std::size_t j = 0; j < landmarks.size(); ++j) {
      row.push_back({distance(x, landmarks[j]), static_cast<Vertex>(j + 1)});
    }
    std::sort(row.begin(), row.end(), [](const Neighbor& a, const Neighbor& b) {
      if (a.distance != b.distance) return a.distance < b.distance;
      return a.landmark < b.landmark;
    });
    d.rows.push_back(std::move(row));
  }
  return d;
}

std::vector<std::pair<Simplex, Level>> witness_simplices(const DistanceMatrix& d,
                                                         const RelaxationConfig& cfg) {
  if (!(cfg.rho >= 0.0)) throw Error("relaxation must be non-negative");
  if (cfg.t < 1) throw FiltrationOutOfRange("filtration resolution must be at least 1");
  std::vector<std::pair<Simplex, Level>> out;
  for (const auto& row : d.rows) {
    if (row.empty()) continue;
    const double nearest = row.front().distance;
    std::size_t prefix = 1;
    for (Level i = 0; i <= cfg.t; ++i) {
      const double slack = cfg.rho * i / cfg.t;
      while (prefix < row.size() && row[prefix].distance - nearest <= slack) ++prefix;
      std::vector<Vertex> vs;
      vs.reserve(prefix);
      for (std::size_t j = 0; j < prefix; ++j) vs.push_back(row[j].landmark);
      out.emplace_back(Simplex(std::move(vs)), i);
    }
  }
  return out;
}

CriticalSimplexDiagram build_delaunay(const PointSet& witnesses, const PointSet& landmarks,
                                      const RelaxationConfig& cfg,
                                      DelaunayBuildOptions options) {
  const auto matrix = nearest_neighbor_matrix(witnesses, landmarks);
  const auto emitted = witness_simplices(matrix, cfg);

  std::set<Simplex> distinct;
  for (const auto& [s, _] : emitted) distinct.insert(s);
  std::set<Simplex> maximal;
  for (const Simplex& s : distinct) {
    bool covered = false;
    for (const Simplex& other : distinct) {
      if (other.size() > s.size() && is_face(s, other)) {
        covered = true;
        break;
      }
    }
    if (!covered) maximal.insert(s);
  }

  CriticalSimplexDiagram diagram(landmarks.size(), cfg.t);
  for (const auto& [s, level] : emitted) diagram.lazy_insert(s, level, maximal.contains(s));
  if (options.cleanup) diagram.cleanup();
  return diagram;
}

}  // namespace csd
