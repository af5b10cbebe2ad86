#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "csd/diagram.hpp"
#include "csd/simplex.hpp"

namespace csd {

using Point = std::vector<double>;

/// Points of a common ambient dimension with finite coordinates, compared
/// under the Euclidean metric.
class PointSet {
 public:
  PointSet() = default;
  /// Throws Error on mixed dimensions or non-finite coordinates.
  explicit PointSet(std::vector<Point> points);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  std::size_t dimension() const noexcept { return points_.empty() ? 0 : points_.front().size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const noexcept { return points_; }

 private:
  std::vector<Point> points_;
};

double distance(std::span<const double> a, std::span<const double> b);

struct Neighbor {
  double distance;
  Vertex landmark;  ///< 1-based index into the landmark set
};

/// Row x lists every landmark by increasing distance from witness x, ties by
/// landmark index.
struct DistanceMatrix {
  std::vector<std::vector<Neighbor>> rows;
};

/// Throws EmptyLandmarks when `landmarks` is empty, Error on a dimension
/// mismatch.
DistanceMatrix nearest_neighbor_matrix(const PointSet& witnesses, const PointSet& landmarks);

struct RelaxationConfig {
  double rho = 0.0;  ///< rho >= 0
  Level t = 1;       ///< t >= 1
};

/// For every witness x and level i in 0..t: the longest prefix of x's row whose
/// distances stay within rho*i/t of the nearest one, emitted at level i.
/// Rows are emitted in order, levels ascending within a row; duplicates kept.
std::vector<std::pair<Simplex, Level>> witness_simplices(const DistanceMatrix& d,
                                                         const RelaxationConfig& cfg);

struct DelaunayBuildOptions {
  bool cleanup = true;
};

/// Relaxed Delaunay filtration over `landmarks` (vertices 1..|landmarks|)
/// witnessed by `witnesses`: lazily inserts all witness simplices, flagging
/// those with no strict superset among them as maximal, then cleans up.
CriticalSimplexDiagram build_delaunay(const PointSet& witnesses, const PointSet& landmarks,
                                      const RelaxationConfig& cfg,
                                      DelaunayBuildOptions options = {});

}  // namespace csd
