#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "csd/delaunay_builder.hpp"
#include "csd/flag_builder.hpp"

namespace csd::cli {

/// Bins reals in [0, max_value] onto levels 0..t: level(d) = ceil(t * d / max_value),
/// so 0 maps to 0 and max_value to t.
class Quantizer {
 public:
  /// Throws Error unless t >= 1 and max_value > 0.
  Quantizer(Level t, double max_value);

  /// Throws FiltrationOutOfRange for negative values or values above max.
  Level level(double value) const;

  Level t() const noexcept { return t_; }
  double max_value() const noexcept { return max_; }

 private:
  Level t_;
  double max_;
};

struct EdgeListOptions {
  /// When set, the third column is a real distance binned onto 0..t with
  /// the largest distance in the file as max_value.
  std::optional<Level> quantize;
};

/// Reads `[n=<int>]` then `u v w` lines; `#` starts a comment. Without a
/// header, n is the largest vertex id seen. Throws ParseError with the line.
WeightedGraph read_edge_list(std::istream& in, EdgeListOptions options = {});

/// One point per line, whitespace-separated coordinates, `#` comments.
PointSet read_points(std::istream& in);

/// Uniform parameter samples of the flat Klein bottle in R^4, padded with a
/// zero fifth coordinate:
/// ((R + r cos v) cos u, (R + r cos v) sin u, r sin v cos(u/2), r sin v sin(u/2), 0).
PointSet klein_bottle(std::size_t count, std::uint64_t seed, double major = 3.0,
                      double minor = 1.0);

/// Pairs within 2 * r_max become edges weighted by their binned distance,
/// with 2 * r_max as the top of the range.
WeightedGraph rips_graph(const PointSet& points, double r_max, Level t);

}  // namespace csd::cli
