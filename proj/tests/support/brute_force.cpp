#include "brute_force.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace csd::testing {

oracle::ExplicitComplex flag_complex_by_subsets(const WeightedGraph& g, Level t) {
  const std::size_t n = g.vertex_count();
  std::vector<std::pair<Simplex, Level>> seed;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) vs.push_back(static_cast<Vertex>(i + 1));
    }
    Level value = 0;
    bool clique = true;
    for (std::size_t a = 0; a < vs.size() && clique; ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        const auto w = g.weight(vs[a], vs[b]);
        if (!w) {
          clique = false;
          break;
        }
        value = std::max(value, *w);
      }
    }
    if (clique) seed.emplace_back(Simplex(std::move(vs)), value);
  }
  return oracle::close_down(seed, t);
}

std::vector<std::pair<Simplex, Level>> witnessed_sets(const PointSet& witnesses,
                                                      const PointSet& landmarks, double rho,
                                                      Level t) {
  std::vector<std::pair<Simplex, Level>> out;
  for (const Point& x : witnesses.points()) {
    std::vector<double> dist;
    for (const Point& q : landmarks.points()) {
      double sum = 0.0;
      for (std::size_t c = 0; c < x.size(); ++c) sum += (x[c] - q[c]) * (x[c] - q[c]);
      dist.push_back(std::sqrt(sum));
    }
    const double nearest = *std::min_element(dist.begin(), dist.end());
    for (Level i = 0; i <= t; ++i) {
      std::vector<Vertex> vs;
      for (std::size_t j = 0; j < dist.size(); ++j) {
        if (dist[j] - nearest <= rho * i / t) vs.push_back(static_cast<Vertex>(j + 1));
      }
      out.emplace_back(Simplex(std::move(vs)), i);
    }
  }
  return out;
}

oracle::ExplicitComplex witness_complex(const PointSet& witnesses, const PointSet& landmarks,
                                        double rho, Level t) {
  return oracle::min_closure(witnessed_sets(witnesses, landmarks, rho, t), t);
}

std::vector<oracle::CriticalEntry> stored_entries(const CriticalSimplexDiagram& d) {
  std::vector<oracle::CriticalEntry> out;
  for (const auto& [label, star] : d.stars()) out.push_back({star.simplex, label.level, star.maximal});
  std::sort(out.begin(), out.end());
  return out;
}

oracle::ExplicitComplex represented(const CriticalSimplexDiagram& d) {
  std::vector<std::pair<Simplex, Level>> seed;
  for (const auto& [label, star] : d.stars()) seed.emplace_back(star.simplex, label.level);
  return oracle::min_closure(seed, d.max_level());
}

WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, double p, Level t) {
  WeightedGraph g(n);
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<Level> weight(0, t);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (coin(rng)) g.add_edge(u, v, weight(rng));
    }
  }
  return g;
}

PointSet random_planar_points(std::mt19937_64& rng, std::size_t count, double side) {
  std::uniform_real_distribution<double> coord(0.0, side);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < count; ++i) pts.push_back({coord(rng), coord(rng)});
  return PointSet(std::move(pts));
}

std::vector<Simplex> all_subsets(std::size_t n) {
  std::vector<Simplex> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) vs.push_back(static_cast<Vertex>(i + 1));
    }
    out.emplace_back(std::move(vs));
  }
  return out;
}

std::string compare_queries(const CriticalSimplexDiagram& d, const oracle::ExplicitComplex& c) {
  for (const Simplex& s : all_subsets(d.vertex_count())) {
    const std::string at = to_string(s);
    const bool member = c.contains(s);
    if (d.contains(s) != member) return "membership of " + at;
    if (!member) continue;
    if (d.filtration(s) != c.filtration(s)) return "filtration of " + at;
    if (d.is_maximal(s) != c.is_maximal(s)) return "maximality of " + at;
    if (d.is_critical(s) != c.is_critical(s)) return "criticality of " + at;
    if (s.size() > 1 && d.facet_filtrations(s) != c.facet_filtrations(s)) return "facets of " + at;
    if (d.coface_filtrations(s) != c.coface_filtrations(s)) return "cofaces of " + at;
  }
  return {};
}

namespace {
std::string describe(const oracle::CriticalEntry& e) {
  std::ostringstream os;
  os << e.simplex << " @" << e.level << (e.maximal ? " maximal" : "");
  return os.str();
}
}  // namespace

std::string first_difference(const std::vector<oracle::CriticalEntry>& got,
                             const std::vector<oracle::CriticalEntry>& want) {
  const std::size_t common = std::min(got.size(), want.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (got[i] != want[i]) return "got " + describe(got[i]) + ", want " + describe(want[i]);
  }
  if (got.size() > common) return "extra " + describe(got[common]);
  if (want.size() > common) return "missing " + describe(want[common]);
  return {};
}

}  // namespace csd::testing
