#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "csd/diagram.hpp"
#include "csd/flag_builder.hpp"
#include "csd/oracle.hpp"
#include "csd/simplex.hpp"

namespace csd::testing {

/// The six-vertex running example: a tetrahedron [1234] glued to a triangle
/// [356] along vertex 3, vertices at 0 and each clique at its heaviest edge.
inline const std::vector<Edge>& running_example_edges() {
  static const std::vector<Edge> edges = {
      {1, 2, 5}, {2, 3, 5}, {1, 3, 3}, {3, 4, 3}, {2, 4, 3},
      {1, 4, 2}, {3, 5, 2}, {3, 6, 2}, {5, 6, 1},
  };
  return edges;
}

inline WeightedGraph running_example_graph() {
  WeightedGraph g(6);
  for (const Edge& e : running_example_edges()) g.add_edge(e.u, e.v, e.weight);
  return g;
}

/// Its twelve critical simplices with levels and maximality.
inline const std::vector<oracle::CriticalEntry>& running_example_critical() {
  static const std::vector<oracle::CriticalEntry> list = {
      {Simplex{1}, 0, false},       {Simplex{2}, 0, false},      {Simplex{3}, 0, false},
      {Simplex{4}, 0, false},       {Simplex{5}, 0, false},      {Simplex{6}, 0, false},
      {Simplex{5, 6}, 1, false},    {Simplex{1, 4}, 2, false},   {Simplex{3, 5, 6}, 2, true},
      {Simplex{1, 3, 4}, 3, false}, {Simplex{2, 4}, 3, false},   {Simplex{1, 2, 3, 4}, 5, true},
  };
  return list;
}

/// Diagram built by lazily inserting the critical list, no cleanup needed.
inline CriticalSimplexDiagram running_example_diagram() {
  CriticalSimplexDiagram d(6, 5);
  for (const auto& e : running_example_critical()) d.lazy_insert(e.simplex, e.level, e.maximal);
  return d;
}

inline oracle::ExplicitComplex running_example_oracle() {
  std::vector<std::pair<Simplex, Level>> seed;
  for (const auto& e : running_example_critical()) seed.emplace_back(e.simplex, e.level);
  return oracle::close_down(seed, 5);
}

}  // namespace csd::testing
