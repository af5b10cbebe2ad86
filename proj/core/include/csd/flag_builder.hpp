#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "csd/diagram.hpp"
#include "csd/simplex.hpp"

namespace csd {

struct Edge {
  Vertex u;  ///< u < v
  Vertex v;
  Level weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 1..n with integer edge weights.
class WeightedGraph {
 public:
  explicit WeightedGraph(std::size_t n);

  /// Endpoints may come in either order. Throws UnknownVertex, InvalidSimplex
  /// (self-loop), PreconditionViolated (duplicate), FiltrationOutOfRange
  /// (negative weight).
  void add_edge(Vertex u, Vertex v, Level weight);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::set<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v - 1); }
  std::optional<Level> weight(Vertex u, Vertex v) const;
  Level max_weight() const noexcept;

 private:
  std::vector<std::set<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::map<std::pair<Vertex, Vertex>, Level> weights_;
};

/// Trie over vertex words; answers exact-word membership.
class PrefixTree {
 public:
  void insert(const Simplex& s);
  bool contains(const Simplex& s) const;
  std::size_t size() const noexcept { return words_; }

 private:
  struct Node {
    bool terminal = false;
    std::map<Vertex, std::unique_ptr<Node>> children;
  };
  Node root_;
  std::size_t words_ = 0;
};

/// Inclusion-maximal cliques of `g` (weights ignored), sorted. Isolated
/// vertices come out as singletons. Pivoted recursive enumeration over a
/// degeneracy ordering.
std::vector<Simplex> enumerate_maximal_cliques(const WeightedGraph& g);

/// Maximal cliques of `g` that contain the edge {u, v}: the endpoints joined
/// with each maximal clique of their common neighborhood. Throws UnknownEdge.
std::vector<Simplex> cliques_through_edge(const WeightedGraph& g, Vertex u, Vertex v);

struct FlagBuildOptions {
  /// Run cleanup() after the sweep. Without it, simplices rediscovered
  /// through tied edges stay as redundant stars.
  bool cleanup = true;
};

/// Critical Simplex Diagram of the flag filtration of `g`: a clique is valued
/// by its heaviest edge, vertices by 0. Edges are swept heaviest first (ties
/// by (u, v)); each edge contributes the maximal cliques through it in the
/// graph of edges not yet swept, then leaves the graph. `t` defaults to the
/// heaviest weight.
CriticalSimplexDiagram build_flag(const WeightedGraph& g, std::optional<Level> t = std::nullopt,
                                  FlagBuildOptions options = {});

}  // namespace csd
