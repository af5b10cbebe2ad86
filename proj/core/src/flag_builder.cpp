#include "csd/flag_builder.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "csd/errors.hpp"

namespace csd {

WeightedGraph::WeightedGraph(std::size_t n) : adjacency_(n) {}

void WeightedGraph::add_edge(Vertex u, Vertex v, Level weight) {
  const std::size_t n = adjacency_.size();
  if (u == 0 || v == 0 || u > n || v > n) {
    throw UnknownVertex("edge " + std::to_string(u) + "-" + std::to_string(v) +
                        " outside 1.." + std::to_string(n));
  }
  if (u == v) throw InvalidSimplex("self-loop at vertex " + std::to_string(u));
  if (weight < 0) throw FiltrationOutOfRange("negative edge weight");
  if (u > v) std::swap(u, v);
  if (!weights_.emplace(std::make_pair(u, v), weight).second) {
    throw PreconditionViolated("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adjacency_[u - 1].insert(v);
  adjacency_[v - 1].insert(u);
  edges_.push_back({u, v, weight});
}

std::optional<Level> WeightedGraph::weight(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = weights_.find({u, v});
  if (it == weights_.end()) return std::nullopt;
  return it->second;
}

Level WeightedGraph::max_weight() const noexcept {
  Level w = 0;
  for (const Edge& e : edges_) w = std::max(w, e.weight);
  return w;
}

void PrefixTree::insert(const Simplex& s) {
  Node* node = &root_;
  for (Vertex v : s) {
    auto& slot = node->children[v];
    if (!slot) slot = std::make_unique<Node>();
    node = slot.get();
  }
  if (!node->terminal) {
    node->terminal = true;
    ++words_;
  }
}

bool PrefixTree::contains(const Simplex& s) const {
  const Node* node = &root_;
  for (Vertex v : s) {
    auto it = node->children.find(v);
    if (it == node->children.end()) return false;
    node = it->second.get();
  }
  return node->terminal;
}

namespace {

using Adjacency = std::vector<std::set<Vertex>>;

// Bron-Kerbosch with Tomita pivoting on a small local graph given by an
// adjacency matrix over indices 0..k-1.
class LocalCliques {
 public:
  LocalCliques(std::vector<Vertex> labels, std::vector<char> matrix)
      : labels_(std::move(labels)), matrix_(std::move(matrix)), k_(labels_.size()) {}

  void run(std::vector<int> p, std::vector<int> x,
           const std::function<void(const std::vector<Vertex>&)>& report) {
    std::vector<int> r;
    expand(r, std::move(p), std::move(x), report);
  }

 private:
  bool adjacent(int a, int b) const { return matrix_[static_cast<std::size_t>(a) * k_ + b]; }

  void expand(std::vector<int>& r, std::vector<int> p, std::vector<int> x,
              const std::function<void(const std::vector<Vertex>&)>& report) {
    if (p.empty()) {
      if (x.empty()) {
        std::vector<Vertex> clique;
        clique.reserve(r.size());
        for (int i : r) clique.push_back(labels_[static_cast<std::size_t>(i)]);
        report(clique);
      }
      return;
    }
    int pivot = -1;
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
      for (int u : *set) {
        std::size_t hits = 0;
        for (int w : p) hits += adjacent(u, w);
        if (pivot < 0 || hits > best) {
          pivot = u;
          best = hits;
        }
      }
    }
    std::vector<int> branch;
    for (int w : p) {
      if (!adjacent(pivot, w)) branch.push_back(w);
    }
    for (int v : branch) {
      std::vector<int> p2, x2;
      for (int w : p) {
        if (adjacent(v, w)) p2.push_back(w);
      }
      for (int w : x) {
        if (adjacent(v, w)) x2.push_back(w);
      }
      r.push_back(v);
      expand(r, std::move(p2), std::move(x2), report);
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  }

  std::vector<Vertex> labels_;
  std::vector<char> matrix_;
  std::size_t k_;
};

LocalCliques induced(const Adjacency& adj, const std::vector<Vertex>& vertices) {
  const std::size_t k = vertices.size();
  std::vector<char> matrix(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (adj[vertices[i] - 1].contains(vertices[j])) {
        matrix[i * k + j] = 1;
        matrix[j * k + i] = 1;
      }
    }
  }
  return LocalCliques(vertices, std::move(matrix));
}

std::vector<Vertex> common_neighbors(const Adjacency& adj, Vertex u, Vertex v) {
  std::vector<Vertex> out;
  std::set_intersection(adj[u - 1].begin(), adj[u - 1].end(), adj[v - 1].begin(),
                        adj[v - 1].end(), std::back_inserter(out));
  return out;
}

std::vector<Simplex> cliques_through(const Adjacency& adj, Vertex u, Vertex v) {
  const auto common = common_neighbors(adj, u, v);
  std::vector<Simplex> out;
  if (common.empty()) {
    out.push_back(Simplex{u, v});
    return out;
  }
  std::vector<int> p(common.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
  induced(adj, common).run(std::move(p), {}, [&](const std::vector<Vertex>& clique) {
    std::vector<Vertex> vs = clique;
    vs.push_back(u);
    vs.push_back(v);
    out.emplace_back(std::move(vs));
  });
  std::sort(out.begin(), out.end());
  return out;
}

Adjacency adjacency_of(const WeightedGraph& g) {
  Adjacency adj(g.vertex_count());
  for (Vertex v = 1; v <= g.vertex_count(); ++v) adj[v - 1] = g.neighbors(v);
  return adj;
}

// Degeneracy ordering by repeatedly removing a vertex of least residual degree.
std::vector<Vertex> degeneracy_order(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> degree(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    degree[i] = adj[i].size();
    queue.emplace(degree[i], static_cast<Vertex>(i + 1));
  }
  std::vector<char> removed(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  while (!queue.empty()) {
    auto [deg, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v - 1] = 1;
    order.push_back(v);
    for (Vertex w : adj[v - 1]) {
      if (removed[w - 1]) continue;
      queue.erase({degree[w - 1], w});
      --degree[w - 1];
      queue.emplace(degree[w - 1], w);
    }
  }
  return order;
}

}  // namespace

std::vector<Simplex> enumerate_maximal_cliques(const WeightedGraph& g) {
  const Adjacency adj = adjacency_of(g);
  const auto order = degeneracy_order(adj);
  std::vector<std::size_t> position(adj.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i] - 1] = i;

  std::vector<Simplex> out;
  for (Vertex v : order) {
    const auto& nbrs = adj[v - 1];
    if (nbrs.empty()) {
      out.push_back(Simplex{v});
      continue;
    }
    std::vector<Vertex> local(nbrs.begin(), nbrs.end());
    std::vector<int> p, x;
    for (std::size_t i = 0; i < local.size(); ++i) {
      (position[local[i] - 1] > position[v - 1] ? p : x).push_back(static_cast<int>(i));
    }
    induced(adj, local).run(std::move(p), std::move(x), [&](const std::vector<Vertex>& clique) {
      std::vector<Vertex> vs = clique;
      vs.push_back(v);
      out.emplace_back(std::move(vs));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> cliques_through_edge(const WeightedGraph& g, Vertex u, Vertex v) {
  if (u == 0 || v == 0 || u > g.vertex_count() || v > g.vertex_count() || !g.weight(u, v)) {
    throw UnknownEdge("no edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  return cliques_through(adjacency_of(g), u, v);
}

CriticalSimplexDiagram build_flag(const WeightedGraph& g, std::optional<Level> t,
                                  FlagBuildOptions options) {
  const Level top = t.value_or(g.max_weight());
  if (g.max_weight() > top) {
    throw FiltrationOutOfRange("edge weight " + std::to_string(g.max_weight()) +
                               " exceeds t = " + std::to_string(top));
  }
  PrefixTree maximal;
  for (const Simplex& c : enumerate_maximal_cliques(g)) maximal.insert(c);

  std::vector<Edge> sweep = g.edges();
  std::sort(sweep.begin(), sweep.end(), [](const Edge& a, const Edge& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });

  CriticalSimplexDiagram diagram(g.vertex_count(), top);
  Adjacency residual = adjacency_of(g);
  for (const Edge& e : sweep) {
    for (const Simplex& c : cliques_through(residual, e.u, e.v)) {
      diagram.lazy_insert(c, e.weight, maximal.contains(c));
    }
    residual[e.u - 1].erase(e.v);
    residual[e.v - 1].erase(e.u);
  }
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    diagram.lazy_insert(Simplex{v}, 0, maximal.contains(Simplex{v}));
  }
  if (options.cleanup) diagram.cleanup();
  return diagram;
}

}  // namespace csd
