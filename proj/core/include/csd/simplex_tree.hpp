#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>

#include "csd/simplex.hpp"

namespace csd {

class CriticalSimplexDiagram;

/// Trie over the sorted vertex words of a complex, one node per simplex, each
/// node holding its filtration value. Baseline for size and timing
/// comparisons; supports insertion and lookups only.
class SimplexTree {
 public:
  SimplexTree() = default;
  SimplexTree(SimplexTree&&) noexcept = default;
  SimplexTree& operator=(SimplexTree&&) noexcept = default;

  /// Inserts `s` and all its faces. Faces already present keep the smaller of
  /// their value and `level`. If `s` is already present with a value below
  /// `level` (which is the case whenever a coface is cheaper), throws
  /// MonotonicityError.
  void insert(const Simplex& s, Level level);

  bool contains(const Simplex& s) const;
  std::optional<Level> find(const Simplex& s) const;
  Level filtration(const Simplex& s) const;  // NotInComplex

  /// Number of simplices; the root is not counted.
  std::size_t node_count() const noexcept { return nodes_; }

 private:
  struct Node {
    Level value = 0;
    std::map<Vertex, std::unique_ptr<Node>> children;
  };

  const Node* locate(const Simplex& s) const;
  void insert_faces(Node& node, const Simplex& s, std::size_t from, Level level);

  Node root_;
  std::size_t nodes_ = 0;
};

/// Materializes the complex stored in `diagram`: every star is inserted,
/// highest level first, so each simplex ends at the least level covering it.
SimplexTree expand(const CriticalSimplexDiagram& diagram);

}  // namespace csd
