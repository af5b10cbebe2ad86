#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "csd/simplex.hpp"

namespace csd {

/// Identifies one stored star: its filtration level plus a key that is unique
/// among live stars of that level. Ordered lexicographically.
struct Label {
  Level level = 0;
  std::uint32_t key = 0;

  friend auto operator<=>(const Label&, const Label&) = default;
};

/// A stored critical simplex. Its center is `simplex.front()`.
struct Star {
  Simplex simplex;
  bool maximal = false;
};

/// The nodes of one vertex, split into the maximal segment (stars of maximal
/// simplices) and the rest. Both segments are ordered by label.
class VertexArray {
 public:
  const std::set<Label>& maximal_segment() const noexcept { return maximal_; }
  const std::set<Label>& non_maximal_segment() const noexcept { return others_; }
  std::size_t size() const noexcept { return maximal_.size() + others_.size(); }
  bool empty() const noexcept { return size() == 0; }
  bool contains(const Label& label) const {
    return maximal_.contains(label) || others_.contains(label);
  }

 private:
  friend class CriticalSimplexDiagram;
  std::set<Label> maximal_;
  std::set<Label> others_;
};

/// Per-level key source. Released keys are handed out again smallest first.
class KeyAllocator {
 public:
  std::uint32_t acquire(Level level);
  void release(Level level, std::uint32_t key);

 private:
  struct Pool {
    std::uint32_t next = 1;
    std::set<std::uint32_t> released;
  };
  std::map<Level, Pool> pools_;
};

struct Stats {
  std::size_t n = 0;
  int d = 0;                   ///< largest stored star dimension
  std::size_t node_count = 0;  ///< total nodes over all arrays
  std::size_t stars = 0;       ///< stored stars, redundant ones included
  std::size_t kappa = 0;       ///< distinct stored simplices that are critical
  std::size_t k = 0;           ///< maximal simplices
  std::size_t psi = 0;         ///< largest array
  double psi_avg = 0.0;
  std::size_t gamma0 = 0;      ///< largest maximal segment
  double gamma0_avg = 0.0;

  friend bool operator==(const Stats&, const Stats&) = default;
};

/// Critical Simplex Diagram: a filtered simplicial complex stored through its
/// critical simplices only, one star of labeled nodes per simplex over n
/// per-vertex arrays.
///
/// Semantics of the stored data: the complex is the union of the closures of
/// the stored simplices, and the filtration value of a simplex is the minimum
/// level over the stored simplices containing it. Every maximal simplex of the
/// complex must be stored with its maximal flag set. Redundant stars (stars of
/// non-critical simplices, duplicates) never change a query answer and are
/// removed by cleanup().
///
/// Mutating operations need exclusive access; const queries may run
/// concurrently.
class CriticalSimplexDiagram {
 public:
  /// A diagram over vertices 1..n with filtration values in {0..t}.
  CriticalSimplexDiagram(std::size_t n, Level t);

  std::size_t vertex_count() const noexcept { return arrays_.size(); }
  Level max_level() const noexcept { return t_; }
  const VertexArray& array(Vertex v) const;
  const std::map<Label, Star>& stars() const noexcept { return stars_; }
  const Star& star(const Label& label) const;
  std::size_t node_count() const noexcept { return node_count_; }
  bool empty() const noexcept { return stars_.empty(); }

  // -- static queries ------------------------------------------------------

  /// Labels of the stars containing every vertex of `s`, ascending. With
  /// `maximal_only`, restricted to maximal stars. Probes the other arrays
  /// from the smallest one. Throws UnknownVertex.
  std::vector<Label> intersect_arrays(const Simplex& s, bool maximal_only) const;

  /// True iff `s` belongs to the complex. Unknown vertices give false.
  bool contains(const Simplex& s) const;

  bool is_maximal(const Simplex& s) const;

  /// Filtration value of `s`; throws NotInComplex.
  Level filtration(const Simplex& s) const;
  std::optional<Level> find_filtration(const Simplex& s) const;

  /// True iff every proper coface of `s` has a strictly larger value.
  /// Throws NotInComplex.
  bool is_critical(const Simplex& s) const;

  /// Filtration values of the facets of `s`, ordered as facets(s).
  std::vector<std::pair<Simplex, Level>> facet_filtrations(const Simplex& s) const;

  /// Cofaces of codimension 1 present in the complex with their values,
  /// in lexicographic order.
  std::vector<std::pair<Simplex, Level>> coface_filtrations(const Simplex& s) const;

  // -- updates ---------------------------------------------------------------

  /// Stores `s` at `level` without touching any other star. The caller states
  /// whether `s` is maximal. Throws FiltrationOutOfRange, UnknownVertex.
  Label lazy_insert(const Simplex& s, Level level, bool maximal);

  /// Inserts `s` at `level`. Every simplex of the complex containing `s`
  /// (including `s` itself) must have a value strictly above `level`,
  /// otherwise PreconditionViolated. Maximal faces of `s` are removed or moved
  /// out of the maximal segments.
  Label insert(const Simplex& s, Level level);

  /// Removes `s` and all its cofaces. Throws NotInComplex.
  void remove(const Simplex& s);

  /// Removes the free pair (sigma, tau). Throws NotAFreePair.
  void elementary_collapse(const Simplex& sigma, const Simplex& tau);

  /// Applies the simplicial map that sends every non-survivor vertex v to
  /// pi.at(v) and fixes survivors. Afterwards the diagram represents the
  /// image complex, each image simplex valued by its cheapest preimage.
  /// Arrays of non-survivors end up empty. Throws InvalidVertexMap.
  void collapse_vertices(const std::map<Vertex, Vertex>& pi,
                         const std::vector<Vertex>& survivors);

  /// Deletes stars of non-critical simplices and duplicate stars, fixes the
  /// maximal flags. Query answers are unchanged. Returns deleted star count.
  std::size_t cleanup();

  Stats stats() const;

  /// Structural self-check: every star has exactly one node per member array
  /// in the segment matching its flag, and node counts add up. Returns an
  /// empty string when consistent, else a description of the first defect.
  std::string structural_defect() const;

 private:
  void check_vertices(const Simplex& s) const;
  bool known(const Simplex& s) const noexcept;
  void attach(const Label& label, Star star);
  void detach(const Label& label);
  void set_maximal(const Label& label, bool maximal);
  std::vector<Label> containing(const Simplex& s, bool maximal_only) const;
  // Some stored star strictly contains `s`.
  bool covered(const Simplex& s) const;

  Level t_;
  std::vector<VertexArray> arrays_;
  std::map<Label, Star> stars_;
  KeyAllocator keys_;
  std::size_t node_count_ = 0;
};

}  // namespace csd
