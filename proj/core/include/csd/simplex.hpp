#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace csd {

/// Vertex identifier. Vertices are numbered from 1 to n.
using Vertex = std::uint32_t;

/// Filtration value. Levels live in {0, 1, ..., t}.
using Level = std::int32_t;

/// A non-empty set of vertices stored as a strictly increasing sequence.
///
/// Construction from an unsorted list sorts it. A repeated vertex, the
/// vertex 0, or an empty list raise InvalidSimplex.
class Simplex {
 public:
  Simplex(std::initializer_list<Vertex> vertices);
  explicit Simplex(std::vector<Vertex> vertices);

  /// Wraps an already strictly increasing sequence. Only the ordering is
  /// checked, the sort is skipped.
  static Simplex from_sorted(std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  Vertex front() const noexcept { return vertices_.front(); }
  Vertex back() const noexcept { return vertices_.back(); }
  Vertex operator[](std::size_t i) const noexcept { return vertices_[i]; }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }

  bool contains(Vertex v) const noexcept;

  /// The facet obtained by dropping the vertex at `index`.
  Simplex without_index(std::size_t index) const;

  /// This simplex with `v` added. Returns a copy when `v` is already present.
  Simplex with(Vertex v) const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    return a.vertices_ <=> b.vertices_;
  }

 private:
  struct Trusted {};
  Simplex(Trusted, std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

  std::vector<Vertex> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// All faces of `s` of dimension `dim`, in lexicographic order.
/// Throws DimensionError unless 0 <= dim <= s.dimension().
std::vector<Simplex> faces(const Simplex& s, int dim);

/// The s.dimension()+1 facets of `s`; the i-th facet omits the i-th vertex.
/// Throws DimensionError on a vertex.
std::vector<Simplex> facets(const Simplex& s);

/// True iff the vertex set of `a` is a subset of the vertex set of `b`.
bool is_face(const Simplex& a, const Simplex& b) noexcept;

/// Textual form "v0 v1 ... vk".
std::string to_string(const Simplex& s);
std::ostream& operator<<(std::ostream& os, const Simplex& s);

/// Parses the textual form. Vertices may appear in any order. Garbage, zero,
/// repeated or missing vertices raise ParseError on line 1.
Simplex parse_simplex(std::string_view text);

}  // namespace csd
