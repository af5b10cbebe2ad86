#include "csd/simplex.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "csd/errors.hpp"

namespace csd {

namespace {

void check_strictly_increasing(const std::vector<Vertex>& vs) {
  if (vs.empty()) throw InvalidSimplex("empty simplex");
  if (vs.front() == 0) throw InvalidSimplex("vertex ids start at 1");
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (vs[i - 1] == vs[i]) {
      throw InvalidSimplex("repeated vertex " + std::to_string(vs[i]));
    }
    if (vs[i - 1] > vs[i]) throw InvalidSimplex("vertices not increasing");
  }
}

}  // namespace

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : Simplex(std::vector<Vertex>(vertices)) {}

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  check_strictly_increasing(vertices_);
}

Simplex Simplex::from_sorted(std::vector<Vertex> vertices) {
  check_strictly_increasing(vertices);
  return Simplex(Trusted{}, std::move(vertices));
}

bool Simplex::contains(Vertex v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Simplex Simplex::without_index(std::size_t index) const {
  if (vertices_.size() < 2) throw DimensionError("a vertex has no facets");
  std::vector<Vertex> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i != index) out.push_back(vertices_[i]);
  }
  return Simplex(Trusted{}, std::move(out));
}

Simplex Simplex::with(Vertex v) const {
  if (v == 0) throw InvalidSimplex("vertex ids start at 1");
  auto out = vertices_;
  auto it = std::lower_bound(out.begin(), out.end(), v);
  if (it == out.end() || *it != v) out.insert(it, v);
  return Simplex(Trusted{}, std::move(out));
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Vertex v : s) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<Simplex> faces(const Simplex& s, int dim) {
  if (dim < 0 || dim > s.dimension()) {
    throw DimensionError("face dimension " + std::to_string(dim) +
                         " out of range for a " +
                         std::to_string(s.dimension()) + "-simplex");
  }
  const std::size_t k = static_cast<std::size_t>(dim) + 1;
  const std::size_t n = s.size();
  std::vector<Simplex> out;
  // Lexicographic enumeration of k-subsets by index vectors.
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<Vertex> vs(k);
    for (std::size_t i = 0; i < k; ++i) vs[i] = s[idx[i]];
    out.push_back(Simplex::from_sorted(std::move(vs)));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Simplex> facets(const Simplex& s) {
  if (s.dimension() < 1) throw DimensionError("a vertex has no facets");
  std::vector<Simplex> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.without_index(i));
  return out;
}

bool is_face(const Simplex& a, const Simplex& b) noexcept {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string to_string(const Simplex& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(s[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
  return os << '[' << to_string(s) << ']';
}

Simplex parse_simplex(std::string_view text) {
  std::vector<Vertex> vs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                 text[pos] == ',')) {
      ++pos;
    }
    if (pos >= text.size()) break;
    Vertex v = 0;
    auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc{} ||
        (end != text.data() + text.size() && *end != ' ' && *end != '\t' &&
         *end != ',')) {
      throw ParseError(1, pos + 1, "expected a vertex id");
    }
    vs.push_back(v);
    pos = static_cast<std::size_t>(end - text.data());
  }
  try {
    return Simplex(std::move(vs));
  } catch (const InvalidSimplex& e) {
    throw ParseError(1, 0, e.what());
  }
}

}  // namespace csd
