#include "csd/diagram.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>

#include "csd/errors.hpp"

namespace csd {

std::uint32_t KeyAllocator::acquire(Level level) {
  Pool& pool = pools_[level];
  if (!pool.released.empty()) {
    auto it = pool.released.begin();
    std::uint32_t key = *it;
    pool.released.erase(it);
    return key;
  }
  return pool.next++;
}

void KeyAllocator::release(Level level, std::uint32_t key) {
  auto it = pools_.find(level);
  if (it == pools_.end()) return;
  Pool& pool = it->second;
  if (key + 1 == pool.next) {
    --pool.next;
    // Shrink the counter past any trailing released keys.
    while (!pool.released.empty() && *pool.released.rbegin() + 1 == pool.next) {
      pool.released.erase(std::prev(pool.released.end()));
      --pool.next;
    }
  } else {
    pool.released.insert(key);
  }
}

CriticalSimplexDiagram::CriticalSimplexDiagram(std::size_t n, Level t)
    : t_(t), arrays_(n) {
  if (t < 0) throw FiltrationOutOfRange("filtration bound must be non-negative");
}

const VertexArray& CriticalSimplexDiagram::array(Vertex v) const {
  if (v == 0 || v > arrays_.size()) {
    throw UnknownVertex("vertex " + std::to_string(v) + " outside 1.." +
                        std::to_string(arrays_.size()));
  }
  return arrays_[v - 1];
}

const Star& CriticalSimplexDiagram::star(const Label& label) const {
  auto it = stars_.find(label);
  if (it == stars_.end()) {
    throw Error("no star with label (" + std::to_string(label.level) + "," +
                std::to_string(label.key) + ")");
  }
  return it->second;
}

bool CriticalSimplexDiagram::known(const Simplex& s) const noexcept {
  return s.back() <= arrays_.size();
}

void CriticalSimplexDiagram::check_vertices(const Simplex& s) const {
  if (!known(s)) {
    throw UnknownVertex("vertex " + std::to_string(s.back()) + " outside 1.." +
                        std::to_string(arrays_.size()));
  }
}

std::vector<Label> CriticalSimplexDiagram::containing(const Simplex& s,
                                                      bool maximal_only) const {
  auto weight = [&](Vertex v) {
    const VertexArray& a = arrays_[v - 1];
    return maximal_only ? a.maximal_.size() : a.size();
  };
  Vertex pivot = s.front();
  for (Vertex v : s) {
    if (weight(v) < weight(pivot)) pivot = v;
  }
  const VertexArray& base = arrays_[pivot - 1];
  std::vector<Label> out;
  auto probe = [&](const std::set<Label>& segment, bool segment_is_maximal) {
    for (const Label& label : segment) {
      bool everywhere = true;
      for (Vertex v : s) {
        if (v == pivot) continue;
        const VertexArray& a = arrays_[v - 1];
        const auto& other = segment_is_maximal ? a.maximal_ : a.others_;
        if (!other.contains(label)) {
          everywhere = false;
          break;
        }
      }
      if (everywhere) out.push_back(label);
    }
  };
  probe(base.maximal_, true);
  if (!maximal_only) {
    probe(base.others_, false);
    std::sort(out.begin(), out.end());
  }
  return out;
}

std::vector<Label> CriticalSimplexDiagram::intersect_arrays(const Simplex& s,
                                                            bool maximal_only) const {
  check_vertices(s);
  return containing(s, maximal_only);
}

bool CriticalSimplexDiagram::contains(const Simplex& s) const {
  return known(s) && !containing(s, true).empty();
}

bool CriticalSimplexDiagram::is_maximal(const Simplex& s) const {
  if (!known(s)) return false;
  bool exact = false;
  for (const Label& label : containing(s, true)) {
    const Star& st = stars_.at(label);
    if (st.simplex.size() > s.size()) return false;
    exact = true;
  }
  return exact;
}

std::optional<Level> CriticalSimplexDiagram::find_filtration(const Simplex& s) const {
  if (!known(s)) return std::nullopt;
  auto labels = containing(s, false);
  if (labels.empty()) return std::nullopt;
  return labels.front().level;  // labels ascend, level first
}

Level CriticalSimplexDiagram::filtration(const Simplex& s) const {
  auto f = find_filtration(s);
  if (!f) throw NotInComplex("simplex " + to_string(s) + " is not in the complex");
  return *f;
}

bool CriticalSimplexDiagram::covered(const Simplex& s) const {
  for (const Label& label : containing(s, false)) {
    if (stars_.at(label).simplex.size() > s.size()) return true;
  }
  return false;
}

bool CriticalSimplexDiagram::is_critical(const Simplex& s) const {
  if (!known(s)) throw NotInComplex("simplex " + to_string(s) + " is not in the complex");
  auto labels = containing(s, false);
  if (labels.empty()) {
    throw NotInComplex("simplex " + to_string(s) + " is not in the complex");
  }
  const Level f = labels.front().level;
  bool exact = false;
  for (const Label& label : labels) {
    if (label.level != f) break;
    if (stars_.at(label).simplex.size() > s.size()) return false;
    exact = true;
  }
  return exact;
}

std::vector<std::pair<Simplex, Level>> CriticalSimplexDiagram::facet_filtrations(
    const Simplex& s) const {
  if (s.dimension() < 1) throw DimensionError("a vertex has no facets");
  if (!contains(s)) throw NotInComplex("simplex " + to_string(s) + " is not in the complex");

  const std::size_t size = s.size();
  std::size_t r = 0;
  for (std::size_t i = 1; i < size; ++i) {
    if (arrays_[s[i] - 1].size() < arrays_[s[r] - 1].size()) r = i;
  }
  constexpr Level kNone = std::numeric_limits<Level>::max();
  std::vector<Level> best(size, kNone);
  Level whole = kNone;

  // One pass over the smallest array: a label missing from no other array
  // contains s (hence every facet); a label missing from exactly the array of
  // vertex j contains the facet that omits j.
  const VertexArray& base = arrays_[s[r] - 1];
  auto scan = [&](const std::set<Label>& segment) {
    for (const Label& label : segment) {
      std::size_t missing = size;
      std::size_t misses = 0;
      for (std::size_t i = 0; i < size && misses < 2; ++i) {
        if (i == r) continue;
        if (!arrays_[s[i] - 1].contains(label)) {
          missing = i;
          ++misses;
        }
      }
      if (misses == 0) {
        whole = std::min(whole, label.level);
      } else if (misses == 1) {
        best[missing] = std::min(best[missing], label.level);
      }
    }
  };
  scan(base.maximal_);
  scan(base.others_);

  std::vector<std::pair<Simplex, Level>> out;
  out.reserve(size);
  for (std::size_t j = 0; j < size; ++j) {
    Simplex facet = s.without_index(j);
    Level value;
    if (j == r) {
      // Stars containing this facet but not s avoid the scanned array.
      value = filtration(facet);
    } else {
      value = std::min(whole, best[j]);
    }
    out.emplace_back(std::move(facet), value);
  }
  return out;
}

std::vector<std::pair<Simplex, Level>> CriticalSimplexDiagram::coface_filtrations(
    const Simplex& s) const {
  if (!contains(s)) throw NotInComplex("simplex " + to_string(s) + " is not in the complex");
  std::map<Simplex, Level> cofaces;
  for (const Label& label : containing(s, false)) {
    const Star& st = stars_.at(label);
    for (Vertex w : st.simplex) {
      if (s.contains(w)) continue;
      auto [it, inserted] = cofaces.emplace(s.with(w), label.level);
      if (!inserted) it->second = std::min(it->second, label.level);
    }
  }
  return {cofaces.begin(), cofaces.end()};
}

void CriticalSimplexDiagram::attach(const Label& label, Star star) {
  for (Vertex v : star.simplex) {
    VertexArray& a = arrays_[v - 1];
    (star.maximal ? a.maximal_ : a.others_).insert(label);
  }
  node_count_ += star.simplex.size();
  stars_.emplace(label, std::move(star));
}

void CriticalSimplexDiagram::detach(const Label& label) {
  auto it = stars_.find(label);
  if (it == stars_.end()) return;
  const Star& st = it->second;
  for (Vertex v : st.simplex) {
    VertexArray& a = arrays_[v - 1];
    (st.maximal ? a.maximal_ : a.others_).erase(label);
  }
  node_count_ -= st.simplex.size();
  stars_.erase(it);
  keys_.release(label.level, label.key);
}

void CriticalSimplexDiagram::set_maximal(const Label& label, bool maximal) {
  Star& st = stars_.at(label);
  if (st.maximal == maximal) return;
  for (Vertex v : st.simplex) {
    VertexArray& a = arrays_[v - 1];
    (st.maximal ? a.maximal_ : a.others_).erase(label);
    (maximal ? a.maximal_ : a.others_).insert(label);
  }
  st.maximal = maximal;
}

Label CriticalSimplexDiagram::lazy_insert(const Simplex& s, Level level, bool maximal) {
  if (level < 0 || level > t_) {
    throw FiltrationOutOfRange("level " + std::to_string(level) + " outside 0.." +
                               std::to_string(t_));
  }
  check_vertices(s);
  Label label{level, keys_.acquire(level)};
  attach(label, Star{s, maximal});
  return label;
}

Label CriticalSimplexDiagram::insert(const Simplex& s, Level level) {
  if (level < 0 || level > t_) {
    throw FiltrationOutOfRange("level " + std::to_string(level) + " outside 0.." +
                               std::to_string(t_));
  }
  check_vertices(s);
  bool has_coface = false;
  for (const Label& label : containing(s, false)) {
    if (label.level <= level) {
      throw PreconditionViolated("simplex " + to_string(stars_.at(label).simplex) +
                                 " containing " + to_string(s) + " has level " +
                                 std::to_string(label.level) + " <= " +
                                 std::to_string(level));
    }
    if (stars_.at(label).simplex.size() > s.size()) has_coface = true;
  }
  if (has_coface) return lazy_insert(s, level, false);

  const Label fresh = lazy_insert(s, level, true);
  // Maximal stars that are faces of s: drop those at or above the new level,
  // demote the cheaper ones.
  std::set<Label> faces_of_s;
  for (Vertex v : s) {
    for (const Label& label : arrays_[v - 1].maximal_) {
      if (label != fresh && is_face(stars_.at(label).simplex, s)) faces_of_s.insert(label);
    }
  }
  for (const Label& label : faces_of_s) {
    if (label.level >= level) {
      detach(label);
    } else {
      set_maximal(label, false);
    }
  }
  return fresh;
}

void CriticalSimplexDiagram::remove(const Simplex& s) {
  if (!contains(s)) throw NotInComplex("simplex " + to_string(s) + " is not in the complex");

  struct Candidate {
    Level level;
    bool from_maximal;
  };
  std::map<Simplex, Candidate> candidates;
  const auto doomed = containing(s, false);
  for (const Label& label : doomed) {
    const Star& st = stars_.at(label);
    if (st.simplex.size() < 2) continue;
    for (std::size_t i = 0; i < st.simplex.size(); ++i) {
      if (!s.contains(st.simplex[i])) continue;
      auto [it, inserted] =
          candidates.emplace(st.simplex.without_index(i), Candidate{label.level, st.maximal});
      if (!inserted) {
        it->second.level = std::min(it->second.level, label.level);
        it->second.from_maximal = it->second.from_maximal || st.maximal;
      }
    }
  }
  for (const Label& label : doomed) detach(label);

  // Batch maximality check: a facet is maximal unless a surviving maximal star
  // or another candidate strictly contains it.
  std::vector<std::pair<Simplex, bool>> decided;
  decided.reserve(candidates.size());
  for (const auto& [facet, cand] : candidates) {
    bool maximal = cand.from_maximal && containing(facet, true).empty();
    if (maximal) {
      for (const auto& [other, _] : candidates) {
        if (other.size() > facet.size() && is_face(facet, other)) {
          maximal = false;
          break;
        }
      }
    }
    decided.emplace_back(facet, maximal);
  }
  for (const auto& [facet, maximal] : decided) {
    lazy_insert(facet, candidates.at(facet).level, maximal);
  }
}

void CriticalSimplexDiagram::elementary_collapse(const Simplex& sigma, const Simplex& tau) {
  if (tau.size() != sigma.size() + 1 || !is_face(sigma, tau)) {
    throw NotAFreePair("tau " + to_string(tau) + " is not a coface of codimension 1 of " +
                       to_string(sigma));
  }
  if (!contains(sigma)) {
    throw NotAFreePair("simplex " + to_string(sigma) + " is not in the complex");
  }
  bool tau_seen = false;
  for (const Label& label : containing(sigma, true)) {
    const Simplex& top = stars_.at(label).simplex;
    if (top == sigma) continue;
    if (top != tau) {
      throw NotAFreePair(to_string(sigma) + " has coface " + to_string(top) + " besides " +
                         to_string(tau));
    }
    tau_seen = true;
  }
  if (!tau_seen) {
    throw NotAFreePair("simplex " + to_string(tau) + " is not in the complex");
  }

  // Values survive the collapse; remember them before the stars go.
  std::vector<std::pair<Simplex, Level>> watch;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    Simplex facet = tau.without_index(i);
    if (facet == sigma) continue;
    Level f = filtration(facet);
    watch.emplace_back(std::move(facet), f);
  }
  if (sigma.dimension() >= 1) {
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      Simplex facet = sigma.without_index(i);
      Level f = filtration(facet);
      watch.emplace_back(std::move(facet), f);
    }
  }

  for (const Label& label : containing(sigma, false)) detach(label);

  for (const auto& [face, value] : watch) {
    const auto now = find_filtration(face);
    const bool maximal = !covered(face);
    if (!now || *now != value) {
      lazy_insert(face, value, maximal);
    } else if (maximal && !is_maximal(face)) {
      // still stored exactly at its value, only the flag went stale
      set_maximal(containing(face, false).front(), true);
    }
  }
}

void CriticalSimplexDiagram::collapse_vertices(const std::map<Vertex, Vertex>& pi,
                                               const std::vector<Vertex>& survivors) {
  const std::size_t n = arrays_.size();
  std::vector<char> survives(n + 1, 0);
  for (Vertex v : survivors) {
    if (v == 0 || v > n) {
      throw InvalidVertexMap("survivor " + std::to_string(v) + " outside 1.." +
                             std::to_string(n));
    }
    survives[v] = 1;
  }
  std::vector<Vertex> image(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    if (survives[v]) {
      auto it = pi.find(v);
      if (it != pi.end() && it->second != v) {
        throw InvalidVertexMap("survivor " + std::to_string(v) + " must map to itself");
      }
      image[v] = v;
      continue;
    }
    auto it = pi.find(v);
    if (it == pi.end()) {
      throw InvalidVertexMap("no image for vertex " + std::to_string(v));
    }
    if (it->second == 0 || it->second > n || !survives[it->second]) {
      throw InvalidVertexMap("vertex " + std::to_string(v) + " maps to non-survivor " +
                             std::to_string(it->second));
    }
    image[v] = it->second;
  }

  std::set<Label> doomed;
  for (Vertex v = 1; v <= n; ++v) {
    if (survives[v]) continue;
    const VertexArray& a = arrays_[v - 1];
    doomed.insert(a.maximal_.begin(), a.maximal_.end());
    doomed.insert(a.others_.begin(), a.others_.end());
  }
  if (doomed.empty()) return;

  std::map<Simplex, Level> candidates;
  for (const Label& label : doomed) {
    std::vector<Vertex> mapped;
    for (Vertex v : stars_.at(label).simplex) mapped.push_back(image[v]);
    std::sort(mapped.begin(), mapped.end());
    mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
    auto [it, inserted] = candidates.emplace(Simplex::from_sorted(std::move(mapped)), label.level);
    if (!inserted) it->second = std::min(it->second, label.level);
  }
  for (const Label& label : doomed) detach(label);

  std::vector<std::pair<Simplex, bool>> decided;
  for (const auto& [img, level] : candidates) {
    bool maximal = true;
    for (const Label& label : containing(img, false)) {
      if (stars_.at(label).simplex.size() > img.size()) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      for (const auto& [other, _] : candidates) {
        if (other.size() > img.size() && is_face(img, other)) {
          maximal = false;
          break;
        }
      }
    }
    decided.emplace_back(img, maximal);
  }
  // Surviving maximal stars swallowed by a new maximal image move out of the
  // maximal segments.
  for (const auto& [img, maximal] : decided) {
    if (!maximal) continue;
    std::set<Label> swallowed;
    for (Vertex v : img) {
      for (const Label& label : arrays_[v - 1].maximal_) {
        const Simplex& sv = stars_.at(label).simplex;
        if (sv.size() < img.size() && is_face(sv, img)) swallowed.insert(label);
      }
    }
    for (const Label& label : swallowed) set_maximal(label, false);
  }
  for (const auto& [img, maximal] : decided) {
    lazy_insert(img, candidates.at(img), maximal);
  }
}

std::size_t CriticalSimplexDiagram::cleanup() {
  std::map<Simplex, std::vector<Label>> groups;
  for (const auto& [label, st] : stars_) groups[st.simplex].push_back(label);

  struct Verdict {
    std::vector<Label> drop;
    std::optional<std::pair<Label, bool>> keep;
  };
  std::vector<Verdict> verdicts;
  verdicts.reserve(groups.size());
  for (const auto& [simplex, labels] : groups) {
    Verdict v;
    if (!is_critical(simplex)) {
      v.drop = labels;
    } else {
      const Level f = filtration(simplex);
      // labels ascend, so the first one at level f is the survivor
      auto keep = std::find_if(labels.begin(), labels.end(),
                               [f](const Label& l) { return l.level == f; });
      if (keep == labels.end()) {
        throw Error("critical simplex " + to_string(simplex) + " has no star at its level");
      }
      v.keep = std::make_pair(*keep, !covered(simplex));
      for (const Label& l : labels) {
        if (l != *keep) v.drop.push_back(l);
      }
    }
    verdicts.push_back(std::move(v));
  }

  std::size_t deleted = 0;
  for (const Verdict& v : verdicts) {
    for (const Label& l : v.drop) detach(l);
    deleted += v.drop.size();
  }
  for (const Verdict& v : verdicts) {
    if (v.keep) set_maximal(v.keep->first, v.keep->second);
  }
  return deleted;
}

Stats CriticalSimplexDiagram::stats() const {
  Stats s;
  s.n = arrays_.size();
  s.node_count = node_count_;
  s.stars = stars_.size();
  std::set<Simplex> distinct;
  for (const auto& [label, st] : stars_) {
    s.d = std::max(s.d, st.simplex.dimension());
    distinct.insert(st.simplex);
  }
  for (const Simplex& simplex : distinct) {
    if (is_critical(simplex)) ++s.kappa;
    if (is_maximal(simplex)) ++s.k;
  }
  std::size_t maximal_nodes = 0;
  for (const VertexArray& a : arrays_) {
    s.psi = std::max(s.psi, a.size());
    s.gamma0 = std::max(s.gamma0, a.maximal_.size());
    maximal_nodes += a.maximal_.size();
  }
  if (s.n > 0) {
    s.psi_avg = static_cast<double>(s.node_count) / static_cast<double>(s.n);
    s.gamma0_avg = static_cast<double>(maximal_nodes) / static_cast<double>(s.n);
  }
  return s;
}

std::string CriticalSimplexDiagram::structural_defect() const {
  std::ostringstream os;
  std::size_t nodes = 0;
  for (const auto& [label, st] : stars_) {
    nodes += st.simplex.size();
    if (st.simplex.back() > arrays_.size()) {
      os << "star " << st.simplex << " uses an unknown vertex";
      return os.str();
    }
    for (Vertex v : st.simplex) {
      const VertexArray& a = arrays_[v - 1];
      const auto& home = st.maximal ? a.maximal_ : a.others_;
      const auto& away = st.maximal ? a.others_ : a.maximal_;
      if (!home.contains(label) || away.contains(label)) {
        os << "star " << st.simplex << " misplaced in array " << v;
        return os.str();
      }
    }
  }
  std::size_t listed = 0;
  for (std::size_t i = 0; i < arrays_.size(); ++i) {
    for (const auto* seg : {&arrays_[i].maximal_, &arrays_[i].others_}) {
      for (const Label& label : *seg) {
        auto it = stars_.find(label);
        if (it == stars_.end() || !it->second.simplex.contains(static_cast<Vertex>(i + 1))) {
          os << "array " << (i + 1) << " holds a dangling node";
          return os.str();
        }
      }
      listed += seg->size();
    }
  }
  if (nodes != node_count_ || listed != node_count_) {
    os << "node count " << node_count_ << " disagrees with stars (" << nodes
       << ") or arrays (" << listed << ")";
    return os.str();
  }
  return {};
}

}  // namespace csd
