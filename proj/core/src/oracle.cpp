#include "csd/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "csd/errors.hpp"

namespace csd::oracle {

namespace {

// All non-empty subsets of s, by bitmask.
std::vector<Simplex> all_faces(const Simplex& s) {
  const std::size_t k = s.size();
  if (k > 30) throw DimensionError("oracle refuses simplices above dimension 29");
  std::vector<Simplex> out;
  out.reserve((std::size_t{1} << k) - 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) vs.push_back(s[i]);
    }
    out.push_back(Simplex::from_sorted(std::move(vs)));
  }
  return out;
}

void lower(std::map<Simplex, Level>& table, const Simplex& s, Level level) {
  auto [it, inserted] = table.emplace(s, level);
  if (!inserted) it->second = std::min(it->second, level);
}

}  // namespace

std::optional<Level> ExplicitComplex::find(const Simplex& s) const {
  auto it = table_.find(s);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

Level ExplicitComplex::filtration(const Simplex& s) const {
  auto f = find(s);
  if (!f) throw NotInComplex("simplex " + to_string(s) + " is not in the complex");
  return *f;
}

std::vector<Simplex> ExplicitComplex::proper_cofaces(const Simplex& s) const {
  std::vector<Simplex> out;
  for (const auto& [other, _] : table_) {
    if (other.size() > s.size() && is_face(s, other)) out.push_back(other);
  }
  return out;
}

bool ExplicitComplex::is_maximal(const Simplex& s) const {
  return contains(s) && proper_cofaces(s).empty();
}

bool ExplicitComplex::is_critical(const Simplex& s) const {
  const Level f = filtration(s);
  for (const Simplex& c : proper_cofaces(s)) {
    if (table_.at(c) <= f) return false;
  }
  return true;
}

std::vector<std::pair<Simplex, Level>> ExplicitComplex::facet_filtrations(
    const Simplex& s) const {
  filtration(s);
  std::vector<std::pair<Simplex, Level>> out;
  for (const Simplex& f : facets(s)) out.emplace_back(f, filtration(f));
  return out;
}

std::vector<std::pair<Simplex, Level>> ExplicitComplex::coface_filtrations(
    const Simplex& s) const {
  filtration(s);
  std::vector<std::pair<Simplex, Level>> out;
  for (const Simplex& c : proper_cofaces(s)) {
    if (c.size() == s.size() + 1) out.emplace_back(c, table_.at(c));
  }
  return out;
}

void ExplicitComplex::lazy_insert(const Simplex& s, Level level) {
  if (level < 0 || level > t_) throw FiltrationOutOfRange("level outside 0..t");
  for (const Simplex& f : all_faces(s)) lower(table_, f, level);
}

void ExplicitComplex::insert(const Simplex& s, Level level) {
  for (const auto& [other, value] : table_) {
    if (is_face(s, other) && value <= level) {
      throw PreconditionViolated("simplex " + to_string(other) + " has level " +
                                 std::to_string(value));
    }
  }
  lazy_insert(s, level);
}

void ExplicitComplex::remove(const Simplex& s) {
  if (!contains(s)) throw NotInComplex("simplex " + to_string(s) + " is not in the complex");
  std::erase_if(table_, [&](const auto& entry) { return is_face(s, entry.first); });
}

void ExplicitComplex::elementary_collapse(const Simplex& sigma, const Simplex& tau) {
  if (!contains(sigma) || !contains(tau)) throw NotAFreePair("pair not in the complex");
  auto cofaces = proper_cofaces(sigma);
  if (cofaces.size() != 1 || cofaces.front() != tau || tau.size() != sigma.size() + 1) {
    throw NotAFreePair("not a free pair");
  }
  table_.erase(sigma);
  table_.erase(tau);
}

void ExplicitComplex::apply_vertex_map(const std::map<Vertex, Vertex>& pi) {
  std::map<Simplex, Level> image;
  for (const auto& [s, level] : table_) {
    std::vector<Vertex> vs;
    for (Vertex v : s) {
      auto it = pi.find(v);
      vs.push_back(it == pi.end() ? v : it->second);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    lower(image, Simplex::from_sorted(std::move(vs)), level);
  }
  table_ = std::move(image);
}

ExplicitComplex min_closure(const std::vector<std::pair<Simplex, Level>>& seed, Level t) {
  ExplicitComplex c(t);
  for (const auto& [s, level] : seed) c.lazy_insert(s, level);
  return c;
}

ExplicitComplex close_down(const std::vector<std::pair<Simplex, Level>>& seed, Level t) {
  for (const auto& [a, fa] : seed) {
    for (const auto& [b, fb] : seed) {
      if (a.size() < b.size() && is_face(a, b) && fa > fb) {
        throw MonotonicityError("seeded " + to_string(a) + " at " + std::to_string(fa) +
                                " above its coface " + to_string(b) + " at " +
                                std::to_string(fb));
      }
    }
  }
  return min_closure(seed, t);
}

std::vector<CriticalEntry> critical_set(const ExplicitComplex& c) {
  std::vector<CriticalEntry> out;
  for (const auto& [s, level] : c.table()) {
    bool critical = true;
    bool has_coface = false;
    for (const auto& [other, other_level] : c.table()) {
      if (other.size() <= s.size() || !is_face(s, other)) continue;
      has_coface = true;
      if (other_level <= level) {
        critical = false;
        break;
      }
    }
    if (critical) out.push_back({s, level, !has_coface});
  }
  return out;
}

OracleStats oracle_stats(const ExplicitComplex& c, std::size_t n) {
  OracleStats st;
  st.n = n;
  st.m = c.size();
  std::vector<Simplex> maximal;
  for (const auto& [s, _] : c.table()) {
    st.d = std::max(st.d, s.dimension());
    if (c.is_maximal(s)) maximal.push_back(s);
  }
  st.k = maximal.size();

  auto critical = critical_set(c);
  st.kappa = critical.size();
  std::vector<std::size_t> per_vertex(n + 1, 0);
  for (const auto& e : critical) {
    st.node_count += e.simplex.size();
    for (Vertex v : e.simplex) {
      if (v <= n) ++per_vertex[v];
    }
  }
  for (std::size_t v = 1; v <= n; ++v) st.psi = std::max(st.psi, per_vertex[v]);
  if (n > 0) st.psi_avg = static_cast<double>(st.node_count) / static_cast<double>(n);

  st.gamma.assign(static_cast<std::size_t>(st.d) + 1, 0);
  if (c.size() == 0) st.gamma.assign(1, 0);
  for (const auto& [s, _] : c.table()) {
    std::size_t count = 0;
    for (const Simplex& top : maximal) {
      if (is_face(s, top)) ++count;
    }
    auto& g = st.gamma[static_cast<std::size_t>(s.dimension())];
    g = std::max(g, count);
  }
  return st;
}

}  // namespace csd::oracle
