#include "traces.hpp"

#include <algorithm>
#include <map>

#include "brute_force.hpp"
#include "csd/errors.hpp"
#include "csd/flag_builder.hpp"

namespace csd::testing {

namespace {

Simplex random_simplex(std::mt19937_64& rng, std::size_t n, std::size_t max_size) {
  std::vector<Vertex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i + 1);
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<std::size_t> size(1, std::min(max_size, n));
  all.resize(size(rng));
  return Simplex(std::move(all));
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items) {
  std::uniform_int_distribution<std::size_t> at(0, items.size() - 1);
  return items[at(rng)];
}

std::string check_state(const CriticalSimplexDiagram& d, const oracle::ExplicitComplex& c) {
  if (auto defect = d.structural_defect(); !defect.empty()) return "structure: " + defect;
  const auto got = represented(d);
  if (got.table() != c.table()) {
    for (const auto& [s, level] : c.table()) {
      if (got.find(s) != level) return "value of " + to_string(s);
    }
    for (const auto& [s, level] : got.table()) {
      if (!c.contains(s)) return "spurious " + to_string(s);
    }
  }
  for (const auto& [s, _] : c.table()) {
    if (d.is_maximal(s) != c.is_maximal(s)) return "maximal flag of " + to_string(s);
  }
  return {};
}

}  // namespace

TraceResult random_trace(std::mt19937_64& rng, std::size_t n, std::size_t max_ops,
                         bool vertex_maps) {
  std::uniform_int_distribution<Level> top(1, 6);
  const Level t = top(rng);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  const WeightedGraph g = random_graph(rng, n, density(rng), t);
  TraceResult r{{}, build_flag(g, t), 0};
  auto& d = r.diagram;
  auto c = flag_complex_by_subsets(g, t);
  std::uniform_int_distribution<Level> any_level(0, t);
  std::uniform_int_distribution<int> op(0, vertex_maps ? 4 : 3);
  std::uniform_int_distribution<std::size_t> batch(1, 3);

  std::vector<std::string> log;
  auto fail = [&](const std::string& what) {
    std::string trail;
    for (const auto& step : log) trail += "\n  " + step;
    r.failure = what + " after:" + trail;
    return r;
  };

  for (std::size_t step = 0; step < max_ops; ++step) {
    std::vector<Simplex> present;
    for (const auto& [s, _] : c.table()) present.push_back(s);
    switch (op(rng)) {
      case 0: {  // insert under the precondition
        const Simplex s = random_simplex(rng, n, 4);
        Level ceiling = t + 1;
        if (auto f = c.find(s)) ceiling = *f;
        for (const Simplex& co : c.proper_cofaces(s)) ceiling = std::min(ceiling, c.filtration(co));
        if (ceiling == 0) continue;
        std::uniform_int_distribution<Level> below(0, ceiling - 1);
        const Level level = below(rng);
        log.push_back("insert " + to_string(s) + " @" + std::to_string(level));
        c.insert(s, level);
        d.insert(s, level);
        break;
      }
      case 1: {
        if (present.empty()) continue;
        const Simplex s = pick(rng, present);
        log.push_back("remove " + to_string(s));
        c.remove(s);
        d.remove(s);
        break;
      }
      case 2: {
        std::vector<std::pair<Simplex, Simplex>> pairs;
        for (const Simplex& s : present) {
          const auto co = c.proper_cofaces(s);
          if (co.size() == 1 && co[0].size() == s.size() + 1) pairs.emplace_back(s, co[0]);
        }
        if (pairs.empty() || std::bernoulli_distribution(0.15)(rng)) {
          if (present.size() < 2) continue;
          // a pair that is usually not free; both sides must agree on rejecting it
          const Simplex a = pick(rng, present), b = pick(rng, present);
          bool oracle_ok = true, diagram_ok = true;
          auto oc = c;
          auto dc = d;
          try {
            oc.elementary_collapse(a, b);
          } catch (const NotAFreePair&) {
            oracle_ok = false;
          }
          try {
            dc.elementary_collapse(a, b);
          } catch (const NotAFreePair&) {
            diagram_ok = false;
          }
          if (oracle_ok != diagram_ok) {
            return fail("free-pair verdict on " + to_string(a) + " / " + to_string(b));
          }
          continue;
        }
        const auto& [sigma, tau] = pick(rng, pairs);
        log.push_back("collapse " + to_string(sigma) + " into " + to_string(tau));
        c.elementary_collapse(sigma, tau);
        d.elementary_collapse(sigma, tau);
        break;
      }
      case 3: {  // lazy batch, flags right for the final complex, then cleanup
        std::vector<std::pair<Simplex, Level>> items;
        const std::size_t count = batch(rng);
        for (std::size_t i = 0; i < count; ++i) items.emplace_back(random_simplex(rng, n, 4), any_level(rng));
        auto next = c;
        for (const auto& [s, level] : items) next.lazy_insert(s, level);
        std::string text = "lazy";
        for (const auto& [s, level] : items) {
          text += " " + to_string(s) + "@" + std::to_string(level);
          d.lazy_insert(s, level, next.is_maximal(s));
        }
        log.push_back(text);
        c = std::move(next);
        d.cleanup();
        break;
      }
      default: {  // vertex collapse onto a random survivor set
        if (n < 2) continue;
        std::vector<Vertex> survivors;
        std::map<Vertex, Vertex> pi;
        for (Vertex v = 1; v <= n; ++v) {
          if (std::bernoulli_distribution(0.75)(rng)) survivors.push_back(v);
        }
        if (survivors.empty()) survivors.push_back(1);
        for (Vertex v = 1; v <= n; ++v) {
          if (!std::binary_search(survivors.begin(), survivors.end(), v)) pi[v] = pick(rng, survivors);
        }
        std::string text = "collapse_vertices";
        for (const auto& [from, to] : pi) text += " " + std::to_string(from) + "->" + std::to_string(to);
        log.push_back(text);
        c.apply_vertex_map(pi);
        d.collapse_vertices(pi, survivors);
        break;
      }
    }
    ++r.operations;
    if (auto bad = check_state(d, c); !bad.empty()) return fail(bad);
  }
  d.cleanup();
  const auto got = stored_entries(d);
  const auto want = oracle::critical_set(c);
  if (got != want) return fail("critical set: " + first_difference(got, want));
  return r;
}

CriticalSimplexDiagram random_lazy_batch(std::mt19937_64& rng, std::size_t n, Level t,
                                         std::size_t batch) {
  const WeightedGraph g = random_graph(rng, n, 0.5, t);
  CriticalSimplexDiagram d = build_flag(g, t);
  std::vector<Simplex> tops;
  for (const auto& [label, star] : d.stars()) {
    if (star.maximal) tops.push_back(star.simplex);
  }
  std::uniform_int_distribution<Level> level(0, t);
  for (std::size_t i = 0; i < batch; ++i) {
    const Simplex& top = pick(rng, tops);
    std::vector<Vertex> vs;
    for (Vertex v : top) {
      if (std::bernoulli_distribution(0.6)(rng)) vs.push_back(v);
    }
    if (vs.empty()) vs.push_back(top.front());
    Simplex face(std::move(vs));
    const bool maximal = face == top;
    d.lazy_insert(face, level(rng), maximal);
  }
  return d;
}

}  // namespace csd::testing
