#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "csd/simplex.hpp"

namespace csd::oracle {

/// A filtered complex stored explicitly: every simplex with its value.
///
/// Reference implementation for testing. Every query is a definitional scan
/// over the whole table; nothing here is meant to be fast.
class ExplicitComplex {
 public:
  explicit ExplicitComplex(Level t) : t_(t) {}

  Level t() const noexcept { return t_; }
  const std::map<Simplex, Level>& table() const noexcept { return table_; }
  std::size_t size() const noexcept { return table_.size(); }

  bool contains(const Simplex& s) const { return table_.contains(s); }
  std::optional<Level> find(const Simplex& s) const;
  Level filtration(const Simplex& s) const;  // NotInComplex
  std::vector<Simplex> proper_cofaces(const Simplex& s) const;
  bool is_maximal(const Simplex& s) const;
  bool is_critical(const Simplex& s) const;  // NotInComplex
  std::vector<std::pair<Simplex, Level>> facet_filtrations(const Simplex& s) const;
  std::vector<std::pair<Simplex, Level>> coface_filtrations(const Simplex& s) const;

  /// Adds `s` and its faces; every face ends at min(current, level).
  void lazy_insert(const Simplex& s, Level level);

  /// As lazy_insert, but every simplex already containing `s` must be valued
  /// strictly above `level` (PreconditionViolated otherwise).
  void insert(const Simplex& s, Level level);

  /// Drops `s` and every coface. NotInComplex when absent.
  void remove(const Simplex& s);

  /// Drops the free pair; NotAFreePair unless tau is the only proper coface of
  /// sigma and has codimension 1.
  void elementary_collapse(const Simplex& sigma, const Simplex& tau);

  /// Replaces the complex by its image under pi (non-survivors mapped, others
  /// fixed); each image simplex takes the least value among its preimages.
  void apply_vertex_map(const std::map<Vertex, Vertex>& pi);

 private:
  friend ExplicitComplex min_closure(const std::vector<std::pair<Simplex, Level>>&, Level);
  Level t_;
  std::map<Simplex, Level> table_;
};

/// Closure of the seed where each face takes the minimum over the seeded
/// simplices containing it. Accepts any seed.
ExplicitComplex min_closure(const std::vector<std::pair<Simplex, Level>>& seed, Level t);

/// Same closure, but a seeded simplex valued above one of its seeded cofaces
/// is rejected with MonotonicityError.
ExplicitComplex close_down(const std::vector<std::pair<Simplex, Level>>& seed, Level t);

struct CriticalEntry {
  Simplex simplex;
  Level level;
  bool maximal;

  friend bool operator==(const CriticalEntry&, const CriticalEntry&) = default;
  friend auto operator<=>(const CriticalEntry&, const CriticalEntry&) = default;
};

/// Every simplex whose proper cofaces all carry a strictly larger value,
/// sorted by simplex.
std::vector<CriticalEntry> critical_set(const ExplicitComplex& c);

struct OracleStats {
  std::size_t n = 0;
  int d = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t kappa = 0;
  std::size_t node_count = 0;  ///< sum of (dim + 1) over critical simplices
  std::size_t psi = 0;
  double psi_avg = 0.0;
  std::vector<std::size_t> gamma;  ///< gamma[j] for j = 0..d
};

/// Exhaustive counts over vertices 1..n.
OracleStats oracle_stats(const ExplicitComplex& c, std::size_t n);

}  // namespace csd::oracle
