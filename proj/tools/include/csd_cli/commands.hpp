#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csd/diagram.hpp"

namespace csd::cli {

/// Process exit codes.
enum Exit : int {
  kOk = 0,
  kUsage = 1,      ///< bad flags, refused request
  kParse = 2,      ///< malformed input file or simplex
  kInvariant = 3,  ///< input parsed but violates a precondition
  kVerify = 4,     ///< --verify found a mismatch
};

/// Largest n for which stats --verify materializes the whole complex.
inline constexpr std::size_t kVerifyCap = 18;

struct StatsReport {
  Stats csd;
  Level t = 0;
  std::optional<std::size_t> m;              ///< with --verify
  std::optional<std::size_t> node_count_st;  ///< with --with-st
  long long build_time_ms_csd = 0;
  std::optional<long long> build_time_ms_st;
  /// (level, stars, maximal stars) for every level holding a star.
  std::vector<std::tuple<Level, std::size_t, std::size_t>> per_level;
};

StatsReport make_report(const CriticalSimplexDiagram& d, bool with_st);
void print_report(std::ostream& os, const StatsReport& r);

/// Stored stars compared against the critical set of the complex they
/// represent. Empty when they agree, else the first differing simplex.
std::string verify_against_oracle(const CriticalSimplexDiagram& d);

/// Output lines of `csd query` for one simplex.
std::vector<std::string> answer_query(const CriticalSimplexDiagram& d, std::string_view kind,
                                      const Simplex& s);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace csd::cli
