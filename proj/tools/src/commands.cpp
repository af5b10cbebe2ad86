#include "csd_cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "csd/delaunay_builder.hpp"
#include "csd/errors.hpp"
#include "csd/flag_builder.hpp"
#include "csd/oracle.hpp"
#include "csd/serialize.hpp"
#include "csd/simplex_tree.hpp"
#include "csd_cli/io.hpp"

namespace csd::cli {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - since).count();
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open " + path);
  return in;
}

void emit(const CriticalSimplexDiagram& d, const std::string& out_path, std::ostream& out,
          long long ms) {
  if (out_path.empty()) {
    write_diagram(out, d);
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw Error("cannot write " + out_path);
  write_diagram(file, d);
  out << "stars: " << d.stars().size() << "\nbuild_time_ms: " << ms << "\n";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

StatsReport make_report(const CriticalSimplexDiagram& d, bool with_st) {
  StatsReport r;
  r.csd = d.stats();
  r.t = d.max_level();
  std::map<Level, std::pair<std::size_t, std::size_t>> levels;
  for (const auto& [label, star] : d.stars()) {
    auto& [all, maximal] = levels[label.level];
    ++all;
    maximal += star.maximal;
  }
  for (const auto& [level, counts] : levels) r.per_level.emplace_back(level, counts.first, counts.second);
  if (with_st) {
    const auto start = Clock::now();
    const SimplexTree st = expand(d);
    r.build_time_ms_st = elapsed_ms(start);
    r.node_count_st = st.node_count();
  }
  return r;
}

void print_report(std::ostream& os, const StatsReport& r) {
  const auto& s = r.csd;
  os << "n: " << s.n << "\n"
     << "d: " << s.d << "\n"
     << "t: " << r.t << "\n";
  if (r.m) os << "m: " << *r.m << "\n";
  os << "k: " << s.k << "\n"
     << "kappa: " << s.kappa << "\n"
     << "stars: " << s.stars << "\n"
     << "node_count_csd: " << s.node_count << "\n";
  if (r.node_count_st) os << "node_count_st: " << *r.node_count_st << "\n";
  os << std::fixed << std::setprecision(3)
     << "psi: " << s.psi << "\n"
     << "psi_avg: " << s.psi_avg << "\n"
     << "gamma0: " << s.gamma0 << "\n"
     << "gamma0_avg: " << s.gamma0_avg << "\n"
     << "build_time_ms_csd: " << r.build_time_ms_csd << "\n";
  if (r.build_time_ms_st) os << "build_time_ms_st: " << *r.build_time_ms_st << "\n";
  os.unsetf(std::ios::floatfield);
  os << "level\tstars\tmaximal\n";
  for (const auto& [level, all, maximal] : r.per_level) {
    os << level << "\t" << all << "\t" << maximal << "\n";
  }
}

std::string verify_against_oracle(const CriticalSimplexDiagram& d) {
  std::vector<std::pair<Simplex, Level>> seed;
  std::vector<oracle::CriticalEntry> stored;
  for (const auto& [label, star] : d.stars()) {
    seed.emplace_back(star.simplex, label.level);
    stored.push_back({star.simplex, label.level, star.maximal});
  }
  std::sort(stored.begin(), stored.end());
  const auto want = oracle::critical_set(oracle::min_closure(seed, d.max_level()));
  auto describe = [](const oracle::CriticalEntry& e) {
    std::ostringstream os;
    os << e.simplex << " level " << e.level << " maximal " << e.maximal;
    return os.str();
  };
  const std::size_t common = std::min(stored.size(), want.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (stored[i] != want[i]) {
      return "stored " + describe(stored[i]) + ", expected " + describe(want[i]);
    }
  }
  if (stored.size() > common) return "stored " + describe(stored[common]) + " is not critical";
  if (want.size() > common) return "missing " + describe(want[common]);
  return {};
}

std::vector<std::string> answer_query(const CriticalSimplexDiagram& d, std::string_view kind,
                                      const Simplex& s) {
  if (kind == "member") return {yes_no(d.contains(s))};
  if (kind == "maximal") return {yes_no(d.contains(s) && d.is_maximal(s))};
  if (!d.contains(s)) return {"absent"};
  if (kind == "critical") return {yes_no(d.is_critical(s))};
  if (kind == "filtration") return {std::to_string(d.filtration(s))};
  std::vector<std::pair<Simplex, Level>> rows;
  if (kind == "facets") {
    if (s.dimension() < 1) return {};
    rows = d.facet_filtrations(s);
  } else if (kind == "cofaces") {
    rows = d.coface_filtrations(s);
  } else {
    throw Error("unknown query kind " + std::string(kind));
  }
  std::vector<std::string> out;
  for (const auto& [face, level] : rows) out.push_back(to_string(face) + "\t" + std::to_string(level));
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Critical Simplex Diagram toolkit"};
  app.require_subcommand(1);

  std::string out_path;
  std::string input, second_input;
  std::optional<Level> t;
  std::optional<Level> quantize;
  double rho = 0.0;
  double rmax = 0.0;
  std::size_t klein = 0;
  std::uint64_t seed = 1;
  bool verify = false, with_st = false;
  std::string kind, simplex_text;

  auto* flag = app.add_subcommand("build-flag", "flag filtration of a weighted graph");
  flag->add_option("edges", input, "edge list file")->required();
  flag->add_option("--t", t, "filtration range, defaults to the heaviest weight");
  flag->add_option("--quantize", quantize, "read real distances and bin them onto 0..t");
  flag->add_option("--out", out_path, "diagram file, stdout when omitted");

  auto* rips = app.add_subcommand("build-rips", "Rips filtration of a point cloud");
  rips->add_option("points", input, "point file");
  rips->add_option("--rmax", rmax, "edges join points within 2*rmax")->required();
  rips->add_option("--t", t, "filtration range")->required();
  rips->add_option("--klein", klein, "sample this many Klein-bottle points instead of a file");
  rips->add_option("--seed", seed, "generator seed");
  rips->add_option("--out", out_path, "diagram file, stdout when omitted");

  auto* del = app.add_subcommand("build-delaunay", "relaxed Delaunay filtration");
  del->add_option("landmarks", input, "landmark point file")->required();
  del->add_option("witnesses", second_input, "witness point file")->required();
  del->add_option("--rho", rho, "relaxation")->required();
  del->add_option("--t", t, "filtration range")->required();
  del->add_option("--out", out_path, "diagram file, stdout when omitted");

  auto* query = app.add_subcommand("query", "answer one query on a stored diagram");
  query->add_option("diagram", input, "diagram file")->required();
  query->add_option("kind", kind, "member|maximal|critical|filtration|facets|cofaces")
      ->required()
      ->check(CLI::IsMember({"member", "maximal", "critical", "filtration", "facets", "cofaces"}));
  query->add_option("simplex", simplex_text, "vertex ids, e.g. \"1 3 4\"")->required();

  auto* stats = app.add_subcommand("stats", "size statistics of a stored diagram");
  stats->add_option("diagram", input, "diagram file")->required();
  stats->add_flag("--verify", verify, "compare against the brute-force oracle");
  stats->add_flag("--with-st", with_st, "also build the Simplex Tree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, fail;
    const int code = app.exit(e, help, fail);
    out << help.str();
    err << fail.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*flag) {
      auto in = open_input(input);
      const auto start = Clock::now();
      const auto g = read_edge_list(in, {.quantize = quantize});
      const auto d = build_flag(g, quantize ? quantize : t);
      emit(d, out_path, out, elapsed_ms(start));
    } else if (*rips) {
      if (!(rmax > 0.0)) throw PreconditionViolated("--rmax must be positive");
      PointSet points;
      if (klein > 0) {
        points = klein_bottle(klein, seed);
      } else if (!input.empty()) {
        auto in = open_input(input);
        points = read_points(in);
      } else {
        err << "build-rips needs a point file or --klein\n";
        return kUsage;
      }
      const auto start = Clock::now();
      const auto d = build_flag(rips_graph(points, rmax, *t), *t);
      emit(d, out_path, out, elapsed_ms(start));
    } else if (*del) {
      auto lin = open_input(input);
      auto win = open_input(second_input);
      const auto landmarks = read_points(lin);
      const auto witnesses = read_points(win);
      const auto start = Clock::now();
      const auto d = build_delaunay(witnesses, landmarks, {.rho = rho, .t = *t});
      emit(d, out_path, out, elapsed_ms(start));
    } else if (*query) {
      auto in = open_input(input);
      const auto d = read_diagram(in);
      const Simplex s = parse_simplex(simplex_text);
      for (const auto& line : answer_query(d, kind, s)) out << line << "\n";
    } else if (*stats) {
      auto in = open_input(input);
      const auto start = Clock::now();
      const auto d = read_diagram(in);
      const long long load_ms = elapsed_ms(start);
      if (const auto defect = d.structural_defect(); !defect.empty()) {
        err << "invariant violated: " << defect << "\n";
        return kInvariant;
      }
      if (verify && d.vertex_count() > kVerifyCap) {
        err << "--verify refused: n = " << d.vertex_count() << " exceeds the cap of "
            << kVerifyCap << "\n";
        return kUsage;
      }
      StatsReport r = make_report(d, with_st);
      r.build_time_ms_csd = load_ms;
      if (verify) {
        std::vector<std::pair<Simplex, Level>> seed_list;
        for (const auto& [label, star] : d.stars()) seed_list.emplace_back(star.simplex, label.level);
        r.m = oracle::min_closure(seed_list, d.max_level()).size();
      }
      print_report(out, r);
      if (verify) {
        if (const auto diff = verify_against_oracle(d); !diff.empty()) {
          err << "verify failed: " << diff << "\n";
          return kVerify;
        }
        out << "verify: ok\n";
      }
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvariant;
  }
  return kOk;
}

}  // namespace csd::cli
