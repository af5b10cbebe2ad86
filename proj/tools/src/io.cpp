#include "csd_cli/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <tuple>

#include "csd/errors.hpp"

namespace csd::cli {

Quantizer::Quantizer(Level t, double max_value) : t_(t), max_(max_value) {
  if (t < 1) throw Error("quantizer needs t >= 1");
  if (!(max_value > 0.0) || !std::isfinite(max_value)) {
    throw Error("quantizer needs a positive finite range");
  }
}

Level Quantizer::level(double value) const {
  if (!(value >= 0.0) || value > max_) {
    throw FiltrationOutOfRange("value " + std::to_string(value) + " outside [0, " +
                               std::to_string(max_) + "]");
  }
  const double scaled = std::ceil(static_cast<double>(t_) * value / max_);
  return std::min(t_, static_cast<Level>(scaled));
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) out.push_back({line.substr(start, pos - start), start + 1});
  }
  return out;
}

template <class T>
T parse_number(const Token& tok, std::size_t line, const char* what) {
  T value{};
  auto [end, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc{} || end != tok.text.data() + tok.text.size()) {
    throw ParseError(line, tok.column, std::string("expected ") + what + ", got '" +
                                           std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace

WeightedGraph read_edge_list(std::istream& in, EdgeListOptions options) {
  std::optional<std::size_t> n;
  std::vector<std::tuple<Vertex, Vertex, double, std::size_t>> rows;
  std::string raw;
  std::size_t line = 0;
  bool seen_content = false;
  while (std::getline(in, raw)) {
    ++line;
    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (tokens[0].text.starts_with("n=")) {
      if (seen_content) throw ParseError(line, 1, "the n= header must come first");
      if (tokens.size() != 1) throw ParseError(line, tokens[1].column, "trailing text after header");
      const Token count{tokens[0].text.substr(2), tokens[0].column + 2};
      n = parse_number<std::size_t>(count, line, "a vertex count");
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tokens.size() != 3) {
      throw ParseError(line, 0, "expected 'u v w', got " + std::to_string(tokens.size()) +
                                    " fields");
    }
    const auto u = parse_number<Vertex>(tokens[0], line, "a vertex id");
    const auto v = parse_number<Vertex>(tokens[1], line, "a vertex id");
    double w = 0;
    if (options.quantize) {
      w = parse_number<double>(tokens[2], line, "a distance");
      if (!(w >= 0.0) || !std::isfinite(w)) throw ParseError(line, tokens[2].column, "bad distance");
    } else {
      const auto level = parse_number<Level>(tokens[2], line, "an integer weight");
      if (level < 0) throw ParseError(line, tokens[2].column, "negative weight");
      w = level;
    }
    if (u == 0 || v == 0) throw ParseError(line, u == 0 ? tokens[0].column : tokens[1].column,
                                           "vertex ids start at 1");
    rows.emplace_back(u, v, w, line);
  }

  std::size_t count = n.value_or(0);
  if (!n) {
    for (const auto& [u, v, w, l] : rows) count = std::max<std::size_t>(count, std::max(u, v));
  }
  std::optional<Quantizer> bins;
  if (options.quantize) {
    double top = 0.0;
    for (const auto& [u, v, w, l] : rows) top = std::max(top, w);
    if (top > 0.0) bins.emplace(*options.quantize, top);
  }
  WeightedGraph g(count);
  for (const auto& [u, v, w, l] : rows) {
    const Level level = bins ? bins->level(w) : static_cast<Level>(w);
    try {
      g.add_edge(u, v, level);
    } catch (const UnknownVertex& e) {
      throw ParseError(l, 0, e.what());
    } catch (const InvalidSimplex& e) {
      throw ParseError(l, 0, e.what());
    } catch (const PreconditionViolated& e) {
      throw ParseError(l, 0, e.what());
    }
  }
  return g;
}

PointSet read_points(std::istream& in) {
  std::vector<Point> pts;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    Point p;
    for (const Token& tok : tokens) {
      const double c = parse_number<double>(tok, line, "a coordinate");
      if (!std::isfinite(c)) throw ParseError(line, tok.column, "non-finite coordinate");
      p.push_back(c);
    }
    if (!pts.empty() && p.size() != pts.front().size()) {
      throw ParseError(line, 0, "expected " + std::to_string(pts.front().size()) +
                                    " coordinates, got " + std::to_string(p.size()));
    }
    pts.push_back(std::move(p));
  }
  return PointSet(std::move(pts));
}

PointSet klein_bottle(std::size_t count, std::uint64_t seed, double major, double minor) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = angle(rng);
    const double v = angle(rng);
    const double ring = major + minor * std::cos(v);
    pts.push_back({ring * std::cos(u), ring * std::sin(u), minor * std::sin(v) * std::cos(u / 2),
                   minor * std::sin(v) * std::sin(u / 2), 0.0});
  }
  return PointSet(std::move(pts));
}

WeightedGraph rips_graph(const PointSet& points, double r_max, Level t) {
  if (!(r_max > 0.0)) throw Error("r_max must be positive");
  const Quantizer bins(t, 2.0 * r_max);
  WeightedGraph g(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double d = distance(points[i], points[j]);
      if (d <= 2.0 * r_max) {
        g.add_edge(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1), bins.level(d));
      }
    }
  }
  return g;
}

}  // namespace csd::cli
