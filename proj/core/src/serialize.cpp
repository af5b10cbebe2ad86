#include "csd/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>
#include <vector>

#include "csd/errors.hpp"

namespace csd {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

template <typename T>
T parse_number(const Token& tok, std::size_t line, const char* what) {
  T value{};
  auto [end, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc{} || end != tok.text.data() + tok.text.size()) {
    throw ParseError(line, tok.column, std::string("expected ") + what + ", got '" +
                                           std::string(tok.text) + "'");
  }
  return value;
}

template <typename T>
T parse_field(const Token& tok, std::size_t line, std::string_view key) {
  if (tok.text.substr(0, key.size()) != key) {
    throw ParseError(line, tok.column, "expected '" + std::string(key) + "'");
  }
  Token rest{tok.text.substr(key.size()), tok.column + key.size()};
  return parse_number<T>(rest, line, "an integer");
}

}  // namespace

void write_diagram(std::ostream& os, const CriticalSimplexDiagram& diagram) {
  std::vector<std::tuple<Level, const Simplex*, bool>> rows;
  rows.reserve(diagram.stars().size());
  for (const auto& [label, st] : diagram.stars()) {
    rows.emplace_back(label.level, &st.simplex, st.maximal);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (*std::get<1>(a) != *std::get<1>(b)) return *std::get<1>(a) < *std::get<1>(b);
    return std::get<2>(a) < std::get<2>(b);
  });
  os << "csd n=" << diagram.vertex_count() << " t=" << diagram.max_level() << '\n';
  for (const auto& [level, simplex, maximal] : rows) {
    os << level << ' ' << (maximal ? 1 : 0);
    for (Vertex v : *simplex) os << ' ' << v;
    os << '\n';
  }
}

std::string to_text(const CriticalSimplexDiagram& diagram) {
  std::ostringstream os;
  write_diagram(os, diagram);
  return os.str();
}

CriticalSimplexDiagram read_diagram(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<CriticalSimplexDiagram> diagram;
  while (std::getline(is, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;

    if (!diagram) {
      if (tokens.size() != 3 || tokens[0].text != "csd") {
        throw ParseError(line_no, tokens[0].column, "expected header 'csd n=<n> t=<t>'");
      }
      auto n = parse_field<std::size_t>(tokens[1], line_no, "n=");
      auto t = parse_field<Level>(tokens[2], line_no, "t=");
      if (t < 0) throw ParseError(line_no, tokens[2].column, "negative filtration bound");
      diagram.emplace(n, t);
      continue;
    }

    if (tokens.size() < 3) {
      throw ParseError(line_no, 0, "star line needs a level, a flag and at least one vertex");
    }
    auto level = parse_number<Level>(tokens[0], line_no, "a level");
    if (level < 0 || level > diagram->max_level()) {
      throw ParseError(line_no, tokens[0].column, "level outside 0..t");
    }
    if (tokens[1].text != "0" && tokens[1].text != "1") {
      throw ParseError(line_no, tokens[1].column, "maximal flag must be 0 or 1");
    }
    std::vector<Vertex> vs;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      auto v = parse_number<Vertex>(tokens[i], line_no, "a vertex id");
      if (v == 0 || v > diagram->vertex_count()) {
        throw ParseError(line_no, tokens[i].column, "vertex outside 1..n");
      }
      if (!vs.empty() && v <= vs.back()) {
        throw ParseError(line_no, tokens[i].column, "vertices must be strictly ascending");
      }
      vs.push_back(v);
    }
    diagram->lazy_insert(Simplex::from_sorted(std::move(vs)), level, tokens[1].text == "1");
  }
  if (!diagram) throw ParseError(line_no + 1, 0, "missing header");
  return std::move(*diagram);
}

CriticalSimplexDiagram from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_diagram(is);
}

}  // namespace csd
