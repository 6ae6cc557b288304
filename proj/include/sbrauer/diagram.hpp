#ifndef SBRAUER_DIAGRAM_HPP
#define SBRAUER_DIAGRAM_HPP

// Signed Brauer diagrams: perfect matchings on two rows of n vertices where
// each edge carries a sign. Vertices 1..n form the top row and n+1..2n the
// bottom row.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sbrauer/error.hpp"
#include "sbrauer/perm.hpp"

namespace sbrauer {

using Vertex = std::uint32_t;

enum class EdgeSign : std::uint8_t { Positive, Negative };

constexpr EdgeSign operator*(EdgeSign a, EdgeSign b) noexcept {
  return a == b ? EdgeSign::Positive : EdgeSign::Negative;
}

constexpr EdgeSign flip(EdgeSign s) noexcept {
  return s == EdgeSign::Positive ? EdgeSign::Negative : EdgeSign::Positive;
}

constexpr char sign_char(EdgeSign s) noexcept { return s == EdgeSign::Positive ? '+' : '-'; }

/// Stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  EdgeSign sign = EdgeSign::Positive;

  bool operator==(Edge const&) const = default;
  auto operator<=>(Edge const&) const = default;
};

class SignedDiagram {
 public:
  SignedDiagram() = default;

  /// Checks that the edges form a perfect matching on {1..2n}. Edge
  /// endpoints may be given in either order.
  static SignedDiagram validate(std::size_t n, std::vector<Edge> raw_edges) {
    if (n == 0) throw std::invalid_argument("diagram: n must be positive");
    std::vector<Vertex> partner(2 * n + 1, 0);
    for (auto& e : raw_edges) {
      for (Vertex x : {e.u, e.v}) {
        if (x == 0 || x > 2 * n) {
          throw std::invalid_argument("diagram: vertex " + std::to_string(x) + " out of range 1.." +
                                      std::to_string(2 * n));
        }
      }
      if (e.u == e.v) throw std::invalid_argument("diagram: self-loop at vertex " + std::to_string(e.u));
      for (Vertex x : {e.u, e.v}) {
        if (partner[x] != 0) {
          throw std::invalid_argument("diagram: vertex " + std::to_string(x) + " matched twice");
        }
      }
      partner[e.u] = e.v;
      partner[e.v] = e.u;
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    for (Vertex x = 1; x <= 2 * n; ++x) {
      if (partner[x] == 0) throw std::invalid_argument("diagram: vertex " + std::to_string(x) + " unmatched");
    }
    // With every vertex matched exactly once the edge count is n; a surplus
    // would have tripped the matched-twice check.
    std::sort(raw_edges.begin(), raw_edges.end());
    SignedDiagram d;
    d.n_ = n;
    d.edges_ = std::move(raw_edges);
    d.index_edges();
    return d;
  }

  std::size_t n() const noexcept { return n_; }
  std::vector<Edge> const& edges() const noexcept { return edges_; }

  Vertex partner(Vertex x) const noexcept { return partner_[x]; }
  EdgeSign sign_at(Vertex x) const noexcept { return sign_[x]; }

  bool is_top(Vertex x) const noexcept { return x <= n_; }

  bool operator==(SignedDiagram const& o) const noexcept { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  void index_edges() {
    partner_.assign(2 * n_ + 1, 0);
    sign_.assign(2 * n_ + 1, EdgeSign::Positive);
    for (auto const& e : edges_) {
      partner_[e.u] = e.v;
      partner_[e.v] = e.u;
      sign_[e.u] = sign_[e.v] = e.sign;
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Vertex> partner_;
  std::vector<EdgeSign> sign_;
};

inline SignedDiagram identity_diagram(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i) edges.push_back({i, static_cast<Vertex>(i + n), EdgeSign::Positive});
  return SignedDiagram::validate(n, std::move(edges));
}

inline bool is_vertical(SignedDiagram const& d) noexcept {
  return std::all_of(d.edges().begin(), d.edges().end(),
                     [&](Edge const& e) { return d.is_top(e.u) != d.is_top(e.v); });
}

/// The coefficient x^exponent times a diagram.
struct ScaledDiagram {
  std::size_t exponent = 0;
  SignedDiagram diagram;

  bool operator==(ScaledDiagram const&) const = default;
};

/// Stacks d1 above d2. The bottom vertex n+j of d1 is glued to the top
/// vertex j of d2. Paths between outer vertices become edges of the result;
/// closed loops in the glued middle row are removed and contribute x^2 if
/// they carry an even number of negative edges and x otherwise.
inline ScaledDiagram compose(SignedDiagram const& d1, SignedDiagram const& d2) {
  std::size_t const n = d1.n();
  if (d2.n() != n) {
    throw std::invalid_argument("diagram compose: size mismatch (" + std::to_string(n) + " vs " +
                                std::to_string(d2.n()) + ")");
  }
  std::vector<bool> middle_seen(n + 1, false);
  std::vector<Edge> out;
  out.reserve(n);

  // Walk from a middle vertex into the given diagram until an outer vertex
  // is reached. Returns the outer vertex label in the result diagram.
  // `in_upper` selects which diagram the walk continues in.
  auto walk = [&](Vertex start, bool in_upper, EdgeSign& sign) -> Vertex {
    Vertex at = start;  // vertex label within the current diagram
    for (;;) {
      SignedDiagram const& d = in_upper ? d1 : d2;
      sign = sign * d.sign_at(at);
      Vertex next = d.partner(at);
      bool outer = in_upper ? d.is_top(next) : !d.is_top(next);
      if (outer) return next;
      Vertex j = in_upper ? next - static_cast<Vertex>(n) : next;
      middle_seen[j] = true;
      in_upper = !in_upper;
      at = in_upper ? j + static_cast<Vertex>(n) : j;
    }
  };

  for (Vertex v = 1; v <= 2 * n; ++v) {
    bool upper = v <= n;
    EdgeSign sign = EdgeSign::Positive;
    Vertex end = walk(v, upper, sign);
    if (end > v) out.push_back({v, end, sign});
  }

  std::size_t positive_loops = 0;
  std::size_t negative_loops = 0;
  for (Vertex j = 1; j <= n; ++j) {
    if (middle_seen[j]) continue;
    // Middle vertex j sits on a closed loop. Go around it starting with d1.
    EdgeSign sign = EdgeSign::Positive;
    bool in_upper = true;
    Vertex at = j + static_cast<Vertex>(n);
    middle_seen[j] = true;
    for (;;) {
      SignedDiagram const& d = in_upper ? d1 : d2;
      sign = sign * d.sign_at(at);
      Vertex next = d.partner(at);
      Vertex m = in_upper ? next - static_cast<Vertex>(n) : next;
      if (m == j) break;
      middle_seen[m] = true;
      in_upper = !in_upper;
      at = in_upper ? m + static_cast<Vertex>(n) : m;
    }
    (sign == EdgeSign::Positive ? positive_loops : negative_loops)++;
  }

  return {2 * positive_loops + negative_loops, SignedDiagram::validate(n, std::move(out))};
}

/// Canonical line form: `n=2; 1-3:+; 2-4:+`.
inline std::string format_diagram(SignedDiagram const& d) {
  std::string out = "n=" + std::to_string(d.n());
  for (auto const& e : d.edges()) {
    out += "; " + std::to_string(e.u) + '-' + std::to_string(e.v) + ':' + sign_char(e.sign);
  }
  return out;
}

namespace detail {

inline SignedDiagram parse_diagram_line(std::string_view line, std::string const& input, std::size_t base) {
  std::size_t pos = 0;
  auto fail = [&](std::string const& msg, std::size_t at) {
    throw ParseError("diagram: " + msg, input, base + at);
  };
  auto skip_ws = [&] {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  };
  auto number = [&]() -> std::uint64_t {
    skip_ws();
    std::size_t start = pos;
    std::uint64_t value = 0;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
      value = std::min<std::uint64_t>(value * 10 + static_cast<std::uint64_t>(line[pos] - '0'), 1u << 30);
      ++pos;
    }
    if (pos == start) fail("expected a number", start);
    return value;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= line.size() || line[pos] != c) fail(std::string("expected '") + c + "'", pos);
    ++pos;
  };

  skip_ws();
  if (line.substr(pos, 1) != "n") fail("expected 'n='", pos);
  ++pos;
  expect('=');
  std::size_t n_at = pos;
  auto n = number();
  if (n == 0 || n > (1u << 20)) fail("n out of range", n_at);

  std::vector<Edge> edges;
  std::vector<std::size_t> edge_at;
  for (;;) {
    skip_ws();
    if (pos == line.size()) break;
    expect(';');
    skip_ws();
    if (pos == line.size()) break;  // trailing ';'
    edge_at.push_back(pos);
    auto u = number();
    expect('-');
    auto v = number();
    expect(':');
    skip_ws();
    if (pos >= line.size() || (line[pos] != '+' && line[pos] != '-')) fail("expected '+' or '-'", pos);
    EdgeSign s = line[pos] == '+' ? EdgeSign::Positive : EdgeSign::Negative;
    ++pos;
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), s});
  }
  if (edges.size() != n) {
    fail("expected " + std::to_string(n) + " edges, found " + std::to_string(edges.size()), 0);
  }
  try {
    return SignedDiagram::validate(n, std::move(edges));
  } catch (std::invalid_argument const& e) {
    throw ParseError(e.what(), input, base);
  }
}

}  // namespace detail

/// Reads the line format. Multi-line input (e.g. the output of render) is
/// accepted: the first line whose content, after an optional `//` or `#`
/// comment marker, starts with `n=` is parsed.
inline SignedDiagram parse_diagram(std::string_view text) {
  std::string const input(text);
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    std::size_t p = 0;
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    if (line.substr(p, 2) == "//") p += 2;
    else if (line.substr(p, 1) == "#") p += 1;
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    if (line.substr(p, 2) == "n=" || line.substr(p, 1) == "n") {
      return detail::parse_diagram_line(line.substr(p), input, line_start + p);
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  throw ParseError("diagram: no line starting with 'n='", input, 0);
}

enum class RenderFormat { Ascii, Dot };

inline RenderFormat parse_render_format(std::string_view name) {
  if (name == "ascii") return RenderFormat::Ascii;
  if (name == "dot") return RenderFormat::Dot;
  throw std::invalid_argument("unknown render format '" + std::string(name) + "'");
}

/// Text rendering. Both formats carry the canonical line as a comment so the
/// output can be fed back to parse_diagram.
inline std::string render(SignedDiagram const& d, RenderFormat format) {
  std::size_t const n = d.n();
  std::size_t width = std::to_string(2 * n).size() + 2;
  auto cell = [&](std::string s) {
    if (s.size() < width) s.insert(0, width - s.size(), ' ');
    return s;
  };
  std::ostringstream os;
  if (format == RenderFormat::Ascii) {
    os << "# " << format_diagram(d) << '\n';
    std::string top, dots, bottom;
    for (Vertex i = 1; i <= n; ++i) {
      top += cell(std::to_string(i));
      dots += cell("o");
      bottom += cell(std::to_string(i + n));
    }
    // Strokes are drawn under each top vertex whose strand goes straight down.
    std::string strokes;
    for (Vertex i = 1; i <= n; ++i) {
      Vertex j = d.partner(i);
      bool straight = j == i + n;
      strokes += cell(straight ? std::string("|") + sign_char(d.sign_at(i)) : std::string(" "));
    }
    os << top << '\n' << dots << '\n' << strokes << '\n' << dots << '\n' << bottom << '\n';
    for (auto const& e : d.edges()) {
      bool vertical = d.is_top(e.u) != d.is_top(e.v);
      os << "  " << e.u << (vertical ? " | " : " = ") << e.v << ' ' << sign_char(e.sign) << '\n';
    }
    return os.str();
  }

  os << "graph signed_diagram {\n";
  os << "  // " << format_diagram(d) << '\n';
  os << "  { rank=same;";
  for (Vertex i = 1; i <= n; ++i) os << " v" << i << " [label=\"" << i << "\"];";
  os << " }\n  { rank=same;";
  for (Vertex i = 1; i <= n; ++i) os << " v" << i + n << " [label=\"" << i + n << "\"];";
  os << " }\n";
  for (auto const& e : d.edges()) {
    os << "  v" << e.u << " -- v" << e.v << " [label=\"" << sign_char(e.sign) << "\""
       << (e.sign == EdgeSign::Negative ? ", style=dashed" : "") << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace sbrauer

#endif
