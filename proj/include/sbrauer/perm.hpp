#ifndef SBRAUER_PERM_HPP
#define SBRAUER_PERM_HPP

// Finite permutations of {1..m}. Points are 1-based throughout.
//
// Composition is diagrammatic: compose(p, q) applies p first, then q, so
// compose(p, q)(i) == q(p(i)). This is the order in which diagrams are read
// when stacked top to bottom.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sbrauer/error.hpp"

namespace sbrauer {

using Point = std::uint32_t;

enum class Parity : std::uint8_t { Even, Odd };

constexpr Parity operator*(Parity a, Parity b) noexcept {
  return a == b ? Parity::Even : Parity::Odd;
}

inline char const* to_string(Parity p) noexcept {
  return p == Parity::Even ? "even" : "odd";
}

class Permutation;

/// Disjoint cycles in canonical form: every cycle starts at its minimum,
/// cycles are sorted by first point, and 1-cycles are left out.
struct CycleDecomposition {
  std::size_t degree = 0;
  std::vector<std::vector<Point>> cycles;

  std::size_t fixed_points() const noexcept {
    std::size_t moved = 0;
    for (auto const& c : cycles) moved += c.size();
    return degree - moved;
  }

  /// Cycle count with fixed points counted as 1-cycles.
  std::size_t total_cycles() const noexcept { return cycles.size() + fixed_points(); }

  bool operator==(CycleDecomposition const&) const = default;
};

class Permutation {
 public:
  Permutation() = default;

  /// images[i - 1] is the image of point i. Throws std::invalid_argument if
  /// the images do not form a bijection of {1..images.size()}.
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (Point x : images_) {
      if (x == 0 || x > images_.size()) {
        throw std::invalid_argument("permutation image " + std::to_string(x) + " out of range 1.." +
                                    std::to_string(images_.size()));
      }
      if (seen[x]) {
        throw std::invalid_argument("permutation image " + std::to_string(x) + " repeated");
      }
      seen[x] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i + 1);
    return Permutation(std::move(images), Unchecked{});
  }

  /// Builds from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree, std::vector<std::vector<Point>> const& cycles) {
    std::vector<Point> images(degree, 0);
    for (auto const& c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        Point from = c[k];
        if (from == 0 || from > degree) {
          throw std::invalid_argument("cycle point " + std::to_string(from) + " out of range");
        }
        if (images[from - 1] != 0) {
          throw std::invalid_argument("cycle point " + std::to_string(from) + " repeated");
        }
        images[from - 1] = c[(k + 1) % c.size()];
      }
    }
    for (std::size_t i = 0; i < degree; ++i) {
      if (images[i] == 0) images[i] = static_cast<Point>(i + 1);
    }
    return Permutation(std::move(images));
  }

  std::size_t degree() const noexcept { return images_.size(); }

  Point operator()(Point i) const noexcept { return images_[i - 1]; }

  std::span<Point const> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i + 1) return false;
    }
    return true;
  }

  /// Smallest point not fixed, or 0 for the identity.
  Point first_moved() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i + 1) return static_cast<Point>(i + 1);
    }
    return 0;
  }

  bool operator==(Permutation const&) const = default;
  auto operator<=>(Permutation const&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(Permutation const& p, Permutation const& q);
  friend Permutation inverse(Permutation const& p);

  std::vector<Point> images_;
};

/// Apply p, then q.
inline Permutation compose(Permutation const& p, Permutation const& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("compose: degree mismatch (" + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()) + ")");
  }
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q.images_[p.images_[i] - 1];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

inline Permutation inverse(Permutation const& p) {
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[p.images_[i] - 1] = static_cast<Point>(i + 1);
  return Permutation(std::move(images), Permutation::Unchecked{});
}

inline CycleDecomposition cycles(Permutation const& p) {
  CycleDecomposition result;
  result.degree = p.degree();
  std::vector<bool> seen(p.degree() + 1, false);
  // Scanning starts in increasing order, so each cycle already begins at its
  // minimum and the list comes out sorted.
  for (Point start = 1; start <= p.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    if (cycle.size() > 1) result.cycles.push_back(std::move(cycle));
  }
  return result;
}

inline Permutation reconstruct(CycleDecomposition const& d) {
  return Permutation::from_cycles(d.degree, d.cycles);
}

/// Even iff degree minus the number of cycles (fixed points included) is even.
inline Parity parity(Permutation const& p) {
  std::vector<bool> seen(p.degree() + 1, false);
  std::size_t count = 0;
  for (Point start = 1; start <= p.degree(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (Point x = start; !seen[x]; x = p(x)) seen[x] = true;
  }
  return (p.degree() - count) % 2 == 0 ? Parity::Even : Parity::Odd;
}

inline std::string format_cycles(CycleDecomposition const& d) {
  if (d.cycles.empty()) return "e";
  std::string out;
  for (auto const& c : d.cycles) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(c[k]);
    }
    out += ')';
  }
  return out;
}

inline std::string format_cycles(Permutation const& p) { return format_cycles(cycles(p)); }

/// Reads `e`, `()`, or one or more parenthesised groups of whitespace
/// separated points, e.g. "(1 7 3 9)(6 2 8 4)(5 10)".
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::string const input(text);
  auto fail = [&](std::string const& msg, std::size_t pos) -> void {
    throw ParseError("cycle notation: " + msg, input, pos);
  };
  auto skip_ws = [&](std::size_t pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos;
  };

  std::size_t pos = skip_ws(0);
  if (pos == text.size()) fail("empty input", pos);
  if (text[pos] == 'e') {
    if (skip_ws(pos + 1) != text.size()) fail("unexpected text after 'e'", skip_ws(pos + 1));
    return Permutation::identity(degree);
  }

  std::vector<Point> images(degree, 0);
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('", pos);
    pos = skip_ws(pos + 1);
    std::vector<std::pair<Point, std::size_t>> cycle;
    while (pos < text.size() && text[pos] != ')') {
      std::size_t start = pos;
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point", pos);
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > degree) value = degree + 1;
        ++pos;
      }
      if (value == 0 || value > degree) {
        fail("point out of range 1.." + std::to_string(degree), start);
      }
      cycle.emplace_back(static_cast<Point>(value), start);
      if (pos < text.size() && text[pos] != ')' && !std::isspace(static_cast<unsigned char>(text[pos]))) {
        fail("unexpected character", pos);
      }
      pos = skip_ws(pos);
    }
    if (pos == text.size()) fail("unterminated cycle", pos);
    ++pos;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      auto [from, where] = cycle[k];
      if (images[from - 1] != 0) fail("repeated point " + std::to_string(from), where);
      images[from - 1] = cycle[(k + 1) % cycle.size()].first;
    }
    pos = skip_ws(pos);
  }
  for (std::size_t i = 0; i < degree; ++i) {
    if (images[i] == 0) images[i] = static_cast<Point>(i + 1);
  }
  return Permutation(std::move(images));
}

}  // namespace sbrauer

template <>
struct std::hash<sbrauer::Permutation> {
  std::size_t operator()(sbrauer::Permutation const& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

#endif
