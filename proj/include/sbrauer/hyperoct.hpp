#ifndef SBRAUER_HYPEROCT_HPP
#define SBRAUER_HYPEROCT_HPP

// The group of vertical signed diagrams (the hyperoctahedral group, i.e. the
// wreath product Z2 wr Sn) and its embedding into the symmetric group on 2n
// points.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sbrauer/diagram.hpp"
#include "sbrauer/error.hpp"
#include "sbrauer/perm.hpp"

namespace sbrauer {

/// Strand i leaves top vertex i, lands on bottom vertex n + underlying(i)
/// and carries signs[i - 1].
class SignedPermutation {
 public:
  SignedPermutation() = default;

  SignedPermutation(Permutation underlying, std::vector<EdgeSign> signs)
      : underlying_(std::move(underlying)), signs_(std::move(signs)) {
    if (underlying_.degree() != signs_.size()) {
      throw std::invalid_argument("signed permutation: " + std::to_string(signs_.size()) + " signs for " +
                                  std::to_string(underlying_.degree()) + " strands");
    }
  }

  static SignedPermutation identity(std::size_t n) {
    return {Permutation::identity(n), std::vector<EdgeSign>(n, EdgeSign::Positive)};
  }

  std::size_t n() const noexcept { return signs_.size(); }
  Permutation const& underlying() const noexcept { return underlying_; }
  std::vector<EdgeSign> const& signs() const noexcept { return signs_; }
  EdgeSign sign(Point strand) const noexcept { return signs_[strand - 1]; }

  bool operator==(SignedPermutation const&) const = default;
  auto operator<=>(SignedPermutation const& o) const {
    if (auto c = underlying_ <=> o.underlying_; c != 0) return c;
    return signs_ <=> o.signs_;
  }

 private:
  Permutation underlying_;
  std::vector<EdgeSign> signs_;
};

/// The involution exchanging i and i + n on {1..2n}.
inline Point star(Point i, std::size_t n) {
  if (i == 0 || i > 2 * n) {
    throw std::invalid_argument("star: point " + std::to_string(i) + " out of range 1.." + std::to_string(2 * n));
  }
  return i <= n ? i + static_cast<Point>(n) : i - static_cast<Point>(n);
}

/// Positive strand i -> k: i maps to k and i* to k*. Negative strand: i maps
/// to k* and i* to k (the strand swaps the halves).
inline Permutation embed(SignedPermutation const& s) {
  auto const n = static_cast<Point>(s.n());
  std::vector<Point> images(2 * s.n());
  for (Point i = 1; i <= n; ++i) {
    Point k = s.underlying()(i);
    if (s.sign(i) == EdgeSign::Positive) {
      images[i - 1] = k;
      images[n + i - 1] = n + k;
    } else {
      images[i - 1] = n + k;
      images[n + i - 1] = k;
    }
  }
  return Permutation(std::move(images));
}

/// Stack a above b.
inline SignedPermutation mul(SignedPermutation const& a, SignedPermutation const& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("mul: size mismatch (" + std::to_string(a.n()) + " vs " + std::to_string(b.n()) + ")");
  }
  std::vector<EdgeSign> signs(a.n());
  for (Point i = 1; i <= a.n(); ++i) signs[i - 1] = a.sign(i) * b.sign(a.underlying()(i));
  return {compose(a.underlying(), b.underlying()), std::move(signs)};
}

inline SignedPermutation inverse(SignedPermutation const& s) {
  Permutation inv = inverse(s.underlying());
  std::vector<EdgeSign> signs(s.n());
  for (Point j = 1; j <= s.n(); ++j) signs[j - 1] = s.sign(inv(j));
  return {std::move(inv), std::move(signs)};
}

inline std::size_t neg_count(SignedPermutation const& s) noexcept {
  return static_cast<std::size_t>(std::count(s.signs().begin(), s.signs().end(), EdgeSign::Negative));
}

inline SignedDiagram to_diagram(SignedPermutation const& s) {
  auto const n = static_cast<Vertex>(s.n());
  std::vector<Edge> edges;
  edges.reserve(n);
  for (Vertex i = 1; i <= n; ++i) edges.push_back({i, n + s.underlying()(i), s.sign(i)});
  return SignedDiagram::validate(n, std::move(edges));
}

inline SignedPermutation from_diagram(SignedDiagram const& d) {
  if (!is_vertical(d)) throw std::invalid_argument("from_diagram: diagram has horizontal edges");
  auto const n = static_cast<Vertex>(d.n());
  std::vector<Point> images(n);
  std::vector<EdgeSign> signs(n);
  for (Vertex i = 1; i <= n; ++i) {
    images[i - 1] = d.partner(i) - n;
    signs[i - 1] = d.sign_at(i);
  }
  return {Permutation(std::move(images)), std::move(signs)};
}

/// Recovers the signed permutation whose embedding is p, or nullopt when p
/// is not in the image (p must have even degree).
inline std::optional<SignedPermutation> unembed(Permutation const& p) {
  if (p.degree() == 0 || p.degree() % 2 != 0) return std::nullopt;
  auto const n = static_cast<Point>(p.degree() / 2);
  std::vector<Point> images(n);
  std::vector<EdgeSign> signs(n);
  for (Point i = 1; i <= n; ++i) {
    Point x = p(i);
    bool negative = x > n;
    Point k = negative ? x - n : x;
    if (p(n + i) != (negative ? k : n + k)) return std::nullopt;
    images[i - 1] = k;
    signs[i - 1] = negative ? EdgeSign::Negative : EdgeSign::Positive;
  }
  return SignedPermutation(Permutation(std::move(images)), std::move(signs));
}

/// Window notation: token i is `+k` or `-k`.
inline std::string format_signed(SignedPermutation const& s) {
  std::string out;
  for (Point i = 1; i <= s.n(); ++i) {
    if (i > 1) out += ' ';
    out += sign_char(s.sign(i));
    out += std::to_string(s.underlying()(i));
  }
  return out;
}

inline SignedPermutation parse_signed(std::string_view text) {
  std::string const input(text);
  struct Token {
    EdgeSign sign;
    std::uint64_t magnitude;
    std::size_t at;
  };
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    if (text[pos] != '+' && text[pos] != '-') {
      throw ParseError("window notation: token must start with '+' or '-'", input, start);
    }
    EdgeSign sign = text[pos] == '+' ? EdgeSign::Positive : EdgeSign::Negative;
    ++pos;
    std::uint64_t value = 0;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = std::min<std::uint64_t>(value * 10 + static_cast<std::uint64_t>(text[pos] - '0'), 1u << 30);
      ++pos;
      ++digits;
    }
    if (digits == 0 || (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))) {
      throw ParseError("window notation: malformed token", input, start);
    }
    tokens.push_back({sign, value, start});
  }
  if (tokens.empty()) throw ParseError("window notation: empty input", input, 0);

  std::size_t const n = tokens.size();
  std::vector<bool> used(n + 1, false);
  std::vector<Point> images;
  std::vector<EdgeSign> signs;
  for (auto const& t : tokens) {
    if (t.magnitude == 0 || t.magnitude > n) {
      throw ParseError("window notation: magnitude out of range 1.." + std::to_string(n), input, t.at);
    }
    if (used[t.magnitude]) {
      throw ParseError("window notation: not a bijection (" + std::to_string(t.magnitude) + " repeated)", input, t.at);
    }
    used[t.magnitude] = true;
    images.push_back(static_cast<Point>(t.magnitude));
    signs.push_back(t.sign);
  }
  return {Permutation(std::move(images)), std::move(signs)};
}

}  // namespace sbrauer

#endif
