#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "sbrauer/hyperoct.hpp"

using namespace sbrauer;

namespace {

constexpr auto P = EdgeSign::Positive;
constexpr auto N = EdgeSign::Negative;

// Every element of the group for small n, built by brute force.
std::vector<SignedPermutation> brute_force_group(std::size_t n) {
  std::vector<SignedPermutation> out;
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{1});
  do {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<EdgeSign> signs(n);
      for (std::size_t i = 0; i < n; ++i) signs[i] = (mask >> i) & 1 ? N : P;
      out.emplace_back(Permutation(images), signs);
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

SignedPermutation random_signed(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{1});
  std::shuffle(images.begin(), images.end(), rng);
  std::vector<EdgeSign> signs(n);
  for (auto& s : signs) s = rng() % 2 ? N : P;
  return {Permutation(images), signs};
}

SignedPermutation uniform(std::string const& cycles, std::size_t n, EdgeSign s) {
  return {parse_cycles(cycles, n), std::vector<EdgeSign>(n, s)};
}

}  // namespace

TEST_CASE("star exchanges the halves", "[hyperoct]") {
  CHECK(star(1, 5) == 6);
  CHECK(star(10, 5) == 5);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (Point i = 1; i <= 2 * n; ++i) REQUIRE(star(star(i, n), n) == i);
  }
  CHECK_THROWS_AS(star(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(star(7, 3), std::invalid_argument);
}

TEST_CASE("embedding of the printed examples", "[hyperoct]") {
  CHECK(format_cycles(embed({Permutation::identity(2), {P, N}})) == "(2 4)");
  CHECK(format_cycles(embed(uniform("(1 3 5 2 4)", 5, P))) == "(1 3 5 2 4)(6 8 10 7 9)");
  CHECK(format_cycles(embed(uniform("(1 2 3 4)", 5, N))) ==
        format_cycles(parse_cycles("(1 7 3 9)(6 2 8 4)(5 10)", 10)));
  CHECK(format_cycles(embed(uniform("(1 2 4 3)(5 6)", 6, N))) ==
        format_cycles(parse_cycles("(1 8 4 9)(7 2 10 3)(5 12)(6 11)", 12)));
}

TEST_CASE("the printed examples are the unique preimages", "[hyperoct][oracle]") {
  // Brute-force over the uniformly signed elements of each size.
  auto preimages = [](std::size_t n, EdgeSign s, std::string const& printed) {
    auto target = parse_cycles(printed, 2 * n);
    std::vector<std::string> hits;
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{1});
    do {
      SignedPermutation e(Permutation(images), std::vector<EdgeSign>(n, s));
      if (embed(e) == target) hits.push_back(format_cycles(e.underlying()));
    } while (std::next_permutation(images.begin(), images.end()));
    return hits;
  };
  CHECK(preimages(5, P, "(1 3 5 2 4)(6 8 10 7 9)") == std::vector<std::string>{"(1 3 5 2 4)"});
  CHECK(preimages(5, N, "(1 7 3 9)(6 2 8 4)(5 10)") == std::vector<std::string>{"(1 2 3 4)"});
  CHECK(preimages(6, N, "(1 8 4 9)(7 2 10 3)(5 12)(6 11)") == std::vector<std::string>{"(1 2 4 3)(5 6)"});
}

TEST_CASE("multiplication", "[hyperoct]") {
  SignedPermutation flip1(Permutation::identity(2), {N, P});
  CHECK(mul(flip1, flip1) == SignedPermutation::identity(2));

  SignedPermutation swap(parse_cycles("(1 2)", 2), {P, P});
  auto prod = mul(swap, flip1);
  CHECK(prod == SignedPermutation(parse_cycles("(1 2)", 2), {P, N}));
  CHECK(format_cycles(embed(prod)) == "(1 2 3 4)");
  CHECK(embed(prod) == compose(embed(swap), embed(flip1)));

  CHECK_THROWS_AS(mul(SignedPermutation::identity(2), SignedPermutation::identity(3)), std::invalid_argument);
}

TEST_CASE("inverse", "[hyperoct]") {
  CHECK(inverse(SignedPermutation::identity(4)) == SignedPermutation::identity(4));
  auto all_neg = uniform("e", 3, N);
  CHECK(inverse(all_neg) == all_neg);
  SignedPermutation s(parse_cycles("(1 2 3)", 3), {P, N, P});
  CHECK(mul(s, inverse(s)) == SignedPermutation::identity(3));
  CHECK(mul(inverse(s), s) == SignedPermutation::identity(3));

  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& g : brute_force_group(n)) {
      REQUIRE(mul(g, inverse(g)) == SignedPermutation::identity(n));
      REQUIRE(inverse(g).underlying() == inverse(g.underlying()));
    }
  }
}

TEST_CASE("negative count", "[hyperoct]") {
  CHECK(neg_count(SignedPermutation::identity(5)) == 0);
  CHECK(neg_count(uniform("(1 2 3 4)", 5, N)) == 5);
  CHECK(neg_count({Permutation::identity(2), {P, N}}) == 1);
}

TEST_CASE("diagram correspondence", "[hyperoct]") {
  CHECK(to_diagram(SignedPermutation::identity(3)) == identity_diagram(3));
  CHECK(from_diagram(identity_diagram(3)) == SignedPermutation::identity(3));
  for (auto const& s : brute_force_group(2)) REQUIRE(from_diagram(to_diagram(s)) == s);
  auto e = SignedDiagram::validate(2, {{1, 2, P}, {3, 4, P}});
  CHECK_THROWS_AS(from_diagram(e), std::invalid_argument);
}

TEST_CASE("window notation", "[hyperoct]") {
  auto a = parse_signed("+1 -2");
  CHECK(a == SignedPermutation(Permutation::identity(2), {P, N}));
  CHECK(format_cycles(embed(a)) == "(2 4)");

  auto b = parse_signed("+2 +1");
  CHECK(b == SignedPermutation(parse_cycles("(1 2)", 2), {P, P}));
  CHECK(format_cycles(embed(b)) == "(1 2)(3 4)");

  CHECK_THROWS_WITH(parse_signed("+1 +1"), Catch::Matchers::ContainsSubstring("not a bijection"));
  CHECK_THROWS_AS(parse_signed("+0 +1"), ParseError);
  CHECK_THROWS_AS(parse_signed("+1 +3"), ParseError);
  CHECK_THROWS_AS(parse_signed("1 +2"), ParseError);
  CHECK_THROWS_AS(parse_signed("+1x +2"), ParseError);
  CHECK_THROWS_AS(parse_signed("+ 1"), ParseError);
  CHECK_THROWS_AS(parse_signed(""), ParseError);
  try {
    parse_signed("+1 +2 +2");
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(e.position() == 6);
  }

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    auto s = random_signed(1 + rng() % 12, rng);
    REQUIRE(parse_signed(format_signed(s)) == s);
  }
}

TEST_CASE("the embedding of S2 matches the printed list", "[hyperoct]") {
  std::set<std::string> images;
  for (auto const& s : brute_force_group(2)) images.insert(format_cycles(embed(s)));
  std::set<std::string> const printed{"e",          "(2 4)",     "(1 3)",     "(1 3)(2 4)",
                                      "(1 2)(3 4)", "(1 2 3 4)", "(1 4 3 2)", "(1 4)(2 3)"};
  CHECK(images == printed);
}

TEST_CASE("embedding is a homomorphism", "[hyperoct][property]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto group = brute_force_group(n);
    for (auto const& a : group) {
      for (auto const& b : group) REQUIRE(embed(mul(a, b)) == compose(embed(a), embed(b)));
    }
  }
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10000; ++trial) {
    std::size_t n = 1 + rng() % 12;
    auto a = random_signed(n, rng);
    auto b = random_signed(n, rng);
    REQUIRE(embed(mul(a, b)) == compose(embed(a), embed(b)));
  }
}

TEST_CASE("the opposite composition order is not a homomorphism", "[hyperoct]") {
  // Pins the convention: reading products right to left breaks the embedding.
  SignedPermutation swap(parse_cycles("(1 2)", 2), {P, P});
  SignedPermutation flip1(Permutation::identity(2), {N, P});
  CHECK(embed(mul(swap, flip1)) != compose(embed(flip1), embed(swap)));
}

TEST_CASE("embedding is injective for n <= 4", "[hyperoct][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto group = brute_force_group(n);
    std::set<Permutation> images;
    for (auto const& s : group) images.insert(embed(s));
    REQUIRE(images.size() == group.size());
  }
}

TEST_CASE("unembed inverts embed", "[hyperoct]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& s : brute_force_group(n)) REQUIRE(unembed(embed(s)) == s);
  }
  CHECK_FALSE(unembed(parse_cycles("(1 2)", 4)).has_value());
  CHECK_FALSE(unembed(Permutation::identity(3)).has_value());
}

TEST_CASE("embedding commutes with diagram composition", "[hyperoct][property]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto group = brute_force_group(n);
    for (auto const& a : group) {
      for (auto const& b : group) {
        auto r = compose(to_diagram(a), to_diagram(b));
        REQUIRE(r.exponent == 0);
        REQUIRE(r.diagram == to_diagram(mul(a, b)));
        REQUIRE(embed(from_diagram(r.diagram)) == compose(embed(a), embed(b)));
      }
    }
  }
}
