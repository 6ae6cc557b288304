#include <bit>

#include "catch_amalgamated.hpp"

#include "sbrauer/arith.hpp"

using namespace sbrauer;

TEST_CASE("nu2 of factorials", "[arith]") {
  CHECK(nu2_factorial(0) == 0);
  CHECK(nu2_factorial(1) == 0);
  CHECK(nu2_factorial(4) == 3);
  CHECK(nu2_factorial(10) == 8);
  for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
    REQUIRE(nu2_factorial(n) == n - static_cast<std::uint64_t>(std::popcount(n)));
  }
  for (std::uint64_t n = 0; n <= 40; ++n) {
    BigInt f = factorial(n);
    REQUIRE(strip_twos(f) == nu2_factorial(n));
  }
}

TEST_CASE("nu2 of the falling product", "[arith]") {
  CHECK(nu2_falling_product(2).valuation == 1);
  CHECK(falling_product(2) == 2);
  CHECK(nu2_falling_product(6).valuation == 3);
  CHECK(falling_product(6) == 120);
  CHECK(nu2_falling_product(7).valuation == 3);
  CHECK(falling_product(7) == 840);

  auto exact = nu2_falling_product(9, true);
  CHECK(exact.valuation == 4);
  CHECK(exact.odd_cofactor_checked);
  CHECK(exact.odd_cofactor == 945);
  CHECK(nu2_falling_product(5, true).odd_cofactor == 15);

  CHECK_THROWS_AS(nu2_falling_product(1), std::invalid_argument);
  CHECK_THROWS_AS(sylow2_exponent(0), std::invalid_argument);
}

TEST_CASE("sylow2_exponent", "[arith]") {
  CHECK(sylow2_exponent(2) == 1);
  CHECK(sylow2_exponent(9) == 4);
  CHECK(sylow2_exponent(100) == 50);
  for (std::uint64_t n = 2; n <= 200; ++n) REQUIRE(sylow2_exponent(n) == nu2_falling_product(n, n <= 60).valuation);
}

TEST_CASE("verify_corollary", "[arith]") {
  auto small = verify_corollary(10);
  CHECK(small.checked == 9);
  CHECK(small.ok());
  auto big = verify_corollary(1'000'000);
  CHECK(big.checked == 999'999);
  CHECK(big.ok());
}

TEST_CASE("verify_divisibility", "[arith]") {
  CHECK(factorial(4) % (factorial(2) << 2) == 0);
  CHECK(factorial(6) % (factorial(3) << 3) == 0);
  auto r = verify_divisibility(1'000'000);
  CHECK(r.ok());
  CHECK(verify_divisibility(30, 30).ok());
}

TEST_CASE("the two exact and valuation routes agree up to 30", "[arith][property]") {
  for (std::uint64_t n = 2; n <= 30; ++n) {
    BigInt p = falling_product(n);
    std::uint64_t v = strip_twos(p);
    REQUIRE(v == nu2_falling_product(n).valuation);
    REQUIRE((p & 1) == 1);
  }
}

TEST_CASE("even and odd step recurrences of the falling product", "[arith][property]") {
  // n even: P(n+1) = P(n) (n+1) with n+1 odd, so the valuation is unchanged.
  // n odd:  P(n+1) = 2 P(n), so the valuation grows by one.
  BigInt prev = falling_product(2);
  for (std::uint64_t n = 2; n < 1000; ++n) {
    BigInt next = falling_product(n + 1);
    if (n % 2 == 0) {
      REQUIRE(next == prev * (n + 1));
      REQUIRE(nu2_falling_product(n + 1).valuation == nu2_falling_product(n).valuation);
    } else {
      REQUIRE(next == prev * 2);
      REQUIRE(nu2_falling_product(n + 1).valuation == nu2_falling_product(n).valuation + 1);
    }
    prev = std::move(next);
  }
}
