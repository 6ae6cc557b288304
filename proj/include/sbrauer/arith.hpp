#ifndef SBRAUER_ARITH_HPP
#define SBRAUER_ARITH_HPP

// 2-adic valuations of factorials and of the falling product
// P(n) = (floor(n/2) + 1) (floor(n/2) + 2) ... n.

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "sbrauer/report.hpp"

namespace sbrauer {

using BigInt = boost::multiprecision::cpp_int;

/// Legendre: sum over i >= 1 of floor(n / 2^i).
constexpr std::uint64_t nu2_factorial(std::uint64_t n) noexcept {
  std::uint64_t v = 0;
  for (n >>= 1; n != 0; n >>= 1) v += n;
  return v;
}

struct ValuationResult {
  std::uint64_t n = 0;
  std::uint64_t valuation = 0;
  /// Set when the valuation was confirmed on the exact product, with the
  /// remaining cofactor checked to be odd.
  bool odd_cofactor_checked = false;
  BigInt odd_cofactor = 0;
};

inline BigInt falling_product(std::uint64_t n) {
  BigInt p = 1;
  for (std::uint64_t k = n / 2 + 1; k <= n; ++k) p *= k;
  return p;
}

inline BigInt factorial(std::uint64_t n) {
  BigInt p = 1;
  for (std::uint64_t k = 2; k <= n; ++k) p *= k;
  return p;
}

/// Strips factors of two from value; returns the count.
inline std::uint64_t strip_twos(BigInt& value) {
  if (value == 0) throw std::invalid_argument("strip_twos: zero has no 2-adic valuation");
  std::uint64_t v = 0;
  while ((value & 1) == 0) {
    value >>= 1;
    ++v;
  }
  return v;
}

/// Valuation of P(n) by Legendre's formula. With `exact`, the product is also
/// formed in full and divided down to its odd cofactor; a disagreement between
/// the two routes throws std::logic_error.
inline ValuationResult nu2_falling_product(std::uint64_t n, bool exact = false) {
  if (n < 2) throw std::invalid_argument("nu2_falling_product: n must be at least 2");
  ValuationResult r;
  r.n = n;
  r.valuation = nu2_factorial(n) - nu2_factorial(n / 2);
  if (exact) {
    BigInt k = falling_product(n);
    std::uint64_t v = strip_twos(k);
    if (v != r.valuation) {
      throw std::logic_error("nu2_falling_product: exact valuation " + std::to_string(v) + " disagrees with " +
                             std::to_string(r.valuation) + " at n=" + std::to_string(n));
    }
    r.odd_cofactor = std::move(k);
    r.odd_cofactor_checked = (r.odd_cofactor & 1) == 1;
  }
  return r;
}

/// The exponent of a Sylow 2-subgroup of any group of order P(n), which is
/// the 2-adic valuation of P(n): floor(n/2).
inline std::uint64_t sylow2_exponent(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("sylow2_exponent: n must be at least 2");
  return n / 2;
}

/// Checks nu2(P(n)) == floor(n/2) for 2 <= n <= limit, which gives both
/// 2^floor(n/2) | P(n) and 2^(floor(n/2)+1) does not divide P(n). Up to
/// exact_limit the product is also formed exactly and the cofactor is
/// confirmed odd.
inline VerificationReport verify_corollary(std::uint64_t limit, std::uint64_t exact_limit = 30) {
  auto const start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.claim = "cor_3_4";
  r.n = limit;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    ++r.checked;
    std::uint64_t v = nu2_factorial(n) - nu2_factorial(n / 2);
    bool good = v == n / 2;
    std::string detail;
    if (good && n <= exact_limit) {
      BigInt k = falling_product(n);
      std::uint64_t exact_v = strip_twos(k);
      good = exact_v == n / 2 && (k & 1) == 1;
      if (!good) detail = "exact valuation " + std::to_string(exact_v);
    } else if (!good) {
      detail = "valuation " + std::to_string(v);
    }
    if (!good) r.counterexamples.push_back({n, "n=" + std::to_string(n), detail});
  }
  r.duration = std::chrono::steady_clock::now() - start;
  return r;
}

/// Checks 2^floor(n/2) * floor(n/2)! | n! for 2 <= n <= limit by valuation,
/// and by exact division up to exact_limit.
inline VerificationReport verify_divisibility(std::uint64_t limit, std::uint64_t exact_limit = 30) {
  auto const start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.claim = "divisibility";
  r.n = limit;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    ++r.checked;
    std::uint64_t h = n / 2;
    // h! already divides n!, so only the power of two can fail.
    bool good = h + nu2_factorial(h) <= nu2_factorial(n);
    if (good && n <= exact_limit) {
      BigInt divisor = factorial(h) << static_cast<unsigned>(h);
      good = factorial(n) % divisor == 0;
    }
    if (!good) r.counterexamples.push_back({n, "n=" + std::to_string(n), {}});
  }
  r.duration = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace sbrauer

#endif
