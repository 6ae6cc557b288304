#ifndef SBRAUER_REPORT_HPP
#define SBRAUER_REPORT_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sbrauer {

/// A counterexample in a form that can be replayed: for group claims the
/// window notation of the element, for arithmetic claims `n=<value>`.
struct Counterexample {
  std::uint64_t rank = 0;
  std::string input;
  std::string detail;
};

struct VerificationReport {
  std::string claim;
  std::size_t n = 0;
  std::uint64_t checked = 0;
  std::vector<Counterexample> counterexamples;
  std::chrono::duration<double> duration{};
  /// True when the domain was sampled instead of enumerated.
  bool sampled = false;
  /// Claim-specific measured quantity (a subgroup order, an intersection size).
  std::optional<std::uint64_t> measured;

  bool ok() const noexcept { return counterexamples.empty(); }
  std::size_t failures() const noexcept { return counterexamples.size(); }
};

/// `claim=<id> n=<n> checked=<count> failures=<count>`
inline std::string summary_line(VerificationReport const& r) {
  return "claim=" + r.claim + " n=" + std::to_string(r.n) + " checked=" + std::to_string(r.checked) +
         " failures=" + std::to_string(r.failures());
}

}  // namespace sbrauer

#endif
