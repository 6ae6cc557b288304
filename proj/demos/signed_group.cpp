// Lists the signed permutation group on two strands, its embedding into S_4,
// and which elements land among the even permutations.

#include <iostream>

#include "sbrauer/sbrauer.hpp"

int main() {
  using namespace sbrauer;
  for (auto const& s : enumerate_signed(2)) {
    Permutation p = embed(s);
    std::cout << format_signed(s) << "  ->  " << format_cycles(p) << "  (" << to_string(parity(p))
              << ", negative strands: " << neg_count(s) << ")\n";
  }

  auto b = embedded_bsgs(6, GeneratorSet::Even);
  std::cout << "order of the even subgroup for n = 6 by Schreier-Sims: " << b.order() << '\n';
}
