#ifndef SBRAUER_BSGS_HPP
#define SBRAUER_BSGS_HPP

// Base and strong generating set via deterministic Schreier-Sims. Used as an
// order and membership oracle that does not enumerate the group.
//
// Transversals are kept as explicit coset representatives per orbit point,
// which is fine for the small degrees (<= 24) this library deals with.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sbrauer/hyperoct.hpp"
#include "sbrauer/perm.hpp"

namespace sbrauer {

class Bsgs {
 public:
  struct Level {
    Point base = 0;
    /// representatives[x] maps the base point to x; empty when x is not in
    /// the basic orbit.
    std::vector<std::optional<Permutation>> representatives;
    std::vector<Point> orbit;
  };

  /// Sifts g through the chain starting at `from`. Returns the residue and
  /// the level at which sifting stopped (== depth() when it went through).
  struct SiftResult {
    Permutation residue;
    std::size_t level;
  };

  static Bsgs build(std::vector<Permutation> const& generators, std::size_t degree) {
    for (auto const& g : generators) {
      if (g.degree() != degree) {
        throw std::invalid_argument("bsgs: generator degree " + std::to_string(g.degree()) + " differs from " +
                                    std::to_string(degree));
      }
    }
    Bsgs b;
    b.degree_ = degree;
    for (auto const& g : generators) {
      if (g.is_identity()) continue;
      b.strong_.push_back(g);
      bool fixes_base = true;
      for (auto const& l : b.levels_) fixes_base = fixes_base && g(l.base) == l.base;
      if (fixes_base) b.push_level(g.first_moved());
    }
    for (std::size_t i = 0; i < b.levels_.size(); ++i) b.rebuild_orbit(i);
    b.schreier_sims();
    return b;
  }

  static Bsgs build(std::vector<Permutation> const& generators) {
    if (generators.empty()) return build(generators, 0);
    return build(generators, generators.front().degree());
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  std::vector<Level> const& levels() const noexcept { return levels_; }
  std::vector<Permutation> const& strong_generators() const noexcept { return strong_; }

  std::vector<Point> base() const {
    std::vector<Point> out;
    for (auto const& l : levels_) out.push_back(l.base);
    return out;
  }

  /// Product of the basic orbit lengths.
  std::uint64_t order() const noexcept {
    std::uint64_t result = 1;
    for (auto const& l : levels_) result *= l.orbit.size();
    return result;
  }

  SiftResult sift(Permutation g, std::size_t from = 0) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      auto const& rep = levels_[i].representatives[g(levels_[i].base)];
      if (!rep) return {std::move(g), i};
      g = compose(g, inverse(*rep));
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(Permutation const& p) const {
    if (p.degree() != degree_) {
      throw std::invalid_argument("bsgs contains: degree " + std::to_string(p.degree()) + " differs from " +
                                  std::to_string(degree_));
    }
    auto r = sift(p);
    return r.level == levels_.size() && r.residue.is_identity();
  }

 private:
  void push_level(Point base) {
    Level l;
    l.base = base;
    levels_.push_back(std::move(l));
  }

  /// Strong generators fixing every base point before level i.
  std::vector<Permutation const*> generators_at(std::size_t i) const {
    std::vector<Permutation const*> out;
    for (auto const& g : strong_) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = g(levels_[j].base) == levels_[j].base;
      if (fixes) out.push_back(&g);
    }
    return out;
  }

  void rebuild_orbit(std::size_t i) {
    Level& l = levels_[i];
    l.representatives.assign(degree_ + 1, std::nullopt);
    l.orbit.clear();
    l.representatives[l.base] = Permutation::identity(degree_);
    l.orbit.push_back(l.base);
    auto gens = generators_at(i);
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      Point x = l.orbit[k];
      for (auto const* s : gens) {
        Point y = (*s)(x);
        if (!l.representatives[y]) {
          l.representatives[y] = compose(*l.representatives[x], *s);
          l.orbit.push_back(y);
        }
      }
    }
  }

  // Work from the deepest level upwards. At each level every Schreier
  // generator must sift through the levels below it; a non-trivial residue
  // becomes a new strong generator and processing resumes at the level where
  // it stopped.
  void schreier_sims() {
    std::size_t i = levels_.size();
    while (i > 0) {
      std::size_t const level = i - 1;
      bool extended = false;
      auto gens = generators_at(level);
      Level const& l = levels_[level];
      for (std::size_t k = 0; k < l.orbit.size() && !extended; ++k) {
        Point beta = l.orbit[k];
        for (auto const* s : gens) {
          Permutation const& u_beta = *l.representatives[beta];
          Permutation const& u_image = *l.representatives[(*s)(beta)];
          Permutation h = compose(compose(u_beta, *s), inverse(u_image));
          if (h.is_identity()) continue;
          auto [residue, stop] = sift(std::move(h), level + 1);
          if (stop == levels_.size() && residue.is_identity()) continue;
          if (stop == levels_.size()) push_level(residue.first_moved());
          strong_.push_back(std::move(residue));
          for (std::size_t j = level + 1; j <= stop; ++j) rebuild_orbit(j);
          i = stop + 1;
          extended = true;
          break;
        }
      }
      if (!extended) --i;
    }
  }

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
  std::vector<Permutation> strong_;
};

enum class GeneratorSet { Full, Even };

/// Adjacent transpositions with all strands positive, plus either a single
/// sign flip on strand 1 (Full) or a double flip on strands 1 and 2 (Even).
inline std::vector<SignedPermutation> standard_generators(std::size_t n, GeneratorSet which) {
  if (n < 2) throw std::invalid_argument("standard_generators: n must be at least 2");
  std::vector<SignedPermutation> out;
  for (Point i = 1; i < n; ++i) {
    out.emplace_back(Permutation::from_cycles(n, {{i, i + 1}}), std::vector<EdgeSign>(n, EdgeSign::Positive));
  }
  std::vector<EdgeSign> signs(n, EdgeSign::Positive);
  signs[0] = EdgeSign::Negative;
  if (which == GeneratorSet::Even) signs[1] = EdgeSign::Negative;
  out.emplace_back(Permutation::identity(n), std::move(signs));
  return out;
}

/// Schreier-Sims structure for the embedded image of the standard generators.
inline Bsgs embedded_bsgs(std::size_t n, GeneratorSet which) {
  std::vector<Permutation> gens;
  for (auto const& s : standard_generators(n, which)) gens.push_back(embed(s));
  return Bsgs::build(gens, 2 * n);
}

}  // namespace sbrauer

#endif
