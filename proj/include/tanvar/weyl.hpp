#pragma once

#include "tanvar/rootdata.hpp"

#include <cstddef>
#include <utility>

namespace tanvar {

/// Outcome of moving mu + rho into the dominant chamber.
struct DotResult {
  bool singular = false;
  std::size_t length = 0;  ///< number of dot reflections applied
  Weight dominant;         ///< meaningful only when !singular

  static DotResult make_singular() { return DotResult{true, 0, {}}; }
};

/// s_i(mu) = mu - <mu, alpha_i^vee> alpha_i
Weight reflect(const RootDatum& datum, std::size_t node, const Weight& mu);

/// s_i(mu + rho) - rho
Weight dot_reflect(const RootDatum& datum, std::size_t node, const Weight& mu);

/// Dot-reflects at the lowest node with <mu + rho, alpha_i^vee> < 0 until
/// none is left. Singular when a zero pairing is met along the way.
DotResult make_dominant_dot(const RootDatum& datum, const Weight& mu);

/// Dominant W-conjugate of mu and the number of simple reflections used.
std::pair<Weight, std::size_t> make_dominant(const RootDatum& datum, const Weight& mu);

/// True when <mu + rho, alpha^vee> = 0 for some positive root, by direct scan.
bool is_rho_singular(const RootDatum& datum, const Weight& mu);

} // namespace tanvar
