#pragma once

#include "tanvar/rootdata.hpp"

#include <cstdint>
#include <vector>

namespace tanvar {

/// Either no cohomology at all, or H^degree(E_mu) = V*_weight and nothing else.
struct CohomologyResult {
  bool vanishing = true;
  std::size_t degree = 0;
  Weight weight;

  static CohomologyResult make_vanishing() { return {}; }
  static CohomologyResult make_module(std::size_t degree, Weight weight) { return {false, degree, std::move(weight)}; }
  friend bool operator==(const CohomologyResult&, const CohomologyResult&) = default;
};

/// True when mu has non-negative coordinates at every unmarked node.
bool is_levi_dominant(const RootDatum& datum, const ParabolicMarking& marking, const Weight& mu);

/// Bott-Borel-Weil for the irreducible bundle E_mu on G/P_marking. The weight
/// is reported on the V* side; apply dual_weight for the other convention.
/// Throws DomainError when mu is not Levi-dominant.
CohomologyResult cohomology(const RootDatum& datum, const ParabolicMarking& marking, const Weight& mu);

/// Line bundle O(k_1, ..., k_m) on a product of m projective lines.
CohomologyResult segre_line_cohomology(std::size_t m, const std::vector<std::int64_t>& degrees);

} // namespace tanvar
