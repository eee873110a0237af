#pragma once

#include "tanvar/rootdata.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tanvar {

enum class Sphericity { Spherical, NotSpherical, Inconclusive };

std::string to_string(Sphericity verdict);

struct RankStatistics {
  std::size_t trials = 0;
  std::size_t full_rank_trials = 0;
  std::size_t best_rank = 0;
  std::size_t target_rank = 0;  ///< dim g_minus
  std::size_t source_dimension = 0;  ///< dim b0
  std::uint64_t seed = 0;
  long coefficient_bound = 0;
};

struct SphericityVerdict {
  Sphericity verdict = Sphericity::Inconclusive;
  std::string evidence;
  bool used_rank_test = false;
  RankStatistics statistics;
  std::vector<std::string> warnings;
};

/// Table verdict: spherical iff every marked factor is a compact Hermitian
/// symmetric space presentation (cominuscule, C_n/P_1 or B_n/P_n) and no
/// factor is G2/P1. Factors without marked nodes are ignored.
SphericityVerdict classify(const RootDatum& datum, const ParabolicMarking& marking);

/// Randomized rank test of b -> [b, U] from b0 to g_minus for U in g_minus
/// with integer coefficients drawn uniformly from [-bound, bound]. One full
/// rank trial certifies sphericality. Repeated deficiency is reported as
/// NotSpherical only when classify agrees and trials >= 2, otherwise
/// Inconclusive. Throws ConsistencyError when a full-rank trial contradicts
/// classify. Degenerate tangential varieties are answered by classify with a
/// warning.
SphericityVerdict redlem_rank_test(const RootDatum& datum, const ParabolicMarking& marking, std::size_t trials,
                                   std::uint64_t seed, long bound = 13);

/// Rank over the rationals of b -> [b, U] for one explicit U (coefficients
/// on the g_minus basis in parabolic_split order).
std::size_t bracket_rank(const RootDatum& datum, const ParabolicMarking& marking, const std::vector<long>& u);

struct MultiplicityDefect {
  std::size_t h0_mult = 0;
  std::size_t h1_mult = 0;
  std::size_t defect = 0;
};

/// Multiplicities of the test weight in H^0 and H^1 of S^2 gr(eta) on
/// A_n/P_I, by counting pairs of positive roots outside p. Requires
/// |I| >= 2 and the largest node strictly below n (0-based nodes).
MultiplicityDefect an_multiplicity_defect(int n, const ParabolicMarking& marking);

} // namespace tanvar
