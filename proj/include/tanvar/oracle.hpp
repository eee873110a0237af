#pragma once

#include "tanvar/numeric.hpp"
#include "tanvar/rootdata.hpp"

#include <map>
#include <unordered_map>
#include <vector>

namespace tanvar {

/// Formal character: weight -> multiplicity. Zero multiplicities are not stored.
using WeightMultiset = std::unordered_map<Weight, BigInt, WeightHash>;

struct Irreducible {
  Weight weight;
  BigInt multiplicity;

  friend bool operator==(const Irreducible&, const Irreducible&) = default;
};

/// Irreducible constituents sorted by weight (lexicographic, ascending).
using Decomposition = std::vector<Irreducible>;

/// Default cap on C(dim V + d - 1, d) for sym_power_decompose.
inline constexpr unsigned long long kSymPowerGuard = 5'000'000ULL;

BigInt weyl_dim(const RootDatum& datum, const Weight& lambda);

/// Dominant weights of V_lambda with multiplicities (Freudenthal recursion).
std::map<Weight, BigInt> dominant_character(const RootDatum& datum, const Weight& lambda);

/// Full formal character of V_lambda.
WeightMultiset freudenthal(const RootDatum& datum, const Weight& lambda);

/// W-orbit of a dominant weight.
std::vector<Weight> weyl_orbit(const RootDatum& datum, const Weight& dominant);

/// Decomposition of V_lambda (x) V_mu by Klimyk's formula.
Decomposition tensor_decompose(const RootDatum& datum, const Weight& lambda, const Weight& mu);

/// Full character of S^d(V_lambda) via Newton's identity on Adams operations.
/// Throws ResourceError when C(dim + d - 1, d) exceeds guard.
WeightMultiset sym_power_character(const RootDatum& datum, const Weight& lambda, unsigned d,
                                   unsigned long long guard = kSymPowerGuard);

/// Decomposition of S^d(V_lambda).
Decomposition sym_power_decompose(const RootDatum& datum, const Weight& lambda, unsigned d,
                                  unsigned long long guard = kSymPowerGuard);

/// Peels irreducibles off a character, highest dominant weight first.
/// Throws DomainError ("not a character") on a negative multiplicity.
Decomposition decompose_multiset(const RootDatum& datum, const WeightMultiset& chi);

/// Sum of multiplicity x character.
WeightMultiset reconstruct_character(const RootDatum& datum, const Decomposition& parts);

WeightMultiset multiply_characters(const WeightMultiset& a, const WeightMultiset& b);
/// psi^k: every weight scaled by k.
WeightMultiset adams(const WeightMultiset& chi, long k);
BigInt mass(const WeightMultiset& chi);
BigInt decomposition_dimension(const RootDatum& datum, const Decomposition& parts);

/// Multiset difference a - b. Throws ConsistencyError if some entry of b is
/// not contained in a.
Decomposition subtract(const Decomposition& a, const Decomposition& b);

/// Sorts by weight and merges equal weights.
Decomposition normalize(Decomposition parts);

} // namespace tanvar
