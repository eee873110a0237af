#pragma once

#include "tanvar/catalog.hpp"
#include "tanvar/grammar.hpp"
#include "tanvar/oracle.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace tanvar {

/// A Segre product of cominuscule factors, or a single factor embedded by
/// O(N). Weights live on the product datum with concatenated coordinates.
class EmbeddingSpec {
 public:
  /// Throws DomainError when N >= 2 is combined with several factors.
  EmbeddingSpec(std::vector<CominusculeDatum> factors, int multiplicity = 1);

  const std::vector<CominusculeDatum>& factors() const { return m_factors; }
  int multiplicity() const { return m_multiplicity; }
  const RootDatum& datum() const { return m_datum; }
  bool irreducible() const { return m_factors.size() == 1; }
  /// Sum of factor ranks.
  int rank() const;
  /// Largest factor rank.
  int max_factor_rank() const;
  /// Global 0-based marked node of factor s.
  std::size_t marked_node(std::size_t factor) const { return m_datum.component_offset(factor) + m_factors[factor].i0; }
  /// Highest weight of V, i.e. N omega_i0 or the sum of the factors' omega_i0.
  Weight ambient_weight() const;
  /// Embeds a factor weight into the product lattice.
  Weight lift(std::size_t factor, const Weight& local) const;
  std::string to_string() const;

 private:
  std::vector<CominusculeDatum> m_factors;
  int m_multiplicity;
  RootDatum m_datum;
};

/// Builds an embedding from a parsed spec; every simple factor must carry
/// exactly one marked node and be cominuscule.
EmbeddingSpec make_embedding(const GroupSpec& spec);
EmbeddingSpec parse_embedding(std::string_view text);

struct LabeledBundle {
  std::vector<int> a;  ///< a_1 .. a_r
  Weight weight;       ///< bundle weight on the factor datum
};

/// Summands of S^d(gr eta): one per tuple with sum_j j a_j <= d, weight
/// sum_j a_j mu_j + (N d - sum_j j a_j) omega_i0.
std::vector<LabeledBundle> sym_gr_eta(const CominusculeDatum& datum, unsigned d, int multiplicity = 1);

/// Degree-d piece of the coordinate ring. Entries denote modules V*_weight.
struct GradedDecomposition {
  unsigned degree = 0;
  Decomposition entries;
  bool dual_side = true;
};

/// Throws DomainError ("rank >= 3 required") below rank 3.
GradedDecomposition coord_ring_component(const EmbeddingSpec& spec, unsigned d);

struct CovariantGenerator {
  unsigned degree = 0;
  Weight weight;

  friend bool operator==(const CovariantGenerator&, const CovariantGenerator&) = default;
};

/// Minimal generators of the semigroup {(weight, d)} for 1 <= d <= max_degree,
/// sorted by degree then weight.
std::vector<CovariantGenerator> covariant_generators(const EmbeddingSpec& spec, unsigned max_degree);

struct DegreeBound {
  int closed_form = 0;     ///< 4r - 4, or max(6, 4 r_0) for products
  int via_covariants = 0;  ///< twice the largest generator degree
  unsigned scanned_degree = 0;
};

/// Throws ConsistencyError if via_covariants exceeds closed_form.
DegreeBound ideal_degree_bound(const EmbeddingSpec& spec);

/// False exactly for rank-2 generalized cominuscule varieties in their
/// minimal embedding and for projective spaces embedded by O(1) or O(2).
bool is_strongly_nondegenerate(const GroupSpec& spec);

/// Rank of the compact Hermitian symmetric space underlying G/P, counting
/// the non-cominuscule presentations C_n/P_1 (P^{2n-1}), B_n/P_n (spinor
/// variety of D_{n+1}) and G2/P1 (quadric Q^5). Empty when G/P is not of
/// that form.
std::optional<int> generalized_cominuscule_rank(const SimpleLieType& type, std::size_t node);

/// Sum over the degree-d decomposition of multiplicity x Weyl dimension.
BigInt hilbert_dimension(const EmbeddingSpec& spec, unsigned d);

/// dim S^d(V) for the ambient module V.
BigInt ambient_dimension(const EmbeddingSpec& spec, unsigned d);

/// Multiset difference S^d(V) minus the degree-d coordinate ring, computed
/// with the character oracle. Requires N = 1. Throws ConsistencyError when
/// the coordinate ring is not contained in S^d(V).
GradedDecomposition ideal_component_via_oracle(const EmbeddingSpec& spec, unsigned d,
                                               unsigned long long guard = kSymPowerGuard);

struct SegreTop {
  std::pair<long, long> closed_form;
  std::pair<long, long> via_cohomology;
  std::size_t cohomological_degree = 0;
  long bundle_rank = 0;       ///< rank of xi
  long determinant_degree = 0;  ///< per-factor degree of det(xi)
};

/// Per-factor partition of the last term of the minimal resolution of the
/// tangential variety of Seg(P^1 x ... x P^1), m >= 3, computed by the closed
/// form and from Bott's theorem on det(gr xi). Throws ConsistencyError if the
/// two disagree.
SegreTop segre_resolution_top(unsigned m);

} // namespace tanvar
