#pragma once

#include "tanvar/numeric.hpp"
#include "tanvar/rootdata.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tanvar {

/// Sparse element of g in a Chevalley basis. Zero coefficients are never stored.
class LieElement {
 public:
  LieElement() = default;
  explicit LieElement(std::uint64_t basis_id) : m_basis(basis_id) {}

  std::uint64_t basis_id() const { return m_basis; }
  const std::map<std::size_t, Rational>& terms() const { return m_terms; }
  bool is_zero() const { return m_terms.empty(); }
  Rational coefficient(std::size_t index) const;

  void add(std::size_t index, const Rational& coefficient);
  LieElement& operator+=(const LieElement& other);
  LieElement& operator*=(const Rational& factor);

  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  std::uint64_t m_basis = 0;
  std::map<std::size_t, Rational> m_terms;
};

/// Chevalley basis {e_alpha, h_i} with integral structure constants fixed by
/// the extraspecial-pair convention (positive roots ordered by height, then
/// lexicographically; N = +(p+1) on extraspecial pairs).
///
/// Basis indices: [0, P) positive root vectors in datum order, [P, 2P) the
/// matching negative root vectors, [2P, 2P + rank) the h_i.
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(RootDatum datum);

  const RootDatum& datum() const { return m_datum; }
  std::uint64_t id() const { return m_id; }
  std::size_t dimension() const { return 2 * m_positive + m_datum.rank(); }
  std::size_t positive_count() const { return m_positive; }

  bool is_root_vector(std::size_t index) const { return index < 2 * m_positive; }
  std::size_t negative_of(std::size_t root_index) const;
  std::size_t cartan_index(std::size_t node) const { return 2 * m_positive + node; }
  /// Signed simple-root coordinates of a root vector's root.
  const std::vector<int>& root_simple(std::size_t root_index) const { return m_simple[root_index]; }
  /// Fundamental-weight coordinates of a root vector's root.
  const Weight& root_weight(std::size_t root_index) const { return m_weight[root_index]; }
  /// Root vector index of a signed root, if it is a root.
  std::optional<std::size_t> find_root(const std::vector<int>& simple) const;

  /// N_{a,b} for root vector indices; 0 when the sum is not a root.
  int structure_constant(std::size_t a, std::size_t b) const { return m_constants[a * 2 * m_positive + b]; }

  LieElement zero() const { return LieElement(m_id); }
  LieElement element(std::size_t index) const;
  /// Throws DomainError when either argument belongs to another basis.
  LieElement bracket(const LieElement& x, const LieElement& y) const;
  /// Bracket of two basis vectors.
  LieElement bracket_basis(std::size_t a, std::size_t b) const;

 private:
  void build_roots();
  void build_constants();

  RootDatum m_datum;
  std::uint64_t m_id;
  std::size_t m_positive;
  std::vector<std::vector<int>> m_simple;
  std::vector<Weight> m_weight;
  std::vector<int> m_half_norm;  // (alpha, alpha) / 2
  std::map<std::vector<int>, std::size_t> m_index;
  std::vector<int> m_constants;  // 2P x 2P
};

/// b0 = Cartan plus negative root vectors of the Levi; g_minus = negative root
/// vectors with a nonzero coefficient on some marked node.
struct ParabolicSplit {
  std::vector<LieElement> b0;
  std::vector<LieElement> g_minus;
  std::vector<std::size_t> b0_indices;
  std::vector<std::size_t> g_minus_indices;
};

ParabolicSplit parabolic_split(const ChevalleyBasis& basis, const ParabolicMarking& marking);

} // namespace tanvar
