#pragma once

#include "tanvar/numeric.hpp"
#include "tanvar/weight.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace tanvar {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleLieType {
  Family family;
  int rank;

  /// Throws DomainError when the rank is outside the family's range.
  void validate() const;
  std::string to_string() const;
  friend bool operator==(const SimpleLieType&, const SimpleLieType&) = default;
};

/// A positive root carried in several coordinate systems at once.
struct PositiveRoot {
  std::vector<int> simple;  ///< coefficients on the simple roots (global nodes)
  Weight omega;             ///< fundamental-weight coordinates
  std::vector<int> coroot;  ///< coefficients of the coroot on the simple coroots
  int height = 0;
  std::size_t component = 0;
};

/// Set of marked nodes (global, 0-based) defining the parabolic P_J.
class ParabolicMarking {
 public:
  ParabolicMarking() = default;
  explicit ParabolicMarking(std::vector<std::size_t> nodes);

  const std::vector<std::size_t>& nodes() const { return m_nodes; }
  bool contains(std::size_t node) const;
  bool empty() const { return m_nodes.empty(); }
  std::size_t size() const { return m_nodes.size(); }
  /// "{1,3}" with 1-based labels.
  std::string to_string() const;

  friend bool operator==(const ParabolicMarking&, const ParabolicMarking&) = default;

 private:
  std::vector<std::size_t> m_nodes;
};

/// Root system of a semisimple Lie algebra given as an ordered product of
/// simple factors. Node indices are global: component c occupies
/// [offset(c), offset(c) + rank_c). Cartan entries follow Bourbaki,
/// cartan(i, j) = <alpha_i, alpha_j^vee>, so row i lists the fundamental-weight
/// coordinates of alpha_i.
///
/// Immutable after construction.
class RootDatum {
 public:
  explicit RootDatum(std::vector<SimpleLieType> components);

  std::size_t rank() const { return m_rank; }
  const std::vector<SimpleLieType>& components() const { return m_components; }
  std::size_t component_offset(std::size_t component) const { return m_offsets[component]; }
  std::size_t component_of(std::size_t node) const { return m_node_component[node]; }
  /// "A1xA1xA1"
  std::string to_string() const;

  int cartan(std::size_t i, std::size_t j) const { return m_cartan[i * m_rank + j]; }
  const Rational& inverse_cartan(std::size_t i, std::size_t j) const { return m_inverse[i * m_rank + j]; }
  /// (alpha_i, alpha_i) / 2, normalised so the short roots of each component give 1.
  int symmetrizer(std::size_t node) const { return m_symmetrizer[node]; }

  /// Fundamental-weight coordinates of alpha_i.
  const Weight& simple_root(std::size_t node) const { return m_simple_roots[node]; }
  /// Ordered by height, then lexicographically on simple coordinates.
  const std::vector<PositiveRoot>& positive_roots() const { return m_positive; }
  /// Index into positive_roots(), looked up by simple-root coordinates.
  std::optional<std::size_t> find_positive_root(const std::vector<int>& simple) const;
  /// Weight with every fundamental coordinate equal to 1.
  const Weight& rho() const { return m_rho; }
  Weight zero() const { return Weight(m_rank); }

  /// <mu, alpha^vee> for a positive root.
  std::int64_t pairing(const Weight& mu, const PositiveRoot& root) const;
  /// Invariant form normalised so short roots have squared length 2.
  Rational inner_product(const Weight& a, const Weight& b) const;
  /// inner_product scaled by gram_scale(); always an integer.
  std::int64_t scaled_inner_product(const Weight& a, const Weight& b) const;
  std::int64_t gram_scale() const { return m_gram_scale; }

  /// Coefficient of alpha_node when mu is written in the simple-root basis.
  /// This is the grading element U_node evaluated on mu.
  Rational simple_root_coordinate(const Weight& mu, std::size_t node) const;
  /// Simple-root coordinates of mu.
  std::vector<Rational> to_simple_coordinates(const Weight& mu) const;
  /// Weight from simple-root coordinates.
  Weight from_simple_coordinates(const std::vector<int>& simple) const;

  /// Node permutation realising -w0.
  std::size_t dual_node(std::size_t node) const { return m_dual_node[node]; }

  void check_node(std::size_t node) const;
  void check_weight(const Weight& mu) const;
  void check_marking(const ParabolicMarking& marking) const;

 private:
  void build_cartan();
  void build_inverse();
  void build_symmetrizer();
  void build_positive_roots();
  void build_dual_nodes();

  std::vector<SimpleLieType> m_components;
  std::vector<std::size_t> m_offsets;
  std::vector<std::size_t> m_node_component;
  std::size_t m_rank = 0;
  std::vector<int> m_cartan;
  std::vector<Rational> m_inverse;
  std::vector<int> m_symmetrizer;
  std::vector<std::int64_t> m_gram;  // scaled (omega_i, omega_j)
  std::int64_t m_gram_scale = 1;
  std::vector<Weight> m_simple_roots;
  std::vector<PositiveRoot> m_positive;
  std::unordered_map<Weight, std::size_t, WeightHash> m_root_index;  // keyed by omega coords
  std::vector<std::size_t> m_dual_node;
  Weight m_rho;
};

/// Linear over the lattice; equals inverse_cartan(j, i0) on omega_j.
Rational grading_element_eval(const RootDatum& datum, std::size_t i0, const Weight& mu);

/// -w0(mu) for dominant mu. Throws DomainError for non-dominant input.
Weight dual_weight(const RootDatum& datum, const Weight& mu);

} // namespace tanvar
