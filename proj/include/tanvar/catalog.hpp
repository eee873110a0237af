#pragma once

#include "tanvar/rootdata.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tanvar {

/// One cominuscule pair G/P_i0 with its covariant weights.
struct CominusculeDatum {
  SimpleLieType type;
  std::size_t i0 = 0;          ///< 0-based marked node
  int r = 0;                   ///< rank of the symmetric space
  std::vector<Weight> lambdas;  ///< lambda_1 .. lambda_r
  std::vector<Weight> mus;      ///< mu_j = lambda_j + (j - 2) omega_i0

  /// "C3/P3"
  std::string to_string() const;
};

/// Parsed catalog of lambda rules. The built-in instance is compiled from
/// data/cominuscule.catalog.
class Catalog {
 public:
  struct Rule {
    Family family;
    int rank_min = 0;
    int rank_max = 0;  ///< 0 means unbounded
    std::vector<std::string> nodes;
    std::string r;
    std::vector<std::string> lambda;  ///< one j-rule or r explicit entries
    int line = 0;
  };

  /// Throws ParseError on malformed records (position is the line number).
  static Catalog parse(std::string_view text);
  static Catalog from_file(const std::string& path);
  static const Catalog& builtin();

  const std::vector<Rule>& rules() const { return m_rules; }

  /// Evaluates the first matching rule without validating it.
  std::optional<CominusculeDatum> evaluate(const SimpleLieType& type, std::size_t node) const;

  /// evaluate() followed by validate_cominuscule(); throws DomainError
  /// ("not cominuscule") when no rule matches and ConsistencyError when the
  /// record fails validation.
  CominusculeDatum lookup(const SimpleLieType& type, std::size_t node) const;

 private:
  std::vector<Rule> m_rules;
};

/// Checks lambda_1 = 2 omega_i0 - alpha_i0, U_i0(lambda_j) = 2 (C^-1)_{i0,i0} - j,
/// and that lambda_j (j >= 2) has zero omega_i0-coordinate. Returns a
/// description of the first failure.
std::optional<std::string> validate_cominuscule(const CominusculeDatum& datum);

/// Built-in lookup from a group string with a single simple factor and a
/// single marked node, e.g. "A5/P3".
CominusculeDatum catalog_lookup(std::string_view spec);

/// Every entry covered by the validation battery: A_n (n <= 12, all k),
/// C_n (n <= 8), spinor D_n (n <= 10), quadrics B_n / D_n (n <= 10), E6, E7.
std::vector<std::pair<SimpleLieType, std::size_t>> catalog_battery();

} // namespace tanvar
