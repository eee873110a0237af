#include "tanvar/bbw.hpp"
#include "tanvar/errors.hpp"
#include "tanvar/weyl.hpp"

namespace tanvar {

bool is_levi_dominant(const RootDatum& datum, const ParabolicMarking& marking, const Weight& mu)
{
  datum.check_weight(mu);
  for (std::size_t i = 0; i < datum.rank(); ++i)
    if (!marking.contains(i) && mu[i] < 0) return false;
  return true;
}

CohomologyResult cohomology(const RootDatum& datum, const ParabolicMarking& marking, const Weight& mu)
{
  datum.check_marking(marking);
  if (!is_levi_dominant(datum, marking, mu))
    throw DomainError("weight " + mu.to_string() + " is not dominant for the Levi of P" + marking.to_string());
  const auto r = make_dominant_dot(datum, mu);
  if (r.singular) return CohomologyResult::make_vanishing();
  return CohomologyResult::make_module(r.length, r.dominant);
}

CohomologyResult segre_line_cohomology(std::size_t m, const std::vector<std::int64_t>& degrees)
{
  if (m < 1) throw DomainError("need at least one factor");
  if (degrees.size() != m)
    throw DomainError("expected " + std::to_string(m) + " degrees, got " + std::to_string(degrees.size()));
  Weight weight(m);
  std::size_t shift = 0;
  for (std::size_t s = 0; s < m; ++s) {
    const auto k = degrees[s];
    if (k == -1) return CohomologyResult::make_vanishing();
    if (k >= 0) {
      weight[s] = k;
    } else {
      weight[s] = -k - 2;
      ++shift;
    }
  }
  return CohomologyResult::make_module(shift, weight);
}

} // namespace tanvar
