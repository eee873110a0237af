#include "tanvar/weyl.hpp"

#include <algorithm>

namespace tanvar {

Weight reflect(const RootDatum& datum, std::size_t node, const Weight& mu)
{
  datum.check_node(node);
  datum.check_weight(mu);
  return mu - mu[node] * datum.simple_root(node);
}

Weight dot_reflect(const RootDatum& datum, std::size_t node, const Weight& mu)
{
  datum.check_node(node);
  datum.check_weight(mu);
  return mu - (mu[node] + 1) * datum.simple_root(node);
}

DotResult make_dominant_dot(const RootDatum& datum, const Weight& mu)
{
  datum.check_weight(mu);
  Weight shifted = mu + datum.rho();
  std::size_t length = 0;
  while (true) {
    const auto coords = shifted.coords();
    if (std::any_of(coords.begin(), coords.end(), [](auto c) { return c == 0; })) return DotResult::make_singular();
    const auto it = std::find_if(coords.begin(), coords.end(), [](auto c) { return c < 0; });
    if (it == coords.end()) break;
    const auto node = static_cast<std::size_t>(it - coords.begin());
    shifted -= shifted[node] * datum.simple_root(node);
    ++length;
  }
  return DotResult{false, length, shifted - datum.rho()};
}

std::pair<Weight, std::size_t> make_dominant(const RootDatum& datum, const Weight& mu)
{
  datum.check_weight(mu);
  Weight current = mu;
  std::size_t length = 0;
  while (true) {
    const auto coords = current.coords();
    const auto it = std::find_if(coords.begin(), coords.end(), [](auto c) { return c < 0; });
    if (it == coords.end()) return {current, length};
    const auto node = static_cast<std::size_t>(it - coords.begin());
    current -= current[node] * datum.simple_root(node);
    ++length;
  }
}

bool is_rho_singular(const RootDatum& datum, const Weight& mu)
{
  datum.check_weight(mu);
  const Weight shifted = mu + datum.rho();
  for (const auto& root : datum.positive_roots())
    if (datum.pairing(shifted, root) == 0) return true;
  return false;
}

} // namespace tanvar
