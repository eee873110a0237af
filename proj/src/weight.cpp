#include "tanvar/weight.hpp"
#include "tanvar/errors.hpp"
#include "tanvar/numeric.hpp"

#include <algorithm>
#include <cassert>

namespace tanvar {

bool Weight::is_zero() const
{
  return std::all_of(m_coords.begin(), m_coords.end(), [](value_type c) { return c == 0; });
}

bool Weight::is_dominant() const
{
  return std::all_of(m_coords.begin(), m_coords.end(), [](value_type c) { return c >= 0; });
}

Weight& Weight::operator+=(const Weight& other)
{
  assert(size() == other.size());
  for (std::size_t i = 0; i < m_coords.size(); ++i) m_coords[i] += other.m_coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other)
{
  assert(size() == other.size());
  for (std::size_t i = 0; i < m_coords.size(); ++i) m_coords[i] -= other.m_coords[i];
  return *this;
}

Weight& Weight::operator*=(value_type factor)
{
  for (auto& c : m_coords) c *= factor;
  return *this;
}

std::string Weight::to_string() const
{
  std::string out = "[";
  for (std::size_t i = 0; i < m_coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(m_coords[i]);
  }
  return out + "]";
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept
{
  // FNV-1a over the coordinates
  std::uint64_t h = 1469598103934665603ULL;
  for (auto c : w.coords()) {
    h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

BigInt binomial(unsigned long n, unsigned long k)
{
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

ParseError::ParseError(const std::string& text, std::size_t position, const std::string& what)
    : DomainError(what + " at position " + std::to_string(position + 1) + " in '" + text + "'"),
      m_position(position)
{
}

} // namespace tanvar
