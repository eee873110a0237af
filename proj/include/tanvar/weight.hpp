#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tanvar {

/// Integral weight in the fundamental-weight basis. For a composite group the
/// coordinates of all simple components are concatenated in component order.
class Weight {
 public:
  using value_type = std::int64_t;

  Weight() = default;
  explicit Weight(std::size_t rank) : m_coords(rank, 0) {}
  Weight(std::initializer_list<value_type> coords) : m_coords(coords) {}
  explicit Weight(std::vector<value_type> coords) : m_coords(std::move(coords)) {}

  std::size_t size() const { return m_coords.size(); }
  value_type operator[](std::size_t i) const { return m_coords[i]; }
  value_type& operator[](std::size_t i) { return m_coords[i]; }
  std::span<const value_type> coords() const { return m_coords; }

  bool is_zero() const;
  /// All coordinates non-negative.
  bool is_dominant() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(value_type factor);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(value_type k, Weight a) { return a *= k; }
  friend Weight operator-(Weight a) { return a *= -1; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// "[a,b,c]"
  std::string to_string() const;

 private:
  std::vector<value_type> m_coords;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

} // namespace tanvar
