#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tanvar {

/// Invalid input or an unsupported request. Maps to CLI exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed group / parabolic / embedding string.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& text, std::size_t position, const std::string& what);

  std::size_t position() const { return m_position; }

 private:
  std::size_t m_position;
};

/// A computation would exceed its configured size guard.
class ResourceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two independent computations disagree (closed form vs character oracle,
/// table vs rank test). Maps to CLI exit code 2.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

} // namespace tanvar
