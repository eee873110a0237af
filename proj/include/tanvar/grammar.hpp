#pragma once

#include "tanvar/rootdata.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tanvar {

/// Parsed form of `<simple>(x<simple>)*[/P<k>|/P{k1,...}][@N]`.
struct GroupSpec {
  std::vector<SimpleLieType> types;
  std::optional<ParabolicMarking> marking;  ///< global 0-based nodes
  int multiplicity = 1;

  std::string to_string() const;
};

/// Throws ParseError with a 0-based position on malformed text and
/// DomainError on out-of-range ranks or nodes.
GroupSpec parse_spec(std::string_view text);

/// Like parse_spec but rejects a missing parabolic.
GroupSpec parse_parabolic_spec(std::string_view text);

/// Comma-separated integers, e.g. "1,0,-2". Whitespace is ignored.
Weight parse_weight(std::string_view text);

} // namespace tanvar
