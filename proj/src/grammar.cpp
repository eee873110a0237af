#include "tanvar/grammar.hpp"
#include "tanvar/errors.hpp"

#include <cctype>
#include <limits>

namespace tanvar {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : m_text(text) {}

  bool done() const { return m_pos >= m_text.size(); }
  char peek() const { return done() ? '\0' : m_text[m_pos]; }
  std::size_t pos() const { return m_pos; }
  void advance() { ++m_pos; }

  bool accept(char c)
  {
    if (peek() != c) return false;
    ++m_pos;
    return true;
  }

  void expect(char c)
  {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long long number()
  {
    const auto start = m_pos;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++m_pos;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      m_pos = start;
      fail("expected a number");
    }
    long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (value > (std::numeric_limits<long long>::max() - 9) / 10) fail("number too large");
      value = value * 10 + (peek() - '0');
      ++m_pos;
    }
    return negative ? -value : value;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(std::string(m_text), m_pos, what); }

 private:
  std::string_view m_text;
  std::size_t m_pos = 0;
};

SimpleLieType parse_simple(Cursor& in)
{
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(in.peek())));
  if (c < 'A' || c > 'G') in.fail("expected a family letter A-G");
  in.advance();
  if (!std::isdigit(static_cast<unsigned char>(in.peek()))) in.fail("expected a rank");
  const auto rank = in.number();
  if (rank > 1000) in.fail("rank too large");
  SimpleLieType type{static_cast<Family>(c), static_cast<int>(rank)};
  type.validate();
  return type;
}

std::size_t parse_node(Cursor& in, std::size_t total_rank)
{
  const auto at = in.pos();
  const auto node = in.number();
  if (node < 1 || static_cast<std::size_t>(node) > total_rank)
    throw DomainError("node " + std::to_string(node) + " at position " + std::to_string(at + 1) +
                      " out of range 1.." + std::to_string(total_rank));
  return static_cast<std::size_t>(node - 1);
}

} // namespace

std::string GroupSpec::to_string() const
{
  std::string out;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i) out += "x";
    out += types[i].to_string();
  }
  if (marking) {
    out += "/P";
    if (marking->size() == 1)
      out += std::to_string(marking->nodes().front() + 1);
    else
      out += marking->to_string();
  }
  if (multiplicity != 1) out += "@" + std::to_string(multiplicity);
  return out;
}

GroupSpec parse_spec(std::string_view text)
{
  Cursor in(text);
  GroupSpec spec;
  spec.types.push_back(parse_simple(in));
  while (in.accept('x') || in.accept('X')) spec.types.push_back(parse_simple(in));

  std::size_t total = 0;
  for (const auto& t : spec.types) total += static_cast<std::size_t>(t.rank);

  if (in.accept('/')) {
    if (!in.accept('P') && !in.accept('p')) in.fail("expected 'P'");
    std::vector<std::size_t> nodes;
    if (in.accept('{')) {
      nodes.push_back(parse_node(in, total));
      while (in.accept(',')) nodes.push_back(parse_node(in, total));
      in.expect('}');
    } else {
      nodes.push_back(parse_node(in, total));
    }
    spec.marking = ParabolicMarking(std::move(nodes));
  }
  if (in.accept('@')) {
    const auto at = in.pos();
    const auto n = in.number();
    if (n < 1 || n > 1000000) throw ParseError(std::string(text), at, "embedding multiplicity must be positive");
    if (n >= 2 && spec.types.size() > 1)
      throw DomainError("embedding multiplicity @" + std::to_string(n) + " is only supported for a single factor");
    spec.multiplicity = static_cast<int>(n);
  }
  if (!in.done()) in.fail("unexpected character");
  return spec;
}

GroupSpec parse_parabolic_spec(std::string_view text)
{
  auto spec = parse_spec(text);
  if (!spec.marking) throw ParseError(std::string(text), text.size(), "expected a parabolic '/P...'");
  return spec;
}

Weight parse_weight(std::string_view text)
{
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '[' && c != ']') compact += c;
  Cursor in(compact);
  std::vector<Weight::value_type> coords;
  coords.push_back(in.number());
  while (in.accept(',')) coords.push_back(in.number());
  if (!in.done()) in.fail("unexpected character in weight");
  return Weight(std::move(coords));
}

} // namespace tanvar
