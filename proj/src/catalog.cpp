#include "tanvar/catalog.hpp"
#include "tanvar/errors.hpp"
#include "tanvar/grammar.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace tanvar {

extern const char* const kBuiltinCatalog;

namespace {

struct Scope {
  long long n = 0;
  long long k = 0;
  long long j = 0;
};

// Recursive-descent evaluator for the small integer language of the catalog.
class Expr {
 public:
  Expr(std::string_view text, const Scope& scope) : m_text(text), m_scope(scope) {}

  long long evaluate()
  {
    const auto v = sum();
    skip();
    if (m_pos != m_text.size()) fail("unexpected character");
    return v;
  }

  // lambda := lterm (('+'|'-') lterm)*
  Weight weight(std::size_t rank)
  {
    Weight w = lambda_term(rank);
    while (true) {
      skip();
      if (accept('+'))
        w += lambda_term(rank);
      else if (accept('-'))
        w -= lambda_term(rank);
      else
        break;
    }
    skip();
    if (m_pos != m_text.size()) fail("unexpected character");
    return w;
  }

 private:
  void skip()
  {
    while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) ++m_pos;
  }

  bool accept(char c)
  {
    skip();
    if (m_pos < m_text.size() && m_text[m_pos] == c) {
      ++m_pos;
      return true;
    }
    return false;
  }

  void expect(char c)
  {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(std::string(m_text), m_pos, what); }

  std::string identifier()
  {
    skip();
    std::string id;
    while (m_pos < m_text.size() && std::isalpha(static_cast<unsigned char>(m_text[m_pos]))) id += m_text[m_pos++];
    return id;
  }

  bool peek_identifier(const std::string& id)
  {
    skip();
    return m_text.substr(m_pos, id.size()) == id;
  }

  long long sum()
  {
    auto v = product();
    while (true) {
      if (accept('+'))
        v += product();
      else if (accept('-'))
        v -= product();
      else
        return v;
    }
  }

  long long product()
  {
    auto v = unary();
    while (true) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const auto d = unary();
        if (d == 0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  long long unary()
  {
    if (accept('-')) return -unary();
    return atom();
  }

  long long atom()
  {
    skip();
    if (accept('(')) {
      const auto v = sum();
      expect(')');
      return v;
    }
    if (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) return integer();
    const auto id = identifier();
    if (id == "n") return m_scope.n;
    if (id == "k") return m_scope.k;
    if (id == "j") return m_scope.j;
    if (id == "min" || id == "max") {
      expect('(');
      const auto a = sum();
      expect(',');
      const auto b = sum();
      expect(')');
      return id == "min" ? std::min(a, b) : std::max(a, b);
    }
    fail(id.empty() ? "expected an expression" : "unknown name '" + id + "'");
  }

  long long integer()
  {
    long long v = 0;
    while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
      v = v * 10 + (m_text[m_pos++] - '0');
      if (v > 1'000'000'000) fail("integer too large");
    }
    return v;
  }

  Weight lambda_term(std::size_t rank)
  {
    long long coefficient = 1;
    skip();
    if (!peek_identifier("w")) {
      coefficient = integer_or_fail();
      if (!accept('*')) {
        if (coefficient != 0) fail("a bare constant must be 0");
        return Weight(rank);
      }
    }
    if (identifier() != "w") fail("expected w(...)");
    expect('(');
    const auto index = sum();
    expect(')');
    Weight w(rank);
    if (index >= 1 && static_cast<std::size_t>(index) <= rank) w[static_cast<std::size_t>(index - 1)] = coefficient;
    return w;
  }

  long long integer_or_fail()
  {
    skip();
    if (m_pos >= m_text.size() || !std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) fail("expected w(...) or 0");
    return integer();
  }

  std::string_view m_text;
  std::size_t m_pos = 0;
  Scope m_scope;
};

std::string trim(std::string_view s)
{
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep)
{
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool node_matches(const std::vector<std::string>& nodes, const Scope& scope)
{
  for (const auto& item : nodes) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      if (Expr(item, scope).evaluate() == scope.k) return true;
    } else {
      const auto lo = Expr(item.substr(0, dots), scope).evaluate();
      const auto hi = Expr(item.substr(dots + 2), scope).evaluate();
      if (scope.k >= lo && scope.k <= hi) return true;
    }
  }
  return false;
}

} // namespace

std::string CominusculeDatum::to_string() const { return type.to_string() + "/P" + std::to_string(i0 + 1); }

Catalog Catalog::parse(std::string_view text)
{
  Catalog catalog;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto fields = split(line, '|');
    auto fail = [&](const std::string& what) -> void {
      throw ParseError("catalog line " + std::to_string(number), static_cast<std::size_t>(number - 1), what);
    };
    if (fields.size() != 5) fail("expected 5 '|'-separated fields");
    Rule rule;
    rule.line = number;
    if (fields[0].size() != 1 || fields[0][0] < 'A' || fields[0][0] > 'G') fail("bad family '" + fields[0] + "'");
    rule.family = static_cast<Family>(fields[0][0]);
    const auto dots = fields[1].find("..");
    try {
      if (dots == std::string::npos) {
        rule.rank_min = rule.rank_max = std::stoi(fields[1]);
      } else {
        rule.rank_min = std::stoi(fields[1].substr(0, dots));
        const auto hi = trim(fields[1].substr(dots + 2));
        rule.rank_max = hi.empty() ? 0 : std::stoi(hi);
      }
    } catch (const std::logic_error&) {
      fail("bad rank range '" + fields[1] + "'");
    }
    rule.nodes = split(fields[2], ',');
    rule.r = fields[3];
    rule.lambda = split(fields[4], ';');
    // syntax check against a representative scope
    const Scope probe{std::max(rule.rank_min, 8), 1, 1};
    try {
      for (const auto& node : rule.nodes) {
        const auto d = node.find("..");
        if (d == std::string::npos) {
          Expr(node, probe).evaluate();
        } else {
          Expr(node.substr(0, d), probe).evaluate();
          Expr(node.substr(d + 2), probe).evaluate();
        }
      }
      Expr(rule.r, probe).evaluate();
      for (const auto& l : rule.lambda) Expr(l, probe).weight(static_cast<std::size_t>(probe.n));
    } catch (const ParseError& e) {
      fail(e.what());
    }
    catalog.m_rules.push_back(std::move(rule));
  }
  return catalog;
}

Catalog Catalog::from_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open catalog file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

const Catalog& Catalog::builtin()
{
  static const Catalog instance = parse(kBuiltinCatalog);
  return instance;
}

std::optional<CominusculeDatum> Catalog::evaluate(const SimpleLieType& type, std::size_t node) const
{
  type.validate();
  for (const auto& rule : m_rules) {
    if (rule.family != type.family || type.rank < rule.rank_min) continue;
    if (rule.rank_max != 0 && type.rank > rule.rank_max) continue;
    Scope scope{type.rank, static_cast<long long>(node) + 1, 0};
    if (!node_matches(rule.nodes, scope)) continue;

    CominusculeDatum datum;
    datum.type = type;
    datum.i0 = node;
    const auto r = Expr(rule.r, scope).evaluate();
    if (r < 1) throw ConsistencyError("catalog line " + std::to_string(rule.line) + " gives rank " + std::to_string(r));
    datum.r = static_cast<int>(r);
    const auto n = static_cast<std::size_t>(type.rank);
    if (rule.lambda.size() == 1) {
      for (long long j = 1; j <= r; ++j) {
        scope.j = j;
        datum.lambdas.push_back(Expr(rule.lambda.front(), scope).weight(n));
      }
    } else {
      if (static_cast<long long>(rule.lambda.size()) != r)
        throw ConsistencyError("catalog line " + std::to_string(rule.line) + " lists " +
                               std::to_string(rule.lambda.size()) + " weights for rank " + std::to_string(r));
      for (std::size_t j = 0; j < rule.lambda.size(); ++j) {
        scope.j = static_cast<long long>(j + 1);
        datum.lambdas.push_back(Expr(rule.lambda[j], scope).weight(n));
      }
    }
    for (std::size_t j = 0; j < datum.lambdas.size(); ++j) {
      Weight mu = datum.lambdas[j];
      mu[node] += static_cast<Weight::value_type>(j + 1) - 2;
      datum.mus.push_back(std::move(mu));
    }
    return datum;
  }
  return std::nullopt;
}

CominusculeDatum Catalog::lookup(const SimpleLieType& type, std::size_t node) const
{
  if (node >= static_cast<std::size_t>(type.rank))
    throw DomainError("node " + std::to_string(node + 1) + " out of range for " + type.to_string());
  auto datum = evaluate(type, node);
  if (!datum) throw DomainError(type.to_string() + "/P" + std::to_string(node + 1) + " is not cominuscule");
  if (auto problem = validate_cominuscule(*datum)) throw ConsistencyError(datum->to_string() + ": " + *problem);
  return *datum;
}

std::optional<std::string> validate_cominuscule(const CominusculeDatum& datum)
{
  const RootDatum root({datum.type});
  const auto i0 = datum.i0;
  if (datum.lambdas.size() != static_cast<std::size_t>(datum.r)) return "wrong number of weights";
  Weight expected = Weight(root.rank());
  expected[i0] = 2;
  expected -= root.simple_root(i0);
  if (datum.lambdas.front() != expected)
    return "lambda_1 = " + datum.lambdas.front().to_string() + " differs from 2 omega_i0 - alpha_i0 = " +
           expected.to_string();
  Weight mu1 = Weight(root.rank());
  mu1[i0] = 1;
  mu1 -= root.simple_root(i0);
  if (datum.mus.front() != mu1) return "mu_1 differs from omega_i0 - alpha_i0";
  const Rational top = 2 * root.inverse_cartan(i0, i0);
  for (std::size_t j = 0; j < datum.lambdas.size(); ++j) {
    const auto& lambda = datum.lambdas[j];
    if (!lambda.is_dominant()) return "lambda_" + std::to_string(j + 1) + " is not dominant";
    const Rational u = grading_element_eval(root, i0, lambda);
    if (u != top - static_cast<long>(j + 1))
      return "U(lambda_" + std::to_string(j + 1) + ") = " + to_string(u) + ", expected " +
             to_string(top - static_cast<long>(j + 1));
    if (j >= 1 && lambda[i0] != 0) return "lambda_" + std::to_string(j + 1) + " has a nonzero omega_i0-coordinate";
    Weight mu = lambda;
    mu[i0] += static_cast<Weight::value_type>(j + 1) - 2;
    if (datum.mus[j] != mu) return "mu_" + std::to_string(j + 1) + " is inconsistent with lambda";
  }
  return std::nullopt;
}

CominusculeDatum catalog_lookup(std::string_view text)
{
  const auto spec = parse_parabolic_spec(text);
  if (spec.types.size() != 1 || spec.marking->size() != 1)
    throw DomainError("catalog lookup needs one simple factor with one marked node, got '" + std::string(text) + "'");
  return Catalog::builtin().lookup(spec.types.front(), spec.marking->nodes().front());
}

std::vector<std::pair<SimpleLieType, std::size_t>> catalog_battery()
{
  std::vector<std::pair<SimpleLieType, std::size_t>> out;
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k < n; ++k) out.push_back({{Family::A, n}, static_cast<std::size_t>(k)});
  for (int n = 2; n <= 8; ++n) out.push_back({{Family::C, n}, static_cast<std::size_t>(n - 1)});
  for (int n = 3; n <= 10; ++n) {
    out.push_back({{Family::D, n}, static_cast<std::size_t>(n - 2)});
    out.push_back({{Family::D, n}, static_cast<std::size_t>(n - 1)});
  }
  for (int n = 2; n <= 10; ++n) out.push_back({{Family::B, n}, 0});
  for (int n = 3; n <= 10; ++n) out.push_back({{Family::D, n}, 0});
  out.push_back({{Family::E, 6}, 0});
  out.push_back({{Family::E, 6}, 5});
  out.push_back({{Family::E, 7}, 6});
  return out;
}

} // namespace tanvar
