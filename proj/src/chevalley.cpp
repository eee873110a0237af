#include "tanvar/chevalley.hpp"
#include "tanvar/errors.hpp"

#include <atomic>
#include <functional>
#include <cstdlib>

namespace tanvar {

namespace {

std::uint64_t next_basis_id()
{
  static std::atomic<std::uint64_t> counter{1};
  return counter++;
}

std::vector<int> negated(std::vector<int> v)
{
  for (auto& x : v) x = -x;
  return v;
}

std::vector<int> added(const std::vector<int>& a, const std::vector<int>& b)
{
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

} // namespace

Rational LieElement::coefficient(std::size_t index) const
{
  auto it = m_terms.find(index);
  return it == m_terms.end() ? Rational(0) : it->second;
}

void LieElement::add(std::size_t index, const Rational& coefficient)
{
  if (coefficient == 0) return;
  auto [it, inserted] = m_terms.emplace(index, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) m_terms.erase(it);
}

LieElement& LieElement::operator+=(const LieElement& other)
{
  for (const auto& [k, c] : other.m_terms) add(k, c);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& factor)
{
  if (factor == 0) {
    m_terms.clear();
    return *this;
  }
  for (auto& entry : m_terms) entry.second *= factor;
  return *this;
}

ChevalleyBasis::ChevalleyBasis(RootDatum datum)
    : m_datum(std::move(datum)), m_id(next_basis_id()), m_positive(m_datum.positive_roots().size())
{
  build_roots();
  build_constants();
}

void ChevalleyBasis::build_roots()
{
  const auto& roots = m_datum.positive_roots();
  m_simple.resize(2 * m_positive);
  m_weight.resize(2 * m_positive);
  m_half_norm.resize(2 * m_positive);
  for (std::size_t k = 0; k < m_positive; ++k) {
    m_simple[k] = roots[k].simple;
    m_simple[k + m_positive] = negated(roots[k].simple);
    m_weight[k] = roots[k].omega;
    m_weight[k + m_positive] = -roots[k].omega;
    const Rational norm = m_datum.inner_product(roots[k].omega, roots[k].omega) / 2;
    m_half_norm[k] = m_half_norm[k + m_positive] = static_cast<int>(boost::multiprecision::numerator(norm));
  }
  for (std::size_t k = 0; k < 2 * m_positive; ++k) m_index.emplace(m_simple[k], k);
}

std::optional<std::size_t> ChevalleyBasis::find_root(const std::vector<int>& simple) const
{
  auto it = m_index.find(simple);
  if (it == m_index.end()) return std::nullopt;
  return it->second;
}

std::size_t ChevalleyBasis::negative_of(std::size_t root_index) const
{
  return root_index < m_positive ? root_index + m_positive : root_index - m_positive;
}

void ChevalleyBasis::build_constants()
{
  const std::size_t P = m_positive;
  const std::size_t R = 2 * P;
  m_constants.assign(R * R, 0);
  auto sum_index = [this](std::size_t a, std::size_t b) { return find_root(added(m_simple[a], m_simple[b])); };
  auto p_value = [this](std::size_t a, std::size_t b) {
    // max k with beta - k alpha a root
    int p = 0;
    auto current = m_simple[b];
    while (true) {
      for (std::size_t i = 0; i < current.size(); ++i) current[i] -= m_simple[a][i];
      if (!find_root(current)) break;
      ++p;
    }
    return p;
  };
  auto ratio = [this](std::size_t num, std::size_t den) { return Rational(m_half_norm[num], m_half_norm[den]); };

  std::vector<bool> known(R * R, false);
  auto set = [&](std::size_t a, std::size_t b, const Rational& value) {
    if (boost::multiprecision::denominator(value) != 1) throw ConsistencyError("non-integral structure constant");
    m_constants[a * R + b] = static_cast<int>(boost::multiprecision::numerator(value));
    known[a * R + b] = true;
  };

  // Value of N for a signed pair whose positive-pair ingredients have lower sum height.
  std::function<Rational(std::size_t, std::size_t)> value = [&](std::size_t a, std::size_t b) -> Rational {
    auto s = sum_index(a, b);
    if (!s) return 0;
    if (known[a * R + b]) return m_constants[a * R + b];
    const bool pa = a < P, pb = b < P;
    if (pa && pb) throw ConsistencyError("positive structure constant requested out of order");
    if (!pa && !pb) return -value(negative_of(a), negative_of(b));
    if (!pa && pb) return -value(negative_of(a), negative_of(b));
    // a positive, b negative: beta = -b positive, zeta = a - beta
    const std::size_t beta = negative_of(b);
    const std::size_t zeta = *s;
    if (zeta < P) return -ratio(zeta, a) * value(beta, zeta);  // beta + zeta = a
    const std::size_t zpos = negative_of(zeta);                  // a + zpos = beta
    return ratio(zpos, beta) * value(zpos, a);
  };

  // positive pairs, processed by increasing height of the sum
  const auto& roots = m_datum.positive_roots();
  for (std::size_t xi = 0; xi < P; ++xi) {
    if (roots[xi].height < 2) continue;
    std::optional<std::pair<std::size_t, std::size_t>> extraspecial;
    for (std::size_t alpha = 0; alpha < xi; ++alpha) {
      std::vector<int> rest = m_simple[xi];
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= m_simple[alpha][i];
      auto beta_opt = find_root(rest);
      if (!beta_opt || *beta_opt >= P || *beta_opt <= alpha) continue;
      const std::size_t beta = *beta_opt;
      Rational n;
      if (!extraspecial) {
        extraspecial = {alpha, beta};
        n = p_value(alpha, beta) + 1;
      } else {
        const auto [gamma, delta] = *extraspecial;
        const std::size_t mg = negative_of(gamma), md = negative_of(delta);
        Rational bracket_sum = 0;
        if (auto t = sum_index(beta, mg)) bracket_sum += value(beta, mg) * value(alpha, md) / (2 * m_half_norm[*t]);
        if (auto t = sum_index(mg, alpha)) bracket_sum += value(mg, alpha) * value(beta, md) / (2 * m_half_norm[*t]);
        n = Rational(2 * m_half_norm[xi]) / value(gamma, delta) * bracket_sum;
      }
      set(alpha, beta, n);
      set(beta, alpha, -n);
    }
  }

  for (std::size_t a = 0; a < R; ++a)
    for (std::size_t b = 0; b < R; ++b) {
      if (!sum_index(a, b)) continue;
      if (!known[a * R + b]) set(a, b, value(a, b));
      if (std::abs(m_constants[a * R + b]) != p_value(a, b) + 1)
        throw ConsistencyError("structure constant magnitude mismatch");
    }
}

LieElement ChevalleyBasis::element(std::size_t index) const
{
  if (index >= dimension()) throw DomainError("basis index out of range");
  LieElement e(m_id);
  e.add(index, 1);
  return e;
}

LieElement ChevalleyBasis::bracket_basis(std::size_t a, std::size_t b) const
{
  LieElement out(m_id);
  const std::size_t R = 2 * m_positive;
  const bool ra = a < R, rb = b < R;
  if (!ra && !rb) return out;
  if (!ra || !rb) {
    // [h_i, e_beta] = <beta, alpha_i^vee> e_beta
    const std::size_t node = (ra ? b : a) - R;
    const std::size_t root = ra ? a : b;
    const Rational c = m_weight[root][node];
    out.add(root, ra ? -c : c);
    return out;
  }
  if (negative_of(a) == b) {
    // [e_alpha, e_-alpha] = h_alpha
    const std::size_t pos = a < m_positive ? a : b;
    const int sign = a < m_positive ? 1 : -1;
    const auto& coroot = m_datum.positive_roots()[pos].coroot;
    for (std::size_t i = 0; i < coroot.size(); ++i) out.add(R + i, sign * coroot[i]);
    return out;
  }
  const int n = structure_constant(a, b);
  if (n != 0) out.add(*find_root(added(m_simple[a], m_simple[b])), n);
  return out;
}

LieElement ChevalleyBasis::bracket(const LieElement& x, const LieElement& y) const
{
  if (x.basis_id() != m_id || y.basis_id() != m_id) throw DomainError("Lie elements belong to a different basis");
  LieElement out(m_id);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      auto term = bracket_basis(a, b);
      term *= ca * cb;
      out += term;
    }
  return out;
}

ParabolicSplit parabolic_split(const ChevalleyBasis& basis, const ParabolicMarking& marking)
{
  const auto& datum = basis.datum();
  datum.check_marking(marking);
  ParabolicSplit split;
  for (std::size_t i = 0; i < datum.rank(); ++i) split.b0_indices.push_back(basis.cartan_index(i));
  for (std::size_t k = 0; k < basis.positive_count(); ++k) {
    const auto& simple = datum.positive_roots()[k].simple;
    bool marked = false;
    for (auto node : marking.nodes()) marked = marked || simple[node] != 0;
    (marked ? split.g_minus_indices : split.b0_indices).push_back(basis.negative_of(k));
  }
  for (auto k : split.b0_indices) split.b0.push_back(basis.element(k));
  for (auto k : split.g_minus_indices) split.g_minus.push_back(basis.element(k));
  return split;
}

} // namespace tanvar
