#include "tanvar/rootdata.hpp"
#include "tanvar/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace tanvar {

namespace {

// Bourbaki Cartan matrix of a simple type, a[i][j] = <alpha_i, alpha_j^vee>.
std::vector<std::vector<int>> simple_cartan(const SimpleLieType& type)
{
  const int n = type.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&a](int i, int j) {  // 1-based simple bond
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (type.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Family::E:
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      a[1][2] = -2;
      break;
    case Family::G:
      bond(1, 2);
      a[1][0] = -3;
      break;
  }
  return a;
}

// -w0 as a permutation of the nodes of a simple type (0-based, local).
std::vector<std::size_t> simple_dual_nodes(const SimpleLieType& type)
{
  const auto n = static_cast<std::size_t>(type.rank);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  switch (type.family) {
    case Family::A:
      for (std::size_t i = 0; i < n; ++i) perm[i] = n - 1 - i;
      break;
    case Family::D:
      if (n % 2 == 1) std::swap(perm[n - 2], perm[n - 1]);
      break;
    case Family::E:
      if (n == 6) {
        std::swap(perm[0], perm[5]);
        std::swap(perm[2], perm[4]);
      }
      break;
    default:
      break;
  }
  return perm;
}

} // namespace

void SimpleLieType::validate() const
{
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) throw DomainError("invalid rank " + std::to_string(rank) + " for family " + std::string(1, static_cast<char>(family)));
}

std::string SimpleLieType::to_string() const
{
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

ParabolicMarking::ParabolicMarking(std::vector<std::size_t> nodes) : m_nodes(std::move(nodes))
{
  std::sort(m_nodes.begin(), m_nodes.end());
  m_nodes.erase(std::unique(m_nodes.begin(), m_nodes.end()), m_nodes.end());
}

bool ParabolicMarking::contains(std::size_t node) const
{
  return std::binary_search(m_nodes.begin(), m_nodes.end(), node);
}

std::string ParabolicMarking::to_string() const
{
  std::string out = "{";
  for (std::size_t i = 0; i < m_nodes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(m_nodes[i] + 1);
  }
  return out + "}";
}

RootDatum::RootDatum(std::vector<SimpleLieType> components) : m_components(std::move(components))
{
  if (m_components.empty()) throw DomainError("empty list of simple types");
  for (std::size_t c = 0; c < m_components.size(); ++c) {
    m_components[c].validate();
    m_offsets.push_back(m_rank);
    for (int i = 0; i < m_components[c].rank; ++i) m_node_component.push_back(c);
    m_rank += static_cast<std::size_t>(m_components[c].rank);
  }
  build_cartan();
  build_inverse();
  build_symmetrizer();
  build_positive_roots();
  build_dual_nodes();
  m_rho = Weight(std::vector<Weight::value_type>(m_rank, 1));
}

std::string RootDatum::to_string() const
{
  std::string out;
  for (std::size_t c = 0; c < m_components.size(); ++c) {
    if (c) out += "x";
    out += m_components[c].to_string();
  }
  return out;
}

void RootDatum::build_cartan()
{
  m_cartan.assign(m_rank * m_rank, 0);
  for (std::size_t c = 0; c < m_components.size(); ++c) {
    const auto block = simple_cartan(m_components[c]);
    const auto off = m_offsets[c];
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = 0; j < block.size(); ++j) m_cartan[(off + i) * m_rank + off + j] = block[i][j];
  }
  for (std::size_t i = 0; i < m_rank; ++i) {
    Weight row(m_rank);
    for (std::size_t j = 0; j < m_rank; ++j) row[j] = cartan(i, j);
    m_simple_roots.push_back(std::move(row));
  }
}

void RootDatum::build_inverse()
{
  // Gauss-Jordan over the rationals.
  const std::size_t n = m_rank;
  std::vector<Rational> work(n * 2 * n);
  auto at = [&work, n](std::size_t i, std::size_t j) -> Rational& { return work[i * 2 * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = cartan(i, j);
    at(i, n + i) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (at(pivot, col) == 0) ++pivot;
    if (pivot != col)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(pivot, j), at(col, j));
    const Rational inv = 1 / at(col, col);
    for (std::size_t j = 0; j < 2 * n; ++j) at(col, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || at(i, col) == 0) continue;
      const Rational factor = at(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= factor * at(col, j);
    }
  }
  m_inverse.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m_inverse[i * n + j] = at(i, n + j);
}

void RootDatum::build_symmetrizer()
{
  // d_i cartan(j, i) = d_j cartan(i, j); propagate along the diagram.
  std::vector<Rational> d(m_rank, 0);
  for (std::size_t c = 0; c < m_components.size(); ++c) {
    const auto off = m_offsets[c];
    const auto len = static_cast<std::size_t>(m_components[c].rank);
    d[off] = 1;
    std::deque<std::size_t> queue{off};
    while (!queue.empty()) {
      const auto i = queue.front();
      queue.pop_front();
      for (std::size_t j = off; j < off + len; ++j) {
        if (j == i || cartan(i, j) == 0 || d[j] != 0) continue;
        d[j] = d[i] * cartan(j, i) / cartan(i, j);
        queue.push_back(j);
      }
    }
    Rational smallest = d[off];
    for (std::size_t j = off; j < off + len; ++j) smallest = std::min(smallest, d[j]);
    for (std::size_t j = off; j < off + len; ++j) d[j] /= smallest;
  }
  for (const auto& v : d) {
    if (boost::multiprecision::denominator(v) != 1) throw ConsistencyError("non-integral symmetrizer");
    m_symmetrizer.push_back(static_cast<int>(boost::multiprecision::numerator(v)));
  }

  // (omega_i, omega_j) = inverse(j, i) * d_i, scaled to integers.
  std::vector<Rational> gram(m_rank * m_rank);
  BigInt lcm = 1;
  for (std::size_t i = 0; i < m_rank; ++i)
    for (std::size_t j = 0; j < m_rank; ++j) {
      gram[i * m_rank + j] = inverse_cartan(j, i) * m_symmetrizer[i];
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(gram[i * m_rank + j]));
    }
  m_gram_scale = static_cast<std::int64_t>(lcm);
  m_gram.resize(m_rank * m_rank);
  for (std::size_t k = 0; k < gram.size(); ++k) {
    const Rational scaled = gram[k] * m_gram_scale;
    m_gram[k] = static_cast<std::int64_t>(boost::multiprecision::numerator(scaled));
  }
}

void RootDatum::build_positive_roots()
{
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> frontier;
  for (std::size_t i = 0; i < m_rank; ++i) {
    std::vector<int> s(m_rank, 0);
    s[i] = 1;
    known.insert(s);
    frontier.push_back(s);
  }
  std::vector<std::vector<int>> all = frontier;
  auto omega_coord = [this](const std::vector<int>& s, std::size_t i) {
    int v = 0;
    for (std::size_t j = 0; j < m_rank; ++j) v += s[j] * cartan(j, i);
    return v;
  };
  // Root strings: beta + alpha_i is a root iff q = p - <beta, alpha_i^vee> > 0.
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      const auto first = static_cast<std::size_t>(std::find_if(beta.begin(), beta.end(), [](int x) { return x != 0; }) - beta.begin());
      const auto component = m_node_component[first];
      for (std::size_t i = 0; i < m_rank; ++i) {
        if (m_node_component[i] != component) continue;
        int p = 0;
        auto down = beta;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        const int q = p - omega_coord(beta, i);
        if (q <= 0) continue;
        auto up = beta;
        up[i] += 1;
        if (known.insert(up).second) {
          next.push_back(up);
          all.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }

  for (const auto& s : all) {
    PositiveRoot root;
    root.simple = s;
    root.height = std::accumulate(s.begin(), s.end(), 0);
    root.omega = from_simple_coordinates(s);
    for (std::size_t i = 0; i < m_rank; ++i)
      if (s[i] != 0) {
        root.component = m_node_component[i];
        break;
      }
    // coroot coefficient on alpha_i^vee is c_i d_i / d_alpha
    std::int64_t norm2 = 0;  // (alpha, alpha) in units where d_i = (alpha_i, alpha_i)/2
    for (std::size_t i = 0; i < m_rank; ++i)
      for (std::size_t j = 0; j < m_rank; ++j)
        norm2 += static_cast<std::int64_t>(s[i]) * s[j] * m_symmetrizer[i] * cartan(j, i);
    const std::int64_t d_alpha = norm2 / 2;
    root.coroot.resize(m_rank);
    for (std::size_t i = 0; i < m_rank; ++i) {
      const std::int64_t num = static_cast<std::int64_t>(s[i]) * m_symmetrizer[i];
      if (num % d_alpha != 0) throw ConsistencyError("non-integral coroot");
      root.coroot[i] = static_cast<int>(num / d_alpha);
    }
    m_positive.push_back(std::move(root));
  }
  std::sort(m_positive.begin(), m_positive.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.simple < b.simple;
  });
  for (std::size_t k = 0; k < m_positive.size(); ++k) m_root_index.emplace(m_positive[k].omega, k);
}

void RootDatum::build_dual_nodes()
{
  m_dual_node.resize(m_rank);
  for (std::size_t c = 0; c < m_components.size(); ++c) {
    const auto perm = simple_dual_nodes(m_components[c]);
    for (std::size_t i = 0; i < perm.size(); ++i) m_dual_node[m_offsets[c] + i] = m_offsets[c] + perm[i];
  }
}

std::optional<std::size_t> RootDatum::find_positive_root(const std::vector<int>& simple) const
{
  if (simple.size() != m_rank) return std::nullopt;
  auto it = m_root_index.find(from_simple_coordinates(simple));
  if (it == m_root_index.end()) return std::nullopt;
  return it->second;
}

std::int64_t RootDatum::pairing(const Weight& mu, const PositiveRoot& root) const
{
  std::int64_t v = 0;
  for (std::size_t i = 0; i < m_rank; ++i) v += mu[i] * root.coroot[i];
  return v;
}

std::int64_t RootDatum::scaled_inner_product(const Weight& a, const Weight& b) const
{
  std::int64_t v = 0;
  for (std::size_t i = 0; i < m_rank; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m_rank; ++j) v += a[i] * m_gram[i * m_rank + j] * b[j];
  }
  return v;
}

Rational RootDatum::inner_product(const Weight& a, const Weight& b) const
{
  return Rational(scaled_inner_product(a, b)) / m_gram_scale;
}

Rational RootDatum::simple_root_coordinate(const Weight& mu, std::size_t node) const
{
  check_node(node);
  check_weight(mu);
  Rational v = 0;
  for (std::size_t j = 0; j < m_rank; ++j)
    if (mu[j] != 0) v += inverse_cartan(j, node) * mu[j];
  return v;
}

std::vector<Rational> RootDatum::to_simple_coordinates(const Weight& mu) const
{
  std::vector<Rational> out(m_rank);
  for (std::size_t k = 0; k < m_rank; ++k) out[k] = simple_root_coordinate(mu, k);
  return out;
}

Weight RootDatum::from_simple_coordinates(const std::vector<int>& simple) const
{
  Weight w(m_rank);
  for (std::size_t j = 0; j < m_rank; ++j)
    if (simple[j] != 0) w += static_cast<Weight::value_type>(simple[j]) * m_simple_roots[j];
  return w;
}

void RootDatum::check_node(std::size_t node) const
{
  if (node >= m_rank)
    throw DomainError("node " + std::to_string(node + 1) + " out of range for " + to_string());
}

void RootDatum::check_weight(const Weight& mu) const
{
  if (mu.size() != m_rank)
    throw DomainError("weight " + mu.to_string() + " has " + std::to_string(mu.size()) + " coordinates, " +
                      to_string() + " needs " + std::to_string(m_rank));
}

void RootDatum::check_marking(const ParabolicMarking& marking) const
{
  if (marking.empty()) throw DomainError("parabolic marking must be non-empty");
  for (auto node : marking.nodes()) check_node(node);
}

Rational grading_element_eval(const RootDatum& datum, std::size_t i0, const Weight& mu)
{
  return datum.simple_root_coordinate(mu, i0);
}

Weight dual_weight(const RootDatum& datum, const Weight& mu)
{
  datum.check_weight(mu);
  if (!mu.is_dominant()) throw DomainError("dual_weight expects a dominant weight, got " + mu.to_string());
  Weight out(datum.rank());
  for (std::size_t i = 0; i < datum.rank(); ++i) out[datum.dual_node(i)] = mu[i];
  return out;
}

} // namespace tanvar
