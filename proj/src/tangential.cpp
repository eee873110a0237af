#include "tanvar/tangential.hpp"
#include "tanvar/bbw.hpp"
#include "tanvar/errors.hpp"
#include "tanvar/parallel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace tanvar {

namespace {

std::vector<SimpleLieType> factor_types(const std::vector<CominusculeDatum>& factors)
{
  if (factors.empty()) throw DomainError("an embedding needs at least one factor");
  std::vector<SimpleLieType> types;
  for (const auto& f : factors) types.push_back(f.type);
  return types;
}

// Tuples (a_1..a_r) of non-negative integers with sum_j j a_j <= budget.
void for_each_tuple(int r, unsigned budget, const std::function<void(const std::vector<int>&, unsigned)>& visit)
{
  std::vector<int> a(static_cast<std::size_t>(r), 0);
  std::function<void(int, unsigned)> rec = [&](int j, unsigned used) {
    if (j > r) {
      visit(a, used);
      return;
    }
    for (unsigned k = 0; used + k * static_cast<unsigned>(j) <= budget; ++k) {
      a[static_cast<std::size_t>(j - 1)] = static_cast<int>(k);
      rec(j + 1, used + k * static_cast<unsigned>(j));
    }
    a[static_cast<std::size_t>(j - 1)] = 0;
  };
  rec(1, 0);
}

struct FactorTuple {
  std::vector<int> a;
  unsigned p = 0;  // sum_j j a_j
  unsigned count = 0;  // sum_j a_j
};

std::vector<FactorTuple> factor_tuples(int r, unsigned budget)
{
  std::vector<FactorTuple> out;
  for_each_tuple(r, budget, [&](const std::vector<int>& a, unsigned used) {
    unsigned count = 0;
    for (int x : a) count += static_cast<unsigned>(x);
    out.push_back({a, used, count});
  });
  return out;
}

// (N d - p) omega_i0 + sum_j a_j mu_j on the factor datum.
Weight factor_weight(const CominusculeDatum& datum, const std::vector<int>& a, long omega_coefficient)
{
  Weight w(static_cast<std::size_t>(datum.type.rank));
  w[datum.i0] = omega_coefficient;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != 0) w += static_cast<Weight::value_type>(a[j]) * datum.mus[j];
  return w;
}

void require_rank(const EmbeddingSpec& spec)
{
  if (spec.rank() < 3)
    throw DomainError("rank >= 3 required, " + spec.to_string() + " has rank " + std::to_string(spec.rank()));
}

} // namespace

EmbeddingSpec::EmbeddingSpec(std::vector<CominusculeDatum> factors, int multiplicity)
    : m_factors(std::move(factors)), m_multiplicity(multiplicity), m_datum(factor_types(m_factors))
{
  if (m_multiplicity < 1) throw DomainError("embedding multiplicity must be positive");
  if (m_multiplicity >= 2 && m_factors.size() > 1)
    throw DomainError("embedding multiplicity @" + std::to_string(m_multiplicity) +
                      " is unsupported for products of several factors");
}

int EmbeddingSpec::rank() const
{
  int r = 0;
  for (const auto& f : m_factors) r += f.r;
  return r;
}

int EmbeddingSpec::max_factor_rank() const
{
  int r = 0;
  for (const auto& f : m_factors) r = std::max(r, f.r);
  return r;
}

Weight EmbeddingSpec::ambient_weight() const
{
  Weight w(m_datum.rank());
  for (std::size_t s = 0; s < m_factors.size(); ++s) w[marked_node(s)] = m_multiplicity;
  return w;
}

Weight EmbeddingSpec::lift(std::size_t factor, const Weight& local) const
{
  Weight w(m_datum.rank());
  const auto off = m_datum.component_offset(factor);
  for (std::size_t i = 0; i < local.size(); ++i) w[off + i] = local[i];
  return w;
}

std::string EmbeddingSpec::to_string() const
{
  std::string out;
  std::string nodes;
  for (std::size_t s = 0; s < m_factors.size(); ++s) {
    if (s) {
      out += "x";
      nodes += ",";
    }
    out += m_factors[s].type.to_string();
    nodes += std::to_string(marked_node(s) + 1);
  }
  out += m_factors.size() == 1 ? "/P" + nodes : "/P{" + nodes + "}";
  if (m_multiplicity != 1) out += "@" + std::to_string(m_multiplicity);
  return out;
}

EmbeddingSpec make_embedding(const GroupSpec& spec)
{
  if (!spec.marking) throw DomainError("a parabolic '/P...' is required");
  std::vector<CominusculeDatum> factors;
  std::size_t offset = 0;
  for (const auto& type : spec.types) {
    std::vector<std::size_t> local;
    for (auto node : spec.marking->nodes())
      if (node >= offset && node < offset + static_cast<std::size_t>(type.rank)) local.push_back(node - offset);
    if (local.size() != 1)
      throw DomainError("factor " + type.to_string() + " of " + spec.to_string() + " needs exactly one marked node");
    factors.push_back(Catalog::builtin().lookup(type, local.front()));
    offset += static_cast<std::size_t>(type.rank);
  }
  return EmbeddingSpec(std::move(factors), spec.multiplicity);
}

EmbeddingSpec parse_embedding(std::string_view text) { return make_embedding(parse_parabolic_spec(text)); }

std::vector<LabeledBundle> sym_gr_eta(const CominusculeDatum& datum, unsigned d, int multiplicity)
{
  if (multiplicity < 1) throw DomainError("embedding multiplicity must be positive");
  std::vector<LabeledBundle> out;
  for_each_tuple(datum.r, d, [&](const std::vector<int>& a, unsigned used) {
    const long c = static_cast<long>(multiplicity) * static_cast<long>(d) - static_cast<long>(used);
    out.push_back({a, factor_weight(datum, a, c)});
  });
  return out;
}

GradedDecomposition coord_ring_component(const EmbeddingSpec& spec, unsigned d)
{
  require_rank(spec);
  GradedDecomposition result;
  result.degree = d;
  std::map<Weight, BigInt> merged;
  const long N = spec.multiplicity();

  if (spec.irreducible()) {
    const auto& f = spec.factors().front();
    for (const auto& t : factor_tuples(f.r, d)) {
      if (N == 1 && 2 * t.count > std::min(d, t.p)) continue;
      merged[factor_weight(f, t.a, N * static_cast<long>(d) - static_cast<long>(t.p))] += 1;
    }
  } else {
    const auto& factors = spec.factors();
    std::vector<std::vector<FactorTuple>> per_factor;
    for (const auto& f : factors) per_factor.push_back(factor_tuples(f.r, d));
    std::vector<const FactorTuple*> chosen(factors.size());
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t s, unsigned total) {
      if (s == factors.size()) {
        for (std::size_t t = 0; t < factors.size(); ++t) {
          // p_t + sum of the other p's is the total
          if (2 * chosen[t]->count > std::min(d, total)) return;
          if (chosen[t]->p > d) return;
        }
        Weight w(spec.datum().rank());
        for (std::size_t t = 0; t < factors.size(); ++t)
          w += spec.lift(t, factor_weight(factors[t], chosen[t]->a, static_cast<long>(d) - static_cast<long>(chosen[t]->p)));
        merged[w] += 1;
        return;
      }
      for (const auto& tuple : per_factor[s]) {
        if (total + tuple.p > d) continue;
        chosen[s] = &tuple;
        rec(s + 1, total + tuple.p);
      }
    };
    rec(0, 0);
  }
  for (auto& [w, m] : merged) {
    if (!w.is_dominant()) throw ConsistencyError("coordinate ring weight " + w.to_string() + " is not dominant");
    result.entries.push_back({w, m});
  }
  return result;
}

std::vector<CovariantGenerator> covariant_generators(const EmbeddingSpec& spec, unsigned max_degree)
{
  require_rank(spec);
  if (max_degree < 1) throw DomainError("max degree must be at least 1");
  std::vector<std::set<Weight>> levels(max_degree + 1);
  for (unsigned d = 1; d <= max_degree; ++d)
    for (const auto& e : coord_ring_component(spec, d).entries) levels[d].insert(e.weight);

  std::vector<CovariantGenerator> out;
  for (unsigned d = 1; d <= max_degree; ++d)
    for (const auto& w : levels[d]) {
      bool decomposable = false;
      for (unsigned d1 = 1; d1 <= d / 2 && !decomposable; ++d1)
        for (const auto& w1 : levels[d1])
          if (levels[d - d1].count(w - w1)) {
            decomposable = true;
            break;
          }
      if (!decomposable) out.push_back({d, w});
    }
  return out;
}

DegreeBound ideal_degree_bound(const EmbeddingSpec& spec)
{
  require_rank(spec);
  DegreeBound bound;
  const int r = spec.rank();
  if (spec.irreducible()) {
    bound.closed_form = 4 * r - 4;
    bound.scanned_degree = static_cast<unsigned>(2 * r);
  } else {
    const int r0 = spec.max_factor_rank();
    bound.closed_form = std::max(6, 4 * r0);
    bound.scanned_degree = static_cast<unsigned>(std::max(3, 2 * r0) + 2);
  }
  unsigned top = 0;
  for (const auto& g : covariant_generators(spec, bound.scanned_degree)) top = std::max(top, g.degree);
  bound.via_covariants = 2 * static_cast<int>(top);
  if (bound.via_covariants > bound.closed_form)
    throw ConsistencyError("covariant scan of " + spec.to_string() + " gives degree bound " +
                           std::to_string(bound.via_covariants) + " above the closed form " +
                           std::to_string(bound.closed_form));
  return bound;
}

std::optional<int> generalized_cominuscule_rank(const SimpleLieType& type, std::size_t node)
{
  type.validate();
  if (auto datum = Catalog::builtin().evaluate(type, node)) return datum->r;
  if (type.family == Family::C && node == 0) return 1;
  if (type.family == Family::B && node + 1 == static_cast<std::size_t>(type.rank)) return (type.rank + 1) / 2;
  if (type.family == Family::G && node == 0) return 2;
  return std::nullopt;
}

bool is_strongly_nondegenerate(const GroupSpec& spec)
{
  if (!spec.marking) throw DomainError("a parabolic '/P...' is required");
  int total = 0;
  std::size_t offset = 0;
  for (const auto& type : spec.types) {
    std::vector<std::size_t> local;
    for (auto node : spec.marking->nodes())
      if (node >= offset && node < offset + static_cast<std::size_t>(type.rank)) local.push_back(node - offset);
    offset += static_cast<std::size_t>(type.rank);
    if (local.size() != 1) return true;
    const auto r = generalized_cominuscule_rank(type, local.front());
    if (!r) return true;
    total += *r;
  }
  if (spec.types.size() == 1 && total == 1) return spec.multiplicity > 2;
  if (total == 2) return spec.multiplicity != 1;
  return true;
}

BigInt hilbert_dimension(const EmbeddingSpec& spec, unsigned d)
{
  const auto component = coord_ring_component(spec, d);
  const auto& entries = component.entries;
  std::vector<BigInt> partial(chunk_count(entries.size()));
  parallel_chunks(entries.size(), [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      partial[chunk] += entries[i].multiplicity * weyl_dim(spec.datum(), entries[i].weight);
  });
  BigInt total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

BigInt ambient_dimension(const EmbeddingSpec& spec, unsigned d)
{
  const BigInt v = weyl_dim(spec.datum(), spec.ambient_weight());
  return binomial(static_cast<unsigned long>(v) + d - 1, d);
}

GradedDecomposition ideal_component_via_oracle(const EmbeddingSpec& spec, unsigned d, unsigned long long guard)
{
  if (spec.multiplicity() != 1) throw DomainError("the oracle comparison needs the minimal embedding (N = 1)");
  const auto ring = coord_ring_component(spec, d);
  const auto ambient = sym_power_decompose(spec.datum(), spec.ambient_weight(), d, guard);
  GradedDecomposition result;
  result.degree = d;
  try {
    result.entries = subtract(ambient, ring.entries);
  } catch (const ConsistencyError& e) {
    throw ConsistencyError(spec.to_string() + " degree " + std::to_string(d) + ": " + e.what());
  }
  return result;
}

SegreTop segre_resolution_top(unsigned m)
{
  if (m < 3) throw DomainError("the Segre resolution formula needs m >= 3 factors, got " + std::to_string(m));
  if (m > 20) throw DomainError("too many factors");
  SegreTop top;
  const long half = 1L << (m - 1);
  top.closed_form = {half - 2, half - static_cast<long>(m) + 1};

  // gr(V (x) O) splits into O(eps_S), eps_S = +1 on S and -1 off S; the
  // pieces with |S| <= 1 form gr of the affine tangent bundle and xi is the
  // dual of the rest.
  std::vector<std::int64_t> det(m, 0);
  long rank = 0;
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    if (__builtin_popcountl(mask) <= 1) continue;
    ++rank;
    for (unsigned s = 0; s < m; ++s) det[s] += (mask >> s) & 1UL ? -1 : 1;
  }
  top.bundle_rank = rank;
  top.determinant_degree = det.front();
  const auto h = segre_line_cohomology(m, det);
  if (h.vanishing) throw ConsistencyError("det(xi) has no cohomology");
  top.cohomological_degree = h.degree;
  const long w = h.weight[0];
  for (std::size_t s = 1; s < m; ++s)
    if (h.weight[s] != w) throw ConsistencyError("det(xi) is not symmetric in the factors");
  if ((rank + w) % 2 != 0) throw ConsistencyError("parity mismatch in the Segre top term");
  top.via_cohomology = {(rank + w) / 2, (rank - w) / 2};
  if (top.via_cohomology != top.closed_form)
    throw ConsistencyError("Segre top term: closed form and Bott computation disagree");
  return top;
}

} // namespace tanvar
