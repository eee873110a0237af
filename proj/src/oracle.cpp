#include "tanvar/oracle.hpp"
#include "tanvar/errors.hpp"
#include "tanvar/parallel.hpp"
#include "tanvar/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace tanvar {

namespace {

void require_dominant(const RootDatum& datum, const Weight& lambda)
{
  datum.check_weight(lambda);
  if (!lambda.is_dominant()) throw DomainError("weight " + lambda.to_string() + " is not dominant");
}

Weight dominant_conjugate(const RootDatum& datum, Weight nu)
{
  while (true) {
    const auto coords = nu.coords();
    const auto it = std::find_if(coords.begin(), coords.end(), [](auto c) { return c < 0; });
    if (it == coords.end()) return nu;
    const auto node = static_cast<std::size_t>(it - coords.begin());
    nu -= nu[node] * datum.simple_root(node);
  }
}

Rational height(const RootDatum& datum, const Weight& mu)
{
  Rational h = 0;
  for (const auto& c : datum.to_simple_coordinates(mu)) h += c;
  return h;
}

// dominant weights sorted by decreasing height, ties broken lexicographically
std::vector<Weight> by_height_descending(const RootDatum& datum, std::vector<Weight> weights)
{
  std::vector<std::pair<Rational, Weight>> keyed;
  keyed.reserve(weights.size());
  for (auto& w : weights) keyed.emplace_back(height(datum, w), std::move(w));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  });
  std::vector<Weight> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

void accumulate(WeightMultiset& chi, const Weight& w, const BigInt& m)
{
  if (m == 0) return;
  auto [it, inserted] = chi.emplace(w, m);
  if (inserted) return;
  it->second += m;
  if (it->second == 0) chi.erase(it);
}

} // namespace

BigInt weyl_dim(const RootDatum& datum, const Weight& lambda)
{
  require_dominant(datum, lambda);
  const Weight shifted = lambda + datum.rho();
  BigInt num = 1, den = 1;
  for (const auto& root : datum.positive_roots()) {
    num *= datum.pairing(shifted, root);
    den *= datum.pairing(datum.rho(), root);
  }
  if (num % den != 0) throw ConsistencyError("Weyl dimension is not an integer");
  return num / den;
}

std::map<Weight, BigInt> dominant_character(const RootDatum& datum, const Weight& lambda)
{
  require_dominant(datum, lambda);
  // Every dominant weight below lambda is reached by subtracting positive
  // roots while staying dominant.
  std::set<Weight> found{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    const Weight mu = queue.front();
    queue.pop_front();
    for (const auto& root : datum.positive_roots()) {
      Weight next = mu - root.omega;
      if (!next.is_dominant()) continue;
      if (found.insert(next).second) queue.push_back(std::move(next));
    }
  }
  const auto order = by_height_descending(datum, std::vector<Weight>(found.begin(), found.end()));

  std::map<Weight, BigInt> mult;
  const Weight lr = lambda + datum.rho();
  const std::int64_t top = datum.scaled_inner_product(lr, lr);
  auto lookup = [&](const Weight& nu) -> const BigInt* {
    auto it = mult.find(dominant_conjugate(datum, nu));
    return it == mult.end() ? nullptr : &it->second;
  };
  for (const auto& mu : order) {
    if (mu == lambda) {
      mult.emplace(mu, 1);
      continue;
    }
    BigInt num = 0;
    for (const auto& root : datum.positive_roots()) {
      Weight nu = mu + root.omega;
      while (true) {
        const BigInt* m = lookup(nu);
        if (!m) break;
        num += *m * (2 * datum.scaled_inner_product(nu, root.omega));
        nu += root.omega;
      }
    }
    const Weight mr = mu + datum.rho();
    const std::int64_t den = top - datum.scaled_inner_product(mr, mr);
    if (den <= 0 || num % den != 0) throw ConsistencyError("Freudenthal recursion produced a non-integer");
    const BigInt m = num / den;
    if (m != 0) mult.emplace(mu, m);
  }
  return mult;
}

std::vector<Weight> weyl_orbit(const RootDatum& datum, const Weight& dominant)
{
  require_dominant(datum, dominant);
  std::vector<Weight> orbit{dominant};
  std::vector<Weight> level{dominant};
  while (!level.empty()) {
    std::unordered_set<Weight, WeightHash> next;
    for (const auto& nu : level)
      for (std::size_t i = 0; i < datum.rank(); ++i)
        if (nu[i] > 0) next.insert(nu - nu[i] * datum.simple_root(i));
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
    orbit.insert(orbit.end(), level.begin(), level.end());
  }
  return orbit;
}

WeightMultiset freudenthal(const RootDatum& datum, const Weight& lambda)
{
  WeightMultiset chi;
  for (const auto& [mu, m] : dominant_character(datum, lambda))
    for (const auto& w : weyl_orbit(datum, mu)) chi.emplace(w, m);
  return chi;
}

Decomposition normalize(Decomposition parts)
{
  std::map<Weight, BigInt> merged;
  for (auto& p : parts) merged[p.weight] += p.multiplicity;
  Decomposition out;
  for (auto& [w, m] : merged)
    if (m != 0) out.push_back({w, m});
  return out;
}

Decomposition tensor_decompose(const RootDatum& datum, const Weight& lambda, const Weight& mu)
{
  require_dominant(datum, lambda);
  require_dominant(datum, mu);
  const bool swap = weyl_dim(datum, mu) > weyl_dim(datum, lambda);
  const Weight& high = swap ? mu : lambda;
  const Weight& small = swap ? lambda : mu;
  std::map<Weight, BigInt> result;
  for (const auto& [nu, m] : freudenthal(datum, small)) {
    const auto r = make_dominant_dot(datum, high + nu);
    if (r.singular) continue;
    if (r.length % 2 == 0)
      result[r.dominant] += m;
    else
      result[r.dominant] -= m;
  }
  Decomposition out;
  for (auto& [w, m] : result) {
    if (m < 0) throw ConsistencyError("Klimyk sum left a negative multiplicity at " + w.to_string());
    if (m > 0) out.push_back({w, m});
  }
  return out;
}

WeightMultiset multiply_characters(const WeightMultiset& a, const WeightMultiset& b)
{
  std::vector<std::pair<Weight, BigInt>> left(a.begin(), a.end());
  std::sort(left.begin(), left.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  const std::size_t chunks = chunk_count(left.size());
  std::vector<WeightMultiset> partial(chunks);
  parallel_chunks(left.size(), [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    auto& out = partial[chunk];
    for (std::size_t i = begin; i < end; ++i)
      for (const auto& [w, m] : b) accumulate(out, left[i].first + w, left[i].second * m);
  });
  WeightMultiset result = std::move(partial.front());
  for (std::size_t c = 1; c < chunks; ++c)
    for (const auto& [w, m] : partial[c]) accumulate(result, w, m);
  return result;
}

WeightMultiset adams(const WeightMultiset& chi, long k)
{
  WeightMultiset out;
  for (const auto& [w, m] : chi) accumulate(out, static_cast<Weight::value_type>(k) * w, m);
  return out;
}

BigInt mass(const WeightMultiset& chi)
{
  BigInt total = 0;
  for (const auto& entry : chi) total += entry.second;
  return total;
}

WeightMultiset sym_power_character(const RootDatum& datum, const Weight& lambda, unsigned d,
                                   unsigned long long guard)
{
  const BigInt dim = weyl_dim(datum, lambda);
  const BigInt size = binomial(static_cast<unsigned long>(dim) + d - 1, d);
  if (size > guard)
    throw ResourceError("S^" + std::to_string(d) + " of a " + dim.str() + "-dimensional module has " + size.str() +
                        " character terms, above the limit " + std::to_string(guard));
  const WeightMultiset chi = freudenthal(datum, lambda);
  std::vector<WeightMultiset> h{WeightMultiset{{datum.zero(), BigInt(1)}}};
  for (unsigned n = 1; n <= d; ++n) {
    WeightMultiset sum;
    for (unsigned k = 1; k <= n; ++k)
      for (const auto& [w, m] : multiply_characters(adams(chi, k), h[n - k])) accumulate(sum, w, m);
    for (auto& entry : sum) {
      if (entry.second % n != 0) throw ConsistencyError("Newton identity produced a non-integral character");
      entry.second /= n;
    }
    h.push_back(std::move(sum));
  }
  return h[d];
}

Decomposition sym_power_decompose(const RootDatum& datum, const Weight& lambda, unsigned d, unsigned long long guard)
{
  return decompose_multiset(datum, sym_power_character(datum, lambda, d, guard));
}

Decomposition decompose_multiset(const RootDatum& datum, const WeightMultiset& chi)
{
  std::map<Weight, BigInt> dominant;
  for (const auto& [w, m] : chi) {
    datum.check_weight(w);
    if (w.is_dominant()) dominant.emplace(w, m);
  }
  // Weyl symmetry: every weight carries the multiplicity of its dominant
  // conjugate and every orbit is complete.
  std::size_t orbit_total = 0;
  for (const auto& [w, m] : dominant) orbit_total += weyl_orbit(datum, w).size();
  if (orbit_total != chi.size()) throw DomainError("not a character: support is not Weyl-symmetric");
  for (const auto& [w, m] : chi) {
    if (w.is_dominant()) continue;
    auto it = dominant.find(dominant_conjugate(datum, w));
    if (it == dominant.end() || it->second != m)
      throw DomainError("not a character: multiplicity at " + w.to_string() + " breaks Weyl symmetry");
  }
  std::vector<Weight> keys;
  for (const auto& entry : dominant) keys.push_back(entry.first);
  const auto order = by_height_descending(datum, keys);

  Decomposition out;
  for (const auto& lambda : order) {
    auto it = dominant.find(lambda);
    if (it == dominant.end() || it->second == 0) continue;
    const BigInt m = it->second;
    if (m < 0)
      throw DomainError("not a character: multiplicity " + m.str() + " at dominant weight " + lambda.to_string());
    for (const auto& [mu, k] : dominant_character(datum, lambda)) {
      auto jt = dominant.find(mu);
      if (jt == dominant.end()) throw DomainError("not a character: weight " + mu.to_string() + " of V" +
                                                  lambda.to_string() + " is missing");
      jt->second -= m * k;
    }
    out.push_back({lambda, m});
  }
  return normalize(std::move(out));
}

WeightMultiset reconstruct_character(const RootDatum& datum, const Decomposition& parts)
{
  WeightMultiset chi;
  for (const auto& part : parts)
    for (const auto& [w, m] : freudenthal(datum, part.weight)) accumulate(chi, w, m * part.multiplicity);
  return chi;
}

BigInt decomposition_dimension(const RootDatum& datum, const Decomposition& parts)
{
  BigInt total = 0;
  for (const auto& p : parts) total += p.multiplicity * weyl_dim(datum, p.weight);
  return total;
}

Decomposition subtract(const Decomposition& a, const Decomposition& b)
{
  std::map<Weight, BigInt> merged;
  for (const auto& p : a) merged[p.weight] += p.multiplicity;
  for (const auto& p : b) {
    auto& m = merged[p.weight];
    m -= p.multiplicity;
    if (m < 0)
      throw ConsistencyError("module " + p.weight.to_string() + " with multiplicity " + p.multiplicity.str() +
                             " is not contained in the ambient decomposition");
  }
  Decomposition out;
  for (auto& [w, m] : merged)
    if (m != 0) out.push_back({w, m});
  return out;
}

} // namespace tanvar
