#include "tanvar/spherical.hpp"
#include "tanvar/chevalley.hpp"
#include "tanvar/errors.hpp"
#include "tanvar/grammar.hpp"
#include "tanvar/parallel.hpp"
#include "tanvar/tangential.hpp"

#include <random>

namespace tanvar {

namespace {

std::vector<std::size_t> local_marks(const RootDatum& datum, const ParabolicMarking& marking, std::size_t component)
{
  std::vector<std::size_t> out;
  const auto off = datum.component_offset(component);
  const auto len = static_cast<std::size_t>(datum.components()[component].rank);
  for (auto node : marking.nodes())
    if (node >= off && node < off + len) out.push_back(node - off);
  return out;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows)
{
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_for(const ChevalleyBasis& basis, const ParabolicSplit& split, const std::vector<long>& u)
{
  LieElement U = basis.zero();
  for (std::size_t k = 0; k < split.g_minus_indices.size(); ++k) U.add(split.g_minus_indices[k], u[k]);
  std::vector<std::size_t> row_of(basis.dimension(), split.g_minus_indices.size());
  for (std::size_t k = 0; k < split.g_minus_indices.size(); ++k) row_of[split.g_minus_indices[k]] = k;
  std::vector<std::vector<Rational>> matrix(split.g_minus.size(), std::vector<Rational>(split.b0.size()));
  for (std::size_t col = 0; col < split.b0.size(); ++col) {
    const auto image = basis.bracket(split.b0[col], U);
    for (const auto& [index, c] : image.terms()) {
      const auto row = row_of[index];
      if (row == split.g_minus_indices.size()) throw ConsistencyError("[b0, g_minus] left g_minus");
      matrix[row][col] = c;
    }
  }
  return rational_rank(std::move(matrix));
}

} // namespace

std::string to_string(Sphericity verdict)
{
  switch (verdict) {
    case Sphericity::Spherical: return "spherical";
    case Sphericity::NotSpherical: return "not-spherical";
    case Sphericity::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

SphericityVerdict classify(const RootDatum& datum, const ParabolicMarking& marking)
{
  datum.check_marking(marking);
  SphericityVerdict v;
  v.verdict = Sphericity::Spherical;
  std::vector<std::string> parts;
  for (std::size_t c = 0; c < datum.components().size(); ++c) {
    const auto& type = datum.components()[c];
    const auto marks = local_marks(datum, marking, c);
    if (marks.empty()) continue;
    std::string label = type.to_string() + "/P" + ParabolicMarking(marks).to_string();
    if (marks.size() > 1) {
      v.verdict = Sphericity::NotSpherical;
      parts.push_back(label + " is not a symmetric space presentation");
      continue;
    }
    label = type.to_string() + "/P" + std::to_string(marks.front() + 1);
    if (type.family == Family::G && marks.front() == 0) {
      v.verdict = Sphericity::NotSpherical;
      parts.push_back(label + " is excluded");
      continue;
    }
    if (!generalized_cominuscule_rank(type, marks.front())) {
      v.verdict = Sphericity::NotSpherical;
      parts.push_back(label + " is not a symmetric space presentation");
      continue;
    }
    parts.push_back(label + " is a symmetric space presentation");
  }
  v.evidence = "table:";
  for (std::size_t i = 0; i < parts.size(); ++i) v.evidence += (i ? "; " : " ") + parts[i];
  return v;
}

std::size_t bracket_rank(const RootDatum& datum, const ParabolicMarking& marking, const std::vector<long>& u)
{
  ChevalleyBasis basis(datum);
  const auto split = parabolic_split(basis, marking);
  if (u.size() != split.g_minus.size())
    throw DomainError("expected " + std::to_string(split.g_minus.size()) + " coefficients for U");
  return rank_for(basis, split, u);
}

SphericityVerdict redlem_rank_test(const RootDatum& datum, const ParabolicMarking& marking, std::size_t trials,
                                   std::uint64_t seed, long bound)
{
  datum.check_marking(marking);
  if (trials < 1) throw DomainError("at least one trial is required");
  if (bound < 1) throw DomainError("coefficient bound must be positive");
  const auto table = classify(datum, marking);

  GroupSpec spec{datum.components(), marking, 1};
  if (!is_strongly_nondegenerate(spec)) {
    auto v = table;
    v.warnings.push_back("tangential variety of " + spec.to_string() +
                         " is degenerate; the rank criterion does not apply, answered from the table");
    return v;
  }

  ChevalleyBasis basis(datum);
  const auto split = parabolic_split(basis, marking);
  std::vector<std::size_t> ranks(trials, 0);
  parallel_chunks(trials, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(t)};
      std::mt19937_64 rng(seq);
      std::uniform_int_distribution<long> coefficient(-bound, bound);
      std::vector<long> u(split.g_minus.size());
      for (auto& x : u) x = coefficient(rng);
      ranks[t] = rank_for(basis, split, u);
    }
  });

  SphericityVerdict v;
  v.used_rank_test = true;
  auto& st = v.statistics;
  st.trials = trials;
  st.target_rank = split.g_minus.size();
  st.source_dimension = split.b0.size();
  st.seed = seed;
  st.coefficient_bound = bound;
  for (auto r : ranks) {
    st.best_rank = std::max(st.best_rank, r);
    if (r == st.target_rank) ++st.full_rank_trials;
  }
  const std::string summary = "rank test: best rank " + std::to_string(st.best_rank) + " of " +
                              std::to_string(st.target_rank) + " over " + std::to_string(trials) + " trials (" +
                              std::to_string(st.full_rank_trials) + " full rank)";
  if (st.full_rank_trials > 0) {
    if (table.verdict == Sphericity::NotSpherical)
      throw ConsistencyError(spec.to_string() + ": rank test certifies sphericality but the table says otherwise");
    v.verdict = Sphericity::Spherical;
    v.evidence = summary;
    return v;
  }
  if (table.verdict == Sphericity::NotSpherical && trials >= 2) {
    v.verdict = Sphericity::NotSpherical;
    v.evidence = summary + "; agrees with the table";
  } else {
    v.verdict = Sphericity::Inconclusive;
    v.evidence = summary;
    if (table.verdict == Sphericity::Spherical) v.warnings.push_back("no full-rank trial although the table says spherical");
  }
  return v;
}

MultiplicityDefect an_multiplicity_defect(int n, const ParabolicMarking& marking)
{
  const RootDatum datum({{Family::A, n}});
  datum.check_marking(marking);
  const auto& nodes = marking.nodes();
  if (nodes.size() < 2) throw DomainError("the multiplicity defect needs at least two marked nodes");
  const std::size_t first = nodes.front(), last = nodes.back();
  if (last + 1 >= static_cast<std::size_t>(n))
    throw DomainError("the largest marked node must be below " + std::to_string(n));

  // eps_{i_1} - eps_{i_s + 1} = alpha_{i_1} + ... + alpha_{i_s}
  std::vector<int> target(datum.rank(), 0);
  for (std::size_t i = first; i <= last; ++i) target[i] = 1;
  auto outside_p = [&](const PositiveRoot& root) {
    for (auto node : nodes)
      if (root.simple[node] != 0) return true;
    return false;
  };

  const auto& roots = datum.positive_roots();
  MultiplicityDefect result;
  result.h0_mult = 1;  // rho_P together with rho_P - (eps_{i_1} - eps_{i_s + 1})
  for (std::size_t a = 0; a < roots.size(); ++a) {
    if (!outside_p(roots[a])) continue;
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      if (!outside_p(roots[b])) continue;
      bool hit = true;
      for (std::size_t i = 0; i < target.size() && hit; ++i) hit = roots[a].simple[i] + roots[b].simple[i] == target[i];
      if (!hit) continue;
      ++result.h0_mult;
      // beta_1 starts at i_1; beta_2 = eps_j - eps_{i_s + 1} contributes to H^1
      // when its first node j is not the last node of an interval (i_u, i_{u+1}]
      const auto& beta2 = roots[a].simple[first] != 0 ? roots[b] : roots[a];
      std::size_t j = 0;
      while (beta2.simple[j] == 0) ++j;
      if (!marking.contains(j)) ++result.h1_mult;
    }
  }
  result.defect = result.h0_mult - result.h1_mult;
  return result;
}

} // namespace tanvar
