#include "tanvar/errors.hpp"
#include "tanvar/grammar.hpp"
#include "tanvar/parallel.hpp"
#include "tanvar/tangential.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace tanvar;

namespace {

std::set<Weight> weights_of(const GradedDecomposition& g)
{
  std::set<Weight> out;
  for (const auto& e : g.entries) out.insert(e.weight);
  return out;
}

// Per-factor weights of Seg(P^1 x ... x P^1): coordinates are omega-coefficients.
Weight segre_weight(std::size_t m, int base, const std::vector<std::size_t>& subset, int on_subset)
{
  Weight w(std::vector<Weight::value_type>(m, base));
  for (auto i : subset) w[i] = on_subset;
  return w;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t m, std::size_t k)
{
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

} // namespace

TEST_CASE("summands of S^d(gr eta)")
{
  const auto c3 = catalog_lookup("C3/P3");
  const auto d0 = sym_gr_eta(c3, 0);
  REQUIRE(d0.size() == 1);
  CHECK(d0[0].weight.is_zero());

  const auto d1 = sym_gr_eta(c3, 1);
  REQUIRE(d1.size() == 2);
  std::set<Weight> w1;
  for (const auto& b : d1) w1.insert(b.weight);
  CHECK(w1 == std::set<Weight>{Weight{0, 0, 1}, c3.mus[0]});

  std::set<std::vector<int>> tuples;
  for (const auto& b : sym_gr_eta(c3, 2)) tuples.insert(b.a);
  CHECK(tuples == std::set<std::vector<int>>{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}});

  for (const auto& b : sym_gr_eta(c3, 2, 3)) {
    int used = 0;
    for (std::size_t j = 0; j < b.a.size(); ++j) used += static_cast<int>(j + 1) * b.a[j];
    Weight expected(3);
    expected[2] = 6 - used;
    for (std::size_t j = 0; j < b.a.size(); ++j) expected += b.a[j] * c3.mus[j];
    CHECK(b.weight == expected);
  }
}

TEST_CASE("Lagrangian Grassmannian LG(3,6)")
{
  const auto spec = parse_embedding("C3/P3");
  CHECK(weights_of(coord_ring_component(spec, 2)) == std::set<Weight>{{0, 0, 2}, {2, 0, 0}});
  CHECK(weights_of(coord_ring_component(spec, 3)) == std::set<Weight>{{0, 0, 3}, {2, 0, 1}, {0, 0, 1}});
  CHECK(weights_of(coord_ring_component(spec, 4)) ==
        std::set<Weight>{{0, 0, 4}, {2, 0, 2}, {0, 0, 2}, {4, 0, 0}, {0, 2, 0}});
  const RootDatum& root = spec.datum();
  const Weight v{0, 0, 1};
  CHECK(weyl_dim(root, v) == 14);
  for (unsigned d = 0; d <= 3; ++d) CHECK(hilbert_dimension(spec, d) == binomial(14 + d - 1, d));
  CHECK(hilbert_dimension(spec, 4) == binomial(17, 4) - 1);
}

TEST_CASE("coordinate rings of irreducible entries are multiplicity free and linearly normal")
{
  for (const auto& text : {"A5/P3", "A7/P4", "C4/P4", "D6/P6", "D7/P7", "E7/P7", "A6/P3"}) {
    const auto spec = parse_embedding(text);
    INFO(text);
    const auto degree1 = coord_ring_component(spec, 1);
    REQUIRE(degree1.entries.size() == 1);
    CHECK(degree1.entries[0].weight == spec.ambient_weight());
    for (unsigned d = 0; d <= 5; ++d)
      for (const auto& e : coord_ring_component(spec, d).entries) {
        CHECK(e.multiplicity == 1);
        CHECK(e.weight.is_dominant());
      }
  }
}

TEST_CASE("Segre cube in degree two")
{
  const auto spec = parse_embedding("A1xA1xA1/P{1,2,3}");
  CHECK(spec.rank() == 3);
  CHECK(!spec.irreducible());
  const auto d2 = coord_ring_component(spec, 2);
  CHECK(d2.entries.size() == 4);
  CHECK(weights_of(d2) == std::set<Weight>{{2, 2, 2}, {0, 0, 2}, {0, 2, 0}, {2, 0, 0}});
  // S^2 of C^2 x C^2 x C^2 has dimension 36 and no quadric vanishes on the tangential variety.
  CHECK(hilbert_dimension(spec, 2) == 36);
  CHECK(hilbert_dimension(spec, 3) == binomial(10, 3));
  CHECK(hilbert_dimension(spec, 4) == binomial(11, 4) - 1);
}

TEST_CASE("rank hypothesis and embedding restrictions")
{
  CHECK_THROWS_WITH_AS(coord_ring_component(parse_embedding("A5/P1"), 2), doctest::Contains("rank >= 3 required"),
                       DomainError);
  CHECK_THROWS_AS(coord_ring_component(parse_embedding("E6/P1"), 2), DomainError);
  CHECK_THROWS_AS(coord_ring_component(parse_embedding("A1xA1/P{1,2}"), 2), DomainError);
  CHECK_THROWS_AS(parse_embedding("A1xA1xA1/P{1,2,3}@2"), DomainError);
  CHECK_THROWS_AS(parse_embedding("C3/P2"), DomainError);
  CHECK_THROWS_AS(parse_embedding("A3/P{1,2}"), DomainError);
}

TEST_CASE("covariant generators of LG(4,8)")
{
  const auto spec = parse_embedding("C4/P4");
  const auto& mu = spec.factors()[0].mus;
  const std::vector<CovariantGenerator> expected = {
      {1, Weight{0, 0, 0, 1}}, {2, mu[1]},         {3, mu[2]}, {4, mu[3]},
      {4, mu[0] + mu[2]},      {5, mu[0] + mu[3]}, {6, 2 * mu[0] + mu[3]},
  };
  auto got = covariant_generators(spec, 8);
  auto sorted_expected = expected;
  const auto order = [](const CovariantGenerator& a, const CovariantGenerator& b) {
    return std::tie(a.degree, a.weight) < std::tie(b.degree, b.weight);
  };
  std::sort(sorted_expected.begin(), sorted_expected.end(), order);
  CHECK(std::is_sorted(got.begin(), got.end(), order));
  CHECK(got == sorted_expected);
}

TEST_CASE("covariant generators of Segre products")
{
  for (std::size_t m : {3u, 4u}) {
    std::string text = "A1";
    std::string nodes = "1";
    for (std::size_t i = 2; i <= m; ++i) {
      text += "xA1";
      nodes += "," + std::to_string(i);
    }
    const auto spec = parse_embedding(text + "/P{" + nodes + "}");
    std::vector<CovariantGenerator> expected = {{1, segre_weight(m, 1, {}, 0)}};
    for (const auto& s : subsets_of_size(m, 2)) expected.push_back({2, segre_weight(m, 2, s, 0)});
    for (const auto& s : subsets_of_size(m, 3)) expected.push_back({3, segre_weight(m, 3, s, 1)});
    std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
      return std::tie(a.degree, a.weight) < std::tie(b.degree, b.weight);
    });
    INFO("m=", m);
    CHECK(covariant_generators(spec, 6) == expected);
  }
}

TEST_CASE("ideal degree bounds")
{
  const auto c4 = ideal_degree_bound(parse_embedding("C4/P4"));
  CHECK(c4.closed_form == 12);
  CHECK(c4.via_covariants == 12);
  CHECK(ideal_degree_bound(parse_embedding("E7/P7")).closed_form == 8);
  CHECK(ideal_degree_bound(parse_embedding("A1xA1xA1/P{1,2,3}")).closed_form == 6);
  CHECK(ideal_degree_bound(parse_embedding("A1xA1xA1xA1/P{1,2,3,4}")).closed_form == 6);
  const auto mixed = ideal_degree_bound(parse_embedding("A1xC3/P{1,4}"));
  CHECK(mixed.closed_form == 12);
  CHECK(mixed.via_covariants <= mixed.closed_form);
}

TEST_CASE("strong nondegeneracy")
{
  CHECK(is_strongly_nondegenerate(parse_spec("A5/P3")));
  CHECK(!is_strongly_nondegenerate(parse_spec("D5/P5")));
  CHECK(is_strongly_nondegenerate(parse_spec("A3/P1@3")));
  CHECK(!is_strongly_nondegenerate(parse_spec("A3/P1")));
  CHECK(!is_strongly_nondegenerate(parse_spec("A3/P1@2")));
  CHECK(!is_strongly_nondegenerate(parse_spec("C3/P1")));
  CHECK(!is_strongly_nondegenerate(parse_spec("B4/P4")));
  CHECK(!is_strongly_nondegenerate(parse_spec("G2/P1")));
  CHECK(!is_strongly_nondegenerate(parse_spec("A1xA1/P{1,2}")));
  CHECK(!is_strongly_nondegenerate(parse_spec("E6/P1")));
  CHECK(is_strongly_nondegenerate(parse_spec("E6/P1@2")));
  CHECK(is_strongly_nondegenerate(parse_spec("A1xA1xA1/P{1,2,3}")));
  CHECK(is_strongly_nondegenerate(parse_spec("B5/P5")));
}

TEST_CASE("generalized cominuscule rank")
{
  CHECK(generalized_cominuscule_rank({Family::C, 4}, 0) == 1);
  CHECK(generalized_cominuscule_rank({Family::B, 4}, 3) == 2);
  CHECK(generalized_cominuscule_rank({Family::B, 5}, 4) == 3);
  CHECK(generalized_cominuscule_rank({Family::G, 2}, 0) == 2);
  CHECK(generalized_cominuscule_rank({Family::A, 7}, 3) == 4);
  CHECK(!generalized_cominuscule_rank({Family::F, 4}, 3));
  CHECK(!generalized_cominuscule_rank({Family::C, 4}, 1));
}

TEST_CASE("last term of the Segre resolution")
{
  const auto m3 = segre_resolution_top(3);
  CHECK(m3.closed_form == std::pair<long, long>{2, 2});
  CHECK(m3.via_cohomology == m3.closed_form);
  CHECK(segre_resolution_top(4).via_cohomology == std::pair<long, long>{6, 5});
  CHECK(segre_resolution_top(5).via_cohomology == std::pair<long, long>{14, 12});
  for (unsigned m = 3; m <= 7; ++m) {
    const auto top = segre_resolution_top(m);
    CHECK(top.closed_form == top.via_cohomology);
    CHECK(top.closed_form.first == (1L << (m - 1)) - 2);
    CHECK(top.closed_form.second == (1L << (m - 1)) - static_cast<long>(m) + 1);
  }
  CHECK_THROWS_AS(segre_resolution_top(2), DomainError);
}

TEST_CASE("Hilbert function basics")
{
  CHECK(hilbert_dimension(parse_embedding("E7/P7"), 0) == 1);
  CHECK(hilbert_dimension(parse_embedding("A5/P3"), 2) == 210);
  CHECK(hilbert_dimension(parse_embedding("E7/P7"), 2) == binomial(57, 2));
}

TEST_CASE("ideal via the character oracle")
{
  const auto c3 = parse_embedding("C3/P3");
  CHECK(ideal_component_via_oracle(c3, 2).entries.empty());
  CHECK(ideal_component_via_oracle(c3, 3).entries.empty());
  const auto quartic = ideal_component_via_oracle(c3, 4);
  REQUIRE(quartic.entries.size() == 1);
  CHECK(quartic.entries[0].weight.is_zero());
  CHECK(quartic.entries[0].multiplicity == 1);

  const auto segre = parse_embedding("A1xA1xA1/P{1,2,3}");
  for (unsigned d = 2; d <= 4; ++d) {
    const auto ideal = ideal_component_via_oracle(segre, d);
    CHECK(binomial(8 + d - 1, d) - hilbert_dimension(segre, d) == decomposition_dimension(segre.datum(), ideal.entries));
  }
  CHECK_THROWS_AS(ideal_component_via_oracle(parse_embedding("C3/P3@2"), 2), DomainError);
}

TEST_CASE("results do not depend on the thread count")
{
  const auto spec = parse_embedding("D6/P6");
  set_thread_count(1);
  const auto serial = coord_ring_component(spec, 5).entries;
  const auto serial_dim = hilbert_dimension(spec, 5);
  set_thread_count(4);
  CHECK(coord_ring_component(spec, 5).entries == serial);
  CHECK(hilbert_dimension(spec, 5) == serial_dim);
  set_thread_count(1);
}
