#include "tanvar/catalog.hpp"
#include "tanvar/errors.hpp"
#include "tanvar/oracle.hpp"

#include <doctest.h>

#include <string>

using namespace tanvar;

namespace {

Weight omega(std::size_t rank, std::initializer_list<std::pair<std::size_t, int>> terms)
{
  Weight w(rank);
  for (const auto& [node, coefficient] : terms) w[node - 1] += coefficient;
  return w;
}

} // namespace

TEST_CASE("Grassmannian G(3,6)")
{
  const auto datum = catalog_lookup("A5/P3");
  CHECK(datum.i0 == 2);
  CHECK(datum.r == 3);
  REQUIRE(datum.lambdas.size() == 3);
  CHECK(datum.lambdas[0] == omega(5, {{2, 1}, {4, 1}}));
  CHECK(datum.lambdas[1] == omega(5, {{1, 1}, {5, 1}}));
  CHECK(datum.lambdas[2] == Weight(5));
  CHECK(datum.mus[0] == omega(5, {{2, 1}, {3, -1}, {4, 1}}));
  CHECK(datum.mus[2] == omega(5, {{3, 1}}));
}

TEST_CASE("Lagrangian Grassmannian and E7")
{
  const auto c3 = catalog_lookup("C3/P3");
  CHECK(c3.r == 3);
  CHECK(c3.lambdas == std::vector<Weight>{{0, 2, 0}, {2, 0, 0}, {0, 0, 0}});
  const auto e7 = catalog_lookup("E7/P7");
  CHECK(e7.r == 3);
  CHECK(e7.lambdas == std::vector<Weight>{omega(7, {{6, 1}}), omega(7, {{1, 1}}), Weight(7)});
}

TEST_CASE("spinor boundary convention")
{
  const auto d6 = catalog_lookup("D6/P6");
  CHECK(d6.r == 3);
  CHECK(d6.lambdas.back() == Weight(6));
  const auto d7 = catalog_lookup("D7/P7");
  CHECK(d7.r == 3);
  CHECK(d7.lambdas.back() == omega(7, {{1, 1}}));
  CHECK(catalog_lookup("D7/P6").lambdas[0] == omega(7, {{5, 1}}));
}

TEST_CASE("quadrics and the Cayley plane")
{
  for (const auto& spec : {"B5/P1", "D7/P1", "B2/P1", "D3/P1", "E6/P1", "E6/P6"}) {
    const auto datum = catalog_lookup(spec);
    INFO(spec);
    CHECK(datum.r == 2);
    CHECK(datum.lambdas[1][datum.i0] == 0);
  }
  CHECK(catalog_lookup("E6/P1").lambdas[0] == omega(6, {{3, 1}}));
  CHECK(catalog_lookup("E6/P6").lambdas[0] == omega(6, {{5, 1}}));
}

TEST_CASE("every battery entry satisfies the covariant identities")
{
  const auto battery = catalog_battery();
  CHECK(battery.size() > 100);
  for (const auto& [type, node] : battery) {
    const auto datum = Catalog::builtin().lookup(type, node);
    INFO(datum.to_string());
    CHECK(!validate_cominuscule(datum));
    CHECK(static_cast<int>(datum.lambdas.size()) == datum.r);
    for (const auto& w : datum.lambdas) CHECK(w.is_dominant());
  }
}

TEST_CASE("only the last covariant is trivial for tube-type spaces")
{
  for (const auto& spec : {"A5/P3", "C4/P4", "D8/P8", "E7/P7"}) {
    const auto datum = catalog_lookup(spec);
    const RootDatum root({datum.type});
    for (int j = 0; j + 1 < datum.r; ++j) CHECK(weyl_dim(root, datum.lambdas[j]) > 1);
    CHECK(datum.lambdas.back().is_zero());
  }
}

TEST_CASE("non-cominuscule markings are reported")
{
  CHECK_THROWS_WITH_AS(catalog_lookup("C3/P2"), doctest::Contains("not cominuscule"), DomainError);
  CHECK_THROWS_WITH_AS(catalog_lookup("G2/P1"), doctest::Contains("G2/P1"), DomainError);
  CHECK_THROWS_AS(catalog_lookup("F4/P4"), DomainError);
  CHECK_THROWS_AS(catalog_lookup("B3/P3"), DomainError);
  CHECK_THROWS_AS(catalog_lookup("A3/P{1,2}"), DomainError);
  CHECK_THROWS_AS(catalog_lookup("A1xA1/P{1,2}"), DomainError);
}

TEST_CASE("rule parser")
{
  const auto catalog = Catalog::parse("# comment\n\nA | 2..4 | 1, n | max(1, n-k) | w(j) ; 0\n");
  REQUIRE(catalog.rules().size() == 1);
  const auto datum = catalog.evaluate({Family::A, 3}, 0);
  REQUIRE(datum);
  CHECK(datum->r == 2);
  CHECK(datum->lambdas == std::vector<Weight>{{1, 0, 0}, {0, 0, 0}});
  CHECK(!catalog.evaluate({Family::A, 5}, 0));
  CHECK(!catalog.evaluate({Family::A, 3}, 1));
  CHECK_THROWS_AS(catalog.evaluate({Family::A, 4}, 3), ConsistencyError);

  CHECK_THROWS_AS(Catalog::parse("A | 1.. | 1 | 2\n"), ParseError);
  CHECK_THROWS_AS(Catalog::parse("Q | 1.. | 1 | 2 | 0\n"), ParseError);
  CHECK_THROWS_AS(Catalog::parse("A | 1.. | 1 | 2 | w(j\n"), ParseError);
  CHECK_THROWS_AS(Catalog::parse("A | 1.. | 1 | 2 | w(j) + z\n"), ParseError);
}

TEST_CASE("hand-edited records are caught by validation")
{
  // The table's literal reading 2 omega_j for the Lagrangian Grassmannian.
  const auto bad = Catalog::parse("C | 2.. | n | n | 2*w(j)\n");
  CHECK_THROWS_AS(bad.lookup({Family::C, 3}, 2), ConsistencyError);
  // omega_2 for the Cayley plane.
  const auto e6 = Catalog::parse("E | 6 | 1 | 2 | w(2) ; w(6)\n");
  CHECK_THROWS_AS(e6.lookup({Family::E, 6}, 0), ConsistencyError);
  const auto off_by_one = Catalog::parse("A | 1.. | 1..n | min(k, n+1-k) | w(k-j) + w(k+j+1)\n");
  CHECK_THROWS_AS(off_by_one.lookup({Family::A, 5}, 2), ConsistencyError);
  const auto wrong_rank = Catalog::parse("A | 1.. | 1..n | k | w(k-j) + w(k+j)\n");
  CHECK_THROWS_AS(wrong_rank.lookup({Family::A, 5}, 3), ConsistencyError);
}

TEST_CASE("catalog file on disk matches the built-in copy")
{
  const auto disk = Catalog::from_file(std::string(TANVAR_DATA_DIR) + "/cominuscule.catalog");
  REQUIRE(disk.rules().size() == Catalog::builtin().rules().size());
  for (const auto& [type, node] : catalog_battery()) {
    const auto a = disk.lookup(type, node);
    const auto b = Catalog::builtin().lookup(type, node);
    CHECK(a.lambdas == b.lambdas);
  }
  CHECK_THROWS_AS(Catalog::from_file("/nonexistent/catalog"), DomainError);
}
