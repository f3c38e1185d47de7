#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "tautrel/oracle.hpp"

using namespace tautrel;
using namespace tautrel::testing;

TEST_CASE("brute pushforward examples") {
  const GenusContext ctx(5);
  CHECK(format(brute_pushforward(parse_point_monomial("e1^3", 1), ctx)) == "k2");
  CHECK(format(brute_pushforward(parse_point_monomial("e1^2*v12", 2), ctx)) == "k1");
  CHECK(brute_pushforward(parse_point_monomial("e1*e2", 3), ctx).is_zero());
  CHECK(brute_pushforward(parse_point_monomial("e1*e2", 2), GenusContext(3)) == KappaPolynomial(16));
}

TEST_CASE("brute pushforward agrees with the normal form route") {
  Rng rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const GenusContext ctx(uniform(rng, 2, 10));
    const int n = uniform(rng, 1, 4);
    const auto m = random_point_monomial(rng, n, uniform(rng, 0, 8));
    REQUIRE(brute_pushforward(m, ctx) == pushforward(normal_form(m), ctx));
  }
}

TEST_CASE("brute numeric pushforward guard") {
  const std::vector<Rational> five(5, 1);
  CHECK_THROWS_AS(brute_numeric_pushforward(GenusContext(3), five), InstanceTooLarge);
  const std::vector<Rational> one{1};
  CHECK_THROWS_AS(brute_numeric_pushforward(GenusContext(9), one), InstanceTooLarge);
}

TEST_CASE("golden tables") {
  const auto g3 = golden_tables(3);
  REQUIRE(g3.entries.size() == 2);
  CHECK(g3.convention == KappaConvention::algebraic);
  CHECK(g3.entries[0].relation() == parse_kappa_polynomial("k1^2"));
  CHECK(g3.entries[1].relation() == parse_kappa_polynomial("k2"));

  const auto g4 = golden_tables(4);
  REQUIRE(g4.entries.size() == 4);
  CHECK(g4.entries[3].text() == "g=4 deg=2: 3*k1^2 = 32*k2");

  const auto g9 = golden_tables(9);
  CHECK(g9.entries.size() == 11 + 14);
  int degree7 = 0;
  for (const auto& e : g9.entries) {
    CHECK(e.relation().homogeneous_degree() == e.degree);
    degree7 += e.degree == 7;
  }
  CHECK(degree7 == 14);
  CHECK(g9.entries[11].text() == "g=9 deg=7: k1^7 = 26011238400*k7");

  const auto g5 = golden_tables(5);
  int controls = 0;
  for (const auto& e : g5.entries) controls += e.expect_missing;
  CHECK(controls == 1);

  CHECK_THROWS_AS(golden_tables(7), NoGoldenData);
  CHECK(GoldenFile::builtin().genera() == std::vector{3, 4, 5, 6, 9});
}

TEST_CASE("golden file round trip is byte exact") {
  const std::filesystem::path path = std::filesystem::path(TAUTREL_SOURCE_DIR) / "data" / "golden_tables.txt";
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream original;
  original << in.rdbuf();
  CHECK(GoldenFile::load(path).str() == original.str());
  CHECK(GoldenFile::builtin().str() == original.str());
  CHECK(GoldenFile::parse(GoldenFile::builtin().str()).str() == original.str());
}

TEST_CASE("golden file errors") {
  auto line_of = [](const std::string& text) -> long {
    try {
      GoldenFile::parse(text);
    } catch (const GoldenFormatError& e) {
      return static_cast<long>(e.line());
    }
    return -1;
  };
  CHECK(line_of("convention=algebraic\ng=3 deg=2: k2 = 0\n") == -1);
  CHECK(line_of("g=3 deg=2: k2 = 0\n") == 1);
  CHECK(line_of("convention=algebraic\n# ok\ng=3 deg=3: k2 = 0\n") == 3);
  CHECK(line_of("convention=algebraic\ng=3 deg=2: k2 == 0\n") == 2);
  CHECK(line_of("convention=algebraic\ng=3 deg=2:  k2 = 0\n") == 2);
  CHECK(line_of("convention=sideways\n") == 1);
  CHECK(line_of("convention=algebraic\nconvention=algebraic\n") == 2);
}

TEST_CASE("verification report") {
  const GoldenTable table = GoldenFile::parse(
                                "convention=topological\n"
                                "g=4 deg=2: 3*k1^2 = 32*k2\n"
                                "g=4 deg=3: 3*k1^3 = 32*k1*k2\n"
                                "g=4 deg=2 expect=missing: k2 = 0\n")
                                .table(4);
  RelationSet two(GenusContext(4), 2);
  two.add_relation(parse_kappa_polynomial("3*k1^2 - 32*k2"));
  const std::vector<LabeledRelations> pipelines{{"first", reduce(two)}};
  const auto report = verify(table, pipelines);
  REQUIRE(report.results.size() == 3);
  CHECK(report.results[0].found);
  CHECK(report.results[0].route == "first");
  CHECK(report.results[1].found);
  CHECK(report.results[1].route.find("ideal") != std::string::npos);
  CHECK_FALSE(report.results[2].found);
  CHECK(report.passed());
  CHECK(report.found_count() == 2);
  CHECK(report.format().find("MISSING g=4 deg=2 expect=missing: k2 = 0") != std::string::npos);

  VerifyOptions no_ideal;
  no_ideal.ideal_extension = false;
  const auto strict = verify(table, pipelines, no_ideal);
  CHECK_FALSE(strict.results[1].found);
  CHECK_FALSE(strict.passed());
  CHECK(strict.results[1].route.find("n=4 pipelines") != std::string::npos);
}
