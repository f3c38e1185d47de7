#include <set>

#include "doctest.h"
#include "tautrel/pipeline.hpp"

using namespace tautrel;

TEST_CASE("multipliers up to symmetry") {
  CHECK(multipliers_of_degree(2, 0).empty());
  // e1, v12
  CHECK(multipliers_of_degree(2, 1).size() == 2);
  // e1^2, e1*e2, e1*v12 (= v12^2)
  CHECK(multipliers_of_degree(2, 2).size() == 3);
  for (int k = 1; k <= 6; ++k) {
    for (const auto& m : multipliers_of_degree(2, k)) {
      CHECK(m.degree() == k);
      CHECK(m.kappa1_power() == 0);
    }
  }
  CHECK(multipliers_of_degree(1, 4).size() == 1);
  // orbits on three points of total weight 1: e1, v12
  CHECK(multipliers_of_degree(3, 1).size() == 2);
}

TEST_CASE("monomial text round trips") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= 4; ++k) {
      for (const auto& m : multipliers_of_degree(n, k)) {
        CHECK(normal_form(parse_point_monomial(monomial_text(m), n)) == m);
      }
    }
  }
  const auto wide = WeightedPartition::from_blocks(12, {Block{(1u << 9) | (1u << 11), 3}});
  CHECK(monomial_text(wide) == "e10^2*v{10,12}");
  CHECK(normal_form(parse_point_monomial(monomial_text(wide), 12)) == wide);
  CHECK(monomial_text(WeightedPartition(2)) == "1");
}

TEST_CASE("verification pipelines") {
  const GenusContext ctx(9);
  const auto specs = verification_pipelines(ctx, 6, 14);
  REQUIRE(specs.size() >= 2);
  CHECK(specs[0].label() == "n=3");
  CHECK(specs[1].label() == "n=2");
  std::set<std::string> labels;
  for (const auto& s : specs) {
    CHECK(labels.insert(s.label()).second);
    CHECK(relation_degree(ctx, s.n, s.multiplier) <= 14);
  }
  CHECK(labels.count("n=2 x e1^6") == 1);
  CHECK(verification_pipelines(ctx, 6, 8).size() == 2);
}

TEST_CASE("verify small genera") {
  for (int g : {3, 4, 5, 6}) {
    CAPTURE(g);
    const auto report = verify_genus(golden_tables(g), {});
    CHECK(report.passed());
  }
}

TEST_CASE("four points reach the degree-2 relation at genus 5") {
  VerifySettings settings;
  settings.include_n4 = true;
  const auto report = verify_genus(golden_tables(5), settings);
  CHECK(report.passed());
  for (const auto& r : report.results) {
    if (!r.entry.expect_missing) continue;
    CHECK(r.found);
    CHECK(r.route == "n=4; listed as undetected");
  }
  const auto without = verify_genus(golden_tables(5), {});
  for (const auto& r : without.results) {
    if (r.entry.expect_missing) CHECK_FALSE(r.found);
  }
}
