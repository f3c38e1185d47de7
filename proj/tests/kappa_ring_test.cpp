#include <functional>

#include "doctest.h"
#include "support.hpp"
#include "tautrel/kappa_ring.hpp"

using namespace tautrel;
using namespace tautrel::testing;

namespace {

// Number of partitions of n with parts at most k.
long partitions(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return partitions(n - k, k) + partitions(n, k - 1);
}

KappaPolynomial k(std::vector<int> parts, Rational c = 1) {
  return KappaPolynomial::monomial(KappaMonomial::from_parts(parts), c);
}

}  // namespace

TEST_CASE("genus context") {
  for (int g = 2; g < 30; ++g) CHECK(GenusContext(g).chi() == 2 - 2 * g);
  CHECK_THROWS_AS(GenusContext(1), std::invalid_argument);
  CHECK_THROWS_AS(GenusContext(-3), std::invalid_argument);
}

TEST_CASE("monomial degree and length") {
  CHECK(KappaMonomial().degree() == 0);
  CHECK(KappaMonomial().is_unit());
  CHECK(KappaMonomial::kappa(1, 2).degree() == 2);
  CHECK(KappaMonomial::from_parts(std::vector{1, 6}).degree() == 7);
  CHECK(KappaMonomial::from_parts(std::vector{3, 1, 1}).length() == 3);
  CHECK(KappaMonomial::kappa(4, 0).is_unit());
  CHECK_THROWS_AS(KappaMonomial::kappa(0), std::invalid_argument);
}

TEST_CASE("basis of degree") {
  CHECK(basis_of_degree(0) == std::vector{KappaMonomial()});
  const auto b3 = basis_of_degree(3);
  REQUIRE(b3.size() == 3);
  CHECK(format(b3[0]) == "k3");
  CHECK(format(b3[1]) == "k1*k2");
  CHECK(format(b3[2]) == "k1^3");
  CHECK(basis_of_degree(7).size() == 15);
  CHECK(basis_of_degree(7).front() == KappaMonomial::kappa(7));
  CHECK(basis_of_degree(7).back() == KappaMonomial::kappa(1, 7));
}

TEST_CASE("basis sizes agree with a partition counter") {
  for (int d = 0; d <= 12; ++d) {
    const auto basis = basis_of_degree(d);
    CHECK(static_cast<long>(basis.size()) == partitions(d, d));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(basis[i].degree() == d);
      if (i > 0) CHECK(basis[i - 1] < basis[i]);
    }
  }
}

TEST_CASE("kappa_product applies k0 and negative indices") {
  const GenusContext g3(3);
  CHECK(kappa_product(std::vector{2, -1}, g3).is_zero());
  CHECK(kappa_product(std::vector{0, 0, 2}, g3) == k({2}, 16));
  CHECK(kappa_product(std::vector{1, 6}, g3) == k({1, 6}));
  CHECK(kappa_product(std::vector<int>{}, g3) == KappaPolynomial(1));
}

TEST_CASE("ring operations") {
  CHECK(k({1}) + k({2}) + (-k({1})) == k({2}));
  CHECK(k({1}) * k({1}) == k({1, 1}));
  const KappaPolynomial lhs = k({1, 1}, 3) - k({2}, 32);
  CHECK(lhs * k({1}) == k({1, 1, 1}, 3) - k({1, 2}, 32));
  CHECK((k({1}) - k({1})).is_zero());
  CHECK((k({3}) * Rational(0)).is_zero());
}

TEST_CASE("ring laws on random polynomials") {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_kappa_polynomial(rng, 4, 4);
    const auto q = random_kappa_polynomial(rng, 4, 4);
    const auto r = random_kappa_polynomial(rng, 4, 3);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    const auto sum = p * q + r;
    for (const auto& [m, c] : sum.terms()) CHECK(c != 0);
  }
}

TEST_CASE("kappa_product is multiplicative") {
  Rng rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const GenusContext ctx(uniform(rng, 2, 9));
    std::vector<int> s1, s2;
    for (int i = uniform(rng, 0, 4); i > 0; --i) s1.push_back(uniform(rng, -1, 5));
    for (int i = uniform(rng, 0, 4); i > 0; --i) s2.push_back(uniform(rng, -1, 5));
    std::vector<int> both = s1;
    both.insert(both.end(), s2.begin(), s2.end());
    CHECK(kappa_product(both, ctx) == kappa_product(s1, ctx) * kappa_product(s2, ctx));
  }
}

TEST_CASE("homogeneous degree") {
  CHECK(KappaPolynomial().homogeneous_degree() == -1);
  CHECK((k({1, 1}) + k({2})).homogeneous_degree() == 2);
  CHECK((k({1}) + k({2})).homogeneous_degree() == -2);
}

TEST_CASE("convention flip") {
  const auto p = k({1, 1}, 3) - k({2}, 32);
  CHECK(flip_convention(p) == k({1, 1}, 3) + k({2}, 32));
  CHECK(flip_convention(flip_convention(p)) == p);
  CHECK(convention_sign(KappaMonomial::from_parts(std::vector{2, 2})) == 1);
  CHECK(convention_sign(KappaMonomial::from_parts(std::vector{3})) == 1);
  CHECK(convention_sign(KappaMonomial::from_parts(std::vector{1, 4})) == -1);
  CHECK(parse_convention("algebraic") == KappaConvention::algebraic);
  CHECK_THROWS_AS(parse_convention("tangent"), std::invalid_argument);
}

TEST_CASE("primitive form and proportionality") {
  const auto p = k({1, 1}, ratio(-3, 4)) + k({2}, 8);
  CHECK(primitive_form(p) == k({1, 1}, 3) - k({2}, 32));
  CHECK(proportional(p, k({1, 1}, 3) - k({2}, 32)));
  CHECK_FALSE(proportional(p, k({1, 1}, 3) + k({2}, 32)));
  CHECK_FALSE(proportional(KappaPolynomial(), KappaPolynomial()));
}

TEST_CASE("format and parse") {
  CHECK(format(KappaMonomial()) == "1");
  CHECK(format(KappaMonomial::from_parts(std::vector{3, 1, 1})) == "k1^2*k3");
  CHECK(format(KappaPolynomial()) == "0");
  CHECK(format(k({1, 1}, 3) - k({2}, 32)) == "3*k1^2 - 32*k2");
  CHECK(format(k({2}, ratio(-1, 2))) == "-1/2*k2");
  for (const char* text : {"3*k1^2 - 32*k2", "k1^7 - 26011238400*k7", "-1/2*k2 + k1^2", "16", "0"}) {
    CHECK(format(parse_kappa_polynomial(format(parse_kappa_polynomial(text)))) ==
          format(parse_kappa_polynomial(text)));
  }
  CHECK(parse_kappa_polynomial("k1*k1") == k({1, 1}));
  CHECK_THROWS_AS(parse_kappa_polynomial("3*k0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_kappa_polynomial("3*"), std::invalid_argument);
  CHECK_THROWS_AS(parse_kappa_polynomial("k1 +"), std::invalid_argument);
}
