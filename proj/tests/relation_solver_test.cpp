#include "doctest.h"
#include "support.hpp"
#include "tautrel/relation_solver.hpp"

using namespace tautrel;
using namespace tautrel::testing;

namespace {

// Plain Gauss-Jordan over the rationals: first nonzero entry as pivot.
ReducedForm naive_rref(std::vector<RationalVector> m, std::size_t columns) {
  ReducedForm out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < columns && r < m.size(); ++col) {
    std::size_t p = r;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Rational lead = m[r][col];
    for (auto& x : m[r]) x /= lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = 0; j < columns; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(col);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::vector<RationalVector> random_matrix(Rng& rng, std::size_t rows, std::size_t columns, int rank) {
  // rows = random combinations of `rank` random generators, so the rank is
  // usually exactly `rank` and cancellation is exercised
  std::vector<RationalVector> gens(rank, RationalVector(columns));
  for (auto& g : gens) {
    for (auto& x : g) x = ratio(uniform(rng, -5, 5), uniform(rng, 1, 3));
  }
  std::vector<RationalVector> m(rows, RationalVector(columns));
  for (auto& row : m) {
    for (const auto& g : gens) {
      const Rational c = ratio(uniform(rng, -4, 4), uniform(rng, 1, 2));
      for (std::size_t j = 0; j < columns; ++j) row[j] += c * g[j];
    }
  }
  return m;
}

RelationSet with_rows(int genus, int degree, std::vector<const char*> relations) {
  RelationSet rs(GenusContext(genus), degree);
  for (const char* text : relations) rs.add_relation(parse_kappa_polynomial(text));
  return reduce(std::move(rs));
}

}  // namespace

TEST_CASE("row reduction examples") {
  const std::vector<RationalVector> id{{1, 0}, {0, 1}};
  const auto r = row_reduce(id, 2);
  CHECK(r.rows == id);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(row_reduce({}, 3).rows.empty());
  CHECK(row_reduce({{0, 0, 0}}, 3).rows.empty());
  const auto big = row_reduce({{ratio(2, 3), 4, 6}, {1, 6, 9}, {0, 0, ratio(1, 7)}}, 3);
  CHECK(big.pivots == std::vector<std::size_t>{0, 2});
  CHECK(big.rows[0] == RationalVector{1, 6, 0});
}

TEST_CASE("row reduction agrees with a naive eliminator") {
  Rng rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t columns = uniform(rng, 1, 7);
    const int rank = uniform(rng, 0, static_cast<int>(columns));
    const auto m = random_matrix(rng, uniform(rng, 0, 8), columns, rank);
    const auto fast = row_reduce(m, columns);
    const auto slow = naive_rref(m, columns);
    CHECK(fast.pivots == slow.pivots);
    CHECK(fast.rows == slow.rows);
  }
}

TEST_CASE("row reduction is idempotent and rank is invariant") {
  Rng rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t columns = uniform(rng, 1, 6);
    auto m = random_matrix(rng, uniform(rng, 1, 7), columns, uniform(rng, 0, static_cast<int>(columns)));
    const auto once = row_reduce(m, columns);
    const auto twice = row_reduce(once.rows, columns);
    CHECK(twice.rows == once.rows);
    CHECK(twice.pivots == once.pivots);

    std::shuffle(m.begin(), m.end(), rng);
    for (auto& row : m) {
      const Rational s = ratio(uniform(rng, 1, 9) * (uniform(rng, 0, 1) ? 1 : -1), uniform(rng, 1, 5));
      for (auto& x : row) x *= s;
    }
    const auto again = row_reduce(m, columns);
    CHECK(again.pivots == once.pivots);
    CHECK(again.rows == once.rows);
  }
}

TEST_CASE("row reduction leaves unit pivots and cleared columns") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t columns = uniform(rng, 2, 8);
    const auto r = row_reduce(random_matrix(rng, 6, columns, uniform(rng, 1, 5)), columns);
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
      for (std::size_t i = 0; i < r.rows.size(); ++i) CHECK(r.rows[i][r.pivots[k]] == (i == k ? 1 : 0));
    }
  }
}

TEST_CASE("relation set bookkeeping") {
  RelationSet rs(GenusContext(4), 2);
  CHECK(rs.basis().size() == 2);
  CHECK_THROWS_AS(rs.add_row({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(rs.add_relation(parse_kappa_polynomial("k3")), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(rs.rank()), std::logic_error);
  rs.add_relation(parse_kappa_polynomial("3*k1^2 - 32*k2"));
  CHECK(rs.to_vector(parse_kappa_polynomial("3*k1^2 - 32*k2")) == RationalVector{-32, 3});
  CHECK(rs.to_polynomial(RationalVector{-32, 3}) == parse_kappa_polynomial("3*k1^2 - 32*k2"));
  rs = reduce(rs);
  CHECK(rs.rank() == 1);
}

TEST_CASE("span membership") {
  const auto rs = with_rows(4, 2, {"3*k1^2 - 32*k2"});
  CHECK(span_contains(rs, RationalVector{0, 0}));
  CHECK(span_contains(rs, parse_kappa_polynomial("-6*k1^2 + 64*k2")));
  CHECK_FALSE(span_contains(rs, parse_kappa_polynomial("k2")));

  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    RelationSet random(GenusContext(9), 5);
    for (const auto& row : random_matrix(rng, 4, random.basis().size(), 3)) random.add_row(row);
    for (const auto& row : random.rows()) CHECK(span_contains(random, row));
  }
}

TEST_CASE("ideal extension") {
  const auto rs = with_rows(5, 3, {"k1^3 - 288*k3", "k1*k2 - 20*k3"});
  CHECK(ideal_extend(rs, 3).rows() == rs.rows());
  const auto up = reduce(ideal_extend(rs, 4));
  CHECK(up.degree() == 4);
  CHECK(up.rows().size() == 2);
  CHECK(ideal_extend(rs, 5).rows().size() == 2 * 2);
  CHECK(span_contains(up, parse_kappa_polynomial("k1^4 - 288*k1*k3")));
  CHECK(span_contains(up, parse_kappa_polynomial("k1^2*k2 - 20*k1*k3")));
  CHECK_FALSE(span_contains(up, parse_kappa_polynomial("k4")));
  CHECK_THROWS_AS(ideal_extend(rs, 2), std::invalid_argument);
}

TEST_CASE("canonical presentation") {
  const auto g5 = with_rows(5, 3, {"k1^3 - 288*k3", "5*k1^3 - 72*k1*k2"});
  const auto p = canonical_presentation(g5, KappaMonomial::kappa(3));
  REQUIRE(p.size() == 2);
  CHECK(p[0] == std::pair{KappaMonomial::from_parts(std::vector{1, 2}), Rational(20)});
  CHECK(p[1] == std::pair{KappaMonomial::kappa(1, 3), Rational(288)});

  const auto g6 = with_rows(6, 4,
                            {"5*k1^4 - 73728*k4", "5*k1^2*k2 - 4064*k4", "5*k2^2 - 226*k4", "k1*k3 - 32*k4"});
  for (const auto& [m, value] : canonical_presentation(g6, KappaMonomial::kappa(4))) {
    if (m == KappaMonomial::kappa(2, 2)) CHECK(value == ratio(226, 5));
    if (m == KappaMonomial::from_parts(std::vector{1, 3})) CHECK(value == 32);
  }

  // rescaled rows give the same numbers
  const auto scaled = with_rows(5, 3, {"-7*k1^3 + 2016*k3", "1/3*k1*k2 - 20/3*k3"});
  CHECK(canonical_presentation(scaled, KappaMonomial::kappa(3)) == p);
}

TEST_CASE("canonical presentation errors") {
  auto kind_of = [](const RelationSet& rs, const KappaMonomial& pivot) {
    try {
      canonical_presentation(rs, pivot);
    } catch (const PresentationError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  const auto deficit = with_rows(5, 3, {"k1^3 - 288*k3"});
  CHECK(kind_of(deficit, KappaMonomial::kappa(3)) == static_cast<int>(PresentationError::Kind::rank_deficit));
  const auto annihilated = with_rows(5, 3, {"k3", "k1*k2"});
  CHECK(kind_of(annihilated, KappaMonomial::kappa(3)) ==
        static_cast<int>(PresentationError::Kind::pivot_annihilated));
  CHECK(kind_of(annihilated, KappaMonomial::kappa(4)) == static_cast<int>(PresentationError::Kind::not_in_basis));
}

TEST_CASE("reduced relations are primitive with positive top coefficient") {
  const auto rs = with_rows(4, 2, {"-3/7*k1^2 + 32/7*k2"});
  const auto relations = reduced_relations(rs);
  REQUIRE(relations.size() == 1);
  CHECK(format(relations[0]) == "3*k1^2 - 32*k2");
}

TEST_CASE("convention flip of a relation set") {
  const auto rs = with_rows(4, 2, {"3*k1^2 + 32*k2"});
  CHECK(span_contains(flip_convention(rs), parse_kappa_polynomial("3*k1^2 - 32*k2")));
  CHECK_FALSE(span_contains(rs, parse_kappa_polynomial("3*k1^2 - 32*k2")));
}
