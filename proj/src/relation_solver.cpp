#include "tautrel/relation_solver.hpp"

#include <algorithm>

namespace tautrel {

namespace {

std::vector<Integer> clear_denominators(const RationalVector& row) {
  Integer den_lcm = 1;
  for (const auto& v : row) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& v : row) out.push_back(v.get_num() * (den_lcm / v.get_den()));
  return out;
}

}  // namespace

ReducedForm row_reduce(const std::vector<RationalVector>& rows, std::size_t columns) {
  std::vector<std::vector<Integer>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != columns) throw std::invalid_argument("row_reduce: row length mismatch");
    auto integral = clear_denominators(row);
    if (std::any_of(integral.begin(), integral.end(), [](const Integer& x) { return x != 0; })) {
      m.push_back(std::move(integral));
    }
  }

  // Fraction-free forward elimination: after each step every entry below the
  // pivot rows is a minor of the original matrix, so the division is exact.
  std::vector<std::size_t> pivots;
  Integer previous = 1;
  Integer scratch;
  std::size_t r = 0;
  for (std::size_t col = 0; col < columns && r < m.size(); ++col) {
    std::size_t best = m.size();
    for (std::size_t i = r; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      if (best == m.size() || mpz_cmpabs(m[i][col].get_mpz_t(), m[best][col].get_mpz_t()) < 0) best = i;
    }
    if (best == m.size()) continue;
    std::swap(m[r], m[best]);
    const Integer& pivot = m[r][col];
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const Integer factor = m[i][col];
      for (std::size_t j = col + 1; j < columns; ++j) {
        mpz_mul(scratch.get_mpz_t(), pivot.get_mpz_t(), m[i][j].get_mpz_t());
        mpz_submul(scratch.get_mpz_t(), factor.get_mpz_t(), m[r][j].get_mpz_t());
        mpz_divexact(m[i][j].get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
      }
      m[i][col] = 0;
    }
    previous = pivot;
    pivots.push_back(col);
    ++r;
  }

  ReducedForm out;
  out.pivots = pivots;
  out.rows.reserve(r);
  for (std::size_t k = 0; k < r; ++k) {
    RationalVector row(columns);
    const Integer& pivot = m[k][pivots[k]];
    for (std::size_t j = 0; j < columns; ++j) {
      row[j] = Rational(m[k][j], pivot);
      row[j].canonicalize();
    }
    out.rows.push_back(std::move(row));
  }
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t col = out.pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      const Rational factor = out.rows[i][col];
      if (factor == 0) continue;
      for (std::size_t j = col; j < columns; ++j) {
        if (out.rows[k][j] != 0) out.rows[i][j] -= factor * out.rows[k][j];
      }
    }
  }
  return out;
}

// --- RelationSet -----------------------------------------------------------

RelationSet::RelationSet(const GenusContext& ctx, int degree)
    : ctx_(ctx), degree_(degree), basis_(basis_of_degree(degree)) {}

void RelationSet::add_row(RationalVector row) {
  if (row.size() != basis_.size()) throw std::invalid_argument("relation row has the wrong length");
  rows_.push_back(std::move(row));
  reduced_.reset();
}

RationalVector RelationSet::to_vector(const KappaPolynomial& p) const {
  const int d = p.homogeneous_degree();
  if (d != -1 && d != degree_) {
    throw std::invalid_argument("relation " + format(p) + " is not homogeneous of degree " +
                                std::to_string(degree_));
  }
  RationalVector row(basis_.size());
  for (const auto& [m, c] : p.terms()) {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), m);
    row[static_cast<std::size_t>(it - basis_.begin())] = c;
  }
  return row;
}

KappaPolynomial RelationSet::to_polynomial(std::span<const Rational> v) const {
  if (v.size() != basis_.size()) throw std::invalid_argument("vector has the wrong length");
  KappaPolynomial p;
  for (std::size_t j = 0; j < v.size(); ++j) p.add_term(basis_[j], v[j]);
  return p;
}

void RelationSet::add_relation(const KappaPolynomial& p) { add_row(to_vector(p)); }

void RelationSet::add_relations(const RelationVectorMap& map) {
  if (map.degree != degree_) throw std::invalid_argument("relation map has a different degree");
  for (const auto& [md, vec] : map.vectors) add_relation(vec);
}

void RelationSet::append(const RelationSet& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("cannot append relations of another degree");
  for (const auto& row : other.rows_) add_row(row);
}

std::size_t RelationSet::rank() const {
  if (!reduced_) throw std::logic_error("relation set is not reduced");
  return reduced_->pivots.size();
}

RelationSet reduce(RelationSet rs) {
  if (!rs.reduced_) rs.reduced_ = row_reduce(rs.rows_, rs.basis_.size());
  return rs;
}

bool span_contains(const RelationSet& rs, std::span<const Rational> v) {
  if (v.size() != rs.basis().size()) throw std::invalid_argument("vector has the wrong length");
  if (!rs.reduced()) return span_contains(reduce(rs), v);
  RationalVector rest(v.begin(), v.end());
  const auto& form = *rs.reduced();
  for (std::size_t k = 0; k < form.pivots.size(); ++k) {
    const Rational factor = rest[form.pivots[k]];
    if (factor == 0) continue;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (form.rows[k][j] != 0) rest[j] -= factor * form.rows[k][j];
    }
  }
  return std::all_of(rest.begin(), rest.end(), [](const Rational& x) { return x == 0; });
}

bool span_contains(const RelationSet& rs, const KappaPolynomial& p) { return span_contains(rs, rs.to_vector(p)); }

RelationSet ideal_extend(const RelationSet& rs, int target_degree) {
  if (target_degree < rs.degree()) throw std::invalid_argument("ideal_extend cannot lower the degree");
  if (target_degree == rs.degree()) return rs;
  RelationSet out(rs.context(), target_degree);
  const auto multipliers = basis_of_degree(target_degree - rs.degree());
  for (const auto& row : rs.rows()) {
    const KappaPolynomial relation = rs.to_polynomial(row);
    for (const auto& m : multipliers) out.add_relation(relation * KappaPolynomial::monomial(m));
  }
  return out;
}

RelationSet flip_convention(const RelationSet& rs) {
  RelationSet out(rs.context(), rs.degree());
  for (const auto& row : rs.rows()) {
    RationalVector flipped = row;
    for (std::size_t j = 0; j < flipped.size(); ++j) {
      if (convention_sign(rs.basis()[j]) < 0) flipped[j] = -flipped[j];
    }
    out.add_row(std::move(flipped));
  }
  return out;
}

std::vector<std::pair<KappaMonomial, Rational>> canonical_presentation(const RelationSet& rs,
                                                                       const KappaMonomial& pivot) {
  if (!rs.reduced()) return canonical_presentation(reduce(rs), pivot);
  const auto& basis = rs.basis();
  auto pivot_it = std::find(basis.begin(), basis.end(), pivot);
  if (pivot_it == basis.end()) {
    throw PresentationError(PresentationError::Kind::not_in_basis,
                            format(pivot) + " is not a monomial of degree " + std::to_string(rs.degree()));
  }
  const std::size_t rank = rs.rank();
  if (rank + 1 < basis.size()) {
    throw PresentationError(PresentationError::Kind::rank_deficit,
                            "rank deficit: " + std::to_string(rank) + " relations over " +
                                std::to_string(basis.size()) + " monomials");
  }
  const auto& form = *rs.reduced();
  // The quotient is at most one-dimensional; phi spans the annihilator of the
  // relation span.
  RationalVector phi(basis.size());
  if (rank + 1 == basis.size()) {
    std::vector<bool> is_pivot(basis.size(), false);
    for (auto p : form.pivots) is_pivot[p] = true;
    const auto free_col =
        static_cast<std::size_t>(std::find(is_pivot.begin(), is_pivot.end(), false) - is_pivot.begin());
    phi[free_col] = 1;
    for (std::size_t k = 0; k < form.pivots.size(); ++k) phi[form.pivots[k]] = -form.rows[k][free_col];
  }
  const std::size_t pivot_col = static_cast<std::size_t>(pivot_it - basis.begin());
  if (phi[pivot_col] == 0) {
    throw PresentationError(PresentationError::Kind::pivot_annihilated,
                            format(pivot) + " lies in the relation span");
  }
  std::vector<std::pair<KappaMonomial, Rational>> out;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (j != pivot_col) out.emplace_back(basis[j], phi[j] / phi[pivot_col]);
  }
  return out;
}

std::vector<KappaPolynomial> reduced_relations(const RelationSet& rs) {
  if (!rs.reduced()) return reduced_relations(reduce(rs));
  std::vector<KappaPolynomial> out;
  for (const auto& row : rs.reduced()->rows) out.push_back(primitive_form(rs.to_polynomial(row)));
  return out;
}

}  // namespace tautrel
