#pragma once

// Exact linear algebra on relation vectors of a fixed kappa degree.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tautrel/kappa_ring.hpp"
#include "tautrel/omega_expansion.hpp"

namespace tautrel {

using RationalVector = std::vector<Rational>;

struct ReducedForm {
  /// Nonzero rows of the reduced row echelon form, one per pivot.
  std::vector<RationalVector> rows;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form of `rows` (each of length `columns`).
///
/// Forward pass is fraction-free (Bareiss) on the integer rows obtained by
/// clearing denominators, with the pivot taken in the leftmost usable column
/// at the row of smallest magnitude. Back-substitution is in rationals.
ReducedForm row_reduce(const std::vector<RationalVector>& rows, std::size_t columns);

class RelationSet {
 public:
  RelationSet(const GenusContext& ctx, int degree);

  const GenusContext& context() const { return ctx_; }
  int degree() const { return degree_; }
  const std::vector<KappaMonomial>& basis() const { return basis_; }
  const std::vector<RationalVector>& rows() const { return rows_; }
  const std::optional<ReducedForm>& reduced() const { return reduced_; }

  /// Throws std::invalid_argument on a length mismatch.
  void add_row(RationalVector row);
  /// Throws std::invalid_argument unless p is zero or homogeneous of degree().
  void add_relation(const KappaPolynomial& p);
  /// Adds every vector of the map; the map's degree must match.
  void add_relations(const RelationVectorMap& map);
  void append(const RelationSet& other);

  RationalVector to_vector(const KappaPolynomial& p) const;
  KappaPolynomial to_polynomial(std::span<const Rational> v) const;

  /// Number of pivots; throws std::logic_error if not reduced.
  std::size_t rank() const;

  friend RelationSet reduce(RelationSet rs);

 private:
  GenusContext ctx_;
  int degree_;
  std::vector<KappaMonomial> basis_;
  std::vector<RationalVector> rows_;
  std::optional<ReducedForm> reduced_;
};

/// Attaches the reduced form. Rows are kept as given.
RelationSet reduce(RelationSet rs);

/// True iff v reduces to zero against the span of rs (reducing a copy of rs
/// first if necessary).
bool span_contains(const RelationSet& rs, std::span<const Rational> v);
bool span_contains(const RelationSet& rs, const KappaPolynomial& p);

/// Rows r * m for every row r and every monomial m of degree
/// target_degree - rs.degree(). Throws std::invalid_argument if the target is
/// below rs.degree().
RelationSet ideal_extend(const RelationSet& rs, int target_degree);

/// Same span with every column rescaled by k_i -> (-1)^(i+1) k_i.
RelationSet flip_convention(const RelationSet& rs);

class PresentationError : public std::runtime_error {
 public:
  enum class Kind { rank_deficit, pivot_annihilated, not_in_basis };
  PresentationError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// For a span of codimension one not containing `pivot`: the unique M with
/// m = M * pivot modulo the span, for every other basis monomial m, in basis
/// order.
std::vector<std::pair<KappaMonomial, Rational>> canonical_presentation(const RelationSet& rs,
                                                                       const KappaMonomial& pivot);

/// Reduced rows as primitive integer relations (see primitive_form).
std::vector<KappaPolynomial> reduced_relations(const RelationSet& rs);

}  // namespace tautrel
