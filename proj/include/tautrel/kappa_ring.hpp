#pragma once

// Graded polynomial ring Q[k1, k2, ...] of kappa classes.
//
// Conventions: k0 is the Euler characteristic chi = 2 - 2g and k_i = 0 for
// i < 0. Both are applied eagerly by kappa_product, so stored monomials only
// ever involve indices >= 1.

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tautrel/rational.hpp"

namespace tautrel {

class GenusContext {
 public:
  /// Throws std::invalid_argument unless genus >= 2.
  explicit GenusContext(int genus);

  int genus() const { return genus_; }
  int chi() const { return chi_; }

  friend bool operator==(const GenusContext&, const GenusContext&) = default;

 private:
  int genus_;
  int chi_;
};

/// Sign convention for the kappa classes.
///
/// `topological`: k_i is the fibre integral of the (i+1)-st power of the
/// Euler class of the vertical tangent bundle. All computation happens here.
///
/// `algebraic`: the cotangent convention, k_i -> (-1)^(i+1) k_i. Published
/// tables of intersection numbers are usually written in this one.
enum class KappaConvention { topological, algebraic };

std::string_view to_string(KappaConvention convention);
KappaConvention parse_convention(std::string_view text);

class KappaMonomial {
 public:
  KappaMonomial() = default;

  static KappaMonomial kappa(int index, int power = 1);
  /// Sorted (index, multiplicity) pairs; indices >= 1, multiplicities >= 1.
  static KappaMonomial from_pairs(std::span<const std::pair<int, int>> pairs);
  /// Parts of a partition (any order), each >= 1.
  static KappaMonomial from_parts(std::span<const int> parts);

  int degree() const;
  /// Number of kappa factors counted with multiplicity.
  int length() const;
  int exponent(int index) const;
  int max_index() const { return static_cast<int>(exponents_.size()); }
  bool is_unit() const { return exponents_.empty(); }
  std::vector<std::pair<int, int>> pairs() const;

  KappaMonomial operator*(const KappaMonomial& other) const;

  friend bool operator==(const KappaMonomial&, const KappaMonomial&) = default;
  /// Degree first; within a degree the monomial with the larger exponent at
  /// the highest differing index comes first, so k_D < ... < k1^D.
  friend std::strong_ordering operator<=>(const KappaMonomial& lhs, const KappaMonomial& rhs);

 private:
  // exponents_[i - 1] is the multiplicity of k_i; no trailing zeros.
  std::vector<int> exponents_;
};

/// The sign (+1 or -1) that `m` picks up under k_i -> (-1)^(i+1) k_i.
int convention_sign(const KappaMonomial& m);

class KappaPolynomial {
 public:
  using Terms = std::map<KappaMonomial, Rational>;

  KappaPolynomial() = default;
  explicit KappaPolynomial(const Rational& scalar);
  static KappaPolynomial monomial(const KappaMonomial& m, const Rational& coefficient = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const KappaMonomial& m) const;
  /// Common degree of all terms; -1 for the zero polynomial, -2 if mixed.
  int homogeneous_degree() const;

  void add_term(const KappaMonomial& m, const Rational& coefficient);

  KappaPolynomial& operator+=(const KappaPolynomial& other);
  KappaPolynomial& operator-=(const KappaPolynomial& other);
  KappaPolynomial& operator*=(const Rational& scalar);
  KappaPolynomial operator-() const;

  friend KappaPolynomial operator+(KappaPolynomial lhs, const KappaPolynomial& rhs) { return lhs += rhs; }
  friend KappaPolynomial operator-(KappaPolynomial lhs, const KappaPolynomial& rhs) { return lhs -= rhs; }
  friend KappaPolynomial operator*(KappaPolynomial lhs, const Rational& s) { return lhs *= s; }
  friend KappaPolynomial operator*(const Rational& s, KappaPolynomial rhs) { return rhs *= s; }
  friend KappaPolynomial operator*(const KappaPolynomial& lhs, const KappaPolynomial& rhs);
  friend bool operator==(const KappaPolynomial&, const KappaPolynomial&) = default;

 private:
  Terms terms_;
};

/// Product of k_i over `indices` with k0 = chi and k_{<0} = 0 applied.
KappaPolynomial kappa_product(std::span<const int> indices, const GenusContext& ctx);

/// All monomials of degree D (partitions of D) in ascending monomial order:
/// k_D first, k1^D last.
std::vector<KappaMonomial> basis_of_degree(int degree);

/// Applies k_i -> (-1)^(i+1) k_i. The map is an involution, so it converts
/// in either direction.
KappaPolynomial flip_convention(const KappaPolynomial& p);

/// Primitive integer multiple of p whose highest monomial (the first term
/// `format` prints) has a positive coefficient.
KappaPolynomial primitive_form(const KappaPolynomial& p);

/// True iff a and b are nonzero and a = t * b for some rational t.
bool proportional(const KappaPolynomial& a, const KappaPolynomial& b);

/// "k1^2*k3"; the unit monomial prints as "1".
std::string format(const KappaMonomial& m);
/// Terms from the highest monomial down, e.g. "3*k1^2 - 32*k2"; zero is "0".
std::string format(const KappaPolynomial& p);

/// Parses the output grammar of `format` (integer or "p/q" coefficients,
/// factors k<i> with optional ^power). Throws std::invalid_argument.
KappaPolynomial parse_kappa_polynomial(std::string_view text);

}  // namespace tautrel
