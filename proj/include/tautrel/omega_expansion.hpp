#pragma once

// Expansion of Omega_A^{g+1} on the n-pointed space as a polynomial in the
// integer vector A = (A_1, ..., A_n), followed by fibre integration of every
// A-coefficient. Each resulting kappa polynomial vanishes in R^*(M_g).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tautrel/kappa_ring.hpp"
#include "tautrel/point_algebra.hpp"

namespace tautrel {

/// Exponent vector of a monomial A_1^{m_1} ... A_n^{m_n}, packed one byte per
/// point. Ordering is lexicographic on the exponents for a fixed n.
class MultiDegree {
 public:
  static constexpr int kMaxPoints = 8;
  static constexpr int kMaxExponent = 255;

  MultiDegree() = default;
  explicit MultiDegree(std::span<const int> exponents);
  MultiDegree(std::initializer_list<int> exponents);
  static MultiDegree zero(int n);

  int size() const { return n_; }
  int operator[](int i) const { return static_cast<int>(packed_ >> shift(i) & 0xff); }
  int total() const;
  std::vector<int> exponents() const;

  /// No overflow check; callers keep exponents <= kMaxExponent.
  MultiDegree operator+(const MultiDegree& other) const {
    MultiDegree out = *this;
    out.packed_ += other.packed_;
    return out;
  }
  /// Exponent of point i moves to point perm[i].
  MultiDegree permuted(std::span<const int> perm) const;

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend std::strong_ordering operator<=>(const MultiDegree&, const MultiDegree&) = default;

 private:
  static int shift(int i) { return 8 * (kMaxPoints - 1 - i); }

  std::uint64_t packed_ = 0;
  std::uint8_t n_ = 0;
};

std::string format(const MultiDegree& md);  // "[8,0]"

/// Polynomial in A_1..A_n with integer coefficients.
class APolynomial {
 public:
  using Terms = std::map<MultiDegree, Integer>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const MultiDegree& md, const Integer& coefficient);
  /// this += p * q
  void add_product(const APolynomial& p, const APolynomial& q);
  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const APolynomial&, const APolynomial&) = default;

 private:
  Terms terms_;
};

struct OmegaGenerator {
  WeightedPartition factor;  // e_i, nu_ij or k1
  APolynomial coefficient;   // homogeneous quadratic in A
};

/// Omega_A = sum_i (chi^2 A_i^2 - 2 d_A chi A_i) e_i + 2 chi^2 sum_{i<j} A_i A_j nu_ij
///           + d_A^2 k1, with d_A = sum_i A_i expanded symbolically.
struct OmegaForm {
  int genus = 0;
  int n = 0;
  std::vector<OmegaGenerator> generators;  // e_1..e_n, nu_12, nu_13, ..., nu_{n-1,n}, k1
};

OmegaForm build_omega(const GenusContext& ctx, int n);

struct ExpansionOptions {
  /// Keep only orbit representatives (lexicographically largest multidegree
  /// in its orbit under the point permutations fixing the multiplier).
  bool orbit_reduction = true;
  unsigned jobs = 1;
};

struct RelationVectorMap {
  int genus = 0;
  int n = 0;
  std::optional<WeightedPartition> multiplier;
  int degree = 0;
  bool orbit_reduced = false;
  /// Only nonzero vectors are stored; each is homogeneous of `degree`.
  std::map<MultiDegree, KappaPolynomial> vectors;

  friend bool operator==(const RelationVectorMap&, const RelationVectorMap&) = default;
};

/// Kappa degree of the relations produced by Omega_A^{g+1} * multiplier.
int relation_degree(const GenusContext& ctx, int n, const std::optional<WeightedPartition>& multiplier);

/// Pushes Omega_A^{g+1} * multiplier forward to M_g, one kappa polynomial per
/// A-multidegree. Throws std::invalid_argument if the relation degree would
/// be negative or the multiplier has a k1 factor or a different point count.
RelationVectorMap expand_pushforward(const GenusContext& ctx, int n,
                                     const std::optional<WeightedPartition>& multiplier = std::nullopt,
                                     const ExpansionOptions& options = {});

/// Point permutations (perm[i] = image of point i) fixing the multiplier.
std::vector<std::vector<int>> symmetry_group(int n, const std::optional<WeightedPartition>& multiplier);

/// Expands an orbit-reduced map to every multidegree; full maps pass through.
RelationVectorMap with_full_orbits(const RelationVectorMap& map);

/// sum over multidegrees of vector * A^multidegree.
KappaPolynomial evaluate_at(const RelationVectorMap& map, std::span<const Rational> a_values);

/// The closed-form relation obtained by multiplying Morita's class on the
/// one-pointed space by e^k:
///   sum_{i=-1}^{g} binom(g+1, i+1) (k1 / (chi (chi - 2)))^{g-i} k_{i+k},
/// scaled to a primitive integer vector.
KappaPolynomial morita_relation(const GenusContext& ctx, int k);

/// Polynomial in the elementary symmetric functions s1 = A_1 + A_2 and
/// s2 = A_1 A_2, keyed by (power of s1, power of s2).
struct SymmetricPolynomial {
  std::map<std::pair<int, int>, Rational> terms;

  /// Keeps the s1-free terms, keyed by the power of s2.
  std::map<int, Rational> at_s1_zero() const;
};

/// Rewrites a symmetric polynomial in A_1, A_2 in terms of s1, s2. Throws
/// std::invalid_argument if the input is not symmetric.
SymmetricPolynomial symmetric_reduce(const std::map<MultiDegree, Rational>& poly);

/// Coefficient of k_{g-1} in the pushforward of Omega_A^{g+1} for n = 2, as a
/// polynomial in s2 after setting s1 = 0.
std::map<int, Rational> kappa_gm1_coefficient(const GenusContext& ctx, unsigned jobs = 1);

}  // namespace tautrel
