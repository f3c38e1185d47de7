#pragma once

// Monomials e^a nu^b k1^c on the moduli space of genus-g surfaces with n
// ordered (not necessarily distinct) points, and their normal forms.
//
// Two monomials related by the moves
//   (i)  weight slides between an edge and an adjacent vertex,
//   (ii) edges xy, xz with no yz may trade one unit of weight for a new yz,
// have the same component data (point set, total weight) for every connected
// component of the weighted graph, and the fibre integral only sees that data.
// WeightedPartition stores exactly it. Points are 0-based in code and 1-based
// in every external format.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tautrel/kappa_ring.hpp"

namespace tautrel {

using PointMask = std::uint32_t;
inline constexpr int kMaxPoints = 32;

struct PointMonomial {
  int n = 0;
  std::vector<int> a;                   // exponent of e_i
  std::map<std::pair<int, int>, int> b;  // exponent of nu_ij, keys i < j, values >= 1
  int c = 0;                            // exponent of k1

  static PointMonomial unit(int n);

  int degree() const;
  /// Throws std::invalid_argument when an invariant is broken.
  void validate() const;
  /// Sets nu_ij^power (any order of i, j); power 0 erases.
  void set_edge(int i, int j, int power);
  int edge(int i, int j) const;

  PointMonomial operator*(const PointMonomial& other) const;
  /// Point i becomes point perm[i].
  PointMonomial relabeled(std::span<const int> perm) const;

  friend bool operator==(const PointMonomial&, const PointMonomial&) = default;
  friend auto operator<=>(const PointMonomial&, const PointMonomial&) = default;
};

struct Block {
  PointMask points = 0;
  int weight = 0;

  int size() const;
  int least_point() const;

  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;
};

class WeightedPartition {
 public:
  WeightedPartition() = default;
  /// The unit: no blocks, k1^c.
  explicit WeightedPartition(int n, int c = 0);

  /// Validates and canonicalizes (blocks sorted by least point). Blocks must
  /// be disjoint; a block of k points needs weight >= max(1, k - 1).
  static WeightedPartition from_blocks(int n, std::vector<Block> blocks, int c = 0);

  static WeightedPartition euler(int n, int i);
  static WeightedPartition diagonal(int n, int i, int j);
  static WeightedPartition kappa1(int n);

  int points() const { return n_; }
  int kappa1_power() const { return c_; }
  std::span<const Block> blocks() const { return blocks_; }
  /// Complex degree: total block weight plus c.
  int degree() const;
  PointMask used_points() const;
  bool all_points_used() const;

  WeightedPartition relabeled(std::span<const int> perm) const;

  friend bool operator==(const WeightedPartition&, const WeightedPartition&) = default;
  friend auto operator<=>(const WeightedPartition&, const WeightedPartition&) = default;

 private:
  int n_ = 0;
  std::vector<Block> blocks_;
  int c_ = 0;
};

WeightedPartition normal_form(const PointMonomial& m);

/// Blocks sharing a point merge and their weights add. Throws
/// std::invalid_argument if the point counts differ.
WeightedPartition nf_multiply(const WeightedPartition& x, const WeightedPartition& y);

/// Fibre integral to M_g: k1^c times the product over blocks of
/// k_{weight - #points}. Zero as soon as some point is in no block.
KappaPolynomial pushforward(const WeightedPartition& x, const GenusContext& ctx);

/// Grammar: factors separated by '*', each optionally raised with '^':
///   e<i>        Euler class at point i
///   v<i><j>     diagonal class, single-digit points
///   v{i,j}      diagonal class, any points
///   k1          first kappa class
///   1           the unit
/// Throws MonomialParseError (with the offending position) on bad syntax or
/// indices outside 1..n.
PointMonomial parse_point_monomial(std::string_view text, int n);

class MonomialParseError : public std::invalid_argument {
 public:
  MonomialParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Compact readable form, e.g. "{1,2}:3 {3}:1 k1^2"; the unit is "1".
std::string format(const WeightedPartition& x);

}  // namespace tautrel
