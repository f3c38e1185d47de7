#pragma once

// Reference computations that avoid the normal-form machinery, and the
// published relation tables used to check the optimized pipeline.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tautrel/kappa_ring.hpp"
#include "tautrel/omega_expansion.hpp"
#include "tautrel/point_algebra.hpp"
#include "tautrel/relation_solver.hpp"

namespace tautrel {

/// Fibre integral computed straight from the raw exponents: components of the
/// weighted graph by breadth-first search, then k_{w - v} per component.
KappaPolynomial brute_pushforward(const PointMonomial& m, const GenusContext& ctx);

class InstanceTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Expands Omega_A^{g+1} over raw point monomials with no collapsing and
/// pushes every monomial forward with brute_pushforward. Only g <= 4 and
/// n <= 2; throws InstanceTooLarge otherwise. Never orbit-reduced.
RelationVectorMap brute_expand(const GenusContext& ctx, int n);

/// Pushforward of (Omega_A evaluated at the numeric vector A)^{g+1} * multiplier,
/// over raw point monomials. Throws InstanceTooLarge for n > 4 or g > 8.
KappaPolynomial brute_numeric_pushforward(const GenusContext& ctx, std::span<const Rational> a_values,
                                          const PointMonomial* multiplier = nullptr);

// --- golden tables ---------------------------------------------------------

struct GoldenEntry {
  int genus = 0;
  int degree = 0;
  /// The published tables also list a relation that the method is known not
  /// to reach; it is kept as a negative control.
  bool expect_missing = false;
  KappaPolynomial lhs;
  KappaPolynomial rhs;

  KappaPolynomial relation() const { return lhs - rhs; }
  std::string text() const;  // "g=9 deg=7: 7*k1*k2*k4 = 97536*k7"
};

struct GoldenTable {
  int genus = 0;
  KappaConvention convention = KappaConvention::algebraic;
  std::vector<GoldenEntry> entries;
};

class GoldenFormatError : public std::runtime_error {
 public:
  GoldenFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("golden file line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NoGoldenData : public std::invalid_argument {
 public:
  explicit NoGoldenData(int genus) : std::invalid_argument("no golden data for genus " + std::to_string(genus)) {}
};

/// Line-oriented golden file: '#' comments, blank lines, one
/// "convention=<name>" directive and entries. write() reproduces a canonical
/// file byte for byte.
class GoldenFile {
 public:
  using Line = std::variant<std::string, GoldenEntry>;

  static GoldenFile parse(std::istream& in);
  static GoldenFile parse(const std::string& text);
  static GoldenFile load(const std::filesystem::path& path);
  /// The table shipped with the library.
  static const GoldenFile& builtin();

  void write(std::ostream& out) const;
  std::string str() const;

  KappaConvention convention() const { return convention_; }
  std::vector<int> genera() const;
  /// Throws NoGoldenData.
  GoldenTable table(int genus) const;

 private:
  KappaConvention convention_ = KappaConvention::algebraic;
  std::vector<Line> lines_;
};

/// Table for g from the built-in golden file.
GoldenTable golden_tables(int genus);

// --- verification ----------------------------------------------------------

/// Relations from one pipeline, in the topological convention.
struct LabeledRelations {
  std::string route;
  RelationSet relations;
};

struct EntryResult {
  GoldenEntry entry;
  bool found = false;
  std::string route;  // how it was found, or why it was not
};

struct VerifyReport {
  int genus = 0;
  std::vector<EntryResult> results;

  /// Every entry found, except negative controls which must stay missing.
  bool passed() const;
  std::size_t found_count() const;
  /// One line per entry: "FOUND   <entry>  [route]" / "MISSING <entry>  [...]".
  std::string format() const;
};

struct VerifyOptions {
  bool ideal_extension = true;
  /// Mentioned in MISSING lines so the reader knows what was not attempted.
  std::string unattempted_routes = "n=4 pipelines";
};

/// Checks every golden entry against the supplied relation spans: first each
/// pipeline of the entry's degree on its own, then their union, then the
/// ideal generated by all pipelines up to that degree.
VerifyReport verify(const GoldenTable& table, std::span<const LabeledRelations> pipelines,
                    const VerifyOptions& options = {});

}  // namespace tautrel
