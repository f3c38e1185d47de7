#pragma once

// Named pipelines (point count plus optional multiplier) and the standard
// set used to check a genus against its golden table.

#include <optional>
#include <string>
#include <vector>

#include "tautrel/cache.hpp"
#include "tautrel/omega_expansion.hpp"
#include "tautrel/oracle.hpp"

namespace tautrel {

struct PipelineSpec {
  int n = 0;
  std::optional<WeightedPartition> multiplier;

  std::string label() const;  // "n=2", "n=2 x e1^2*e2"
};

/// Multipliers with c = 0 and total weight k on n points, one per orbit of
/// the point permutations, in a fixed order.
std::vector<WeightedPartition> multipliers_of_degree(int n, int k);

/// Monomial text for a partition that parses back to it, e.g. "e1^2*v12".
/// A block with points p1 < ... < pk uses the path v_{p1p2}...v_{p(k-1)pk}
/// and puts the remaining weight on e_{p1}.
std::string monomial_text(const WeightedPartition& x);

/// n = 3, n = 2, and n = 2 times every multiplier of extra degree 1..max_extra
/// whose relations do not exceed max_degree; n = 4 first when requested.
std::vector<PipelineSpec> verification_pipelines(const GenusContext& ctx, int max_extra, int max_degree,
                                                 bool include_n4 = false);

/// Expands one pipeline, consulting the cache when given.
RelationVectorMap run_pipeline(const GenusContext& ctx, const PipelineSpec& spec, const ExpansionOptions& options,
                               const ResultCache* cache = nullptr);

/// Reduced relation set of a map.
RelationSet relation_set(const GenusContext& ctx, const RelationVectorMap& map);

struct VerifySettings {
  int max_extra = 6;
  bool ideal_extension = true;
  bool include_n4 = false;
  ExpansionOptions expansion;
};

/// Runs the verification pipelines for the table's genus and checks it.
VerifyReport verify_genus(const GoldenTable& table, const VerifySettings& settings,
                          const ResultCache* cache = nullptr);

}  // namespace tautrel
