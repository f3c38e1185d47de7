#include "tautrel/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

namespace tautrel {

std::string PipelineSpec::label() const {
  std::string out = "n=" + std::to_string(n);
  if (multiplier) out += " x " + monomial_text(*multiplier);
  return out;
}

namespace {

std::vector<int> block_points(PointMask mask) {
  std::vector<int> out;
  for (PointMask rest = mask; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
  return out;
}

std::string point_name(int point) { return std::to_string(point + 1); }

std::string diagonal_text(int p, int q) {
  if (p < 9 && q < 9) return "v" + point_name(p) + point_name(q);
  return "v{" + point_name(p) + "," + point_name(q) + "}";
}

std::string power_text(const std::string& factor, int power) {
  return power == 1 ? factor : factor + "^" + std::to_string(power);
}

WeightedPartition canonical_under_relabeling(const WeightedPartition& x) {
  std::vector<int> perm(x.points());
  std::iota(perm.begin(), perm.end(), 0);
  WeightedPartition best = x;
  do {
    best = std::min(best, x.relabeled(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::string monomial_text(const WeightedPartition& x) {
  std::vector<std::string> factors;
  for (const Block& block : x.blocks()) {
    const auto points = block_points(block.points);
    const int extra = block.weight - static_cast<int>(points.size()) + 1;
    if (extra > 0) factors.push_back(power_text("e" + point_name(points.front()), extra));
    for (std::size_t i = 1; i < points.size(); ++i) factors.push_back(diagonal_text(points[i - 1], points[i]));
  }
  if (x.kappa1_power() > 0) factors.push_back(power_text("k1", x.kappa1_power()));
  if (factors.empty()) return "1";
  std::string out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out += "*" + factors[i];
  return out;
}

std::vector<WeightedPartition> multipliers_of_degree(int n, int k) {
  std::set<WeightedPartition> found;
  std::vector<Block> blocks;
  // Assign each point to an existing block, a new block, or no block; then
  // distribute the weight k over the blocks respecting the minimum weights.
  std::function<void(int)> place;
  std::function<void(std::size_t, int)> weigh = [&](std::size_t index, int remaining) {
    if (index == blocks.size()) {
      if (remaining == 0) found.insert(canonical_under_relabeling(WeightedPartition::from_blocks(n, blocks, 0)));
      return;
    }
    const int size = std::popcount(blocks[index].points);
    for (int w = std::max(1, size - 1); w <= remaining; ++w) {
      blocks[index].weight = w;
      weigh(index + 1, remaining - w);
    }
  };
  place = [&](int point) {
    if (point == n) {
      if (!blocks.empty()) weigh(0, k);
      return;
    }
    place(point + 1);
    for (auto& block : blocks) {
      block.points |= PointMask{1} << point;
      place(point + 1);
      block.points &= ~(PointMask{1} << point);
    }
    blocks.push_back(Block{PointMask{1} << point, 0});
    place(point + 1);
    blocks.pop_back();
  };
  if (k >= 1) place(0);
  return {found.begin(), found.end()};
}

std::vector<PipelineSpec> verification_pipelines(const GenusContext& ctx, int max_extra, int max_degree,
                                                 bool include_n4) {
  std::vector<PipelineSpec> out;
  if (include_n4 && relation_degree(ctx, 4, std::nullopt) >= 0) out.push_back({4, std::nullopt});
  out.push_back({3, std::nullopt});
  out.push_back({2, std::nullopt});
  for (int k = 1; k <= max_extra; ++k) {
    if (relation_degree(ctx, 2, std::nullopt) + k > max_degree) break;
    for (auto& m : multipliers_of_degree(2, k)) out.push_back({2, std::move(m)});
  }
  return out;
}

RelationVectorMap run_pipeline(const GenusContext& ctx, const PipelineSpec& spec, const ExpansionOptions& options,
                               const ResultCache* cache) {
  const CacheKey key{ctx.genus(), spec.n, spec.multiplier, options.orbit_reduction};
  if (cache != nullptr) {
    if (auto hit = cache->load(key)) return std::move(*hit);
  }
  RelationVectorMap map = expand_pushforward(ctx, spec.n, spec.multiplier, options);
  if (cache != nullptr) cache->store(key, map);
  return map;
}

RelationSet relation_set(const GenusContext& ctx, const RelationVectorMap& map) {
  RelationSet rs(ctx, map.degree);
  rs.add_relations(map);
  return reduce(std::move(rs));
}

VerifyReport verify_genus(const GoldenTable& table, const VerifySettings& settings, const ResultCache* cache) {
  const GenusContext ctx(table.genus);
  int max_degree = 0;
  for (const auto& entry : table.entries) max_degree = std::max(max_degree, entry.degree);
  std::vector<LabeledRelations> pipelines;
  for (const auto& spec : verification_pipelines(ctx, settings.max_extra, max_degree, settings.include_n4)) {
    const auto map = run_pipeline(ctx, spec, settings.expansion, cache);
    pipelines.push_back({spec.label(), relation_set(ctx, map)});
  }
  VerifyOptions options;
  options.ideal_extension = settings.ideal_extension;
  if (settings.include_n4) options.unattempted_routes.clear();
  return verify(table, pipelines, options);
}

}  // namespace tautrel
