// Command-line front end for the relation engine.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tautrel/cache.hpp"
#include "tautrel/oracle.hpp"
#include "tautrel/pipeline.hpp"
#include "tautrel/serialize.hpp"

namespace {

using namespace tautrel;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCacheCorrupt = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int genus = 0;
  int points = 3;
  std::string multiplier;
  std::string format = "text";
  std::string out;
  unsigned jobs = 1;
  std::string cache_dir;
  bool no_orbit_reduction = false;
  bool allow_n4 = false;
  std::string convention = "topological";
  int max_extra = 6;
  bool no_ideal = false;
  bool progress = false;
};

std::optional<ResultCache> open_cache(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) return ResultCache(cfg.cache_dir);
  if (auto dir = ResultCache::default_directory()) return ResultCache(*dir);
  return std::nullopt;
}

KappaConvention convention_of(const RunConfig& cfg) {
  try {
    return parse_convention(cfg.convention);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  file << text;
  if (!file) throw UsageError("cannot write " + cfg.out);
}

std::optional<WeightedPartition> parse_multiplier(const RunConfig& cfg) {
  if (cfg.multiplier.empty()) return std::nullopt;
  PointMonomial m;
  try {
    m = parse_point_monomial(cfg.multiplier, cfg.points);
  } catch (const MonomialParseError& e) {
    throw UsageError("--multiplier: " + std::string(e.what()));
  }
  if (m.c != 0) throw UsageError("--multiplier: k1 factors commute through the pushforward; multiply the relations instead");
  WeightedPartition nf = normal_form(m);
  if (nf.degree() == 0) return std::nullopt;
  return nf;
}

int cmd_relations(const RunConfig& cfg) {
  if (cfg.points == 4 && !cfg.allow_n4) throw UsageError("-n 4 is very expensive; pass --allow-n4 to run it");
  const KappaConvention convention = convention_of(cfg);
  const GenusContext ctx(cfg.genus);
  const PipelineSpec spec{cfg.points, parse_multiplier(cfg)};
  if (relation_degree(ctx, spec.n, spec.multiplier) < 0) {
    throw UsageError("relations would have negative degree for this genus and point count");
  }
  const auto cache = open_cache(cfg);
  const ExpansionOptions options{!cfg.no_orbit_reduction, cfg.jobs};

  const auto start = std::chrono::steady_clock::now();
  const RelationVectorMap map = run_pipeline(ctx, spec, options, cache ? &*cache : nullptr);
  const RelationSet reduced = relation_set(ctx, map);
  if (cfg.progress) {
    std::cerr << spec.label() << ": " << map.vectors.size() << " vectors, rank " << reduced.rank() << ", "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  }

  if (cfg.format == "json") {
    emit(cfg, relations_report_json(map, reduced, convention).dump(2) + "\n");
  } else if (cfg.format == "csv") {
    emit(cfg, relations_report_csv(reduced, convention));
  } else {
    emit(cfg, relations_report_text(map, reduced, convention));
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  GoldenTable table;
  try {
    table = golden_tables(cfg.genus);
  } catch (const NoGoldenData& e) {
    throw UsageError(e.what());
  }
  const auto cache = open_cache(cfg);
  VerifySettings settings;
  settings.max_extra = cfg.max_extra;
  settings.ideal_extension = !cfg.no_ideal;
  settings.include_n4 = cfg.allow_n4;
  settings.expansion = ExpansionOptions{!cfg.no_orbit_reduction, cfg.jobs};
  const VerifyReport report = verify_genus(table, settings, cache ? &*cache : nullptr);
  std::string text = report.format();
  text += "# " + std::to_string(report.found_count()) + " of " + std::to_string(report.results.size()) +
          " entries found; " + (report.passed() ? "verification passed" : "verification FAILED") + "\n";
  emit(cfg, text);
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_pushforward(const RunConfig& cfg, const std::string& expr) {
  const KappaConvention convention = convention_of(cfg);
  const GenusContext ctx(cfg.genus);
  PointMonomial m;
  try {
    m = parse_point_monomial(expr, cfg.points);
  } catch (const MonomialParseError& e) {
    std::string caret(e.position(), ' ');
    throw UsageError(std::string(e.what()) + "\n  " + expr + "\n  " + caret + "^");
  }
  KappaPolynomial result = pushforward(normal_form(m), ctx);
  if (convention == KappaConvention::algebraic) result = flip_convention(result);
  emit(cfg, format(result) + "\n");
  return kExitOk;
}

int cmd_cache_clear(const RunConfig& cfg) {
  const auto cache = open_cache(cfg);
  if (!cache) throw UsageError("no cache directory: pass --cache-dir or set TAUTREL_CACHE_DIR");
  const std::size_t removed = cache->clear();
  std::cout << "removed " << removed << " cache " << (removed == 1 ? "entry" : "entries") << " from "
            << cache->directory().string() << "\n";
  return kExitOk;
}

void add_run_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd.add_option("--cache-dir", cfg.cache_dir, "Result cache directory (default: $TAUTREL_CACHE_DIR)");
  cmd.add_flag("--no-orbit-reduction", cfg.no_orbit_reduction, "Compute every multidegree, not one per orbit");
  cmd.add_option("--out", cfg.out, "Write the output to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relations among kappa classes in the tautological ring of M_g"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string expr;

  auto* relations = app.add_subcommand("relations", "Expand one pipeline and print its reduced relations");
  relations->add_option("-g,--genus", cfg.genus, "Genus")->required()->check(CLI::Range(2, 40));
  relations->add_option("-n,--points", cfg.points, "Number of points")->check(CLI::Range(1, 4));
  relations->add_option("--multiplier", cfg.multiplier, "Point monomial multiplying Omega^(g+1), e.g. e1^2*v12");
  relations->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  relations->add_option("--convention", cfg.convention, "Kappa sign convention")
      ->check(CLI::IsMember({"topological", "algebraic"}));
  relations->add_flag("--allow-n4", cfg.allow_n4, "Permit the four-point pipeline");
  relations->add_flag("--progress", cfg.progress, "Report timing on stderr");
  add_run_options(*relations, cfg);

  auto* verify = app.add_subcommand("verify", "Check the published relation table for a genus");
  verify->add_option("-g,--genus", cfg.genus, "Genus")->required()->check(CLI::Range(2, 40));
  verify->add_option("--max-extra", cfg.max_extra, "Largest multiplier degree on two points")
      ->check(CLI::Range(0, 12));
  verify->add_flag("--no-ideal", cfg.no_ideal, "Do not multiply lower-degree relations up");
  verify->add_flag("--allow-n4", cfg.allow_n4, "Also run the four-point pipeline");
  add_run_options(*verify, cfg);

  auto* push = app.add_subcommand("pushforward", "Fibre integral of one point monomial");
  push->add_option("expr", expr, "Monomial, e.g. e1^2*v12*k1")->required();
  push->add_option("-g,--genus", cfg.genus, "Genus")->required()->check(CLI::Range(2, 1000));
  push->add_option("-n,--points", cfg.points, "Number of points")->required()->check(CLI::Range(1, 32));
  push->add_option("--convention", cfg.convention, "Kappa sign convention")
      ->check(CLI::IsMember({"topological", "algebraic"}));
  push->add_option("--out", cfg.out, "Write the output to this file");

  auto* cache = app.add_subcommand("cache", "Manage the result cache");
  cache->require_subcommand(1);
  auto* clear = cache->add_subcommand("clear", "Delete every cached result");
  clear->add_option("--cache-dir", cfg.cache_dir, "Result cache directory (default: $TAUTREL_CACHE_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*relations) return cmd_relations(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*push) return cmd_pushforward(cfg, expr);
    if (*clear) return cmd_cache_clear(cfg);
  } catch (const CacheCorruption& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "hint: delete the file or run `tautrel cache clear` to recompute\n";
    return kExitCacheCorrupt;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
