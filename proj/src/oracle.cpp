#include "tautrel/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <regex>
#include <sstream>

namespace tautrel {

namespace detail {
extern const char kBuiltinGoldenTables[];
}

// --- brute force -----------------------------------------------------------

KappaPolynomial brute_pushforward(const PointMonomial& m, const GenusContext& ctx) {
  m.validate();
  const int n = m.n;
  std::vector<std::vector<int>> adjacent(n);
  for (const auto& [edge, w] : m.b) {
    adjacent[edge.first].push_back(edge.second);
    adjacent[edge.second].push_back(edge.first);
  }
  std::vector<int> component(n, -1);
  std::vector<int> weight;
  std::vector<int> vertices;
  for (int start = 0; start < n; ++start) {
    if (component[start] != -1) continue;
    const int id = static_cast<int>(weight.size());
    weight.push_back(0);
    vertices.push_back(0);
    std::queue<int> frontier;
    frontier.push(start);
    component[start] = id;
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      ++vertices[id];
      weight[id] += m.a[v];
      for (int u : adjacent[v]) {
        if (component[u] == -1) {
          component[u] = id;
          frontier.push(u);
        }
      }
    }
  }
  for (const auto& [edge, w] : m.b) weight[component[edge.first]] += w;

  // An isolated unweighted vertex contributes k_{0-1} = 0; kappa_product
  // handles that through the negative index.
  std::vector<int> indices(static_cast<std::size_t>(m.c), 1);
  for (std::size_t id = 0; id < weight.size(); ++id) indices.push_back(weight[id] - vertices[id]);
  return kappa_product(indices, ctx);
}

namespace {

APolynomial constant(const Integer& c, int n) {
  APolynomial p;
  p.add_term(MultiDegree::zero(n), c);
  return p;
}

APolynomial variable(int i, int n) {
  std::vector<int> e(n, 0);
  e[i] = 1;
  APolynomial p;
  p.add_term(MultiDegree(e), 1);
  return p;
}

APolynomial times(const APolynomial& p, const APolynomial& q) {
  APolynomial out;
  out.add_product(p, q);
  return out;
}

APolynomial plus(APolynomial p, const APolynomial& q) {
  for (const auto& [md, c] : q.terms()) p.add_term(md, c);
  return p;
}

template <class Coefficient>
struct RawGenerator {
  PointMonomial monomial;
  Coefficient coefficient;
};

// Omega_A over raw monomials, straight from the defining formula.
std::vector<RawGenerator<APolynomial>> raw_symbolic_omega(const GenusContext& ctx, int n) {
  const Integer chi = ctx.chi();
  APolynomial d;
  for (int i = 0; i < n; ++i) d = plus(d, variable(i, n));
  std::vector<RawGenerator<APolynomial>> gens;
  for (int i = 0; i < n; ++i) {
    PointMonomial e = PointMonomial::unit(n);
    e.a[i] = 1;
    const APolynomial ai = variable(i, n);
    APolynomial coeff = times(constant(chi * chi, n), times(ai, ai));
    coeff = plus(coeff, times(constant(-2 * chi, n), times(d, ai)));
    gens.push_back({e, coeff});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      PointMonomial nu = PointMonomial::unit(n);
      nu.set_edge(i, j, 1);
      gens.push_back({nu, times(constant(2 * chi * chi, n), times(variable(i, n), variable(j, n)))});
    }
  }
  PointMonomial k1 = PointMonomial::unit(n);
  k1.c = 1;
  gens.push_back({k1, times(d, d)});
  return gens;
}

}  // namespace

RelationVectorMap brute_expand(const GenusContext& ctx, int n) {
  if (ctx.genus() > 4 || n < 1 || n > 2) {
    throw InstanceTooLarge("instance too large for brute_expand (needs g <= 4, 1 <= n <= 2)");
  }
  const auto gens = raw_symbolic_omega(ctx, n);
  std::map<PointMonomial, APolynomial> state;
  state[PointMonomial::unit(n)].add_term(MultiDegree::zero(n), 1);
  for (int step = 0; step <= ctx.genus(); ++step) {
    std::map<PointMonomial, APolynomial> next;
    for (const auto& [m, poly] : state) {
      for (const auto& gen : gens) next[m * gen.monomial].add_product(poly, gen.coefficient);
    }
    state = std::move(next);
  }
  RelationVectorMap out;
  out.genus = ctx.genus();
  out.n = n;
  out.degree = ctx.genus() + 1 - n;
  for (const auto& [m, poly] : state) {
    const KappaPolynomial pushed = brute_pushforward(m, ctx);
    if (pushed.is_zero()) continue;
    for (const auto& [md, c] : poly.terms()) out.vectors[md] += pushed * Rational(c);
  }
  std::erase_if(out.vectors, [](const auto& entry) { return entry.second.is_zero(); });
  return out;
}

KappaPolynomial brute_numeric_pushforward(const GenusContext& ctx, std::span<const Rational> a_values,
                                          const PointMonomial* multiplier) {
  const int n = static_cast<int>(a_values.size());
  if (n < 1 || n > 4 || ctx.genus() > 8) {
    throw InstanceTooLarge("instance too large for brute_numeric_pushforward (needs g <= 8, 1 <= n <= 4)");
  }
  const Rational chi = ctx.chi();
  Rational d = 0;
  for (const auto& a : a_values) d += a;
  std::vector<RawGenerator<Rational>> gens;
  for (int i = 0; i < n; ++i) {
    PointMonomial e = PointMonomial::unit(n);
    e.a[i] = 1;
    gens.push_back({e, chi * chi * a_values[i] * a_values[i] - 2 * d * chi * a_values[i]});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      PointMonomial nu = PointMonomial::unit(n);
      nu.set_edge(i, j, 1);
      gens.push_back({nu, 2 * chi * chi * a_values[i] * a_values[j]});
    }
  }
  PointMonomial k1 = PointMonomial::unit(n);
  k1.c = 1;
  gens.push_back({k1, d * d});

  std::map<PointMonomial, Rational> state;
  state[multiplier ? *multiplier : PointMonomial::unit(n)] = 1;
  for (int step = 0; step <= ctx.genus(); ++step) {
    std::map<PointMonomial, Rational> next;
    for (const auto& [m, c] : state) {
      for (const auto& gen : gens) {
        if (gen.coefficient != 0) next[m * gen.monomial] += c * gen.coefficient;
      }
    }
    state = std::move(next);
  }
  KappaPolynomial out;
  for (const auto& [m, c] : state) {
    if (c != 0) out += brute_pushforward(m, ctx) * c;
  }
  return out;
}

// --- golden file -----------------------------------------------------------

std::string GoldenEntry::text() const {
  std::string out = "g=" + std::to_string(genus) + " deg=" + std::to_string(degree);
  if (expect_missing) out += " expect=missing";
  return out + ": " + format(lhs) + " = " + format(rhs);
}

GoldenFile GoldenFile::parse(std::istream& in) {
  static const std::regex entry_re(R"(^g=(\d+) deg=(\d+)( expect=missing)?: (.+) = (.+)$)");
  static const std::regex convention_re(R"(^convention=(\w+)$)");
  GoldenFile file;
  bool have_convention = false;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line[0] == '#') {
      file.lines_.emplace_back(line);
      continue;
    }
    std::smatch match;
    if (std::regex_match(line, match, convention_re)) {
      if (have_convention) throw GoldenFormatError(number, "duplicate convention directive");
      try {
        file.convention_ = parse_convention(match[1].str());
      } catch (const std::invalid_argument& e) {
        throw GoldenFormatError(number, e.what());
      }
      have_convention = true;
      file.lines_.emplace_back(line);
      continue;
    }
    if (!std::regex_match(line, match, entry_re)) throw GoldenFormatError(number, "unrecognized line '" + line + "'");
    GoldenEntry entry;
    entry.genus = std::stoi(match[1].str());
    entry.degree = std::stoi(match[2].str());
    entry.expect_missing = match[3].matched;
    try {
      entry.lhs = parse_kappa_polynomial(match[4].str());
      entry.rhs = parse_kappa_polynomial(match[5].str());
    } catch (const std::invalid_argument& e) {
      throw GoldenFormatError(number, e.what());
    }
    const int d = entry.relation().homogeneous_degree();
    if (d != entry.degree) throw GoldenFormatError(number, "entry is not homogeneous of the stated degree");
    if (entry.text() != line) throw GoldenFormatError(number, "entry is not in canonical form: '" + entry.text() + "'");
    file.lines_.emplace_back(std::move(entry));
  }
  if (!have_convention) throw GoldenFormatError(number, "missing convention directive");
  return file;
}

GoldenFile GoldenFile::parse(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

GoldenFile GoldenFile::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file " + path.string());
  return parse(in);
}

const GoldenFile& GoldenFile::builtin() {
  static const GoldenFile file = parse(std::string(detail::kBuiltinGoldenTables));
  return file;
}

void GoldenFile::write(std::ostream& out) const {
  for (const auto& line : lines_) {
    if (const auto* text = std::get_if<std::string>(&line)) {
      out << *text << '\n';
    } else {
      out << std::get<GoldenEntry>(line).text() << '\n';
    }
  }
}

std::string GoldenFile::str() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

std::vector<int> GoldenFile::genera() const {
  std::vector<int> out;
  for (const auto& line : lines_) {
    if (const auto* entry = std::get_if<GoldenEntry>(&line)) {
      if (std::find(out.begin(), out.end(), entry->genus) == out.end()) out.push_back(entry->genus);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GoldenTable GoldenFile::table(int genus) const {
  GoldenTable table{genus, convention_, {}};
  for (const auto& line : lines_) {
    if (const auto* entry = std::get_if<GoldenEntry>(&line); entry && entry->genus == genus) {
      table.entries.push_back(*entry);
    }
  }
  if (table.entries.empty()) throw NoGoldenData(genus);
  return table;
}

GoldenTable golden_tables(int genus) { return GoldenFile::builtin().table(genus); }

// --- verification ----------------------------------------------------------

bool VerifyReport::passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const EntryResult& r) { return r.entry.expect_missing || r.found; });
}

std::size_t VerifyReport::found_count() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const EntryResult& r) { return r.found; }));
}

std::string VerifyReport::format() const {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.found ? "FOUND   " : "MISSING ") << r.entry.text() << "  [" << r.route << "]\n";
  }
  return out.str();
}

namespace {

// Same span, stored as its reduced rows only.
RelationSet compact(const RelationSet& rs) {
  const RelationSet reduced = reduce(rs);
  RelationSet out(rs.context(), rs.degree());
  for (const auto& row : reduced.reduced()->rows) out.add_row(row);
  return reduce(std::move(out));
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

}  // namespace

VerifyReport verify(const GoldenTable& table, std::span<const LabeledRelations> pipelines,
                    const VerifyOptions& options) {
  std::vector<LabeledRelations> spans;
  spans.reserve(pipelines.size());
  for (const auto& p : pipelines) spans.push_back({p.route, compact(p.relations)});

  std::map<int, std::pair<RelationSet, std::string>> unions;
  std::map<int, std::pair<RelationSet, std::string>> ideals;
  auto union_at = [&](int degree) -> const std::pair<RelationSet, std::string>& {
    auto it = unions.find(degree);
    if (it != unions.end()) return it->second;
    RelationSet all(GenusContext(table.genus), degree);
    std::vector<std::string> labels;
    for (const auto& s : spans) {
      if (s.relations.degree() == degree) {
        all.append(s.relations);
        labels.push_back(s.route);
      }
    }
    return unions.emplace(degree, std::pair{compact(all), "union of " + join(labels, ", ")}).first->second;
  };
  auto ideal_at = [&](int degree) -> const std::pair<RelationSet, std::string>& {
    auto it = ideals.find(degree);
    if (it != ideals.end()) return it->second;
    RelationSet all(GenusContext(table.genus), degree);
    std::vector<std::string> labels;
    for (const auto& s : spans) {
      if (s.relations.degree() <= degree) {
        all.append(ideal_extend(s.relations, degree));
        labels.push_back(s.route + " (deg " + std::to_string(s.relations.degree()) + ")");
      }
    }
    return ideals.emplace(degree, std::pair{compact(all), "ideal generated by " + join(labels, ", ")})
        .first->second;
  };

  VerifyReport report;
  report.genus = table.genus;
  for (const auto& entry : table.entries) {
    EntryResult result{entry, false, {}};
    const KappaPolynomial target =
        table.convention == KappaConvention::algebraic ? flip_convention(entry.relation()) : entry.relation();
    std::vector<std::string> same_degree;
    for (const auto& s : spans) {
      if (s.relations.degree() != entry.degree) continue;
      same_degree.push_back(s.route);
      if (!result.found && span_contains(s.relations, target)) {
        result.found = true;
        result.route = s.route;
      }
    }
    if (!result.found && same_degree.size() > 1) {
      const auto& [rs, label] = union_at(entry.degree);
      if (span_contains(rs, target)) {
        result.found = true;
        result.route = label;
      }
    }
    if (!result.found && options.ideal_extension) {
      const auto& [rs, label] = ideal_at(entry.degree);
      if (span_contains(rs, target)) {
        result.found = true;
        result.route = label;
      }
    }
    if (!result.found) {
      std::vector<std::string> tried = same_degree;
      if (options.ideal_extension) tried.push_back("ideal extension");
      result.route = (entry.expect_missing ? "expected; " : "") + std::string("not reached by ") +
                     (tried.empty() ? std::string("any pipeline of this degree") : join(tried, ", "));
      if (!options.unattempted_routes.empty()) result.route += "; not attempted: " + options.unattempted_routes;
    } else if (entry.expect_missing) {
      result.route += "; listed as undetected";
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

}  // namespace tautrel
