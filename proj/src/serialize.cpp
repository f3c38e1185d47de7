#include "tautrel/serialize.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace tautrel {

Json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Json to_json(const KappaMonomial& m) {
  Json out = Json::array();
  for (const auto& [index, mult] : m.pairs()) out.push_back(Json::array({index, mult}));
  return out;
}

KappaMonomial kappa_monomial_from_json(const Json& j) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("kappa monomial pair must be [index,mult]");
    pairs.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i - 1].first >= pairs[i].first) throw std::invalid_argument("kappa monomial pairs must be sorted");
  }
  return KappaMonomial::from_pairs(pairs);
}

Json to_json(const WeightedPartition& x) {
  Json blocks = Json::array();
  for (const Block& block : x.blocks()) {
    Json points = Json::array();
    for (PointMask rest = block.points; rest != 0; rest &= rest - 1) points.push_back(std::countr_zero(rest) + 1);
    blocks.push_back(Json::array({points, block.weight}));
  }
  Json out;
  out["n"] = x.points();
  out["c"] = x.kappa1_power();
  out["blocks"] = blocks;
  return out;
}

WeightedPartition weighted_partition_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Block> blocks;
  for (const auto& entry : j.at("blocks")) {
    Block block;
    int previous = 0;
    for (const auto& p : entry.at(0)) {
      const int point = p.get<int>();
      if (point <= previous || point > n) throw std::invalid_argument("block points must be ascending in 1..n");
      previous = point;
      block.points |= PointMask{1} << (point - 1);
    }
    block.weight = entry.at(1).get<int>();
    blocks.push_back(block);
  }
  return WeightedPartition::from_blocks(n, std::move(blocks), j.at("c").get<int>());
}

namespace {

Json vector_json(const KappaPolynomial& p, const std::vector<KappaMonomial>& basis) {
  Json out = Json::array();
  for (const auto& m : basis) out.push_back(to_json(p.coefficient(m)));
  return out;
}

RelationSet in_convention(const RelationSet& rs, KappaConvention convention) {
  return convention == KappaConvention::algebraic ? reduce(flip_convention(rs)) : reduce(rs);
}

}  // namespace

Json to_json(const RelationVectorMap& map, KappaConvention convention) {
  const auto basis = basis_of_degree(map.degree);
  Json out;
  out["genus"] = map.genus;
  out["n"] = map.n;
  out["multiplier"] = map.multiplier ? to_json(*map.multiplier) : Json(nullptr);
  out["degree"] = map.degree;
  Json basis_json = Json::array();
  for (const auto& m : basis) basis_json.push_back(to_json(m));
  out["basis"] = basis_json;
  Json vectors = Json::object();
  for (const auto& [md, vec] : map.vectors) {
    const KappaPolynomial v = convention == KappaConvention::algebraic ? flip_convention(vec) : vec;
    vectors[format(md)] = vector_json(v, basis);
  }
  out["vectors"] = vectors;
  return out;
}

RelationVectorMap relation_map_from_json(const Json& j) {
  RelationVectorMap out;
  out.genus = j.at("genus").get<int>();
  out.n = j.at("n").get<int>();
  if (!j.at("multiplier").is_null()) out.multiplier = weighted_partition_from_json(j.at("multiplier"));
  out.degree = j.at("degree").get<int>();
  std::vector<KappaMonomial> basis;
  for (const auto& m : j.at("basis")) basis.push_back(kappa_monomial_from_json(m));
  if (basis != basis_of_degree(out.degree)) throw std::invalid_argument("basis does not match the degree");
  for (const auto& [key, values] : j.at("vectors").items()) {
    const Json exponents = Json::parse(key);
    if (!exponents.is_array() || static_cast<int>(exponents.size()) != out.n) {
      throw std::invalid_argument("bad multidegree key " + key);
    }
    const MultiDegree md(exponents.get<std::vector<int>>());
    if (values.size() != basis.size()) throw std::invalid_argument("vector length does not match the basis");
    KappaPolynomial vec;
    for (std::size_t i = 0; i < basis.size(); ++i) vec.add_term(basis[i], rational_from_json(values[i]));
    if (vec.is_zero()) throw std::invalid_argument("stored vectors must be nonzero");
    out.vectors.emplace(md, std::move(vec));
  }
  return out;
}

Json relations_report_json(const RelationVectorMap& map, const RelationSet& reduced, KappaConvention convention) {
  const RelationSet shown = in_convention(reduced, convention);
  Json out = to_json(map, convention);
  out["convention"] = std::string(to_string(convention));
  out["rank"] = shown.rank();
  out["pivots"] = shown.reduced()->pivots;
  Json relations = Json::array();
  for (const auto& relation : reduced_relations(shown)) {
    Json ints = Json::array();
    for (const auto& m : shown.basis()) ints.push_back(relation.coefficient(m).get_num().get_str());
    relations.push_back(ints);
  }
  out["relations"] = relations;
  return out;
}

std::string format_presentation(const KappaMonomial& m, const Rational& value, const KappaMonomial& pivot) {
  std::string lhs = format(m);
  if (value.get_den() != 1) lhs = value.get_den().get_str() + "*" + lhs;
  if (value == 0) return lhs + " = 0";
  std::string rhs = format(pivot);
  if (value.get_num() != 1) rhs = value.get_num().get_str() + "*" + rhs;
  return lhs + " = " + rhs;
}

std::string relations_report_text(const RelationVectorMap& map, const RelationSet& reduced,
                                  KappaConvention convention) {
  const RelationSet shown = in_convention(reduced, convention);
  std::ostringstream out;
  out << "# genus " << map.genus << ", points " << map.n << ", multiplier "
      << (map.multiplier ? format(*map.multiplier) : std::string("none")) << ", degree " << map.degree
      << ", convention " << to_string(convention) << "\n";
  out << "# rank " << shown.rank() << " of " << shown.basis().size() << "\n";
  for (const auto& relation : reduced_relations(shown)) out << format(relation) << " = 0\n";
  const KappaMonomial top = shown.basis().front();
  if (shown.basis().size() > 1 && shown.rank() + 1 == shown.basis().size()) {
    try {
      const auto presentation = canonical_presentation(shown, top);
      out << "# in terms of " << format(top) << "\n";
      for (const auto& [m, value] : presentation) out << format_presentation(m, value, top) << "\n";
    } catch (const PresentationError&) {
      out << "# " << format(top) << " lies in the span; no presentation in terms of it\n";
    }
  }
  return out.str();
}

std::string relations_report_csv(const RelationSet& reduced, KappaConvention convention) {
  const RelationSet shown = in_convention(reduced, convention);
  std::ostringstream out;
  out << "degree";
  for (const auto& m : shown.basis()) out << ',' << format(m);
  out << '\n';
  for (const auto& relation : reduced_relations(shown)) {
    out << shown.degree();
    for (const auto& m : shown.basis()) out << ',' << relation.coefficient(m).get_num().get_str();
    out << '\n';
  }
  return out.str();
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char ch : data) {
    hash ^= ch;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace tautrel
