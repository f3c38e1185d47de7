#include "tautrel/omega_expansion.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace tautrel {

// --- MultiDegree -----------------------------------------------------------

MultiDegree::MultiDegree(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxPoints)) {
    throw std::invalid_argument("multidegree supports at most " + std::to_string(kMaxPoints) + " points");
  }
  n_ = static_cast<std::uint8_t>(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const int e = exponents[i];
    if (e < 0 || e > kMaxExponent) throw std::invalid_argument("multidegree exponent out of range");
    packed_ |= static_cast<std::uint64_t>(e) << shift(static_cast<int>(i));
  }
}

MultiDegree::MultiDegree(std::initializer_list<int> exponents)
    : MultiDegree(std::span<const int>(exponents.begin(), exponents.size())) {}

MultiDegree MultiDegree::zero(int n) { return MultiDegree(std::vector<int>(n, 0)); }

int MultiDegree::total() const {
  int sum = 0;
  for (int i = 0; i < n_; ++i) sum += (*this)[i];
  return sum;
}

std::vector<int> MultiDegree::exponents() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = (*this)[i];
  return out;
}

MultiDegree MultiDegree::permuted(std::span<const int> perm) const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[perm[i]] = (*this)[i];
  return MultiDegree(out);
}

std::string format(const MultiDegree& md) {
  std::string out = "[";
  for (int i = 0; i < md.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(md[i]);
  }
  return out + "]";
}

// --- APolynomial -----------------------------------------------------------

void APolynomial::add_term(const MultiDegree& md, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(md, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void APolynomial::add_product(const APolynomial& p, const APolynomial& q) {
  Integer product;
  for (const auto& [md1, c1] : p.terms_) {
    for (const auto& [md2, c2] : q.terms_) {
      mpz_mul(product.get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
      add_term(md1 + md2, product);
    }
  }
}

Rational APolynomial::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& [md, c] : terms_) {
    Rational term(c);
    for (int i = 0; i < md.size(); ++i) term *= power(point[i], md[i]);
    sum += term;
  }
  return sum;
}

// --- Omega ----------------------------------------------------------------

namespace {

MultiDegree quadratic(int n, int i, int j) {
  std::vector<int> e(n, 0);
  ++e[i];
  ++e[j];
  return MultiDegree(e);
}

void check_point_count(int n) {
  if (n < 1 || n > MultiDegree::kMaxPoints) {
    throw std::invalid_argument("number of points must be in 1.." + std::to_string(MultiDegree::kMaxPoints));
  }
}

}  // namespace

OmegaForm build_omega(const GenusContext& ctx, int n) {
  check_point_count(n);
  const Integer chi = ctx.chi();
  OmegaForm omega{ctx.genus(), n, {}};
  for (int i = 0; i < n; ++i) {
    APolynomial q;
    q.add_term(quadratic(n, i, i), chi * chi - 2 * chi);
    for (int j = 0; j < n; ++j) {
      if (j != i) q.add_term(quadratic(n, i, j), -2 * chi);
    }
    omega.generators.push_back({WeightedPartition::euler(n, i), std::move(q)});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      APolynomial q;
      q.add_term(quadratic(n, i, j), 2 * chi * chi);
      omega.generators.push_back({WeightedPartition::diagonal(n, i, j), std::move(q)});
    }
  }
  APolynomial d_squared;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) d_squared.add_term(quadratic(n, i, j), 1);
  }
  omega.generators.push_back({WeightedPartition::kappa1(n), std::move(d_squared)});
  return omega;
}

// --- expansion -------------------------------------------------------------

namespace {

using State = std::map<WeightedPartition, APolynomial>;
using StateEntry = const State::value_type*;

// Runs work(begin, end) over [0, count) split into at most `jobs` contiguous
// chunks and returns the per-chunk results in chunk order.
template <class Result, class Work>
std::vector<Result> run_chunked(std::size_t count, unsigned jobs, Work work) {
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  std::vector<Result> results(chunks);
  if (chunks == 1) {
    results[0] = work(0, count);
    return results;
  }
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = count * c / chunks;
    const std::size_t end = count * (c + 1) / chunks;
    workers.emplace_back([&results, &work, c, begin, end] { results[c] = work(begin, end); });
  }
  for (auto& w : workers) w.join();
  return results;
}

std::vector<StateEntry> entries_of(const State& state) {
  std::vector<StateEntry> out;
  out.reserve(state.size());
  for (const auto& entry : state) out.push_back(&entry);
  return out;
}

State multiply_by_omega(const State& state, const OmegaForm& omega, unsigned jobs) {
  const auto entries = entries_of(state);
  auto partials = run_chunked<State>(entries.size(), jobs, [&](std::size_t begin, std::size_t end) {
    State local;
    for (std::size_t k = begin; k < end; ++k) {
      const auto& [partition, poly] = *entries[k];
      for (const auto& gen : omega.generators) {
        local[nf_multiply(partition, gen.factor)].add_product(poly, gen.coefficient);
      }
    }
    return local;
  });
  State merged = std::move(partials[0]);
  for (std::size_t c = 1; c < partials.size(); ++c) {
    for (auto& [partition, poly] : partials[c]) {
      auto [it, inserted] = merged.try_emplace(partition, std::move(poly));
      if (!inserted) {
        for (const auto& [md, coeff] : poly.terms()) it->second.add_term(md, coeff);
      }
    }
  }
  std::erase_if(merged, [](const auto& entry) { return entry.second.is_zero(); });
  return merged;
}

bool is_representative(const MultiDegree& md, const std::vector<std::vector<int>>& group) {
  for (const auto& perm : group) {
    if (md.permuted(perm) > md) return false;
  }
  return true;
}

using Accumulator = std::map<MultiDegree, std::map<KappaMonomial, Integer>>;

}  // namespace

int relation_degree(const GenusContext& ctx, int n, const std::optional<WeightedPartition>& multiplier) {
  return ctx.genus() + 1 - n + (multiplier ? multiplier->degree() : 0);
}

std::vector<std::vector<int>> symmetry_group(int n, const std::optional<WeightedPartition>& multiplier) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> group;
  do {
    if (!multiplier || multiplier->relabeled(perm) == *multiplier) group.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return group;
}

RelationVectorMap expand_pushforward(const GenusContext& ctx, int n,
                                     const std::optional<WeightedPartition>& multiplier,
                                     const ExpansionOptions& options) {
  check_point_count(n);
  if (2 * (ctx.genus() + 1) > MultiDegree::kMaxExponent) throw std::invalid_argument("genus too large");
  if (multiplier) {
    if (multiplier->points() != n) throw std::invalid_argument("multiplier has a different point count");
    if (multiplier->kappa1_power() != 0) {
      throw std::invalid_argument("multipliers may not contain k1; extend by k1 after pushforward instead");
    }
  }
  RelationVectorMap out;
  out.genus = ctx.genus();
  out.n = n;
  out.multiplier = multiplier;
  out.degree = relation_degree(ctx, n, multiplier);
  out.orbit_reduced = options.orbit_reduction;
  if (out.degree < 0) throw std::invalid_argument("relation degree g + 1 - n + deg(multiplier) is negative");

  const OmegaForm omega = build_omega(ctx, n);
  const unsigned jobs = std::max(1u, options.jobs);
  const auto group = options.orbit_reduction ? symmetry_group(n, multiplier) : std::vector<std::vector<int>>{};

  State state;
  state[multiplier.value_or(WeightedPartition(n))].add_term(MultiDegree::zero(n), 1);
  for (int step = 0; step < ctx.genus(); ++step) state = multiply_by_omega(state, omega, jobs);

  // Last factor of Omega fused with the pushforward.
  const auto entries = entries_of(state);
  auto partials = run_chunked<Accumulator>(entries.size(), jobs, [&](std::size_t begin, std::size_t end) {
    Accumulator local;
    Integer product;
    for (std::size_t k = begin; k < end; ++k) {
      const auto& [partition, poly] = *entries[k];
      for (const auto& gen : omega.generators) {
        const KappaPolynomial pushed = pushforward(nf_multiply(partition, gen.factor), ctx);
        if (pushed.is_zero()) continue;
        const auto& [monomial, scalar] = *pushed.terms().begin();
        const Integer& scale = scalar.get_num();  // kappa_product yields integers
        for (const auto& [md1, c1] : poly.terms()) {
          for (const auto& [md2, c2] : gen.coefficient.terms()) {
            const MultiDegree md = md1 + md2;
            if (!group.empty() && !is_representative(md, group)) continue;
            product = c1 * c2 * scale;
            Integer& slot = local[md][monomial];
            slot += product;
          }
        }
      }
    }
    return local;
  });

  Accumulator merged = std::move(partials[0]);
  for (std::size_t c = 1; c < partials.size(); ++c) {
    for (auto& [md, terms] : partials[c]) {
      auto& target = merged[md];
      for (auto& [monomial, coeff] : terms) target[monomial] += coeff;
    }
  }
  for (auto& [md, terms] : merged) {
    KappaPolynomial vec;
    for (auto& [monomial, coeff] : terms) vec.add_term(monomial, Rational(coeff));
    if (!vec.is_zero()) out.vectors.emplace(md, std::move(vec));
  }
  return out;
}

RelationVectorMap with_full_orbits(const RelationVectorMap& map) {
  if (!map.orbit_reduced) return map;
  RelationVectorMap out = map;
  out.orbit_reduced = false;
  for (const auto& perm : symmetry_group(map.n, map.multiplier)) {
    for (const auto& [md, vec] : map.vectors) out.vectors.emplace(md.permuted(perm), vec);
  }
  return out;
}

KappaPolynomial evaluate_at(const RelationVectorMap& map, std::span<const Rational> a_values) {
  if (static_cast<int>(a_values.size()) != map.n) throw std::invalid_argument("evaluate_at: wrong number of A values");
  const RelationVectorMap full = with_full_orbits(map);
  KappaPolynomial sum;
  for (const auto& [md, vec] : full.vectors) {
    Rational weight = 1;
    for (int i = 0; i < md.size(); ++i) weight *= power(a_values[i], md[i]);
    sum += vec * weight;
  }
  return sum;
}

// --- closed forms ----------------------------------------------------------

KappaPolynomial morita_relation(const GenusContext& ctx, int k) {
  if (k < 1) throw std::invalid_argument("morita_relation needs k >= 1");
  const int g = ctx.genus();
  const Rational base = Rational(1) / Rational(ctx.chi() * (ctx.chi() - 2));
  KappaPolynomial sum;
  for (int i = -1; i <= g; ++i) {
    std::vector<int> indices(static_cast<std::size_t>(g - i), 1);
    indices.push_back(i + k);
    sum += kappa_product(indices, ctx) * (Rational(binomial(g + 1, i + 1)) * power(base, g - i));
  }
  return primitive_form(sum);
}

std::map<int, Rational> SymmetricPolynomial::at_s1_zero() const {
  std::map<int, Rational> out;
  for (const auto& [powers, coeff] : terms) {
    if (powers.first == 0) out[powers.second] += coeff;
  }
  return out;
}

SymmetricPolynomial symmetric_reduce(const std::map<MultiDegree, Rational>& poly) {
  std::map<MultiDegree, Rational> rest;
  for (const auto& [md, c] : poly) {
    if (md.size() != 2) throw std::invalid_argument("symmetric_reduce works in two variables");
    if (c != 0) rest.emplace(md, c);
  }
  SymmetricPolynomial out;
  while (!rest.empty()) {
    const auto [lead, coeff] = *rest.rbegin();
    const int a = lead[0];
    const int b = lead[1];
    if (a < b) throw std::invalid_argument("polynomial is not symmetric in A_1, A_2");
    out.terms[{a - b, b}] += coeff;
    // subtract coeff * (A_1 + A_2)^(a-b) * (A_1 A_2)^b
    for (int t = 0; t <= a - b; ++t) {
      const MultiDegree md{t + b, a - b - t + b};
      Rational& slot = rest[md];
      slot -= coeff * Rational(binomial(a - b, t));
      if (slot == 0) rest.erase(md);
    }
  }
  return out;
}

std::map<int, Rational> kappa_gm1_coefficient(const GenusContext& ctx, unsigned jobs) {
  const RelationVectorMap full =
      with_full_orbits(expand_pushforward(ctx, 2, std::nullopt, ExpansionOptions{true, jobs}));
  const KappaMonomial target = KappaMonomial::kappa(ctx.genus() - 1);
  std::map<MultiDegree, Rational> coefficient;
  for (const auto& [md, vec] : full.vectors) {
    Rational c = vec.coefficient(target);
    if (c != 0) coefficient.emplace(md, std::move(c));
  }
  return symmetric_reduce(coefficient).at_s1_zero();
}

}  // namespace tautrel
