#include "tautrel/point_algebra.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "tautrel/union_find.hpp"

namespace tautrel {

namespace {

void check_points(int n) {
  if (n < 1 || n > kMaxPoints) {
    throw std::invalid_argument("number of points must be in 1.." + std::to_string(kMaxPoints));
  }
}

PointMask full_mask(int n) { return n == kMaxPoints ? ~PointMask{0} : ((PointMask{1} << n) - 1); }

PointMask relabel_mask(PointMask mask, std::span<const int> perm) {
  PointMask out = 0;
  for (PointMask rest = mask; rest != 0; rest &= rest - 1) {
    out |= PointMask{1} << perm[std::countr_zero(rest)];
  }
  return out;
}

void check_permutation(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  PointMask seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || (seen >> p & 1)) throw std::invalid_argument("not a permutation");
    seen |= PointMask{1} << p;
  }
}

}  // namespace

// --- PointMonomial ---------------------------------------------------------

PointMonomial PointMonomial::unit(int n) {
  check_points(n);
  PointMonomial m;
  m.n = n;
  m.a.assign(n, 0);
  return m;
}

int PointMonomial::degree() const {
  int d = c;
  for (int x : a) d += x;
  for (const auto& [edge, w] : b) d += w;
  return d;
}

void PointMonomial::validate() const {
  check_points(n);
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("e-exponent vector has wrong length");
  for (int x : a) {
    if (x < 0) throw std::invalid_argument("negative e-exponent");
  }
  for (const auto& [edge, w] : b) {
    const auto [i, j] = edge;
    if (i < 0 || j >= n || i >= j) throw std::invalid_argument("bad nu pair");
    if (w < 1) throw std::invalid_argument("stored nu exponents must be >= 1");
  }
  if (c < 0) throw std::invalid_argument("negative k1 exponent");
}

void PointMonomial::set_edge(int i, int j, int power) {
  if (i == j) throw std::invalid_argument("nu_ii is not a class");
  const auto key = std::minmax(i, j);
  if (power == 0) {
    b.erase(key);
  } else {
    b[key] = power;
  }
}

int PointMonomial::edge(int i, int j) const {
  auto it = b.find(std::minmax(i, j));
  return it == b.end() ? 0 : it->second;
}

PointMonomial PointMonomial::operator*(const PointMonomial& other) const {
  if (n != other.n) throw std::invalid_argument("point monomials over different point counts");
  PointMonomial out = *this;
  for (int i = 0; i < n; ++i) out.a[i] += other.a[i];
  for (const auto& [edge, w] : other.b) out.b[edge] += w;
  out.c += other.c;
  return out;
}

PointMonomial PointMonomial::relabeled(std::span<const int> perm) const {
  check_permutation(perm, n);
  PointMonomial out = unit(n);
  for (int i = 0; i < n; ++i) out.a[perm[i]] = a[i];
  for (const auto& [edge, w] : b) out.set_edge(perm[edge.first], perm[edge.second], w);
  out.c = c;
  return out;
}

// --- WeightedPartition -----------------------------------------------------

int Block::size() const { return std::popcount(points); }
int Block::least_point() const { return std::countr_zero(points); }

WeightedPartition::WeightedPartition(int n, int c) : n_(n), c_(c) {
  check_points(n);
  if (c < 0) throw std::invalid_argument("negative k1 exponent");
}

WeightedPartition WeightedPartition::from_blocks(int n, std::vector<Block> blocks, int c) {
  WeightedPartition out(n, c);
  PointMask seen = 0;
  for (const Block& block : blocks) {
    if (block.points == 0) throw std::invalid_argument("empty block");
    if ((block.points & ~full_mask(n)) != 0) throw std::invalid_argument("block point out of range");
    if ((block.points & seen) != 0) throw std::invalid_argument("blocks overlap");
    seen |= block.points;
    if (block.weight < std::max(1, block.size() - 1)) {
      throw std::invalid_argument("block weight too small to be connected");
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& x, const Block& y) { return x.least_point() < y.least_point(); });
  out.blocks_ = std::move(blocks);
  return out;
}

WeightedPartition WeightedPartition::euler(int n, int i) {
  return from_blocks(n, {Block{PointMask{1} << i, 1}});
}

WeightedPartition WeightedPartition::diagonal(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("nu_ii is not a class");
  return from_blocks(n, {Block{(PointMask{1} << i) | (PointMask{1} << j), 1}});
}

WeightedPartition WeightedPartition::kappa1(int n) { return WeightedPartition(n, 1); }

int WeightedPartition::degree() const {
  int d = c_;
  for (const Block& block : blocks_) d += block.weight;
  return d;
}

PointMask WeightedPartition::used_points() const {
  PointMask used = 0;
  for (const Block& block : blocks_) used |= block.points;
  return used;
}

bool WeightedPartition::all_points_used() const { return used_points() == full_mask(n_); }

WeightedPartition WeightedPartition::relabeled(std::span<const int> perm) const {
  check_permutation(perm, n_);
  std::vector<Block> blocks;
  blocks.reserve(blocks_.size());
  for (const Block& block : blocks_) blocks.push_back({relabel_mask(block.points, perm), block.weight});
  return from_blocks(n_, std::move(blocks), c_);
}

// --- operations ------------------------------------------------------------

WeightedPartition normal_form(const PointMonomial& m) {
  m.validate();
  UnionFind components(static_cast<std::size_t>(m.n));
  PointMask used = 0;
  for (int i = 0; i < m.n; ++i) {
    if (m.a[i] > 0) used |= PointMask{1} << i;
  }
  for (const auto& [edge, w] : m.b) {
    components.unite(edge.first, edge.second);
    used |= (PointMask{1} << edge.first) | (PointMask{1} << edge.second);
  }
  std::vector<Block> by_root(m.n);
  for (int i = 0; i < m.n; ++i) {
    if ((used >> i & 1) == 0) continue;
    Block& block = by_root[components.find(i)];
    block.points |= PointMask{1} << i;
    block.weight += m.a[i];
  }
  for (const auto& [edge, w] : m.b) by_root[components.find(edge.first)].weight += w;

  std::vector<Block> blocks;
  for (const Block& block : by_root) {
    if (block.points != 0) blocks.push_back(block);
  }
  return WeightedPartition::from_blocks(m.n, std::move(blocks), m.c);
}

WeightedPartition nf_multiply(const WeightedPartition& x, const WeightedPartition& y) {
  if (x.points() != y.points()) throw std::invalid_argument("nf_multiply: point counts differ");
  const int n = x.points();
  UnionFind components(static_cast<std::size_t>(n));
  auto link = [&](const Block& block) {
    const int first = block.least_point();
    for (PointMask rest = block.points & (block.points - 1); rest != 0; rest &= rest - 1) {
      components.unite(first, std::countr_zero(rest));
    }
  };
  for (const Block& block : x.blocks()) link(block);
  for (const Block& block : y.blocks()) link(block);

  std::vector<Block> by_root(n);
  auto collect = [&](const Block& block) {
    Block& merged = by_root[components.find(block.least_point())];
    merged.points |= block.points;
    merged.weight += block.weight;
  };
  for (const Block& block : x.blocks()) collect(block);
  for (const Block& block : y.blocks()) collect(block);

  std::vector<Block> blocks;
  for (const Block& block : by_root) {
    if (block.points != 0) blocks.push_back(block);
  }
  return WeightedPartition::from_blocks(n, std::move(blocks), x.kappa1_power() + y.kappa1_power());
}

KappaPolynomial pushforward(const WeightedPartition& x, const GenusContext& ctx) {
  if (!x.all_points_used()) return {};
  std::vector<int> indices;
  indices.reserve(x.blocks().size() + static_cast<std::size_t>(x.kappa1_power()));
  for (const Block& block : x.blocks()) indices.push_back(block.weight - block.size());
  indices.insert(indices.end(), static_cast<std::size_t>(x.kappa1_power()), 1);
  return kappa_product(indices, ctx);
}

// --- parsing / formatting --------------------------------------------------

namespace {

class MonomialParser {
 public:
  MonomialParser(std::string_view text, int n) : text_(text), n_(n), out_(PointMonomial::unit(n)) {}

  PointMonomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty monomial");
    while (true) {
      parse_factor();
      skip_space();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != '*') fail("expected '*'");
      ++pos_;
    }
    return out_;
  }

 private:
  void parse_factor() {
    skip_space();
    const std::size_t start = pos_;
    const char kind = peek();
    int i = -1;
    int j = -1;
    if (kind == 'e') {
      ++pos_;
      i = point_index(parse_int());
    } else if (kind == 'v') {
      ++pos_;
      if (peek() == '{') {
        ++pos_;
        i = point_index(parse_int());
        skip_space();
        if (peek() != ',') fail("expected ','");
        ++pos_;
        j = point_index(parse_int());
        skip_space();
        if (peek() != '}') fail("expected '}'");
        ++pos_;
      } else {
        i = point_index(digit());
        j = point_index(digit());
      }
      if (i == j) {
        pos_ = start;
        fail("nu needs two distinct points");
      }
    } else if (kind == 'k') {
      ++pos_;
      if (parse_int() != 1) {
        pos_ = number_start_;
        fail("only k1 may appear on the pointed space");
      }
    } else if (kind == '1') {
      ++pos_;
    } else {
      fail("expected e<i>, v<i><j>, v{i,j}, k1 or 1");
    }
    int power = 1;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      power = parse_int();
    }
    if (kind == 'e') {
      out_.a[i] += power;
    } else if (kind == 'v') {
      if (power > 0) out_.set_edge(i, j, out_.edge(i, j) + power);
    } else if (kind == 'k') {
      out_.c += power;
    }
  }

  int point_index(int one_based) {
    if (one_based < 1 || one_based > n_) {
      pos_ = number_start_;
      fail("point index " + std::to_string(one_based) + " out of range 1.." + std::to_string(n_));
    }
    return one_based - 1;
  }

  int digit() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
    number_start_ = pos_;
    return text_[pos_++] - '0';
  }

  int parse_int() {
    skip_space();
    const std::size_t start = pos_;
    number_start_ = start;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw MonomialParseError("parse error at position " + std::to_string(pos_) + ": " + what, pos_);
  }

  std::string_view text_;
  int n_;
  PointMonomial out_;
  std::size_t pos_ = 0;
  std::size_t number_start_ = 0;
};

}  // namespace

PointMonomial parse_point_monomial(std::string_view text, int n) {
  check_points(n);
  return MonomialParser(text, n).parse();
}

std::string format(const WeightedPartition& x) {
  std::string out;
  for (const Block& block : x.blocks()) {
    if (!out.empty()) out += ' ';
    out += '{';
    bool first = true;
    for (PointMask rest = block.points; rest != 0; rest &= rest - 1) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(std::countr_zero(rest) + 1);
    }
    out += "}:" + std::to_string(block.weight);
  }
  if (x.kappa1_power() > 0) {
    if (!out.empty()) out += ' ';
    out += "k1";
    if (x.kappa1_power() > 1) out += '^' + std::to_string(x.kappa1_power());
  }
  return out.empty() ? "1" : out;
}

}  // namespace tautrel
