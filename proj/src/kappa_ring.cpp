#include "tautrel/kappa_ring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tautrel {

GenusContext::GenusContext(int genus) : genus_(genus), chi_(2 - 2 * genus) {
  if (genus < 2) throw std::invalid_argument("genus must be at least 2, got " + std::to_string(genus));
}

std::string_view to_string(KappaConvention convention) {
  return convention == KappaConvention::topological ? "topological" : "algebraic";
}

KappaConvention parse_convention(std::string_view text) {
  if (text == "topological") return KappaConvention::topological;
  if (text == "algebraic") return KappaConvention::algebraic;
  throw std::invalid_argument("unknown kappa convention '" + std::string(text) + "'");
}

// --- KappaMonomial ---------------------------------------------------------

KappaMonomial KappaMonomial::kappa(int index, int power) {
  if (index < 1) throw std::invalid_argument("kappa index must be >= 1");
  if (power < 0) throw std::invalid_argument("kappa power must be >= 0");
  KappaMonomial m;
  if (power == 0) return m;
  m.exponents_.assign(static_cast<std::size_t>(index), 0);
  m.exponents_.back() = power;
  return m;
}

KappaMonomial KappaMonomial::from_pairs(std::span<const std::pair<int, int>> pairs) {
  KappaMonomial m;
  for (const auto& [index, mult] : pairs) {
    if (index < 1 || mult < 1) {
      throw std::invalid_argument("kappa monomial pairs need index >= 1 and multiplicity >= 1");
    }
    if (m.exponents_.size() < static_cast<std::size_t>(index)) m.exponents_.resize(index, 0);
    if (m.exponents_[index - 1] != 0) throw std::invalid_argument("repeated kappa index in monomial");
    m.exponents_[index - 1] = mult;
  }
  return m;
}

KappaMonomial KappaMonomial::from_parts(std::span<const int> parts) {
  KappaMonomial m;
  for (int part : parts) {
    if (part < 1) throw std::invalid_argument("partition parts must be >= 1");
    if (m.exponents_.size() < static_cast<std::size_t>(part)) m.exponents_.resize(part, 0);
    ++m.exponents_[part - 1];
  }
  return m;
}

int KappaMonomial::degree() const {
  int d = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) d += static_cast<int>(i + 1) * exponents_[i];
  return d;
}

int KappaMonomial::length() const {
  int total = 0;
  for (int e : exponents_) total += e;
  return total;
}

int KappaMonomial::exponent(int index) const {
  if (index < 1 || index > max_index()) return 0;
  return exponents_[index - 1];
}

std::vector<std::pair<int, int>> KappaMonomial::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0) out.emplace_back(static_cast<int>(i + 1), exponents_[i]);
  }
  return out;
}

KappaMonomial KappaMonomial::operator*(const KappaMonomial& other) const {
  KappaMonomial out = *this;
  if (out.exponents_.size() < other.exponents_.size()) out.exponents_.resize(other.exponents_.size(), 0);
  for (std::size_t i = 0; i < other.exponents_.size(); ++i) out.exponents_[i] += other.exponents_[i];
  return out;
}

std::strong_ordering operator<=>(const KappaMonomial& lhs, const KappaMonomial& rhs) {
  if (auto c = lhs.degree() <=> rhs.degree(); c != 0) return c;
  const int top = std::max(lhs.max_index(), rhs.max_index());
  for (int index = top; index >= 1; --index) {
    const int a = lhs.exponent(index);
    const int b = rhs.exponent(index);
    if (a != b) return a > b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

int convention_sign(const KappaMonomial& m) {
  return ((m.degree() + m.length()) % 2 == 0) ? 1 : -1;
}

// --- KappaPolynomial -------------------------------------------------------

KappaPolynomial::KappaPolynomial(const Rational& scalar) {
  if (scalar != 0) terms_.emplace(KappaMonomial{}, scalar);
}

KappaPolynomial KappaPolynomial::monomial(const KappaMonomial& m, const Rational& coefficient) {
  KappaPolynomial p;
  p.add_term(m, coefficient);
  return p;
}

Rational KappaPolynomial::coefficient(const KappaMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int KappaPolynomial::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return -2;
  }
  return d;
}

void KappaPolynomial::add_term(const KappaMonomial& m, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

KappaPolynomial& KappaPolynomial::operator+=(const KappaPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

KappaPolynomial& KappaPolynomial::operator-=(const KappaPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

KappaPolynomial& KappaPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

KappaPolynomial KappaPolynomial::operator-() const {
  KappaPolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

KappaPolynomial operator*(const KappaPolynomial& lhs, const KappaPolynomial& rhs) {
  KappaPolynomial out;
  for (const auto& [m1, c1] : lhs.terms_) {
    for (const auto& [m2, c2] : rhs.terms_) out.add_term(m1 * m2, c1 * c2);
  }
  return out;
}

// --- free functions --------------------------------------------------------

KappaPolynomial kappa_product(std::span<const int> indices, const GenusContext& ctx) {
  Rational scalar = 1;
  std::vector<int> parts;
  for (int index : indices) {
    if (index < 0) return {};
    if (index == 0) {
      scalar *= ctx.chi();
    } else {
      parts.push_back(index);
    }
  }
  return KappaPolynomial::monomial(KappaMonomial::from_parts(parts), scalar);
}

namespace {

void partitions_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<KappaMonomial>& out) {
  if (remaining == 0) {
    out.push_back(KappaMonomial::from_parts(prefix));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<KappaMonomial> basis_of_degree(int degree) {
  if (degree < 0) throw std::invalid_argument("basis degree must be >= 0");
  std::vector<KappaMonomial> out;
  std::vector<int> prefix;
  partitions_into(degree, degree, prefix, out);
  return out;
}

KappaPolynomial flip_convention(const KappaPolynomial& p) {
  KappaPolynomial out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, convention_sign(m) * c);
  return out;
}

KappaPolynomial primitive_form(const KappaPolynomial& p) {
  std::vector<KappaMonomial> monomials;
  std::vector<Rational> values;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    monomials.push_back(it->first);
    values.push_back(it->second);
  }
  const auto scaled = primitive_integer_vector(values);
  KappaPolynomial out;
  for (std::size_t i = 0; i < monomials.size(); ++i) out.add_term(monomials[i], Rational(scaled[i]));
  return out;
}

bool proportional(const KappaPolynomial& a, const KappaPolynomial& b) {
  if (a.is_zero() || b.is_zero() || a.size() != b.size()) return false;
  const auto& [m0, c0] = *a.terms().begin();
  const Rational scale = b.coefficient(m0) / c0;
  if (scale == 0) return false;
  return a * scale == b;
}

std::string format(const KappaMonomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& [index, mult] : m.pairs()) {
    if (!out.empty()) out += '*';
    out += 'k' + std::to_string(index);
    if (mult > 1) out += '^' + std::to_string(mult);
  }
  return out;
}

std::string format(const KappaPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const std::string coeff = magnitude.get_den() == 1 ? magnitude.get_num().get_str() : magnitude.get_str();
    if (m.is_unit()) {
      out += coeff;
    } else if (magnitude == 1) {
      out += format(m);
    } else {
      out += coeff + "*" + format(m);
    }
  }
  return out;
}

namespace {

class KappaParser {
 public:
  explicit KappaParser(std::string_view text) : text_(text) {}

  KappaPolynomial parse() {
    KappaPolynomial out;
    skip_space();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      skip_space();
      auto [m, c] = parse_term();
      out.add_term(m, sign * c);
      skip_space();
      if (pos_ == text_.size()) break;
      const char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      sign = op == '-' ? -1 : 1;
      ++pos_;
    }
    return out;
  }

 private:
  std::pair<KappaMonomial, Rational> parse_term() {
    Rational coeff = 1;
    KappaMonomial m;
    bool have_factor = false;
    while (true) {
      skip_space();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
        coeff *= parse_rational(text_.substr(start, pos_ - start));
      } else if (peek() == 'k') {
        ++pos_;
        const int index = parse_int();
        if (index < 1) fail("kappa index must be >= 1");
        int power = 1;
        skip_space();
        if (peek() == '^') {
          ++pos_;
          power = parse_int();
        }
        m = m * KappaMonomial::kappa(index, power);
      } else {
        fail("expected a coefficient or a kappa factor");
      }
      have_factor = true;
      skip_space();
      if (peek() != '*') break;
      ++pos_;
    }
    if (!have_factor) fail("empty term");
    return {m, coeff};
  }

  int parse_int() {
    skip_space();
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("kappa expression '" + std::string(text_) + "' at position " +
                                std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

KappaPolynomial parse_kappa_polynomial(std::string_view text) { return KappaParser(text).parse(); }

}  // namespace tautrel
