#include "lhv/poly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace lhv {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

Integer IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) { return *this = *this * other; }

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& a : out.coeffs_) a = -a;
  return out;
}

// ---------------------------------------------------------------------------

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPolynomial::RatPolynomial(const IntPolynomial& p) {
  coeffs_.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

const Rational& RatPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

void RatPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void RatPolynomial::divmod(const RatPolynomial& a, const RatPolynomial& b, RatPolynomial& quotient,
                           RatPolynomial& remainder) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  const std::size_t db = b.coeffs_.size() - 1;
  std::vector<Rational> quo;
  if (rem.size() > db) quo.resize(rem.size() - db);
  const Rational& lead = b.coeffs_.back();
  for (std::size_t top = rem.size(); top-- > db;) {
    if (rem[top] == 0) continue;
    Rational factor = rem[top] / lead;
    const std::size_t offset = top - db;
    quo[offset] = factor;
    for (std::size_t k = 0; k <= db; ++k) rem[offset + k] -= factor * b.coeffs_[k];
  }
  quotient = RatPolynomial(std::move(quo));
  rem.resize(std::min(rem.size(), db));
  remainder = RatPolynomial(std::move(rem));
}

IntPolynomial RatPolynomial::primitive_integer_multiple() const {
  if (coeffs_.empty()) return {};
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c.get_num() * (den_lcm / c.get_den()));
  Integer g = 0;
  for (const auto& c : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

// ---------------------------------------------------------------------------

IntPolynomial add(const IntPolynomial& f, const IntPolynomial& g) { return f + g; }
IntPolynomial mul(const IntPolynomial& f, const IntPolynomial& g) { return f * g; }

IntPolynomial shift(const IntPolynomial& f, std::size_t m) {
  if (f.is_zero()) return {};
  std::vector<Integer> out(m);
  out.insert(out.end(), f.coeffs().begin(), f.coeffs().end());
  return IntPolynomial(std::move(out));
}

IntPolynomial pow(IntPolynomial base, unsigned exponent) {
  IntPolynomial result = IntPolynomial::constant(1);
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

IntPolynomial reverse(const IntPolynomial& f, std::size_t n) {
  if (f.is_zero()) return {};
  if (static_cast<std::size_t>(f.degree()) > n)
    throw std::invalid_argument("reverse: degree " + std::to_string(f.degree()) + " exceeds n = " +
                                std::to_string(n));
  std::vector<Integer> out(n + 1);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[n - i] = f.coeffs()[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial veronese(const IntPolynomial& f, unsigned r, unsigned i) {
  if (r == 0) throw std::invalid_argument("veronese: r must be positive");
  if (i >= r) throw std::invalid_argument("veronese: section index must be below r");
  std::vector<Integer> out;
  for (std::size_t e = i; e < f.coeffs().size(); e += r) out.push_back(f.coeffs()[e]);
  return IntPolynomial(std::move(out));
}

bool veronese_shift_identity_check(const IntPolynomial& f, unsigned r, unsigned i, unsigned j) {
  if (i >= r || j >= r) return false;
  const IntPolynomial lhs = veronese(shift(f, j), r, i);
  const IntPolynomial rhs = i >= j ? veronese(f, r, i - j) : shift(veronese(f, r, r - j + i), 1);
  return lhs == rhs;
}

bool is_symmetric(const IntPolynomial& f, std::size_t n) {
  if (f.degree() > static_cast<long>(n)) return false;
  for (std::size_t i = 0; i <= n; ++i)
    if (f.coeff(i) != f.coeff(n - i)) return false;
  return true;
}

bool is_unimodal(const IntPolynomial& f) {
  const auto& a = f.coeffs();
  std::size_t i = 0;
  while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
  while (i + 1 < a.size() && a[i] >= a[i + 1]) ++i;
  return i + 1 >= a.size();
}

bool has_nonnegative_coefficients(const IntPolynomial& f) {
  return std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const Integer& c) { return c >= 0; });
}

std::vector<Integer> gamma_vector(const IntPolynomial& f, std::size_t n) {
  if (!is_symmetric(f, n))
    throw NotSymmetric("gamma_vector: polynomial " + to_string(f) + " is not symmetric about " +
                       std::to_string(n) + "/2");
  // The basis x^i (1+x)^{n-2i} is unitriangular with respect to x^i, so
  // peeling off the lowest remaining coefficient is exact.
  IntPolynomial rest = f;
  std::vector<Integer> gamma(n / 2 + 1);
  for (std::size_t i = 0; i <= n / 2; ++i) {
    gamma[i] = rest.coeff(i);
    if (gamma[i] != 0)
      rest -= gamma[i] * shift(pow(IntPolynomial{1, 1}, static_cast<unsigned>(n - 2 * i)), i);
  }
  return gamma;
}

IntPolynomial from_gamma_vector(const std::vector<Integer>& gamma, std::size_t n) {
  IntPolynomial out;
  for (std::size_t i = 0; i < gamma.size() && 2 * i <= n; ++i)
    out += gamma[i] * shift(pow(IntPolynomial{1, 1}, static_cast<unsigned>(n - 2 * i)), i);
  return out;
}

Rational eval(const IntPolynomial& f, const Rational& q) {
  Rational acc = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * q + *it;
  return acc;
}

int sign_at(const IntPolynomial& f, const Rational& q) {
  // Homogenised Horner: sum c_i a^i b^{n-i} has the sign of f(a/b) for b > 0.
  if (f.is_zero()) return 0;
  const Integer& a = q.get_num();
  const Integer& b = q.get_den();
  Integer acc = 0;
  Integer bpow = 1;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * a + *it * bpow;
    bpow *= b;
  }
  return sgn(acc);
}

IntPolynomial derivative(const IntPolynomial& f) {
  if (f.degree() < 1) return {};
  std::vector<Integer> out(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) out[i - 1] = f.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(out));
}

Integer content(const IntPolynomial& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& f) {
  if (f.is_zero()) return {};
  Integer c = content(f);
  if (f.leading() < 0) c = -c;
  std::vector<Integer> out = f.coeffs();
  for (auto& a : out) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  return IntPolynomial(std::move(out));
}

IntPolynomial gcd(const IntPolynomial& f, const IntPolynomial& g) {
  IntPolynomial a = primitive_part(f);
  IntPolynomial b = primitive_part(g);
  while (!b.is_zero()) {
    RatPolynomial q, r;
    RatPolynomial::divmod(RatPolynomial(a), RatPolynomial(b), q, r);
    a = std::move(b);
    b = primitive_part(r.primitive_integer_multiple());
  }
  return a;
}

IntPolynomial divide_exact(const IntPolynomial& f, const IntPolynomial& g) {
  RatPolynomial q, r;
  RatPolynomial::divmod(RatPolynomial(f), RatPolynomial(g), q, r);
  if (!r.is_zero()) throw std::domain_error("divide_exact: nonzero remainder");
  std::vector<Integer> out;
  out.reserve(q.coeffs().size());
  for (const auto& c : q.coeffs()) {
    if (c.get_den() != 1) throw std::domain_error("divide_exact: quotient is not integral");
    out.push_back(c.get_num());
  }
  return IntPolynomial(std::move(out));
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

IntPolynomial geometric_sum(unsigned len) { return IntPolynomial(std::vector<Integer>(len, Integer(1))); }

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string render(const IntPolynomial& f, bool compact) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const Integer& c = f.coeffs()[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    Integer magnitude = abs(c);
    if (first) {
      if (negative) out += '-';
    } else if (compact) {
      out += negative ? '-' : '+';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) {
      out += magnitude.get_str();
      if (!compact) out += '*';
    }
    out += 'x';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IntPolynomial parse() {
    std::vector<Integer> coeffs;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Integer c = 1;
      bool have_number = false;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        c = read_integer();
        have_number = true;
        skip_ws();
        if (!at_end() && peek() == '*') {
          ++pos_;
          skip_ws();
          if (at_end() || peek() != 'x') fail("expected 'x' after '*'");
        }
      }
      std::size_t exponent = 0;
      if (!at_end() && peek() == 'x') {
        ++pos_;
        exponent = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          exponent = read_integer().get_ui();
        }
      } else if (!have_number) {
        fail("expected a coefficient or 'x'");
      }
      skip_ws();
      if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
      coeffs[exponent] += sign * c;
    }
    return IntPolynomial(std::move(coeffs));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  Integer read_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text_) + "' at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const IntPolynomial& f) { return render(f, false); }
std::string to_compact_string(const IntPolynomial& f) { return render(f, true); }
IntPolynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace lhv
