#pragma once

// Exact univariate polynomials over Z and Q.
//
// IntPolynomial is the value type for every h-, local h- and statistic
// polynomial in the library. Coefficients are GMP integers stored densely,
// lowest degree first, with trailing zeros trimmed.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lhv {

using Integer = mpz_class;
using Rational = mpq_class;

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, std::size_t degree);
  static IntPolynomial x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; the zero polynomial reports -1 in place of -infinity.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i, zero past the degree.
  Integer coeff(std::size_t i) const;
  const Integer& leading() const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  IntPolynomial& operator*=(const Integer& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
  friend IntPolynomial operator*(const Integer& c, IntPolynomial a) { return a *= c; }
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coeffs);
  explicit RatPolynomial(const IntPolynomial& p);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const;

  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Euclidean division; throws std::domain_error on a zero divisor.
  static void divmod(const RatPolynomial& a, const RatPolynomial& b,
                     RatPolynomial& quotient, RatPolynomial& remainder);

  /// Positive rational multiple with coprime integer coefficients.
  IntPolynomial primitive_integer_multiple() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

IntPolynomial add(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial mul(const IntPolynomial& f, const IntPolynomial& g);
/// Multiplication by x^m.
IntPolynomial shift(const IntPolynomial& f, std::size_t m);
IntPolynomial pow(IntPolynomial base, unsigned exponent);

/// x^n f(1/x). Throws std::invalid_argument when deg f > n.
IntPolynomial reverse(const IntPolynomial& f, std::size_t n);

/// The i-th Veronese r-section: coefficient of x^k in the output is the
/// coefficient of x^{i + r k} in f. Requires r >= 1 and i < r.
IntPolynomial veronese(const IntPolynomial& f, unsigned r, unsigned i);

/// Checks S^r_i(x^j f) against S^r_{i-j}(f) (i >= j) or x S^r_{r-j+i}(f) (i < j).
bool veronese_shift_identity_check(const IntPolynomial& f, unsigned r, unsigned i,
                                   unsigned j);

bool is_symmetric(const IntPolynomial& f, std::size_t n);
bool is_unimodal(const IntPolynomial& f);
bool has_nonnegative_coefficients(const IntPolynomial& f);

class NotSymmetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Coordinates of f in the basis x^i (1+x)^{n-2i}, 0 <= i <= floor(n/2).
/// Throws NotSymmetric unless f is symmetric with centre n/2.
std::vector<Integer> gamma_vector(const IntPolynomial& f, std::size_t n);
/// Inverse of gamma_vector.
IntPolynomial from_gamma_vector(const std::vector<Integer>& gamma, std::size_t n);

Rational eval(const IntPolynomial& f, const Rational& q);
/// Sign of f(q) computed without leaving Z.
int sign_at(const IntPolynomial& f, const Rational& q);

IntPolynomial derivative(const IntPolynomial& f);
Integer content(const IntPolynomial& f);
/// f divided by its content, normalised to a positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& f);
/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& f, const IntPolynomial& g);
/// Exact quotient f / g; throws std::domain_error if g does not divide f over Q
/// or the quotient is not integral.
IntPolynomial divide_exact(const IntPolynomial& f, const IntPolynomial& g);

Integer binomial(unsigned n, unsigned k);
/// 1 + x + ... + x^{len-1}; the zero polynomial when len == 0.
IntPolynomial geometric_sum(unsigned len);

// Text format: "c0 + c1*x + c2*x^2 + ..." with zero terms dropped and "0" for
// the zero polynomial. Unit coefficients are written without "1*".
std::string to_string(const IntPolynomial& f);
/// The compact notation used in the published tables, e.g. "2x+8x^2+x^3".
std::string to_compact_string(const IntPolynomial& f);
/// Accepts both the canonical and the compact notation; whitespace and '*'
/// are optional. Throws std::invalid_argument with the offending position.
IntPolynomial parse_polynomial(std::string_view text);

}  // namespace lhv
