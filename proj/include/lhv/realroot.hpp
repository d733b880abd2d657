#pragma once

// Exact real-root certification: Sturm sequences over Q, root isolation with
// multiplicities, and the weak interlacing relation f <= g on root sequences.
//
// Conventions for interlacing follow the usual ones for real-rooted
// polynomials: the zero polynomial interlaces and is interlaced by every
// real-rooted polynomial, and a nonzero constant interlaces every polynomial
// of degree at most one.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lhv/poly.hpp"

namespace lhv {

class NotRealRooted : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// f / gcd(f, f'), primitive with positive leading coefficient.
/// Throws std::invalid_argument on the zero polynomial.
IntPolynomial squarefree_part(const IntPolynomial& f);

/// Yun decomposition: factors[i] is the product of the (pairwise coprime)
/// irreducible factors of multiplicity i + 1, up to a constant.
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& f);

class SturmSequence {
 public:
  /// `f` must be squarefree and nonzero.
  explicit SturmSequence(const IntPolynomial& f);

  /// Number of distinct roots in the half-open interval (a, b], a < b.
  std::size_t count_roots(const Rational& a, const Rational& b) const;
  /// Number of distinct real roots.
  std::size_t count_real_roots() const;
  const std::vector<IntPolynomial>& chain() const { return chain_; }

 private:
  std::size_t variations_at(const Rational& q) const;
  std::size_t variations_at_infinity(bool positive) const;

  std::vector<IntPolynomial> chain_;
};

/// Rational B with every complex root of f strictly inside |z| < B.
Rational cauchy_bound(const IntPolynomial& f);

/// True iff f == 0 or every complex root of f is real.
bool is_real_rooted(const IntPolynomial& f);

struct IsolatingInterval {
  Rational lo;
  Rational hi;
  std::size_t multiplicity = 1;

  /// lo == hi: the root is the rational lo itself.
  bool exact() const { return lo == hi; }
};

struct RootIsolation {
  /// Strictly increasing, pairwise disjoint. A non-degenerate interval holds
  /// exactly one distinct root in its open interior; a degenerate one is an
  /// exact rational root.
  std::vector<IsolatingInterval> intervals;
  std::vector<Rational> exact_roots;

  std::size_t root_count() const;
};

/// Isolates every real root of f with its multiplicity.
/// Throws NotRealRooted if f has a nonreal root, std::invalid_argument if f == 0.
RootIsolation isolate_roots(const IntPolynomial& f);

/// Bisects every non-degenerate interval until its width is at most `width`.
void refine_roots(RootIsolation& iso, const IntPolynomial& f, const Rational& width);

enum class Interlacing { kInterlaces, kDoesNotInterlace, kNotRealRooted };

/// f <= g in the sense: beta_1 >= alpha_1 >= beta_2 >= alpha_2 >= ...
/// with alpha the roots of f, beta the roots of g (with multiplicity).
Interlacing check_interlacing(const IntPolynomial& f, const IntPolynomial& g);
bool interlaces(const IntPolynomial& f, const IntPolynomial& g);

/// Witness for a pairwise interlacing decision: the joint root isolation of
/// f g with per-root multiplicities in f and in g.
struct InterlacingWitness {
  Interlacing verdict = Interlacing::kNotRealRooted;
  std::vector<IsolatingInterval> roots;  // multiplicity field unused
  std::vector<std::size_t> mult_f;
  std::vector<std::size_t> mult_g;
  std::string reason;
};
InterlacingWitness explain_interlacing(const IntPolynomial& f, const IntPolynomial& g);

/// fs[i] <= fs[j] for all i < j, checked pairwise.
bool is_interlacing_sequence(std::span<const IntPolynomial> fs);

}  // namespace lhv
