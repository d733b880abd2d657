#include "lhv/realroot.hpp"

#include <algorithm>
#include <utility>

namespace lhv {

IntPolynomial squarefree_part(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_part of the zero polynomial");
  return primitive_part(divide_exact(primitive_part(f), gcd(f, derivative(f))));
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_decomposition of the zero polynomial");
  std::vector<IntPolynomial> factors;
  const IntPolynomial a = primitive_part(f);
  if (a.degree() == 0) return factors;
  const IntPolynomial b = derivative(a);
  const IntPolynomial c = gcd(a, b);
  IntPolynomial w = divide_exact(a, c);
  IntPolynomial y = divide_exact(b, c);
  IntPolynomial z = y - derivative(w);
  while (w.degree() > 0) {
    IntPolynomial g = gcd(w, z);
    w = divide_exact(w, g);
    y = divide_exact(z, g);
    z = y - derivative(w);
    factors.push_back(std::move(g));
  }
  return factors;
}

// ---------------------------------------------------------------------------

SturmSequence::SturmSequence(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  chain_.push_back(primitive_part(f));
  IntPolynomial d = derivative(chain_.front());
  if (d.is_zero()) return;
  chain_.push_back(RatPolynomial(d).primitive_integer_multiple());
  // Remainders are rescaled by positive constants only, which keeps the
  // sign pattern of the classical sequence p_{i+1} = -rem(p_{i-1}, p_i).
  while (chain_.back().degree() > 0) {
    RatPolynomial q, r;
    RatPolynomial::divmod(RatPolynomial(chain_[chain_.size() - 2]), RatPolynomial(chain_.back()), q, r);
    if (r.is_zero()) break;
    chain_.push_back(-r.primitive_integer_multiple());
  }
}

std::size_t SturmSequence::variations_at(const Rational& q) const {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = sign_at(p, q);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmSequence::variations_at_infinity(bool positive) const {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = sgn(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  const std::size_t va = variations_at(a);
  const std::size_t vb = variations_at(b);
  return va >= vb ? va - vb : 0;
}

std::size_t SturmSequence::count_real_roots() const {
  return variations_at_infinity(false) - variations_at_infinity(true);
}

Rational cauchy_bound(const IntPolynomial& f) {
  if (f.degree() < 1) return 1;
  Integer max_abs = 0;
  for (std::size_t i = 0; i + 1 < f.coeffs().size(); ++i) max_abs = std::max<Integer>(max_abs, abs(f.coeffs()[i]));
  Rational bound(max_abs, abs(f.leading()));
  bound.canonicalize();
  return bound + 1;
}

bool is_real_rooted(const IntPolynomial& f) {
  if (f.degree() < 2) return true;
  const IntPolynomial p = squarefree_part(f);
  return SturmSequence(p).count_real_roots() == static_cast<std::size_t>(p.degree());
}

std::size_t RootIsolation::root_count() const {
  std::size_t total = 0;
  for (const auto& iv : intervals) total += iv.multiplicity;
  return total;
}

// ---------------------------------------------------------------------------

namespace {

// Distinct real roots of a squarefree polynomial as disjoint intervals in
// increasing order; multiplicities are left at 1.
class Isolator {
 public:
  explicit Isolator(const IntPolynomial& squarefree) : p_(squarefree), sturm_(squarefree) {}

  std::vector<IsolatingInterval> run() {
    if (p_.degree() < 1) return {};
    const Rational bound = cauchy_bound(p_);
    split(-bound, bound, sturm_.count_roots(-bound, bound));
    return std::move(out_);
  }

 private:
  // The open interval (a, b) holds `count` distinct roots.
  void split(const Rational& a, const Rational& b, std::size_t count) {
    if (count == 0) return;
    if (count == 1) {
      out_.push_back({a, b, 1});
      return;
    }
    Rational mid = (a + b) / 2;
    const std::size_t left = sturm_.count_roots(a, mid);  // roots in (a, mid]
    if (sign_at(p_, mid) == 0) {
      split(a, mid, left - 1);
      out_.push_back({mid, mid, 1});
    } else {
      split(a, mid, left);
    }
    split(mid, b, count - left);
  }

  IntPolynomial p_;
  SturmSequence sturm_;
  std::vector<IsolatingInterval> out_;
};

struct FactorInfo {
  IntPolynomial poly;
  SturmSequence sturm;
  std::size_t multiplicity;
};

std::vector<FactorInfo> factor_info(const IntPolynomial& f) {
  std::vector<FactorInfo> out;
  const auto factors = squarefree_decomposition(f);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    out.push_back({factors[i], SturmSequence(factors[i]), i + 1});
  }
  return out;
}

// Multiplicity in f of the unique root of the joint squarefree polynomial
// isolated by `iv` (0 if it is not a root of f).
std::size_t multiplicity_in(const std::vector<FactorInfo>& factors, const IsolatingInterval& iv) {
  for (const auto& fac : factors) {
    if (iv.exact()) {
      if (sign_at(fac.poly, iv.lo) == 0) return fac.multiplicity;
      continue;
    }
    std::size_t inside = fac.sturm.count_roots(iv.lo, iv.hi);
    if (inside > 0 && sign_at(fac.poly, iv.hi) == 0) --inside;
    if (inside > 0) return fac.multiplicity;
  }
  return 0;
}

}  // namespace

RootIsolation isolate_roots(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("isolate_roots of the zero polynomial");
  if (!is_real_rooted(f)) throw NotRealRooted("polynomial " + to_string(f) + " has a nonreal root");
  RootIsolation iso;
  if (f.degree() < 1) return iso;
  iso.intervals = Isolator(squarefree_part(f)).run();
  const auto factors = factor_info(f);
  for (auto& iv : iso.intervals) {
    iv.multiplicity = multiplicity_in(factors, iv);
    if (iv.exact()) iso.exact_roots.push_back(iv.lo);
  }
  return iso;
}

void refine_roots(RootIsolation& iso, const IntPolynomial& f, const Rational& width) {
  if (f.degree() < 1) return;
  const IntPolynomial p = squarefree_part(f);
  const SturmSequence sturm(p);
  for (auto& iv : iso.intervals) {
    while (!iv.exact() && iv.hi - iv.lo > width) {
      Rational mid = (iv.lo + iv.hi) / 2;
      if (sign_at(p, mid) == 0) {
        iv.lo = iv.hi = mid;
        iso.exact_roots.push_back(mid);
        break;
      }
      std::size_t left = sturm.count_roots(iv.lo, mid);
      if (left == 1) {
        iv.hi = mid;
      } else {
        iv.lo = mid;
      }
    }
  }
  std::sort(iso.exact_roots.begin(), iso.exact_roots.end());
}

InterlacingWitness explain_interlacing(const IntPolynomial& f, const IntPolynomial& g) {
  InterlacingWitness w;
  const bool f_real = is_real_rooted(f);
  const bool g_real = is_real_rooted(g);
  if (!f_real || !g_real) {
    w.verdict = Interlacing::kNotRealRooted;
    w.reason = std::string(!f_real ? "first" : "second") + " polynomial is not real-rooted";
    return w;
  }
  if (f.is_zero() || g.is_zero()) {
    w.verdict = Interlacing::kInterlaces;
    w.reason = "zero polynomial convention";
    return w;
  }
  const long df = f.degree();
  const long dg = g.degree();
  if (dg != df && dg != df + 1) {
    w.verdict = Interlacing::kDoesNotInterlace;
    w.reason = "degree mismatch: deg f = " + std::to_string(df) + ", deg g = " + std::to_string(dg);
    return w;
  }
  if (df + dg == 0 || (df == 0 && dg == 1)) {
    w.verdict = Interlacing::kInterlaces;
    w.reason = "constant convention";
    return w;
  }

  const IntPolynomial joint = squarefree_part(f * g);
  w.roots = Isolator(joint).run();
  const auto f_factors = factor_info(f);
  const auto g_factors = factor_info(g);
  for (const auto& iv : w.roots) {
    w.mult_f.push_back(multiplicity_in(f_factors, iv));
    w.mult_g.push_back(multiplicity_in(g_factors, iv));
  }

  // Root ranks, largest first; equal ranks mean equal roots.
  std::vector<std::size_t> alpha, beta;
  for (std::size_t k = w.roots.size(); k-- > 0;) {
    alpha.insert(alpha.end(), w.mult_f[k], k);
    beta.insert(beta.end(), w.mult_g[k], k);
  }
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (beta[i] < alpha[i]) {
      w.verdict = Interlacing::kDoesNotInterlace;
      w.reason = "root " + std::to_string(i + 1) + " of f exceeds root " + std::to_string(i + 1) + " of g";
      return w;
    }
    if (i + 1 < beta.size() && alpha[i] < beta[i + 1]) {
      w.verdict = Interlacing::kDoesNotInterlace;
      w.reason = "root " + std::to_string(i + 2) + " of g exceeds root " + std::to_string(i + 1) + " of f";
      return w;
    }
  }
  w.verdict = Interlacing::kInterlaces;
  w.reason = "roots alternate";
  return w;
}

Interlacing check_interlacing(const IntPolynomial& f, const IntPolynomial& g) {
  return explain_interlacing(f, g).verdict;
}

bool interlaces(const IntPolynomial& f, const IntPolynomial& g) {
  return check_interlacing(f, g) == Interlacing::kInterlaces;
}

bool is_interlacing_sequence(std::span<const IntPolynomial> fs) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (!interlaces(fs[i], fs[j])) return false;
  return true;
}

}  // namespace lhv
