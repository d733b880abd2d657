#pragma once

// Permutation and word statistics behind the Eulerian-type families
// p_{n,k}, d_{n,k}, d_{n,k,j} and E_{n,r}.
//
// Permutations are 1-indexed: w(i) for i in [n]. Enumerations over S_n are
// limited to n <= kMaxEnumeration; larger requests throw std::length_error.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "lhv/poly.hpp"

namespace lhv {

inline constexpr std::size_t kMaxEnumeration = 10;

class Permutation {
 public:
  Permutation() = default;
  /// One-line notation; throws std::invalid_argument unless a permutation of [n].
  explicit Permutation(std::vector<int> word);
  static Permutation identity(std::size_t n);
  /// Reads "321" (single digits) or "3 2 1".
  static Permutation parse(const std::string& text);

  std::size_t size() const { return w_.size(); }
  /// w(i), 1 <= i <= n.
  int operator()(std::size_t i) const { return w_[i - 1]; }
  const std::vector<int>& word() const { return w_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

std::string to_string(const Permutation& w);

struct PermStats {
  std::size_t des = 0;
  std::size_t asc = 0;
  std::size_t exc = 0;
  std::vector<int> fix;
};

PermStats stats(const Permutation& w);
std::size_t descents(const Permutation& w);
std::size_t ascents(const Permutation& w);
std::size_t excedances(const Permutation& w);
std::vector<int> fixed_points(const Permutation& w);

/// Visits S_n in lexicographic order, reusing one buffer.
void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit);

/// First fundamental transformation: cycles written smallest element first,
/// cycles in decreasing order of their smallest element, parentheses erased.
Permutation foata(const Permutation& w);

/// Values w(j) at left-to-right minimum positions j that are followed by a
/// descent or sit at the end (j = n). The published definition writes the
/// descent test with an index i; it is read here with j, the only reading
/// under which the bad points of foata(w) are the fixed points of w.
std::vector<int> bad_points(const Permutation& w);

/// A_n by descents over S_n; A_0 = 1.
IntPolynomial eulerian(std::size_t n);

/// Excedance enumerator over {w in S_{n+1} : w^{-1}(1) = k + 1}; p_{0,0} = 1.
IntPolynomial p_nk(std::size_t n, std::size_t k);
/// Descent enumerator over {w in S_{n+1} : w(1) = k + 1}.
IntPolynomial p_nk_by_descents(std::size_t n, std::size_t k);
/// Ascent enumerator over {w in S_{n+1} : w(n+1) = k + 1}.
IntPolynomial p_nk_by_ascents(std::size_t n, std::size_t k);

/// Excedance enumerator over {w in S_n : Fix(w) within [n-k]}; d_{0,0} = 1.
IntPolynomial d_nk(std::size_t n, std::size_t k);
/// Excedance enumerator over {w in S_{n+1} : Fix(w) within [n+1-k],
/// w^{-1}(1) = j + 1} for 0 <= k, j <= n; d_{0,0,0} = 1. Indices outside
/// that range are rejected.
IntPolynomial d_nkj(std::size_t n, std::size_t k, std::size_t j);
/// All d_{n,k,j} for fixed n, as table[k][j]. Cached.
const std::vector<std::vector<IntPolynomial>>& d_table(std::size_t n);

/// Ascent enumerator over permutations of [n] whose bad points lie in [n-k].
IntPolynomial d_nk_via_bad_points(std::size_t n, std::size_t k);
/// Ascent enumerator over {w in S_{n+1} : bad points within [n+1-k], w(n+1) = j + 1}.
IntPolynomial d_nkj_via_bad_points(std::size_t n, std::size_t k, std::size_t j);

/// D_{n,j}: derangements of [n] with j excedances, j = 0..max(n-1, 0).
std::vector<Integer> derangement_counts(std::size_t n);

/// Words w: {0..n-1} -> {0..r-1} with w(0) = 0.
using Word = std::vector<unsigned>;
void for_each_word(std::size_t n, unsigned r, const std::function<void(const Word&)>& visit);
std::vector<Word> words(std::size_t n, unsigned r);
/// #{i in [n-1] : w(i-1) < w(i)}.
std::size_t ascents(const Word& w);

/// S^r_0((1 + x + ... + x^{r-1})^n). Requires n, r >= 1.
IntPolynomial E_nr(std::size_t n, unsigned r);
/// Ascent enumerator over words; same value as E_nr.
IntPolynomial E_nr_by_words(std::size_t n, unsigned r);

}  // namespace lhv
