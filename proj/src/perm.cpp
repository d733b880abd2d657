#include "lhv/perm.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lhv {

Permutation::Permutation(std::vector<int> word) : w_(std::move(word)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int v : w_) {
    if (v < 1 || static_cast<std::size_t>(v) > w_.size() || seen[v])
      throw std::invalid_argument("not a permutation of [" + std::to_string(w_.size()) + "]");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> w;
  if (text.find_first_of(" ,") == std::string::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad permutation '" + text + "'");
      w.push_back(c - '0');
    }
  } else {
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    int v;
    while (in >> v) w.push_back(v);
    if (!in.eof()) throw std::invalid_argument("bad permutation '" + text + "'");
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) inv[w_[i] - 1] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

std::string to_string(const Permutation& w) {
  std::string out;
  const bool compact = w.size() < 10;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    if (!compact && i > 1) out += ' ';
    out += std::to_string(w(i));
  }
  return out;
}

std::size_t descents(const Permutation& w) {
  std::size_t d = 0;
  for (std::size_t i = 1; i < w.size(); ++i) d += w(i) > w(i + 1);
  return d;
}

std::size_t ascents(const Permutation& w) {
  std::size_t a = 0;
  for (std::size_t i = 1; i < w.size(); ++i) a += w(i) < w(i + 1);
  return a;
}

std::size_t excedances(const Permutation& w) {
  std::size_t e = 0;
  for (std::size_t i = 1; i <= w.size(); ++i) e += w(i) > static_cast<int>(i);
  return e;
}

std::vector<int> fixed_points(const Permutation& w) {
  std::vector<int> fix;
  for (std::size_t i = 1; i <= w.size(); ++i)
    if (w(i) == static_cast<int>(i)) fix.push_back(static_cast<int>(i));
  return fix;
}

PermStats stats(const Permutation& w) { return {descents(w), ascents(w), excedances(w), fixed_points(w)}; }

namespace {

void check_bound(std::size_t n) {
  if (n > kMaxEnumeration)
    throw std::length_error("enumeration over S_" + std::to_string(n) + " exceeds the bound n <= " +
                            std::to_string(kMaxEnumeration));
}

IntPolynomial from_counts(const std::vector<unsigned long>& counts) {
  std::vector<Integer> c(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) c[i] = counts[i];
  return IntPolynomial(std::move(c));
}

// Sum of x^{stat(w)} over w in S_n with keep(w).
template <class Keep, class Stat>
IntPolynomial enumerate(std::size_t n, Keep keep, Stat stat) {
  check_bound(n);
  std::vector<unsigned long> counts(n + 1, 0);
  for_each_permutation(n, [&](const Permutation& w) {
    if (keep(w)) ++counts[stat(w)];
  });
  return from_counts(counts);
}

bool bad_points_within(const Permutation& w, std::size_t limit) {
  for (int b : bad_points(w))
    if (static_cast<std::size_t>(b) > limit) return false;
  return true;
}

void check_nk(std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("need 0 <= k <= n, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
}

}  // namespace

void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit) {
  check_bound(n);
  Permutation w = Permutation::identity(n);
  std::vector<int> word = w.word();
  do {
    visit(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

Permutation foata(const Permutation& w) {
  const std::size_t n = w.size();
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(n + 1, false);
  for (std::size_t start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int v = static_cast<int>(start); !seen[v]; v = w(static_cast<std::size_t>(v))) {
      seen[v] = true;
      cycle.push_back(v);
    }
    cycles.push_back(std::move(cycle));  // starts at its smallest element
  }
  std::vector<int> out;
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return Permutation(std::move(out));
}

std::vector<int> bad_points(const Permutation& w) {
  std::vector<int> bad;
  int running_min = std::numeric_limits<int>::max();
  const std::size_t n = w.size();
  for (std::size_t j = 1; j <= n; ++j) {
    if (w(j) > running_min) continue;
    running_min = w(j);
    if (j == n || w(j) > w(j + 1)) bad.push_back(w(j));
  }
  std::sort(bad.begin(), bad.end());
  return bad;
}

IntPolynomial eulerian(std::size_t n) {
  if (n == 0) return IntPolynomial{1};
  return enumerate(n, [](const Permutation&) { return true; }, [](const Permutation& w) { return descents(w); });
}

IntPolynomial p_nk(std::size_t n, std::size_t k) {
  check_nk(n, k);
  return enumerate(
      n + 1, [&](const Permutation& w) { return w.inverse()(1) == static_cast<int>(k + 1); },
      [](const Permutation& w) { return excedances(w); });
}

IntPolynomial p_nk_by_descents(std::size_t n, std::size_t k) {
  check_nk(n, k);
  return enumerate(
      n + 1, [&](const Permutation& w) { return w(1) == static_cast<int>(k + 1); },
      [](const Permutation& w) { return descents(w); });
}

IntPolynomial p_nk_by_ascents(std::size_t n, std::size_t k) {
  check_nk(n, k);
  return enumerate(
      n + 1, [&](const Permutation& w) { return w(n + 1) == static_cast<int>(k + 1); },
      [](const Permutation& w) { return ascents(w); });
}

IntPolynomial d_nk(std::size_t n, std::size_t k) {
  check_nk(n, k);
  if (n == 0) return IntPolynomial{1};
  return enumerate(
      n,
      [&](const Permutation& w) {
        const auto fix = fixed_points(w);
        return fix.empty() || static_cast<std::size_t>(fix.back()) <= n - k;
      },
      [](const Permutation& w) { return excedances(w); });
}

const std::vector<std::vector<IntPolynomial>>& d_table(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<std::vector<std::vector<IntPolynomial>>>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return *it->second;

  auto table = std::make_unique<std::vector<std::vector<IntPolynomial>>>();
  if (n == 0) {
    table->assign(1, {IntPolynomial{1}});
  } else {
    check_bound(n + 1);
    const std::size_t m = n + 1;
    // counts[j][largest fixed point][exc] over w in S_{n+1} with w^{-1}(1) = j + 1.
    std::vector<std::vector<std::vector<unsigned long>>> counts(
        m, std::vector<std::vector<unsigned long>>(m + 1, std::vector<unsigned long>(m, 0)));
    std::vector<int> word(m);
    std::iota(word.begin(), word.end(), 1);
    do {
      std::size_t j = 0, top_fix = 0, exc = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (word[i] == 1) j = i;
        if (word[i] == static_cast<int>(i + 1)) top_fix = i + 1;
        if (word[i] > static_cast<int>(i + 1)) ++exc;
      }
      ++counts[j][top_fix][exc];
    } while (std::next_permutation(word.begin(), word.end()));

    table->assign(n + 1, std::vector<IntPolynomial>(n + 1));
    for (std::size_t k = 0; k <= n; ++k) {
      for (std::size_t j = 0; j <= n; ++j) {
        std::vector<unsigned long> acc(m, 0);
        for (std::size_t t = 0; t + k <= m; ++t)
          for (std::size_t e = 0; e < m; ++e) acc[e] += counts[j][t][e];
        (*table)[k][j] = from_counts(acc);
      }
    }
  }
  return *cache.emplace(n, std::move(table)).first->second;
}

IntPolynomial d_nkj(std::size_t n, std::size_t k, std::size_t j) {
  if (k > n || j > n)
    throw std::invalid_argument("d_{n,k,j} needs 0 <= k, j <= n, got (" + std::to_string(n) + ", " +
                                std::to_string(k) + ", " + std::to_string(j) + ")");
  return d_table(n)[k][j];
}

IntPolynomial d_nk_via_bad_points(std::size_t n, std::size_t k) {
  check_nk(n, k);
  if (n == 0) return IntPolynomial{1};
  return enumerate(
      n, [&](const Permutation& w) { return bad_points_within(w, n - k); },
      [](const Permutation& w) { return ascents(w); });
}

IntPolynomial d_nkj_via_bad_points(std::size_t n, std::size_t k, std::size_t j) {
  if (k > n || j > n) throw std::invalid_argument("d_{n,k,j} needs 0 <= k, j <= n");
  if (n == 0) return IntPolynomial{1};
  return enumerate(
      n + 1,
      [&](const Permutation& w) { return w(n + 1) == static_cast<int>(j + 1) && bad_points_within(w, n + 1 - k); },
      [](const Permutation& w) { return ascents(w); });
}

std::vector<Integer> derangement_counts(std::size_t n) {
  if (n == 0) return {Integer(1)};
  check_bound(n);
  std::vector<Integer> d(n, 0);
  for_each_permutation(n, [&](const Permutation& w) {
    if (fixed_points(w).empty()) ++d[excedances(w)];
  });
  return d;
}

void for_each_word(std::size_t n, unsigned r, const std::function<void(const Word&)>& visit) {
  if (n < 1 || r < 1) throw std::invalid_argument("words need n >= 1 and r >= 1");
  Word w(n, 0);
  while (true) {
    visit(w);
    std::size_t i = n;
    while (i > 1 && w[i - 1] + 1 == r) w[--i] = 0;
    if (i == 1) return;
    ++w[i - 1];
  }
}

std::vector<Word> words(std::size_t n, unsigned r) {
  std::vector<Word> out;
  for_each_word(n, r, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::size_t ascents(const Word& w) {
  std::size_t a = 0;
  for (std::size_t i = 1; i < w.size(); ++i) a += w[i - 1] < w[i];
  return a;
}

IntPolynomial E_nr(std::size_t n, unsigned r) {
  if (n < 1 || r < 1) throw std::invalid_argument("E_{n,r} needs n >= 1 and r >= 1");
  return veronese(pow(geometric_sum(r), static_cast<unsigned>(n)), r, 0);
}

IntPolynomial E_nr_by_words(std::size_t n, unsigned r) {
  std::vector<unsigned long> counts(n, 0);
  for_each_word(n, r, [&](const Word& w) { ++counts[ascents(w)]; });
  return from_counts(counts);
}

}  // namespace lhv
