#pragma once

// Independent reference computations for the tests.  Deliberately naive and
// written without touching the library's elimination code.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;
using Mat = std::vector<std::vector<Q>>;

// Fraction-free Bareiss elimination on the integer-scaled rows.
inline std::size_t rank(const Mat& a) {
  if (a.empty()) return 0;
  const std::size_t m = a.size(), n = a[0].size();
  std::vector<std::vector<Z>> z(m, std::vector<Z>(n));
  for (std::size_t i = 0; i < m; ++i) {
    Z l = 1;
    for (const auto& x : a[i]) l = lcm(l, Z(x.get_den()));
    for (std::size_t j = 0; j < n; ++j) z[i][j] = a[i][j].get_num() * (l / a[i][j].get_den());
  }
  Z prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && z[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(z[p], z[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) z[i][j] = (z[r][c] * z[i][j] - z[i][c] * z[r][j]) / prev;
      z[i][c] = 0;
    }
    prev = z[r][c];
    ++r;
  }
  return r;
}

inline std::vector<Q> apply(const Mat& a, const std::vector<Q>& v) {
  std::vector<Q> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

inline bool all_zero(const std::vector<Q>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Mat random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat a(m, std::vector<Q>(n));
  for (auto& row : a)
    for (auto& x : row) x = d(rng);
  return a;
}

// Rank-deficient matrix: product of random m×k and k×n factors.
inline Mat random_low_rank(std::mt19937_64& rng, std::size_t m, std::size_t n, std::size_t k) {
  const Mat l = random_matrix(rng, m, k), r = random_matrix(rng, k, n);
  Mat a(m, std::vector<Q>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t j = 0; j < n; ++j) a[i][j] += l[i][t] * r[t][j];
  return a;
}

// Inertia of a symmetric matrix by Descartes' rule of signs on the
// characteristic polynomial, which is exact because every root is real.
inline std::vector<Q> charpoly(const Mat& a) {
  // Faddeev-LeVerrier, exact over Q.
  const std::size_t n = a.size();
  std::vector<Q> c(n + 1);
  c[n] = 1;
  Mat m(n, std::vector<Q>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    Mat am(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t j = 0; j < n; ++j) am[i][j] += a[i][t] * m[t][j];
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = am;
    Q tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t) tr += a[i][t] * m[t][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

struct Inertia {
  std::size_t pos = 0, neg = 0, null = 0;
};

inline Inertia inertia(const Mat& a) {
  const auto c = charpoly(a);  // lowest degree first
  Inertia out;
  std::size_t lowest = 0;
  while (lowest < c.size() && c[lowest] == 0) ++lowest;
  out.null = lowest;
  auto sign_changes = [](const std::vector<int>& s) {
    std::size_t n = 0;
    int last = 0;
    for (int x : s) {
      if (x == 0) continue;
      if (last != 0 && x != last) ++n;
      last = x;
    }
    return n;
  };
  std::vector<int> s, sneg;
  for (std::size_t k = lowest; k < c.size(); ++k) {
    s.push_back(sgn(c[k]));
    sneg.push_back(((k % 2) ? -1 : 1) * sgn(c[k]));
  }
  out.pos = sign_changes(s);
  out.neg = sign_changes(sneg);
  return out;
}


// Solves a x = b by plain Gauss-Jordan on a copy; empty when inconsistent.
// Assumes the columns of a are independent.
inline std::optional<std::vector<Q>> solve(Mat a, std::vector<Q> b) {
  const std::size_t m = a.size(), n = m ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Q inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Q f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Q> x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace oracle
