#pragma once

// Slow independent reference implementations used only by tests.

#include "singchain/rational.hpp"

#include <vector>

namespace oracle {

using singchain::BigInt;
using singchain::Rational;

inline Rational continued_fraction(const std::vector<int>& e, std::size_t i = 0) {
  if (i + 1 == e.size()) return Rational(e[i]);
  return Rational(e[i]) - 1 / continued_fraction(e, i + 1);
}

// Gaussian elimination with partial pivoting over Q. Returns false if singular.
inline bool solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  std::vector<Rational>& x) {
  std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

// Log discrepancies of a chain of smooth rational curves over Q.
inline std::vector<Rational> chain_alphas(const std::vector<int>& e) {
  std::size_t n = e.size();
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, 0));
  std::vector<Rational> k(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i][i] = -e[i];
    if (i + 1 < n) g[i][i + 1] = g[i + 1][i] = 1;
    k[i] = e[i] - 2;
  }
  std::vector<Rational> x;
  solve(g, k, x);
  for (auto& v : x) v += 1;
  return x;
}

// T-chain test by trying every factorisation N = d m^2.
inline bool is_t_by_factoring(const std::vector<int>& e) {
  bool all2 = true;
  for (int b : e) all2 = all2 && b == 2;
  if (all2) return false;
  Rational q = continued_fraction(e);
  BigInt n = boost::multiprecision::numerator(q), a = boost::multiprecision::denominator(q);
  for (BigInt m = 2; m * m <= n; ++m) {
    if (n % (m * m) != 0) continue;
    BigInt d = n / (m * m);
    if ((a + 1) % (d * m) != 0) continue;
    BigInt x = (a + 1) / (d * m);
    if (x >= 1 && x < m && boost::multiprecision::gcd(x, m) == 1) return true;
  }
  return false;
}

}  // namespace oracle
