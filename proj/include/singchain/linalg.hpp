#pragma once

#include "singchain/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace singchain {

struct NotNegativeDefinite : std::domain_error {
  NotNegativeDefinite() : std::domain_error("intersection matrix is not negative definite") {}
};

namespace detail {

struct Overflow {};

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }

// Fraction-free Gauss-Jordan on [A | b] without pivoting. Throws
// NotNegativeDefinite when a leading principal minor of A is <= 0.
// On return every diagonal entry equals det(A) and column n holds det*x.
template <class T>
void bareiss_jordan(std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  T prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] <= 0) throw NotNegativeDefinite();
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j <= n; ++j) {
        if (j == k) continue;
        m[i][j] = sub(mul(m[k][k], m[i][j]), mul(m[i][k], m[k][j])) / prev;
      }
    }
    // Rows above k must be rescaled too: their diagonal was computed with prev.
    for (std::size_t i = 0; i < n; ++i)
      if (i != k) m[i][k] = 0;
    prev = m[k][k];
  }
}

}  // namespace detail

struct PositiveSolve {
  BigInt det;
  std::vector<BigInt> numer;  // x_i = numer_i / det
};

// Solves A x = b for symmetric positive definite integer A (checked).
inline PositiveSolve solve_positive_definite(const std::vector<std::vector<std::int64_t>>& a,
                                             const std::vector<std::int64_t>& b) {
  const std::size_t n = a.size();
  try {
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
      m[i][n] = b[i];
    }
    detail::bareiss_jordan(m);
    PositiveSolve s{n ? BigInt(m[n - 1][n - 1]) : BigInt(1), {}};
    for (std::size_t i = 0; i < n; ++i) s.numer.push_back(m[i][n]);
    return s;
  } catch (const detail::Overflow&) {
  }
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n] = b[i];
  }
  detail::bareiss_jordan(m);
  PositiveSolve s{n ? m[n - 1][n - 1] : BigInt(1), {}};
  for (std::size_t i = 0; i < n; ++i) s.numer.push_back(m[i][n]);
  return s;
}

}  // namespace singchain
