#pragma once

// Test-only reference computations, deliberately naive and independent of the library's algorithms.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "gpjac/int_matrix.hpp"
#include "gpjac/polynomial.hpp"

namespace oracle {

using gpjac::Integer;
using gpjac::IntegerMatrix;
using gpjac::LaurentPolynomial;

/// Laplace expansion along the first row.
inline Integer cofactor_det(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    Integer term = m(0, c) * cofactor_det(m.without(0, c));
    if (c % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t size, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(size);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == size) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

/// gcd of all j x j minors (the j-th determinantal divisor), 0 if all vanish.
inline Integer determinantal_divisor(const IntegerMatrix& m, std::size_t j) {
  Integer g = 0;
  for_each_subset(m.rows(), j, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(m.cols(), j, [&](const std::vector<std::size_t>& cols) {
      IntegerMatrix sub(j, j);
      for (std::size_t a = 0; a < j; ++a)
        for (std::size_t b = 0; b < j; ++b) sub(a, b) = m(rows[a], cols[b]);
      g = gcd(g, cofactor_det(sub));
    });
  });
  return g;
}

inline IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

/// det(zI - A) by fraction-free elimination over Z[z].
inline LaurentPolynomial characteristic_polynomial(const IntegerMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<LaurentPolynomial>> m(n, std::vector<LaurentPolynomial>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      m[r][c] = LaurentPolynomial::constant(-a(r, c));
      if (r == c) m[r][c] += LaurentPolynomial::monomial(1);
    }
  int sign = 1;
  LaurentPolynomial prev = LaurentPolynomial::constant(1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (m[i][i].is_zero()) {
      std::size_t s = i + 1;
      while (s < n && m[s][i].is_zero()) ++s;
      if (s == n) return {};
      std::swap(m[i], m[s]);
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < n; ++r) {
      for (std::size_t c = i + 1; c < n; ++c) {
        m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]).divide_exact(prev);
      }
      m[r][i] = {};
    }
    prev = m[i][i];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

/// prod_i (z - r_i) for integer roots.
inline LaurentPolynomial from_roots(const std::vector<long>& roots) {
  LaurentPolynomial p = LaurentPolynomial::constant(1);
  for (long r : roots) p = p * LaurentPolynomial{0, {-r, 1}};
  return p;
}

}  // namespace oracle
