#pragma once

#include "jkinv/matrix.hpp"
#include "jkinv/pencil.hpp"
#include "jkinv/poly.hpp"
#include "jkinv/poly_matrix.hpp"

#include <functional>
#include <random>
#include <vector>

namespace jktest {

using namespace jkinv;

inline Mat random_int_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

inline Mat random_invertible(std::mt19937_64& rng, std::size_t n, int lo = -5, int hi = 5) {
  for (;;) {
    Mat m = random_int_mat(rng, n, n, lo, hi);
    if (determinant(m) != 0) return m;
  }
}

// Cofactor expansion; independent of the elimination code.
inline Rat cofactor_det(const Mat& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rat s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    Mat minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, kk = 0; k < n; ++k) {
        if (k == j) continue;
        minor(i - 1, kk++) = m(i, k);
      }
    Rat t = m(0, j) * cofactor_det(minor);
    s += (j % 2 == 0) ? t : -t;
  }
  return s;
}

inline Poly poly_cofactor_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(1);
  if (n == 1) return m[0][0];
  Poly s;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) minor[i - 1].push_back(m[i][k]);
    Poly t = m[0][j] * poly_cofactor_det(minor);
    if (j % 2 == 0)
      s += t;
    else
      s -= t;
  }
  return s;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
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

// gcd of all k x k minors of a polynomial matrix, by enumeration.
inline Poly minors_gcd(const PolyMat& pm, std::size_t k) {
  Poly g;
  for_each_subset(pm.rows(), k, [&](const std::vector<std::size_t>& rs) {
    for_each_subset(pm.cols(), k, [&](const std::vector<std::size_t>& cs) {
      std::vector<std::vector<Poly>> sub(k, std::vector<Poly>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = pm(rs[i], cs[j]);
      g = gcd(g, poly_cofactor_det(sub));
    });
  });
  return g;
}

}  // namespace jktest
