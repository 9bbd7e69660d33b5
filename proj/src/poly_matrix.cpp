#include "jkinv/poly_matrix.hpp"

#include "jkinv/errors.hpp"

#include <utility>

namespace jkinv {

PolyMat PolyMat::from_pencil(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("pencil shape mismatch");
  PolyMat p(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) p(i, j) = Poly(std::vector<Rat>{a(i, j), b(i, j)});
  return p;
}

namespace {

void swap_rows(PolyMat& m, std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(i, j), m(k, j));
}

void swap_cols(PolyMat& m, std::size_t j, std::size_t k) {
  if (j == k) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, j), m(i, k));
}

// Position of a nonzero entry of least degree in the trailing submatrix.
bool find_min(const PolyMat& m, std::size_t t, std::size_t& pi, std::size_t& pj) {
  int best = -1;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      const Poly& e = m(i, j);
      if (e.is_zero()) continue;
      if (best < 0 || e.degree() < best) {
        best = e.degree();
        pi = i;
        pj = j;
      }
    }
  return best >= 0;
}

}  // namespace

std::vector<Poly> poly_smith_invariant_factors(const PolyMat& pm) {
  if (pm.rows() == 0 || pm.cols() == 0) throw InputError("smith form of an empty matrix");
  PolyMat m = pm;
  std::vector<Poly> factors;
  const std::size_t lim = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < lim; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_min(m, t, pi, pj)) break;
    swap_rows(m, t, pi);
    swap_cols(m, t, pj);
    for (;;) {
      bool dirty = false;
      // Clear column t below the pivot.
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m(i, t).is_zero()) continue;
        Poly q = m(i, t) / m(t, t);
        for (std::size_t j = t; j < m.cols(); ++j)
          if (!m(t, j).is_zero()) m(i, j) -= q * m(t, j);
        if (!m(i, t).is_zero()) dirty = true;
      }
      // Clear row t right of the pivot.
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m(t, j).is_zero()) continue;
        Poly q = m(t, j) / m(t, t);
        for (std::size_t i = t; i < m.rows(); ++i)
          if (!m(i, t).is_zero()) m(i, j) -= q * m(i, t);
        if (!m(t, j).is_zero()) dirty = true;
      }
      if (dirty) {
        // A remainder of smaller degree survived; make it the pivot and repeat.
        std::size_t bi = t, bj = t;
        int best = m(t, t).degree();
        for (std::size_t i = t + 1; i < m.rows(); ++i)
          if (!m(i, t).is_zero() && m(i, t).degree() < best) best = m(i, t).degree(), bi = i, bj = t;
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (!m(t, j).is_zero() && m(t, j).degree() < best) best = m(t, j).degree(), bi = t, bj = j;
        swap_rows(m, t, bi);
        swap_cols(m, t, bj);
        continue;
      }
      // Pivot must divide the whole trailing block; otherwise fold a row in.
      bool divides = true;
      for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (!m(i, j).is_zero() && !(m(i, j) % m(t, t)).is_zero()) {
            for (std::size_t k = t; k < m.cols(); ++k) m(t, k) += m(i, k);
            divides = false;
            break;
          }
      if (divides) break;
    }
    factors.push_back(m(t, t).monic());
  }
  return factors;
}

}  // namespace jkinv
