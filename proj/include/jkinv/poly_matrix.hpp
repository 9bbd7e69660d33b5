#pragma once

#include "jkinv/matrix.hpp"
#include "jkinv/poly.hpp"

#include <cstddef>
#include <vector>

namespace jkinv {

// Dense matrix over Q[x].
class PolyMat {
 public:
  PolyMat() = default;
  PolyMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  // A + x B
  static PolyMat from_pencil(const Mat& a, const Mat& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> a_;
};

// Monic invariant factors d_1 | ... | d_r, r = rank over Q(x).
std::vector<Poly> poly_smith_invariant_factors(const PolyMat& pm);

}  // namespace jkinv
