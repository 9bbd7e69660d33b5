#pragma once

#include "jkinv/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace jkinv {

// Dense row-major matrix over Q.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;

  Mat transpose() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& m);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_skew() const;

  friend bool operator==(const Mat& x, const Mat& y) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator-(const Mat& x);
Mat operator*(const Mat& x, const Mat& y);
Mat operator*(const Rat& c, const Mat& x);
Vec operator*(const Mat& x, const Vec& v);

// Block diagonal sum.
Mat direct_sum(const Mat& x, const Mat& y);

// Exact rank over Q via fraction-free (Bareiss) elimination.
std::size_t rank(const Mat& m);

// Leftmost maximal set of independent columns.
std::vector<std::size_t> pivot_columns(const Mat& m);

// Scales a nonzero vector to coprime integer entries with positive leading
// entry; span is unchanged.
Vec primitive(const Vec& v);

// Basis of the right null space; size = cols - rank.
std::vector<Vec> kernel_basis(const Mat& m);

Rat determinant(const Mat& m);

// Throws InputError if singular or non-square.
Mat inverse(const Mat& m);

// Pf(m) for even-dimensional skew-symmetric m; Pf(m)^2 = det(m).
Rat pfaffian(const Mat& m);

// Reduced row echelon basis of span(vectors); canonical for a given subspace.
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim);

}  // namespace jkinv
