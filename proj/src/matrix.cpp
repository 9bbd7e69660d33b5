#include "jkinv/matrix.hpp"

#include "jkinv/errors.hpp"

#include <algorithm>
#include <utility>

namespace jkinv {

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (const auto& x : r) a_.push_back(x);
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InputError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InputError("block out of range");
  Mat b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& m) {
  if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) throw InputError("block out of range");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool Mat::is_skew() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

Mat operator+(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw InputError("shape mismatch in +");
  Mat s(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) s(i, j) = x(i, j) + y(i, j);
  return s;
}

Mat operator-(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw InputError("shape mismatch in -");
  Mat s(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) s(i, j) = x(i, j) - y(i, j);
  return s;
}

Mat operator-(const Mat& x) {
  Mat s(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) s(i, j) = -x(i, j);
  return s;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols() != y.rows()) throw InputError("shape mismatch in *");
  Mat p(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j)
        if (y(k, j) != 0) p(i, j) += x(i, k) * y(k, j);
    }
  return p;
}

Mat operator*(const Rat& c, const Mat& x) {
  Mat s(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) s(i, j) = c * x(i, j);
  return s;
}

Vec operator*(const Mat& x, const Vec& v) {
  if (x.cols() != v.size()) throw InputError("shape mismatch in matrix-vector product");
  Vec out(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x(i, j) != 0 && v[j] != 0) out[i] += x(i, j) * v[j];
  return out;
}

Mat direct_sum(const Mat& x, const Mat& y) {
  Mat s(x.rows() + y.rows(), x.cols() + y.cols());
  s.set_block(0, 0, x);
  s.set_block(x.rows(), x.cols(), y);
  return s;
}

namespace {

// Integer copy of m with each row multiplied by the lcm of its denominators.
// scale[i] records that multiplier.
struct IntRows {
  std::size_t rows, cols;
  std::vector<Int> a;
  std::vector<Int> scale;

  explicit IntRows(const Mat& m) : rows(m.rows()), cols(m.cols()), a(rows * cols), scale(rows) {
    for (std::size_t i = 0; i < rows; ++i) {
      Int l = 1;
      for (std::size_t j = 0; j < cols; ++j) {
        const Int& d = m(i, j).get_den();
        if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      }
      scale[i] = l;
      for (std::size_t j = 0; j < cols; ++j) {
        const Rat& q = m(i, j);
        if (q == 0) continue;
        Int& e = at(i, j);
        mpz_divexact(e.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        e *= q.get_num();
      }
    }
  }

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }

  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < cols; ++j) std::swap(at(i, j), at(k, j));
    std::swap(scale[i], scale[k]);
  }
};

struct Echelon {
  std::vector<std::size_t> pivot_cols;
  int sign = 1;
};

// Fraction-free forward elimination in place. Entries stay integral because
// every intermediate value is a minor of the input.
Echelon bareiss(IntRows& m) {
  Echelon e;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r) {
      m.swap_rows(p, r);
      e.sign = -e.sign;
    }
    const Int& piv = m.at(r, c);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      Int& lead = m.at(i, c);
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        Int& x = m.at(i, j);
        mpz_mul(x.get_mpz_t(), x.get_mpz_t(), piv.get_mpz_t());
        mpz_submul(x.get_mpz_t(), lead.get_mpz_t(), m.at(r, j).get_mpz_t());
        if (prev != 1) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = piv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

std::size_t rank(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntRows w(m);
  return bareiss(w).pivot_cols.size();
}

std::vector<std::size_t> pivot_columns(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  IntRows w(m);
  return bareiss(w).pivot_cols;
}

Vec primitive(const Vec& v) {
  Int l = 1, g = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_num_mpz_t());
  }
  if (g == 0) return out;
  auto lead = std::find_if(out.begin(), out.end(), [](const Rat& x) { return x != 0; });
  if (*lead < 0) g = -g;
  for (auto& x : out) x /= g;
  return out;
}

std::vector<Vec> kernel_basis(const Mat& m) {
  std::vector<Vec> basis;
  const std::size_t n = m.cols();
  if (n == 0) return basis;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec v(n);
      v[j] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  IntRows w(m);
  auto e = bareiss(w);
  const std::size_t r = e.pivot_cols.size();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec x(n);
    x[f] = 1;
    for (std::size_t ii = r; ii-- > 0;) {
      const std::size_t pc = e.pivot_cols[ii];
      Rat s = 0;
      for (std::size_t j = pc + 1; j < n; ++j)
        if (x[j] != 0 && w.at(ii, j) != 0) s += Rat(w.at(ii, j)) * x[j];
      x[pc] = -s / Rat(w.at(ii, pc));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Rat determinant(const Mat& m) {
  if (!m.is_square()) throw InputError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntRows w(m);
  auto e = bareiss(w);
  if (e.pivot_cols.size() < n) return 0;
  Int scale = 1;
  for (const auto& s : w.scale) scale *= s;
  Rat d(w.at(n - 1, n - 1) * e.sign, scale);
  d.canonicalize();
  return d;
}

Mat inverse(const Mat& m) {
  if (!m.is_square()) throw InputError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat a = m;
  Mat inv = Mat::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw InputError("singular matrix has no inverse");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rat piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (a(c, j) != 0) a(i, j) -= f * a(c, j);
        if (inv(c, j) != 0) inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Rat pfaffian(const Mat& m) {
  if (!m.is_square() || m.rows() % 2 != 0) throw InputError("pfaffian needs an even square matrix");
  if (!m.is_skew()) throw InputError("pfaffian needs a skew-symmetric matrix");
  Mat a = m;
  std::size_t n = a.rows();
  Rat result = 1;
  // Eliminate the leading 2x2 block each round: Pf(A) = a01 * Pf(Schur complement).
  while (n > 0) {
    std::size_t j = 1;
    while (j < n && a(0, j) == 0) ++j;
    if (j == n) return 0;
    if (j != 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(k, 1), a(k, j));
      for (std::size_t k = 0; k < n; ++k) std::swap(a(1, k), a(j, k));
      result = -result;
    }
    const Rat a01 = a(0, 1);
    result *= a01;
    // Schur complement S = A22 - A21 * inv(A11) * A12 with A11 = [[0,a01],[-a01,0]].
    Mat s(n - 2, n - 2);
    for (std::size_t p = 2; p < n; ++p)
      for (std::size_t q = 2; q < n; ++q) {
        // inv(A11) = [[0,-1/a01],[1/a01,0]]
        Rat v = a(p, q);
        v -= (a(p, 0) * (-a(1, q)) + a(p, 1) * a(0, q)) / a01;
        s(p - 2, q - 2) = v;
      }
    a = s;
    n -= 2;
  }
  return result;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim) {
  std::vector<Vec> rows;
  for (const auto& v : vectors) {
    if (v.size() != dim) throw InputError("vector length mismatch in span");
    rows.push_back(v);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rat piv = rows[r][c];
    for (auto& x : rows[r]) x /= piv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (std::size_t j = c; j < dim; ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

}  // namespace jkinv
