#include "jkinv/catalog.hpp"

#include "jkinv/errors.hpp"

#include <functional>

namespace jkinv {

namespace {

Mat unit(std::size_t n, std::size_t i, std::size_t j) {
  Mat e(n, n);
  e(i, j) = 1;
  return e;
}

Vec flatten(const Mat& m) {
  Vec v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// Blocks listed as (count, value); counts are checked to be non-negative.
void put(Multiset& out, long count, long value, const char* what) {
  if (count < 0 || (count > 0 && value < 1))
    throw InternalConsistencyError(std::string("closed form gives a negative count for ") + what);
  for (long i = 0; i < count; ++i) out.push_back(static_cast<unsigned>(value));
}

}  // namespace

Family Family::parse(std::string_view s) {
  auto colon = s.find(':');
  if (colon == std::string_view::npos) throw InputError("family must look like gl:3");
  Family f;
  f.name = std::string(s.substr(0, colon));
  std::string num(s.substr(colon + 1));
  if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos || num.size() > 4)
    throw InputError("family size must be a positive integer");
  f.n = std::stoul(num);
  if (f.name != "gl" && f.name != "sl" && f.name != "so" && f.name != "sp")
    throw InputError("family must be gl, sl, so or sp");
  if (f.n < 1 || (f.name != "gl" && f.n < 2)) throw InputError("family size too small");
  if (f.name == "sp" && f.n % 2) throw InputError("sp needs even n");
  return f;
}

int Family::epsilon() const { return name == "so" ? -1 : name == "sp" ? 1 : 0; }

std::size_t Family::algebra_dim() const {
  if (name == "gl") return n * n;
  if (name == "sl") return n * n - 1;
  if (name == "so") return n * (n - 1) / 2;
  return n * (n + 1) / 2;
}

Classical algebra_from_matrices(const std::vector<Mat>& basis) {
  if (basis.empty()) throw InputError("empty basis");
  const std::size_t d = basis.size(), n = basis[0].rows();
  std::vector<Vec> cols;
  for (const auto& b : basis) cols.push_back(flatten(b));
  Mat m = Mat::from_columns(cols, n * n);
  if (rank(m) != d) throw InputError("basis matrices are linearly dependent");
  // coordinates through the normal equations
  Mat proj = inverse(m.transpose() * m) * m.transpose();
  Classical c;
  c.algebra = LieAlgebra(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vec v = flatten(basis[i] * basis[j] - basis[j] * basis[i]);
      Vec coord = proj * v;
      if (m * coord != v) throw InputError("basis is not closed under the commutator");
      for (std::size_t k = 0; k < d; ++k) c.algebra.add(i, j, k, coord[k]);
    }
  c.standard.algebra = c.algebra;
  c.standard.dim_v = n;
  c.standard.mats = basis;
  return c;
}

Classical build_classical(const Family& f) {
  const std::size_t n = f.n;
  std::vector<Mat> basis;
  if (f.name == "gl") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) basis.push_back(unit(n, i, j));
  } else if (f.name == "sl") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) basis.push_back(unit(n, i, j));
    for (std::size_t i = 0; i + 1 < n; ++i) basis.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
  } else if (f.name == "so") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) basis.push_back(unit(n, i, j) - unit(n, j, i));
  } else {
    // X^T J + J X = 0 with J = [[0, I], [-I, 0]]
    const std::size_t k = n / 2;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) basis.push_back(unit(n, i, j) - unit(n, k + j, k + i));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        basis.push_back(i == j ? unit(n, i, k + i) : unit(n, i, k + j) + unit(n, j, k + i));
        basis.push_back(i == j ? unit(n, k + i, i) : unit(n, k + i, j) + unit(n, k + j, i));
      }
  }
  Classical c = algebra_from_matrices(basis);
  if (c.algebra.dim() != f.algebra_dim()) throw InternalConsistencyError("classical basis has the wrong size");
  validate(c.standard);
  return c;
}

BundleSig expected_rep_jk(const Family& f, std::size_t m_) {
  if (m_ < 1) throw InputError("m must be at least 1");
  const long n = static_cast<long>(f.n), m = static_cast<long>(m_), eps = f.epsilon();
  BundleSig s;
  s.m = f.n * m_;
  s.n = f.algebra_dim();
  const char* cell = "representation table";
  if (m < n) {
    const long q = m / (n - m), r = m % (n - m);
    if (f.name == "gl") {
      put(s.horizontal, n * (n - m - r), q + 1, cell);
      put(s.horizontal, n * r, q + 2, cell);
    } else if (f.name == "sl") {
      put(s.horizontal, n * (n - m - r) - (q + 1), q + 1, cell);
      put(s.horizontal, n * r + q, q + 2, cell);
    } else {
      const long u = n - m - r;
      put(s.horizontal, u * (u + eps) / 2, 2 * q + 1, cell);
      put(s.horizontal, u * r, 2 * q + 2, cell);
      put(s.horizontal, r * (r + eps) / 2, 2 * q + 3, cell);
      put(s.vertical, m * (m - eps) / 2, 2, cell);
    }
  } else if (m == n) {
    if (f.name == "gl") {
      for (long j = 0; j < n; ++j) s.slots.push_back(Multiset(f.n, 1));
    } else if (f.name == "sl") {
      put(s.vertical, 1, n, cell);
      for (long j = 0; j < n; ++j) s.slots.push_back(Multiset(f.n - 1, 1));
    } else if (f.name == "so") {
      put(s.vertical, n, 1, cell);
      put(s.vertical, n * (n - 1) / 2, 2, cell);
    } else {
      put(s.vertical, n * (n - 1) / 2, 2, cell);
      for (long j = 0; j < n; ++j) s.slots.push_back({1});
    }
  } else {
    const long q = n / (m - n), r = n % (m - n);
    if (f.name == "gl") {
      put(s.vertical, n * (m - n - r), q + 1, cell);
      put(s.vertical, n * r, q + 2, cell);
    } else if (f.name == "sl") {
      if (r != 0) {
        put(s.vertical, n * (m - n - r) + (q + 2), q + 1, cell);
        put(s.vertical, n * r - (q + 1), q + 2, cell);
      } else {
        put(s.vertical, q + 1, q, cell);
        put(s.vertical, n * (m - n) - q, q + 1, cell);
      }
    } else {
      put(s.vertical, (m - n - eps) * n, 1, cell);
      put(s.vertical, n * (n + eps) / 2, 2, cell);
    }
  }
  s.rank = s.n - s.horizontal.size();
  s.normalize();
  s.check();
  return s;
}

std::optional<SkewBundleSig> expected_lie_jk(const Family& f, std::size_t m_) {
  if (m_ < 1) throw InputError("m must be at least 1");
  const long n = static_cast<long>(f.n), m = static_cast<long>(m_), eps = f.epsilon();
  SkewBundleSig s;
  s.dim = f.algebra_dim() + f.n * m_;
  const char* cell = "semi-direct table";
  auto slots = [&](long count, Multiset tuple) {
    if (count < 0) throw InternalConsistencyError("closed form gives a negative slot count");
    if (tuple.empty()) return;
    for (long j = 0; j < count; ++j) s.slots.push_back(tuple);
  };
  auto twos_then = [](long twos, std::optional<unsigned> last) {
    Multiset t(static_cast<std::size_t>(twos), 2);
    if (last) t.push_back(*last);
    return t;
  };
  if (m < n) {
    const long l = n / m, d = n % m;
    if (f.name == "gl") {
      // the tuple needs m - 2 >= 0 twos
      if (d != 0 || m < 2) return std::nullopt;
      slots(m * l * (l + 1) / 2, twos_then(m - 2, 4u));
    } else if (f.name == "sl") {
      if (d == 0) {
        put(s.kronecker, 1, m * l * (l + 1) / 2, cell);
        slots(m * l * (l + 1) / 2, twos_then(m - 1, std::nullopt));
      } else if (d == 1 || d == m - 1) {
        put(s.kronecker, m, (l + 1) * (n + d) / 2, cell);
      } else {
        return std::nullopt;
      }
    } else {
      put(s.kronecker, m * (m - eps) / 2, 2, cell);
      const bool odd = (n + m) % 2 == 1;
      if (f.name == "so") {
        const long hi = odd ? n + m - 1 : n + m - 2;
        for (long k = 2 * m + 2; k <= hi; k += 2) put(s.kronecker, 1, k, cell);
        if (!odd) put(s.kronecker, 1, (n + m) / 2, cell);
      } else if (odd) {
        for (long k = 2 * m + 1; k <= n + m; k += 2) put(s.kronecker, 1, k, cell);
      } else {
        for (long k = 2 * m + 2; k <= n + m; k += 2) put(s.kronecker, 1, k, cell);
        slots(m, {2});
      }
    }
  } else if (m == n) {
    if (f.name == "gl") {
      slots(n, twos_then(n - 2, 4u));
    } else if (f.name == "sl") {
      put(s.kronecker, 1, n, cell);
      slots(n, twos_then(n - 1, std::nullopt));
    } else if (f.name == "so") {
      put(s.kronecker, n, 1, cell);
      put(s.kronecker, n * (n + eps) / 2, 2, cell);
    } else {
      put(s.kronecker, n * (n - 1) / 2, 2, cell);
      slots(n, {2});
    }
  } else {
    const long q = n / (m - n), r = n % (m - n);
    if (f.name == "gl") {
      put(s.kronecker, n * (m - n - r), q + 1, cell);
      put(s.kronecker, n * r, q + 2, cell);
    } else if (f.name == "sl") {
      if (r != 0) {
        put(s.kronecker, n * (m - n - r) + q + 2, q + 1, cell);
        put(s.kronecker, n * r - (q + 1), q + 2, cell);
      } else {
        put(s.kronecker, q + 1, q, cell);
        put(s.kronecker, n * (m - n) - q, q + 1, cell);
      }
    } else {
      put(s.kronecker, (m - n - eps) * n, 1, cell);
      put(s.kronecker, n * (n + eps) / 2, 2, cell);
    }
  }
  s.normalize();
  s.check();
  return s;
}

}  // namespace jkinv
