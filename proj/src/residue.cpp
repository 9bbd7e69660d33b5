#include "jkinv/residue.hpp"

#include "jkinv/errors.hpp"

#include <deque>
#include <utility>

namespace jkinv {

namespace {

struct ZeroDivisor {
  Poly factor;  // monic, 0 < deg < deg q
};

class Ring {
 public:
  explicit Ring(Poly q) : q_(std::move(q)) {}

  Poly reduce(const Poly& a) const { return a.degree() < q_.degree() ? a : a % q_; }
  Poly mul(const Poly& a, const Poly& b) const {
    if (a.is_zero() || b.is_zero()) return Poly();
    return reduce(a * b);
  }
  Poly inv(const Poly& a) const {
    auto bz = extended_gcd(a, q_);
    if (bz.g.degree() > 0) throw ZeroDivisor{bz.g};
    return reduce(bz.s);
  }

 private:
  Poly q_;
};

using PMat = std::vector<std::vector<Poly>>;

std::size_t rank_over(const Ring& ring, PMat m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Poly pinv = ring.inv(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = ring.mul(m[r][j], pinv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const Poly f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= ring.mul(f, m[r][j]);
    }
    ++r;
  }
  return r;
}

PMat multiply(const Ring& ring, const PMat& a, const PMat& b) {
  const std::size_t n = a.size(), k = b.size(), mcols = b.empty() ? 0 : b[0].size();
  PMat c(n, std::vector<Poly>(mcols));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < mcols; ++j)
        if (!b[t][j].is_zero()) c[i][j] += a[i][t] * b[t][j];
    }
  for (auto& row : c)
    for (auto& e : row) e = ring.reduce(e);
  return c;
}

PMat affine(const Ring& ring, const Mat& m0, const Mat& m1) {
  PMat z(m0.rows(), std::vector<Poly>(m0.cols()));
  for (std::size_t i = 0; i < m0.rows(); ++i)
    for (std::size_t j = 0; j < m0.cols(); ++j)
      z[i][j] = ring.reduce(Poly(std::vector<Rat>{m0(i, j), m1(i, j)}));
  return z;
}

// Runs f over the factors of q, splitting whenever f reports a zero divisor.
template <class Result, class F>
std::vector<Result> split_run(const Poly& q, F f) {
  std::vector<Result> out;
  std::deque<Poly> work{q.monic()};
  while (!work.empty()) {
    Poly mod = std::move(work.front());
    work.pop_front();
    try {
      out.push_back(f(mod));
    } catch (const ZeroDivisor& z) {
      Poly other = (mod / z.factor).monic();
      work.push_back(z.factor.monic());
      work.push_back(std::move(other));
    }
  }
  return out;
}

}  // namespace

std::vector<PowerRankProfile> power_rank_profiles(const Mat& n, const Rat& shift, const Poly& q) {
  if (!n.is_square()) throw InputError("power ranks need a square matrix");
  if (q.degree() < 1) throw InputError("power ranks need a nonconstant modulus");
  const std::size_t r = n.rows();
  // Z = (I - shift N) + x N
  Mat m0 = Mat::identity(r) - shift * n;
  return split_run<PowerRankProfile>(q, [&](const Poly& mod) {
    Ring ring(mod);
    PMat z = affine(ring, m0, n);
    PowerRankProfile prof{mod, {r}};
    PMat pw = z;
    for (;;) {
      std::size_t rk = rank_over(ring, pw);
      if (rk == prof.ranks.back()) break;
      prof.ranks.push_back(rk);
      pw = multiply(ring, pw, z);
    }
    return prof;
  });
}

std::vector<RankProfile> evaluated_rank(const Mat& m0, const Mat& m1, const Poly& q) {
  if (q.degree() < 1) throw InputError("evaluated rank needs a nonconstant modulus");
  return split_run<RankProfile>(q, [&](const Poly& mod) {
    Ring ring(mod);
    return RankProfile{mod, rank_over(ring, affine(ring, m0, m1))};
  });
}

}  // namespace jkinv
