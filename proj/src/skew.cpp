#include "jkinv/skew.hpp"

#include <optional>

namespace jkinv {

namespace {

void require_skew(const Pencil& p) {
  if (!p.A.is_square()) throw PreconditionError("skew pencil must be square");
  if (!p.is_skew()) throw PreconditionError("pencil is not skew-symmetric");
}

// Pairs equal entries of a descending multiset; nullopt on an odd count.
std::optional<Multiset> halve(const Multiset& m) {
  Multiset out;
  for (std::size_t i = 0; i < m.size(); i += 2) {
    if (i + 1 >= m.size() || m[i] != m[i + 1]) return std::nullopt;
    out.push_back(m[i]);
  }
  return out;
}

}  // namespace

void SkewJK::check() const {
  std::size_t d = 0;
  for (auto k : kronecker) {
    if (k == 0) throw InternalConsistencyError("zero Kronecker index");
    d += 2 * k - 1;
  }
  for (const auto& [c, sizes] : jordan) {
    for (auto s : sizes)
      if (s == 0 || s % 2 != 0) throw InternalConsistencyError("odd skew Jordan size");
    d += c.root_count() * total(sizes);
  }
  if (d != dim) throw InternalConsistencyError("skew JK sizes do not add up to the dimension");
}

SkewJK fold_skew(const StrictInvariants& inv) {
  if (inv.horizontal != inv.vertical)
    throw InternalConsistencyError("skew pencil with unequal horizontal and vertical indices");
  SkewJK jk;
  jk.dim = inv.cols;
  jk.kronecker = inv.horizontal;
  for (const auto& [c, sizes] : inv.jordan) {
    auto half = halve(sizes);
    if (!half) throw InternalConsistencyError("Jordan sizes of class " + c.label() + " do not pair up");
    Multiset skew;
    for (auto s : *half) skew.push_back(2 * s);
    jk.jordan[c] = skew;
  }
  jk.check();
  return jk;
}

SkewJK skew_jk_invariants(const Pencil& p) {
  require_skew(p);
  return fold_skew(strict_invariants(p));
}

Pencil skew_canonical_pencil(const SkewJK& jk, const std::map<EigClass, Point>& assignment) {
  StrictInvariants half;
  half.horizontal = jk.kronecker;
  for (const auto& [c, sizes] : jk.jordan) {
    Multiset h;
    for (auto s : sizes) {
      if (s % 2 != 0) throw InputError("skew Jordan sizes must be even");
      h.push_back(s / 2);
    }
    half.jordan[c] = h;
  }
  Pencil c = canonical_pencil(half, assignment);
  const std::size_t r = c.rows(), n = r + c.cols();
  Mat a(n, n), b(n, n);
  a.set_block(0, r, c.A);
  a.set_block(r, 0, -c.A.transpose());
  b.set_block(0, r, c.B);
  b.set_block(r, 0, -c.B.transpose());
  return Pencil(a, b);
}

std::vector<Rat> regular_sample_points(const Pencil& p, std::size_t count) {
  const std::size_t r = pencil_rank(p);
  std::vector<Rat> pts;
  for (long mu = 0; pts.size() < count; ++mu)
    if (rank(p.at(Rat(mu))) == r) pts.emplace_back(mu);
  return pts;
}

std::vector<Vec> core_subspace(const Pencil& p) {
  require_skew(p);
  const std::size_t n = p.cols();
  std::vector<Vec> all;
  for (const auto& mu : regular_sample_points(p, n + 1)) {
    auto k = kernel_basis(p.at(mu));
    all.insert(all.end(), k.begin(), k.end());
  }
  return span_basis(all, n);
}

std::vector<Vec> mantle_subspace(const Pencil& p) {
  require_skew(p);
  const std::size_t n = p.cols();
  auto core = core_subspace(p);
  Mat form = p.at(regular_sample_points(p, 1).front());
  std::vector<Vec> rows;
  for (const auto& k : core) rows.push_back(form.transpose() * k);
  if (rows.empty()) {
    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(Mat::identity(n).column(i));
    return e;
  }
  return span_basis(kernel_basis(Mat::from_rows(rows, n)), n);
}

SkewJK jk_of_block_pencil(const Pencil& p, const BlockPartition& part) {
  require_skew(p);
  const std::size_t nx = part.x, ns = part.s, ny = part.y, n = p.cols();
  if (nx + ns + ny != n) throw BlockPatternError("block sizes do not add up to the pencil size");
  const std::size_t s0 = nx, y0 = nx + ns;
  for (const Mat* m : {&p.A, &p.B}) {
    if (!m->block(s0, y0, ns, ny).is_zero()) throw BlockPatternError("s-y coupling is not zero");
    if (!m->block(y0, y0, ny, ny).is_zero()) throw BlockPatternError("y-y block is not zero");
  }
  Pencil xy(p.A.block(0, y0, nx, ny), p.B.block(0, y0, nx, ny));
  if (nx > 0 || ny > 0) {
    StrictInvariants s = strict_invariants(xy);
    // full row rank at every point of the projective line
    if (s.rank != nx || !s.jordan.empty())
      throw XyHypothesisError("xy sub-pencil has a left kernel or non-constant rank");
  }
  Pencil ss(p.A.block(s0, s0, ns, ns), p.B.block(s0, s0, ns, ns));
  if (ns > 0 && pencil_rank(ss) != ns) throw SsHypothesisError("ss sub-pencil is degenerate for every lambda");

  SkewJK out;
  out.dim = n;
  if (nx > 0 || ny > 0) {
    Mat a(n - ns, n - ns), b(n - ns, n - ns);
    a.set_block(0, nx, xy.A);
    a.set_block(nx, 0, -xy.A.transpose());
    b.set_block(0, nx, xy.B);
    b.set_block(nx, 0, -xy.B.transpose());
    out.kronecker = skew_jk_invariants(Pencil(a, b)).kronecker;
  }
  if (ns > 0) out.jordan = skew_jk_invariants(ss).jordan;
  out.check();
  return out;
}

}  // namespace jkinv
