#include "jkinv/pencil.hpp"

#include "jkinv/errors.hpp"
#include "jkinv/poly_matrix.hpp"
#include "jkinv/residue.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace jkinv {

Pencil::Pencil(Mat a, Mat b) : A(std::move(a)), B(std::move(b)) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw InputError("pencil matrices differ in shape");
}

Mat Pencil::at(const Rat& mu) const { return mu == 0 ? A : A + mu * B; }

// ---------------------------------------------------------------- EigClass

EigClass EigClass::infinity() {
  EigClass c;
  c.infinite_ = true;
  return c;
}

EigClass EigClass::of(const Poly& p) {
  if (p.degree() < 1) throw InputError("eigenvalue class needs a nonconstant polynomial");
  EigClass c;
  c.poly_ = p.monic();
  return c;
}

EigClass EigClass::parse(std::string_view label) {
  if (label == "inf") return infinity();
  return of(Poly::parse(label));
}

Rat EigClass::rational_root() const {
  if (infinite_ || poly_.degree() != 1) throw InputError("class " + label() + " has no single rational root");
  return -poly_.coeff(0);
}

std::string EigClass::label() const { return infinite_ ? "inf" : poly_.to_string(); }

std::strong_ordering operator<=>(const EigClass& a, const EigClass& b) {
  if (a.infinite_ != b.infinite_) return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (a.infinite_) return std::strong_ordering::equal;
  return a.poly_ <=> b.poly_;
}

Multiset sorted_desc(Multiset m) {
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

unsigned total(const Multiset& m) { return std::accumulate(m.begin(), m.end(), 0u); }

JordanMap merge_equal_classes(const JordanMap& j) {
  std::map<Multiset, Poly> by_sizes;
  JordanMap out;
  for (const auto& [cls, sizes] : j) {
    if (cls.is_infinite()) {
      out[cls] = sorted_desc(sizes);
      continue;
    }
    auto s = sorted_desc(sizes);
    auto it = by_sizes.find(s);
    if (it == by_sizes.end())
      by_sizes.emplace(s, cls.poly());
    else
      it->second *= cls.poly();
  }
  for (auto& [sizes, poly] : by_sizes) out[EigClass::of(poly)] = sizes;
  return out;
}

unsigned jordan_total(const JordanMap& j) {
  unsigned t = 0;
  for (const auto& [cls, sizes] : j) t += cls.root_count() * total(sizes);
  return t;
}

void StrictInvariants::check() const {
  long sh = 0, sh1 = 0, sv = 0, sv1 = 0;
  for (auto h : horizontal) {
    if (h < 1) throw InternalConsistencyError("horizontal index below 1");
    sh += h;
    sh1 += h - 1;
  }
  for (auto v : vertical) {
    if (v < 1) throw InternalConsistencyError("vertical index below 1");
    sv += v;
    sv1 += v - 1;
  }
  long jt = 0;
  for (const auto& [cls, sizes] : jordan) {
    if (sizes.empty()) throw InternalConsistencyError("empty Jordan class " + cls.label());
    for (auto s : sizes)
      if (s < 1) throw InternalConsistencyError("Jordan block of size 0");
    jt += static_cast<long>(cls.root_count() * total(sizes));
  }
  const long m = static_cast<long>(rows), n = static_cast<long>(cols), r = static_cast<long>(rank);
  if (sh + sv1 + jt != n) throw InternalConsistencyError("column bookkeeping fails");
  if (sh1 + sv + jt != m) throw InternalConsistencyError("row bookkeeping fails");
  if (sh1 + sv1 + jt != r) throw InternalConsistencyError("rank bookkeeping fails");
  if (static_cast<long>(horizontal.size()) != n - r) throw InternalConsistencyError("horizontal count != n - r");
  if (static_cast<long>(vertical.size()) != m - r) throw InternalConsistencyError("vertical count != m - r");
}

// ---------------------------------------------------------------- ranks

std::size_t pencil_rank(const Pencil& p) {
  const std::size_t cap = std::min(p.rows(), p.cols());
  // At most cap finite values are non-regular, so cap + 1 points suffice.
  std::size_t best = 0;
  for (std::size_t k = 0; k <= cap && best < cap; ++k) best = std::max(best, rank(p.at(Rat(static_cast<long>(k)))));
  return best;
}

bool is_regular_value(const Pencil& p, const Point& mu) {
  const std::size_t r = pencil_rank(p);
  if (std::holds_alternative<Infinity>(mu)) return rank(p.B) == r;
  return rank(p.at(std::get<Rat>(mu))) == r;
}

namespace {

// Coefficient constraints of (A + x B) u(x) = 0 with deg u <= d.
Mat stacked(const Pencil& p, std::size_t d) {
  const std::size_t m = p.rows(), n = p.cols();
  Mat w(m * (d + 2), n * (d + 1));
  for (std::size_t j = 0; j <= d; ++j) {
    w.set_block(j * m, j * n, p.A);
    w.set_block((j + 1) * m, j * n, p.B);
  }
  return w;
}

// Widths of the horizontal blocks, found from kernel dimensions of the stacked systems.
Multiset horizontal_indices_stacked(const Pencil& p, std::size_t r) {
  const std::size_t n = p.cols();
  const std::size_t want = n - r;
  Multiset out;
  if (want == 0) return out;
  std::size_t prev_nu = 0, prev_count = 0;
  for (std::size_t d = 0;; ++d) {
    if (d > n + 1) throw InternalConsistencyError("minimal index search did not terminate");
    const std::size_t nu = n * (d + 1) - rank(stacked(p, d));
    const std::size_t count = nu - prev_nu;  // indices with h <= d + 1
    for (std::size_t c = prev_count; c < count; ++c) out.push_back(static_cast<unsigned>(d + 1));
    if (count > want) throw InternalConsistencyError("too many minimal indices");
    if (count == want) break;
    prev_nu = nu;
    prev_count = count;
  }
  return sorted_desc(out);
}

// {u : E u in span(s)}, s independent. Kernel of [E | -S] projected to u;
// the projection is injective because s is independent.
std::vector<Vec> preimage(const Mat& e, const std::vector<Vec>& s) {
  const std::size_t m = e.rows(), n = e.cols();
  Mat big(m, n + s.size());
  big.set_block(0, 0, e);
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t i = 0; i < m; ++i) big(i, n + j) = -s[j][i];
  std::vector<Vec> out;
  for (auto& k : kernel_basis(big)) out.push_back(primitive(Vec(k.begin(), k.begin() + static_cast<long>(n))));
  return out;
}

// Wong sequence W_0 = 0, W_{i+1} = E^{-1}(A W_i) with E = A + k B of full
// pencil rank. The pencil A + x E has the same horizontal blocks as A + x B and
// no infinite part, so dim W_i = sum_h min(i, h).
Multiset horizontal_indices(const Pencil& p, std::size_t r) {
  const std::size_t n = p.cols();
  const std::size_t want = n - r;
  Multiset out;
  if (want == 0) return out;
  Mat e;
  for (long k = 1;; ++k) {
    if (k > static_cast<long>(std::min(p.rows(), n)) + 1) throw InternalConsistencyError("no regular point found");
    e = p.at(Rat(k));
    if (rank(e) == r) break;
  }
  std::vector<Vec> w;
  std::vector<std::size_t> c{0};  // c[i] = #{h >= i}, c[0] unused
  for (std::size_t i = 1;; ++i) {
    if (i > n + 1) throw InternalConsistencyError("Wong sequence did not stabilise");
    std::vector<Vec> img;
    for (const auto& u : w) img.push_back(p.A * u);
    std::vector<Vec> indep;
    if (!img.empty())
      for (auto j : pivot_columns(Mat::from_columns(img, p.rows()))) indep.push_back(primitive(img[j]));
    std::vector<Vec> next = preimage(e, indep);
    const std::size_t grow = next.size() - w.size();
    if (i == 1 && grow != want) throw InternalConsistencyError("kernel dimension differs from corank");
    if (grow > c.back() && i > 1) throw InternalConsistencyError("Wong sequence increments must not grow");
    if (grow == 0) break;
    c.push_back(grow);
    w = std::move(next);
  }
  for (std::size_t i = 1; i < c.size(); ++i) {
    const std::size_t here = c[i] - (i + 1 < c.size() ? c[i + 1] : 0);
    for (std::size_t t = 0; t < here; ++t) out.push_back(static_cast<unsigned>(i));
  }
  return sorted_desc(out);
}

// Block lower bidiagonal Toeplitz matrix [P0; P1 P0; ...] with k block rows.
Mat toeplitz(const Mat& p0, const Mat& p1, std::size_t k) {
  const std::size_t m = p0.rows(), n = p0.cols();
  Mat t(m * k, n * k);
  for (std::size_t i = 0; i < k; ++i) {
    t.set_block(i * m, i * n, p0);
    if (i > 0) t.set_block(i * m, (i - 1) * n, p1);
  }
  return t;
}

// Partition recovered from S_k = sum_i min(e_i, k).
Multiset sizes_from_s(const std::vector<std::size_t>& s) {
  Multiset out;
  // s[0] = 0
  std::vector<std::size_t> nk;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] < s[k - 1]) throw InternalConsistencyError("local rank sequence not monotone");
    nk.push_back(s[k] - s[k - 1]);
  }
  nk.push_back(0);
  for (std::size_t k = 0; k + 1 < nk.size(); ++k) {
    if (nk[k + 1] > nk[k]) throw InternalConsistencyError("local block counts not monotone");
    for (std::size_t c = 0; c < nk[k] - nk[k + 1]; ++c) out.push_back(static_cast<unsigned>(k + 1));
  }
  return sorted_desc(out);
}

// Local structure of P0 + t P1 at t = 0; stops when the block count vanishes.
Multiset local_sizes_rational(const Mat& p0, const Mat& p1, std::size_t r, std::size_t expected_total) {
  std::vector<std::size_t> s{0};
  for (std::size_t k = 1;; ++k) {
    const std::size_t sk = k * r - rank(toeplitz(p0, p1, k));
    if (sk == s.back()) break;
    s.push_back(sk);
    if (expected_total > 0 && sk == expected_total) break;
    if (k > r + 1) throw InternalConsistencyError("local rank search did not terminate");
  }
  if (expected_total > 0 && s.back() != expected_total)
    throw InternalConsistencyError("local structure disagrees with characteristic multiplicity");
  return sizes_from_s(s);
}

struct LocalClass {
  Poly modulus;
  std::vector<std::size_t> s;
  bool done;
};

// Jordan sizes at the roots of the squarefree factor q, each root known to have
// total multiplicity mult in the characteristic polynomial.
std::vector<std::pair<Poly, Multiset>> local_sizes_algebraic(const Pencil& p, std::size_t r, const Poly& q,
                                                             std::size_t mult) {
  std::vector<LocalClass> work{{q, {0}, false}};
  for (std::size_t k = 1;; ++k) {
    if (k > mult + 1) throw InternalConsistencyError("local rank search did not terminate");
    bool all_done = true;
    std::vector<LocalClass> next;
    const Mat t0 = toeplitz(p.A, p.B, k);
    Mat t1(t0.rows(), t0.cols());
    for (std::size_t i = 0; i < k; ++i) t1.set_block(i * p.rows(), i * p.cols(), p.B);
    for (auto& lc : work) {
      if (lc.done) {
        next.push_back(lc);
        continue;
      }
      for (auto& prof : evaluated_rank(t0, t1, lc.modulus)) {
        LocalClass c{prof.modulus, lc.s, false};
        c.s.push_back(k * r - prof.rank);
        if (c.s.back() == mult) c.done = true;
        if (c.s.back() > mult) throw InternalConsistencyError("local multiplicity exceeds characteristic multiplicity");
        if (c.s.back() == c.s[c.s.size() - 2])
          throw InternalConsistencyError("local structure stalls below characteristic multiplicity");
        all_done = all_done && c.done;
        next.push_back(std::move(c));
      }
    }
    work = std::move(next);
    if (all_done) break;
  }
  std::vector<std::pair<Poly, Multiset>> out;
  for (auto& lc : work) out.emplace_back(lc.modulus, sizes_from_s(lc.s));
  return out;
}

Poly det_poly(const Mat& a, const Mat& b) {
  const std::size_t r = a.rows();
  std::vector<Rat> xs, ys;
  for (std::size_t k = 0; k <= r; ++k) {
    Rat x(static_cast<long>(k));
    xs.push_back(x);
    ys.push_back(determinant(a + x * b));
  }
  return interpolate(xs, ys);
}

// Monic finite characteristic polynomial of degree f: gcd of determinants of
// random r x r compressions U (A + x B) V until the degree matches.
Poly finite_char_poly(const Pencil& p, std::size_t r, std::size_t f) {
  if (f == 0) return Poly::constant(1);
  const std::size_t m = p.rows(), n = p.cols();
  if (m == r && n == r) {
    Poly d = det_poly(p.A, p.B);
    if (d.degree() != static_cast<int>(f)) throw InternalConsistencyError("determinant degree differs from Jordan size");
    return d.monic();
  }
  std::mt19937_64 rng(0x51ed2701u + 131 * m + n);
  std::uniform_int_distribution<int> dist(-4, 4);
  Poly g;
  for (int attempt = 0; attempt < 24; ++attempt) {
    Mat u(r, m), v(n, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < m; ++j) u(i, j) = dist(rng);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < r; ++j) v(i, j) = dist(rng);
    Poly d = det_poly(u * p.A * v, u * p.B * v);
    if (d.is_zero()) continue;
    g = g.is_zero() ? d.monic() : gcd(g, d);
    if (g.degree() < static_cast<int>(f)) throw InternalConsistencyError("characteristic degree below Jordan size");
    if (g.degree() == static_cast<int>(f)) return g;
  }
  throw InternalConsistencyError("characteristic polynomial did not converge");
}

struct Analysis {
  std::size_t rank = 0;
  MinimalIndices mi;
  Multiset infinite;
  Poly chi;  // finite part, monic
  JordanMap jordan;
};

Analysis analyse(const Pencil& p, bool want_classes) {
  Analysis a;
  const std::size_t m = p.rows(), n = p.cols();
  const std::size_t r = a.rank = pencil_rank(p);
  a.mi.horizontal = horizontal_indices(p, r);
  a.mi.vertical = horizontal_indices(p.transpose(), r);
  long jt = static_cast<long>(n);
  for (auto h : a.mi.horizontal) jt -= h;
  for (auto v : a.mi.vertical) jt -= v - 1;
  if (jt < 0 || jt > static_cast<long>(std::min(m, n)))
    throw InternalConsistencyError("negative Jordan size from minimal indices");
  // Infinite eigenvalues: reversed pencil B + t A at t = 0.
  if (r > 0 && rank(p.B) < r) a.infinite = local_sizes_rational(p.B, p.A, r, 0);
  const long fin = jt - static_cast<long>(total(a.infinite));
  if (fin < 0) throw InternalConsistencyError("infinite part exceeds Jordan size");
  a.chi = finite_char_poly(p, r, static_cast<std::size_t>(fin));
  if (!want_classes) return a;
  JordanMap j;
  if (!a.infinite.empty()) j[EigClass::infinity()] = a.infinite;
  for (const auto& [q, mult] : squarefree_decomposition(a.chi)) {
    if (mult == 1) {
      j[EigClass::of(q)] = Multiset{1};
      continue;
    }
    if (q.degree() == 1) {
      const Rat mu = -q.coeff(0);
      j[EigClass::of(q)] = local_sizes_rational(p.at(mu), p.B, r, mult);
      continue;
    }
    for (auto& [mod, sizes] : local_sizes_algebraic(p, r, q, mult)) j[EigClass::of(mod)] = sizes;
  }
  a.jordan = merge_equal_classes(j);
  // Every finite class must account exactly for its share of the characteristic polynomial.
  for (const auto& [cls, sizes] : a.jordan) {
    if (cls.is_infinite()) continue;
    auto [quo, rem] = divmod(a.chi, cls.poly());
    if (!rem.is_zero() || multiplicity(cls.poly(), a.chi) != total(sizes))
      throw InternalConsistencyError("class " + cls.label() + " disagrees with characteristic polynomial");
  }
  return a;
}

}  // namespace

BinForm characteristic_polynomial(const Pencil& p) {
  Analysis a = analyse(p, false);
  const std::size_t f = static_cast<std::size_t>(std::max(a.chi.degree(), 0));
  const std::size_t d = f + total(a.infinite);
  BinForm bf;
  bf.coeffs.assign(d + 1, Rat(0));
  for (std::size_t i = 0; i <= f; ++i) bf.coeffs[i] = a.chi.coeff(i);
  return bf;
}

MinimalIndices minimal_indices(const Pencil& p) {
  const std::size_t r = pencil_rank(p);
  return {horizontal_indices(p, r), horizontal_indices(p.transpose(), r)};
}

MinimalIndices minimal_indices_via_stacking(const Pencil& p) {
  const std::size_t r = pencil_rank(p);
  return {horizontal_indices_stacked(p, r), horizontal_indices_stacked(p.transpose(), r)};
}

JordanMap elementary_divisors(const Pencil& p) { return analyse(p, true).jordan; }

StrictInvariants strict_invariants(const Pencil& p) {
  Analysis a = analyse(p, true);
  StrictInvariants inv;
  inv.rows = p.rows();
  inv.cols = p.cols();
  inv.rank = a.rank;
  inv.horizontal = std::move(a.mi.horizontal);
  inv.vertical = std::move(a.mi.vertical);
  inv.jordan = std::move(a.jordan);
  inv.check();
  return inv;
}

JordanMap elementary_divisors_via_smith(const Pencil& p) {
  JordanMap j;
  if (p.rows() == 0 || p.cols() == 0) return j;
  auto finite = poly_smith_invariant_factors(PolyMat::from_pencil(p.A, p.B));
  for (const auto& b : coprime_basis(finite)) {
    Multiset sizes;
    for (const auto& d : finite) {
      unsigned e = multiplicity(b, d);
      if (e > 0) sizes.push_back(e);
    }
    j[EigClass::of(b)] = sorted_desc(sizes);
  }
  // Infinite divisors: powers of t in the invariant factors of B + t A.
  auto rev = poly_smith_invariant_factors(PolyMat::from_pencil(p.B, p.A));
  Multiset inf;
  for (const auto& d : rev) {
    unsigned e = multiplicity(Poly::x(), d);
    if (e > 0) inf.push_back(e);
  }
  if (!inf.empty()) j[EigClass::infinity()] = sorted_desc(inf);
  return merge_equal_classes(j);
}

Pencil canonical_pencil(const StrictInvariants& inv, const std::map<EigClass, Point>& assignment) {
  struct Block {
    Mat a, b;
  };
  std::vector<Block> blocks;
  for (auto h : inv.horizontal) {
    Mat a(h - 1, h), b(h - 1, h);
    for (unsigned i = 0; i + 1 < h; ++i) {
      a(i, i + 1) = 1;
      b(i, i) = 1;
    }
    blocks.push_back({a, b});
  }
  for (auto v : inv.vertical) {
    Mat a(v, v - 1), b(v, v - 1);
    for (unsigned i = 0; i + 1 < v; ++i) {
      a(i + 1, i) = 1;
      b(i, i) = 1;
    }
    blocks.push_back({a, b});
  }
  std::vector<Point> used;
  for (const auto& [cls, sizes] : inv.jordan) {
    Point at;
    auto it = assignment.find(cls);
    if (it != assignment.end()) {
      at = it->second;
    } else if (cls.is_infinite()) {
      at = Infinity{};
    } else {
      if (cls.root_count() != 1)
        throw InputError("class " + cls.label() + " has several roots; canonical pencil needs explicit eigenvalues");
      at = cls.rational_root();
    }
    if (std::find(used.begin(), used.end(), at) != used.end())
      throw InputError("eigenvalue assignment is not injective");
    used.push_back(at);
    for (auto s : sizes) {
      Mat a = Mat::identity(s), b = Mat::identity(s);
      if (std::holds_alternative<Infinity>(at)) {
        // I + x N
        b = Mat(s, s);
        for (unsigned i = 0; i + 1 < s; ++i) b(i, i + 1) = 1;
      } else {
        // J_s(-mu) + x I, singular at x = mu
        a = -std::get<Rat>(at) * Mat::identity(s);
        for (unsigned i = 0; i + 1 < s; ++i) a(i, i + 1) = 1;
      }
      blocks.push_back({a, b});
    }
  }
  std::size_t rows = 0, cols = 0;
  for (const auto& bl : blocks) rows += bl.a.rows(), cols += bl.a.cols();
  Mat a(rows, cols), b(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& bl : blocks) {
    a.set_block(r0, c0, bl.a);
    b.set_block(r0, c0, bl.b);
    r0 += bl.a.rows();
    c0 += bl.a.cols();
  }
  return Pencil(a, b);
}

bool are_strictly_equivalent(const Pencil& p, const Pencil& q) {
  if (p.rows() != q.rows() || p.cols() != q.cols()) throw InputError("pencils differ in shape");
  return strict_invariants(p) == strict_invariants(q);
}

}  // namespace jkinv
