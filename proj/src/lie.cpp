#include "jkinv/lie.hpp"

#include "jkinv/errors.hpp"

#include <algorithm>
#include <map>

namespace jkinv {

void LieAlgebra::add(std::size_t i, std::size_t j, std::size_t k, const Rat& c) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw InputError("bracket index out of range");
  if (c == 0) return;
  if (i == j) throw InputError("[e_i, e_i] must vanish");
  Rat v = c;
  if (i > j) {
    std::swap(i, j);
    v = -v;
  }
  auto key = [](const Bracket& b) { return std::array<std::size_t, 3>{b.i, b.j, b.k}; };
  const std::array<std::size_t, 3> want{i, j, k};
  auto it = std::lower_bound(brackets_.begin(), brackets_.end(), want,
                             [&](const Bracket& b, const std::array<std::size_t, 3>& w) { return key(b) < w; });
  if (it != brackets_.end() && key(*it) == want) {
    it->c += v;
    if (it->c == 0) brackets_.erase(it);
  } else {
    brackets_.insert(it, Bracket{i, j, k, v});
  }
}

Vec LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  Vec out(dim_);
  if (i == j) return out;
  const Rat sign = i < j ? 1 : -1;
  const std::size_t a = std::min(i, j), b = std::max(i, j);
  for (const auto& br : brackets_)
    if (br.i == a && br.j == b) out[br.k] += sign * br.c;
  return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw InputError("vector length does not match the algebra");
  Vec out(dim_);
  for (const auto& br : brackets_) {
    Rat w = x[br.i] * y[br.j] - x[br.j] * y[br.i];
    if (w != 0) out[br.k] += w * br.c;
  }
  return out;
}

std::vector<Triple> check_jacobi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(Mat::identity(n).column(i));
  std::vector<Triple> bad;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec ij = g.bracket(i, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec s = g.bracket(ij, basis[k]);
        s = add(s, g.bracket(g.bracket(j, k), basis[i]));
        s = add(s, g.bracket(g.bracket(k, i), basis[j]));
        if (!is_zero(s)) bad.push_back({i, j, k});
      }
    }
  return bad;
}

std::vector<std::pair<std::size_t, std::size_t>> check_homomorphism(const Representation& rho) {
  const std::size_t n = rho.algebra.dim();
  if (rho.mats.size() != n) throw InputError("representation needs one matrix per basis element");
  for (const auto& m : rho.mats)
    if (m.rows() != rho.dim_v || m.cols() != rho.dim_v) throw InputError("representation matrix has the wrong shape");
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Mat lhs(rho.dim_v, rho.dim_v);
      Vec c = rho.algebra.bracket(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (c[k] != 0) lhs = lhs + c[k] * rho.mats[k];
      if (lhs != rho.mats[i] * rho.mats[j] - rho.mats[j] * rho.mats[i]) bad.push_back({i, j});
    }
  return bad;
}

void validate(const LieAlgebra& g) {
  auto bad = check_jacobi(g);
  if (!bad.empty())
    throw InvalidAlgebraError("Jacobi identity fails on basis triple (" + std::to_string(bad[0][0]) + ", " +
                              std::to_string(bad[0][1]) + ", " + std::to_string(bad[0][2]) + ")");
}

void validate(const Representation& rho) {
  validate(rho.algebra);
  auto bad = check_homomorphism(rho);
  if (!bad.empty())
    throw InvalidAlgebraError("representation is not a homomorphism on basis pair (" + std::to_string(bad[0].first) +
                              ", " + std::to_string(bad[0].second) + ")");
}

Mat lie_poisson_matrix(const LieAlgebra& g, const Vec& x) {
  if (x.size() != g.dim()) throw InputError("covector length does not match the algebra");
  Mat a(g.dim(), g.dim());
  for (const auto& br : g.brackets()) {
    if (x[br.k] == 0) continue;
    Rat v = br.c * x[br.k];
    a(br.i, br.j) += v;
    a(br.j, br.i) -= v;
  }
  return a;
}

Mat rep_operator(const Representation& rho, const Vec& x) {
  if (x.size() != rho.dim_v) throw InputError("vector length does not match the representation");
  std::vector<Vec> cols;
  for (const auto& m : rho.mats) cols.push_back(m * x);
  return Mat::from_columns(cols, rho.dim_v);
}

Sampler::Sampler(const SamplingConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
  if (cfg.samples < 1) throw InputError("need at least one sample");
  if (cfg.bound < 2) throw InputError("sampling bound must be at least 2");
}

Vec Sampler::draw(std::size_t n) {
  // (rng() % width) keeps the stream identical across standard libraries
  const std::uint64_t width = static_cast<std::uint64_t>(2 * cfg_.bound + 1);
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(static_cast<long>(rng_() % width) - cfg_.bound);
  return v;
}

std::size_t lie_index(const LieAlgebra& g, Sampler& s, std::size_t samples) {
  std::size_t best = g.dim();
  for (std::size_t t = 0; t < samples; ++t) best = std::min(best, g.dim() - rank(lie_poisson_matrix(g, s.draw(g.dim()))));
  return best;
}

std::string to_string(Genericity g) { return g == Genericity::certified ? "certified" : "empirical"; }

Pencil lie_pencil(const LieAlgebra& g, const Vec& x, const Vec& a) {
  return Pencil(lie_poisson_matrix(g, x), -lie_poisson_matrix(g, a));
}

Pencil rep_pencil(const Representation& rho, const Vec& x, const Vec& a) {
  return Pencil(rep_operator(rho, x), -rep_operator(rho, a));
}

namespace {

template <class Sig, class Leq>
std::size_t dominant(const std::vector<Sig>& sigs, Leq contains) {
  if (sigs.empty()) throw InputError("no samples");
  std::vector<Sig> distinct;
  std::vector<std::size_t> count, first;
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    auto it = std::find(distinct.begin(), distinct.end(), sigs[i]);
    if (it == distinct.end()) {
      distinct.push_back(sigs[i]);
      count.push_back(1);
      first.push_back(i);
    } else {
      ++count[static_cast<std::size_t>(it - distinct.begin())];
    }
  }
  std::vector<std::size_t> order(distinct.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return count[a] > count[b]; });
  for (auto c : order) {
    bool all = true;
    for (std::size_t o = 0; o < distinct.size() && all; ++o)
      if (o != c && !contains(distinct[c], distinct[o])) all = false;
    if (all) return first[c];
  }
  throw SamplingError("no sampled signature dominates all others; raise the sampling bound");
}

}  // namespace

std::size_t dominant_sample(const std::vector<BundleSig>& sigs) { return dominant(sigs, bundle_closure_contains); }

std::size_t dominant_sample(const std::vector<SkewBundleSig>& sigs) {
  return dominant(sigs, skew_bundle_closure_contains);
}

SkewJKReport jk_invariants_of_lie(const LieAlgebra& g, Sampler& s, std::optional<std::size_t> exact_index) {
  const std::size_t n = g.dim(), count = s.config().samples;
  std::vector<SkewJK> all;
  std::vector<SkewBundleSig> sigs;
  std::size_t sampled_index = n;
  for (std::size_t t = 0; t < count; ++t) {
    Vec x = s.draw(n), a = s.draw(n);
    Pencil p = lie_pencil(g, x, a);
    sampled_index = std::min({sampled_index, n - rank(p.A), n - rank(p.B)});
    all.push_back(skew_jk_invariants(p));
    sigs.push_back(abstract_signature(all.back()));
  }
  const std::size_t pick = dominant_sample(sigs);
  SkewJKReport r;
  r.invariants = all[pick];
  r.signature = sigs[pick];
  r.samples_used = count;
  r.index_used = exact_index.value_or(sampled_index);
  r.index_exact = exact_index.has_value();
  if (r.invariants.kronecker.size() < r.index_used)
    throw InternalConsistencyError("generic corank is below the index");
  if (r.index_used > 0 && certify_generic_lie(r.signature, r.index_used)) r.status = Genericity::certified;
  return r;
}

RepJK jk_invariants_of_rep(const Representation& rho, Sampler& s) {
  const std::size_t m = rho.dim_v, n = rho.algebra.dim(), count = s.config().samples;
  std::vector<StrictInvariants> all;
  std::vector<BundleSig> sigs;
  std::size_t max_rank = 0;
  for (std::size_t t = 0; t < count; ++t) {
    Vec x = s.draw(m), a = s.draw(m);
    all.push_back(strict_invariants(rep_pencil(rho, x, a)));
    sigs.push_back(abstract_signature(all.back()));
    max_rank = std::max(max_rank, all.back().rank);
  }
  const std::size_t pick = dominant_sample(sigs);
  RepJK r;
  r.invariants = all[pick];
  r.signature = sigs[pick];
  r.samples_used = count;
  if (r.invariants.rank != max_rank) throw InternalConsistencyError("dominant sample does not reach the maximal rank");
  if ((m != n || max_rank < std::min(m, n)) && max_rank > 0) {
    r.witness = generic_repr_witness(r.signature, m, n, max_rank);
    if (r.witness) r.status = Genericity::certified;
  }
  return r;
}

}  // namespace jkinv
