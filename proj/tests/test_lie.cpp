#include "doctest.h"
#include "generators.hpp"

#include "jkinv/catalog.hpp"
#include "jkinv/errors.hpp"
#include "jkinv/lie.hpp"
#include "jkinv/semidirect.hpp"

#include <set>

using namespace jkinv;
using namespace jktest;

namespace {

// basis (e, f, h)
LieAlgebra sl2() {
  LieAlgebra g(3);
  g.add(2, 0, 0, 2);
  g.add(2, 1, 1, -2);
  g.add(0, 1, 2, 1);
  return g;
}

// basis (J, P1, P2)
LieAlgebra e2() {
  LieAlgebra g(3);
  g.add(0, 1, 2, 1);
  g.add(0, 2, 1, -1);
  return g;
}

Sampler sampler(std::uint64_t seed = 9, std::size_t samples = 25) { return Sampler(SamplingConfig{seed, samples, 101}); }

}  // namespace

TEST_CASE("bracket storage") {
  LieAlgebra g(3);
  g.add(1, 0, 2, 3);
  REQUIRE(g.brackets().size() == 1);
  CHECK(g.brackets()[0] == LieAlgebra::Bracket{0, 1, 2, -3});
  CHECK(g.bracket(1, 0) == Vec{0, 0, 3});
  g.add(0, 1, 2, 3);
  CHECK(g.brackets().empty());
  CHECK_THROWS_AS(g.add(0, 0, 1, 1), InputError);
  CHECK_THROWS_AS(g.add(0, 3, 1, 1), InputError);
}

TEST_CASE("jacobi examples") {
  CHECK(check_jacobi(LieAlgebra(3)).empty());
  CHECK(check_jacobi(sl2()).empty());
  LieAlgebra bad(3);
  bad.add(0, 1, 2, 1);
  bad.add(0, 2, 1, 1);
  bad.add(1, 2, 1, 1);
  CHECK_FALSE(check_jacobi(bad).empty());
  CHECK_THROWS_AS(validate(bad), InvalidAlgebraError);
}

TEST_CASE("lie-poisson matrices") {
  CHECK(lie_poisson_matrix(LieAlgebra(3), {1, 2, 3}).is_zero());
  // x = h*: only [h, e] and [h, f] have an h-free... pair e, f gives <h*, h> = 1
  Mat a = lie_poisson_matrix(sl2(), {0, 0, 1});
  CHECK(a == Mat{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
  Mat b = lie_poisson_matrix(sl2(), {1, 0, 0});
  CHECK(b == Mat{{0, 0, -2}, {0, 0, 0}, {2, 0, 0}});
  CHECK(rank(lie_poisson_matrix(e2(), {3, -1, 4})) == 2);
  CHECK_THROWS_AS(lie_poisson_matrix(e2(), {1, 2}), InputError);
  // <x, [u, v]> = u^T A_x v
  std::mt19937_64 rng(1);
  Classical gl3 = build_classical(Family::parse("gl:3"));
  for (int t = 0; t < 10; ++t) {
    Vec x = random_int_mat(rng, 9, 1, -3, 3).column(0), u = random_int_mat(rng, 9, 1, -3, 3).column(0),
        v = random_int_mat(rng, 9, 1, -3, 3).column(0);
    CHECK(dot(x, gl3.algebra.bracket(u, v)) == dot(u, lie_poisson_matrix(gl3.algebra, x) * v));
  }
}

TEST_CASE("representation operators") {
  Classical gl2 = build_classical(Family::parse("gl:2"));
  CHECK(rep_operator(gl2.standard, {0, 0}).is_zero());
  // E_ij e_1 = delta_j1 e_i: columns E11 e1 = e1, E21 e1 = e2
  Mat r = rep_operator(gl2.standard, {1, 0});
  CHECK(r == Mat{{1, 0, 0, 0}, {0, 0, 1, 0}});
  Representation sl2x3 = direct_sum(build_classical(Family::parse("sl:2")).standard, 3);
  Sampler s = sampler();
  CHECK(rank(rep_operator(sl2x3, s.draw(6))) == 3);
  Vec x = s.draw(6), y = s.draw(6);
  CHECK(rep_operator(sl2x3, add(x, y)) == rep_operator(sl2x3, x) + rep_operator(sl2x3, y));
  CHECK(rep_operator(sl2x3, scaled(x, Rat(-3, 7))) == Rat(-3, 7) * rep_operator(sl2x3, x));
  CHECK_THROWS_AS(rep_operator(sl2x3, {1}), InputError);
}

TEST_CASE("homomorphism check") {
  Classical so3 = build_classical(Family::parse("so:3"));
  CHECK(check_homomorphism(so3.standard).empty());
  Representation bad = so3.standard;
  bad.mats[0] = Rat(2) * bad.mats[0];
  CHECK_FALSE(check_homomorphism(bad).empty());
  CHECK_THROWS_AS(validate(bad), InvalidAlgebraError);
  bad.mats.pop_back();
  CHECK_THROWS_AS(check_homomorphism(bad), InputError);
}

TEST_CASE("index") {
  Sampler s = sampler();
  CHECK(lie_index(LieAlgebra(3), s, 5) == 3);
  CHECK(lie_index(sl2(), s, 5) == 1);
  CHECK(lie_index(e2(), s, 5) == 1);
}

TEST_CASE("sampler is deterministic and bounded") {
  Sampler a = sampler(5), b = sampler(5), c = sampler(6);
  Vec x = a.draw(50);
  CHECK(x == b.draw(50));
  CHECK(x != c.draw(50));
  for (const auto& v : x) CHECK(abs(v) <= 101);
  CHECK_THROWS_AS(Sampler(SamplingConfig{1, 0, 101}), InputError);
  CHECK_THROWS_AS(Sampler(SamplingConfig{1, 5, 1}), InputError);
}

TEST_CASE("lie JK invariants") {
  Sampler s = sampler();
  SkewJKReport e = jk_invariants_of_lie(e2(), s);
  CHECK(e.invariants.kronecker == Multiset{2});
  CHECK(e.status == Genericity::certified);
  CHECK(e.samples_used == 25);
  CHECK(e.index_used == 1);
  Classical sl = build_classical(Family::parse("sl:2"));
  SkewJKReport q = jk_invariants_of_lie(semidirect(sl.algebra, direct_sum(sl.standard, 2)).q, s);
  CHECK(q.signature == SkewBundleSig{7, {2}, {{2}, {2}}});
  CHECK(q.status == Genericity::empirical);
  Classical gl = build_classical(Family::parse("gl:2"));
  SkewJKReport k = jk_invariants_of_lie(semidirect(gl.algebra, direct_sum(gl.standard, 3)).q, s);
  CHECK(k.invariants.kronecker == Multiset{3, 3});
  CHECK(k.invariants.jordan.empty());
  CHECK(k.status == Genericity::certified);
}

TEST_CASE("rep JK invariants") {
  Sampler s = sampler();
  Classical gl = build_classical(Family::parse("gl:2"));
  RepJK a = jk_invariants_of_rep(direct_sum(gl.standard, 3), s);
  CHECK(a.invariants.vertical == Multiset{3, 3});
  CHECK(a.status == Genericity::certified);
  Classical so = build_classical(Family::parse("so:3"));
  RepJK b = jk_invariants_of_rep(so.standard, s);
  CHECK(b.invariants.horizontal == Multiset{2});
  CHECK(b.invariants.vertical == Multiset{2});
  Classical sl = build_classical(Family::parse("sl:2"));
  RepJK c = jk_invariants_of_rep(direct_sum(sl.standard, 2), s);
  CHECK(c.signature.vertical == Multiset{2});
  CHECK(c.signature.slots == std::vector<Multiset>{{1}, {1}});
}

TEST_CASE("sampled signatures lie under the selected one") {
  Classical sp = build_classical(Family::parse("sp:2"));
  Representation rho = direct_sum(sp.standard, 2);
  // small bound: degenerate samples appear, the dominant one must still cover them
  Sampler s(SamplingConfig{3, 40, 2});
  std::vector<BundleSig> sigs;
  for (int t = 0; t < 40; ++t) sigs.push_back(abstract_signature(strict_invariants(rep_pencil(rho, s.draw(4), s.draw(4)))));
  const auto& top = sigs[dominant_sample(sigs)];
  for (const auto& x : sigs) CHECK(bundle_closure_contains(top, x));
  std::set<BundleSig> distinct(sigs.begin(), sigs.end());
  CHECK(distinct.size() > 1);
  // corank of every sampled Lie pencil is at least the index
  Sampler t = sampler(4);
  LieAlgebra q = semidirect(sp.algebra, rho).q;
  const std::size_t ind = lie_index(q, t, 10);
  for (int i = 0; i < 10; ++i) {
    Pencil p = lie_pencil(q, t.draw(q.dim()), t.draw(q.dim()));
    CHECK(skew_jk_invariants(p).kronecker.size() >= ind);
    CHECK(characteristic_polynomial(p).degree() == jordan_total(strict_invariants(p).jordan));
  }
}

TEST_CASE("incomparable samples raise a sampling error") {
  BundleSig a;
  a.m = a.n = 2;
  a.rank = 2;
  a.slots = {{1, 1}};
  BundleSig b = a;
  b.slots = {{1}, {1}};
  b.normalize();
  // b dominates a, so the order of frequencies does not matter
  CHECK(dominant_sample({a, a, b}) == 2);
  BundleSig c;
  c.m = 2;
  c.n = 2;
  c.rank = 1;
  c.horizontal = {1};
  c.vertical = {1};
  c.slots = {{1}};
  BundleSig d = c;
  d.horizontal = {2};
  d.vertical = {1};
  d.slots = {};
  // 2x2 rank-1 bundles L_1 + L_0^T and L_0 + J_1 + L_0^T: the first dominates
  CHECK(bundle_closure_contains(d, c));
  CHECK_FALSE(bundle_closure_contains(c, d));
  CHECK(dominant_sample({c, c, d}) == 2);
  BundleSig e;
  e.m = 1;
  e.n = 2;
  e.rank = 1;
  e.horizontal = {2};
  BundleSig f;
  f.m = 1;
  f.n = 2;
  f.rank = 1;
  f.horizontal = {1};
  f.slots = {{1}};
  CHECK(dominant_sample({f, e}) == 1);
  // two different top rank components cannot be ordered
  BundleSig g = generic_fixed_rank_sig(3, 3, 2, 0), h = generic_fixed_rank_sig(3, 3, 2, 2);
  CHECK_THROWS_AS(dominant_sample({g, h}), SamplingError);
}
