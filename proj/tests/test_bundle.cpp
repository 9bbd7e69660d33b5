#include "doctest.h"
#include "generators.hpp"

#include "jkinv/bundle.hpp"
#include "jkinv/errors.hpp"

using namespace jkinv;
using namespace jktest;

namespace {

BundleSig sig(std::size_t m, std::size_t n, Multiset h, Multiset v, std::vector<Multiset> slots) {
  BundleSig s;
  s.m = m;
  s.n = n;
  s.rank = n - h.size();
  s.horizontal = std::move(h);
  s.vertical = std::move(v);
  s.slots = std::move(slots);
  s.normalize();
  s.check();
  return s;
}

BundleSig sig_of(const Pencil& p) { return abstract_signature(strict_invariants(p)); }

}  // namespace

TEST_CASE("abstract signatures") {
  StrictInvariants a;
  a.rows = a.cols = a.rank = 2;
  a.jordan[EigClass::parse("x^2 - 2")] = {1};
  CHECK(abstract_signature(a).slots == std::vector<Multiset>{{1}, {1}});
  StrictInvariants k;
  k.rows = 1;
  k.cols = 2;
  k.rank = 1;
  k.horizontal = {2};
  CHECK(abstract_signature(k).slots.empty());
  StrictInvariants mixed;
  mixed.rows = mixed.cols = mixed.rank = 3;
  mixed.jordan[EigClass::infinity()] = {2};
  mixed.jordan[EigClass::root(0)] = {1};
  CHECK(abstract_signature(mixed).slots == std::vector<Multiset>{{2}, {1}});
}

TEST_CASE("rule examples") {
  RuleApplication r3{3, 0, 0};
  r3.slot = 0;
  CHECK(apply_rule(sig(1, 2, {1}, {}, {{1}}), r3) == sig(1, 2, {2}, {}, {}));
  CHECK(apply_rule(sig(2, 4, {3, 1}, {}, {}), {1, 1, 1}) == sig(2, 4, {2, 2}, {}, {}));
  BundleSig before = sig(2, 2, {2}, {1}, {});
  RuleApplication one{6, 1, 0};
  one.into_fresh = {2};
  RuleApplication two{6, 1, 0};
  two.into_fresh = {1, 1};
  CHECK(apply_rule(before, one) == sig(2, 2, {}, {}, {{2}}));
  CHECK(apply_rule(before, two) == sig(2, 2, {}, {}, {{1}, {1}}));
  CHECK(apply_rule(before, one).rank == before.rank + 1);
  CHECK_THROWS_AS(apply_rule(before, {1, 1, 1}), InputError);
  RuleApplication bad{6, 1, 0};
  bad.into_fresh = {1};
  CHECK_THROWS_AS(apply_rule(before, bad), InputError);
  RuleApplication r5{5, 1, 1};
  r5.slot = 0;
  CHECK(apply_rule(sig(2, 2, {}, {}, {{1, 1}}), r5) == sig(2, 2, {}, {}, {{2}}));
}

TEST_CASE("rules preserve bookkeeping") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    auto inv = random_invariants(rng, 5, 5);
    BundleSig s = abstract_signature(inv);
    for (const auto& nx : successors(s)) {
      CHECK_NOTHROW(nx.check());
      CHECK((nx.rank == s.rank || nx.rank == s.rank + 1));
      CHECK(nx.m == s.m);
      CHECK(nx.n == s.n);
    }
  }
}

TEST_CASE("orbit closure examples") {
  BundleSig a = sig(1, 2, {2}, {}, {}), b = sig(1, 2, {1}, {}, {{1}});
  CHECK(orbit_closure_contains(a, a));
  CHECK(orbit_closure_contains(a, b));
  CHECK_FALSE(orbit_closure_contains(b, a));
  BundleSig low = sig(2, 2, {1, 1}, {1, 1}, {});
  CHECK_FALSE(orbit_closure_contains(low, sig(2, 2, {}, {}, {{2}})));
  CHECK_THROWS_AS(orbit_closure_contains(a, low), InputError);
}

TEST_CASE("bundle closure coalesces upper eigenvalues") {
  BundleSig two = sig(2, 2, {}, {}, {{1}, {1}}), jordan = sig(2, 2, {}, {}, {{2}});
  CHECK(bundle_closure_contains(two, jordan));
  CHECK_FALSE(bundle_closure_contains(jordan, two));
  CHECK(bundle_closure_contains(jordan, jordan));
  CHECK_FALSE(orbit_closure_contains(two, jordan));
  CHECK(bundle_closure_contains(jordan, sig(2, 2, {}, {}, {{1, 1}})));
  BundleSig kron = sig(2, 3, {3}, {}, {});
  CHECK(bundle_closure_contains(kron, sig(2, 3, {2, 1}, {1}, {})));
  CHECK_FALSE(bundle_closure_contains(sig(2, 3, {2, 1}, {1}, {}), kron));
}

TEST_CASE("coalescing limit of an explicit family") {
  // at t != 0 the eigenvalues 0 (twice) and -t; at t = 0 a 2-block and a 1-block
  auto family = [](long t) { return Pencil(Mat{{0, 1, 0}, {0, t, 0}, {0, 0, 0}}, Mat::identity(3)); };
  BundleSig gen = sig_of(family(5)), special = sig_of(family(0));
  CHECK(gen == sig(3, 3, {}, {}, {{1, 1}, {1}}));
  CHECK(special == sig(3, 3, {}, {}, {{2, 1}}));
  CHECK(bundle_closure_contains(gen, special));
  CHECK_FALSE(bundle_closure_contains(special, gen));
}

TEST_CASE("special members of families lie in the closure of the generic one") {
  std::mt19937_64 rng(12);
  int tested = 0;
  for (int t = 0; t < 60; ++t) {
    auto inv = random_invariants(rng, 4, 4);
    if (inv.rows == 0 || inv.cols == 0 || inv.rows + inv.cols > 8) continue;
    Pencil p0 = scramble(rng, canonical_pencil(inv));
    const std::size_t r = p0.rows(), c = p0.cols();
    // rank-one perturbations in A and B
    Mat da = random_int_mat(rng, r, 1, -1, 1) * random_int_mat(rng, 1, c, -1, 1);
    Mat db = random_int_mat(rng, r, 1, -1, 1) * random_int_mat(rng, 1, c, -1, 1);
    auto at = [&](long s) { return Pencil(p0.A + Rat(s) * da, p0.B + Rat(s) * db); };
    BundleSig g1 = sig_of(at(97)), g2 = sig_of(at(131));
    if (g1 != g2) continue;
    CHECK(bundle_closure_contains(g1, sig_of(at(0))));
    ++tested;
  }
  CHECK(tested > 20);
}

TEST_CASE("closure is reflexive and transitive") {
  std::mt19937_64 rng(8);
  auto sigs = enumerate_signatures(3, 3, 2);
  auto more = enumerate_signatures(3, 3, 1);
  sigs.insert(sigs.end(), more.begin(), more.end());
  for (const auto& s : sigs) CHECK(bundle_closure_contains(s, s));
  for (int t = 0; t < 150; ++t) {
    const auto& a = sigs[rng() % sigs.size()];
    const auto& b = sigs[rng() % sigs.size()];
    const auto& c = sigs[rng() % sigs.size()];
    if (bundle_closure_contains(a, b) && bundle_closure_contains(b, c)) CHECK(bundle_closure_contains(a, c));
    if (orbit_closure_contains(a, b) && orbit_closure_contains(b, c)) CHECK(orbit_closure_contains(a, c));
    // antisymmetry
    if (a != b && orbit_closure_contains(a, b)) CHECK_FALSE(orbit_closure_contains(b, a));
    if (orbit_closure_contains(a, b)) CHECK(bundle_closure_contains(a, b));
  }
}

TEST_CASE("generic fixed-rank signatures") {
  CHECK(generic_fixed_rank_sig(2, 3, 1, 1) == sig(2, 3, {2, 1}, {1}, {}));
  CHECK(generic_fixed_rank_sig(2, 3, 2, 2) == sig(2, 3, {3}, {}, {}));
  CHECK(generic_fixed_rank_sig(3, 3, 2, 1) == sig(3, 3, {2}, {2}, {}));
  CHECK_THROWS_AS(generic_fixed_rank_sig(3, 3, 3, 0), InputError);
  CHECK_THROWS_AS(generic_fixed_rank_sig(2, 3, 0, 0), InputError);
  CHECK_THROWS_AS(generic_fixed_rank_sig(2, 3, 2, 1), InputError);
  CHECK_THROWS_AS(generic_fixed_rank_sig(2, 3, 1, 2), InputError);
  CHECK(admissible_a(2, 3, 2) == std::vector<std::size_t>{2});
  CHECK(admissible_a(3, 3, 2).size() == 3);
}

TEST_CASE("generic fixed-rank signatures are maximal and cover their rank") {
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = 1; m + n <= 6; ++n)
      for (std::size_t r = 1; r <= std::min(m, n); ++r) {
        if (m == n && r == n) continue;
        std::vector<BundleSig> gens;
        for (auto a : admissible_a(m, n, r)) gens.push_back(generic_fixed_rank_sig(m, n, r, a));
        CHECK(gens.size() == r + 1 - (m == r ? r : 0) - (n == r ? r : 0));
        for (const auto& s : enumerate_signatures(m, n, r)) {
          bool covered = false;
          for (const auto& g : gens) {
            if (s != g) CHECK_FALSE(bundle_closure_contains(s, g));
            covered = covered || bundle_closure_contains(g, s);
          }
          CHECK(covered);
        }
      }
}

TEST_CASE("genericity certificates") {
  SkewBundleSig e2{3, {2}, {}};
  CHECK(certify_generic_lie(e2, 1));
  CHECK_FALSE(certify_generic_lie(SkewBundleSig{5, {3, 1}, {}}, 2));
  CHECK_FALSE(certify_generic_lie(SkewBundleSig{8, {2, 2}, {{2}}}, 2));
  CHECK_THROWS_AS(certify_generic_lie(e2, 0), PreconditionError);
  BundleSig gl3 = sig(3, 9, {2, 2, 2, 1, 1, 1}, {}, {});
  CHECK(certify_generic_repr(gl3, 3, 9, 3));
  CHECK(generic_repr_witness(gl3, 3, 9, 3) == std::optional<std::size_t>(3));
  CHECK_THROWS_AS(certify_generic_repr(sig(2, 2, {}, {}, {{1}, {1}}), 2, 2, 2), PreconditionError);
  CHECK_FALSE(certify_generic_repr(sig(2, 3, {2}, {}, {{1}}), 2, 3, 2));
}

TEST_CASE("skew signatures unfold") {
  SkewBundleSig s{6, {2, 1}, {{2}}};
  s.check();
  BundleSig u = unfold(s);
  CHECK(u == sig(6, 6, {2, 1}, {2, 1}, {{1, 1}}));
  SkewBundleSig gen{4, {}, {{2}, {2}}}, deg{4, {}, {{2, 2}}};
  CHECK(skew_bundle_closure_contains(gen, deg));
  CHECK(enumerate_signatures(2, 2, 2).size() == 3);
}
