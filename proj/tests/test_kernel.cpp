#include "doctest.h"
#include "support.hpp"

#include "jkinv/errors.hpp"

using namespace jkinv;
using namespace jktest;

TEST_CASE("rat parse and print") {
  CHECK(parse_rat("3") == 3);
  CHECK(parse_rat("-6/4") == Rat(-3, 2));
  CHECK(to_string(parse_rat("10/4")) == "5/2");
  CHECK(to_string(parse_rat("-7")) == "-7");
  CHECK_THROWS_AS(parse_rat("1/0"), InputError);
  CHECK_THROWS_AS(parse_rat("abc"), InputError);
  CHECK_THROWS_AS(parse_rat("1/-2"), InputError);
}

TEST_CASE("rank examples") {
  CHECK(rank(Mat::identity(3)) == 3);
  CHECK(rank(Mat(2, 3)) == 0);
  CHECK(rank(Mat{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(Mat{{Rat(1, 2), Rat(1, 3)}, {Rat(3, 2), 1}}) == 1);
}

TEST_CASE("rank equals rank of transpose, kernels are exact") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    // low-rank products exercise the column-skipping path
    std::size_t k = rng() % 5;
    Mat m = random_int_mat(rng, r, k, -3, 3) * random_int_mat(rng, k, c, -3, 3);
    if (rng() % 3 == 0) m = random_int_mat(rng, r, c, -2, 2);
    const std::size_t rk = rank(m);
    CHECK(rk == rank(m.transpose()));
    auto ker = kernel_basis(m);
    CHECK(ker.size() == c - rk);
    for (const auto& v : ker) CHECK(is_zero(m * v));
    CHECK(span_basis(ker, c).size() == ker.size());
  }
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Mat::identity(2)).empty());
  auto k = kernel_basis(Mat{{1, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(kernel_basis(Mat(2, 2)).size() == 2);
}

TEST_CASE("determinant against cofactor expansion, inverse") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + rng() % 5;
    Mat m = random_int_mat(rng, n, n, -4, 4);
    m(0, 0) += Rat(1, 3);
    CHECK(determinant(m) == cofactor_det(m));
    if (determinant(m) != 0) CHECK(inverse(m) * m == Mat::identity(n));
  }
}

TEST_CASE("pfaffian") {
  CHECK(pfaffian(Mat{{0, 1}, {-1, 0}}) == 1);
  CHECK(pfaffian(Mat(4, 4)) == 0);
  CHECK_THROWS_AS(pfaffian(Mat{{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(pfaffian(Mat(3, 3)), InputError);
  // Pf of the 4x4 skew matrix is a12 a34 - a13 a24 + a14 a23.
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 2 * (1 + rng() % 3);
    Mat x = random_int_mat(rng, n, n, -4, 4);
    Mat s = x - x.transpose();
    Rat pf = pfaffian(s);
    CHECK(pf * pf == determinant(s));
    if (n == 4) CHECK(pf == s(0, 1) * s(2, 3) - s(0, 2) * s(1, 3) + s(0, 3) * s(1, 2));
  }
}

TEST_CASE("polynomial arithmetic and parsing") {
  Poly x = Poly::x();
  Poly p = x * x - Poly::constant(2);
  CHECK(p.to_string() == "x^2 - 2");
  CHECK(Poly::parse("x^2 - 2") == p);
  CHECK(Poly::parse("-1/2*x + 3") == Poly(std::vector<Rat>{3, Rat(-1, 2)}));
  CHECK(Poly::parse("x^3-x") == x * x * x - x);
  CHECK(Poly::parse(Poly(std::vector<Rat>{Rat(1, 3), 0, -5, 1}).to_string()) ==
        Poly(std::vector<Rat>{Rat(1, 3), 0, -5, 1}));
  auto [q, r] = divmod(x * x * x + Poly::constant(1), x + Poly::constant(1));
  CHECK(r.is_zero());
  CHECK(q == x * x - x + Poly::constant(1));
  CHECK(gcd(x * x - Poly::constant(1), x - Poly::constant(1)) == x - Poly::constant(1));
  auto bz = extended_gcd(x * x + Poly::constant(1), x + Poly::constant(2));
  CHECK(bz.g == Poly::constant(1));
  CHECK(bz.s * (x * x + Poly::constant(1)) + bz.t * (x + Poly::constant(2)) == Poly::constant(1));
}

TEST_CASE("squarefree decomposition reconstructs") {
  Poly x = Poly::x();
  Poly a = x - Poly::constant(1), b = x * x + Poly::constant(3), c = x + Poly::constant(Rat(1, 2));
  Poly f = Poly::constant(5) * a * b * b * c * c * c * c;
  auto dec = squarefree_decomposition(f);
  Poly back = Poly::constant(1);
  for (auto& [g, e] : dec)
    for (unsigned i = 0; i < e; ++i) back *= g;
  CHECK(back == f.monic());
  REQUIRE(dec.size() == 3);
  CHECK(dec[0].second == 1);
  CHECK(dec[1].first == b);
  CHECK(dec[2].second == 4);
}

TEST_CASE("coprime basis") {
  Poly x = Poly::x(), one = Poly::constant(1);
  {
    std::vector<Poly> in{x * x};
    CHECK(coprime_basis(in) == std::vector<Poly>{x});
  }
  {
    std::vector<Poly> in{x * (x - one), x};
    auto out = coprime_basis(in);
    CHECK(out.size() == 2);
    CHECK(std::find(out.begin(), out.end(), x) != out.end());
    CHECK(std::find(out.begin(), out.end(), x - one) != out.end());
  }
  {
    std::vector<Poly> in{x * x - one, x - one};
    auto out = coprime_basis(in);
    CHECK(out.size() == 2);
    // each input is a product of powers of the basis
    for (const auto& p : in) {
      Poly rest = p.monic();
      for (const auto& b : out) {
        unsigned e = multiplicity(b, rest);
        for (unsigned i = 0; i < e; ++i) rest = rest / b;
      }
      CHECK(rest == one);
    }
  }
}

TEST_CASE("coprime basis random reconstruction") {
  std::mt19937_64 rng(3);
  Poly x = Poly::x();
  std::vector<Poly> atoms{x, x - Poly::constant(1), x * x + Poly::constant(1), x + Poly::constant(2),
                          x * x - Poly::constant(3)};
  for (int t = 0; t < 50; ++t) {
    std::vector<Poly> in;
    for (int k = 0; k < 3; ++k) {
      Poly p = Poly::constant(1 + static_cast<long>(rng() % 3));
      for (const auto& a : atoms)
        for (unsigned e = rng() % 3; e > 0; --e) p *= a;
      in.push_back(p);
    }
    auto out = coprime_basis(in);
    for (std::size_t i = 0; i < out.size(); ++i) {
      CHECK(out[i] == out[i].monic());
      CHECK(gcd(out[i], out[i].derivative()).degree() == 0);
      for (std::size_t j = i + 1; j < out.size(); ++j) CHECK(gcd(out[i], out[j]).degree() == 0);
    }
    for (const auto& p : in) {
      Poly rest = p.monic();
      for (const auto& b : out) {
        unsigned e = multiplicity(b, rest);
        for (unsigned i = 0; i < e; ++i) rest = rest / b;
      }
      CHECK(rest == Poly::constant(1));
    }
  }
}

TEST_CASE("interpolation") {
  std::vector<Rat> xs{0, 1, 2, 3}, ys;
  Poly p(std::vector<Rat>{1, -2, Rat(1, 2), 3});
  for (auto& v : xs) ys.push_back(p.eval(v));
  CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("smith form examples") {
  Poly x = Poly::x(), one = Poly::constant(1);
  PolyMat d(2, 2);
  d(0, 0) = one;
  d(1, 1) = x;
  CHECK(poly_smith_invariant_factors(d) == std::vector<Poly>{one, x});
  PolyMat e(2, 2);
  e(0, 0) = x;
  e(1, 1) = x * x;
  CHECK(poly_smith_invariant_factors(e) == std::vector<Poly>{x, x * x});
  PolyMat j(2, 2);
  j(0, 0) = x;
  j(0, 1) = one;
  j(1, 1) = x;
  CHECK(poly_smith_invariant_factors(j) == std::vector<Poly>{one, x * x});
  // swapped divisibility is repaired
  PolyMat s(2, 2);
  s(0, 0) = x - one;
  s(1, 1) = x;
  CHECK(poly_smith_invariant_factors(s) == std::vector<Poly>{one, x * x - x});
}

TEST_CASE("smith factors agree with the gcd-of-minors oracle") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    Mat a, b;
    if (t % 2 == 0) {
      a = random_int_mat(rng, r, c, -2, 2);
      b = random_int_mat(rng, r, c, -1, 1);
    } else {
      // structured: scrambled diagonal with repeated roots
      std::size_t n = std::min(r, c);
      Mat d = Mat(r, c), e = Mat(r, c);
      for (std::size_t i = 0; i < n; ++i) {
        d(i, i) = static_cast<long>(rng() % 2);
        e(i, i) = 1;
        if (i + 1 < n && rng() % 2) d(i, i + 1) = 1;
      }
      Mat p = random_invertible(rng, r, -2, 2), q = random_invertible(rng, c, -2, 2);
      a = p * d * q;
      b = p * e * q;
    }
    PolyMat pm = PolyMat::from_pencil(a, b);
    auto f = poly_smith_invariant_factors(pm);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK((f[i + 1] % f[i]).is_zero());
    // d_1 ... d_k = gcd of k x k minors, for every k up to the rank
    Poly prod = Poly::constant(1);
    for (std::size_t k = 1; k <= f.size(); ++k) {
      prod *= f[k - 1];
      CHECK(prod == minors_gcd(pm, k));
    }
    if (f.size() < std::min(r, c)) CHECK(minors_gcd(pm, f.size() + 1).is_zero());
  }
}
