#include "doctest.h"
#include "generators.hpp"

#include "jkinv/catalog.hpp"
#include "jkinv/errors.hpp"
#include "jkinv/json_io.hpp"

using namespace jkinv;
using namespace jktest;

TEST_CASE("rationals") {
  CHECK(rat_from_json(Json("-3/6")) == Rat(-1, 2));
  CHECK(rat_from_json(Json(12)) == 12);
  CHECK_THROWS_AS(rat_from_json(Json(0.5)), InputError);
  CHECK(to_json(Rat(4) / 2) == "2");
  CHECK(to_json(parse_rat("4/2")) == "2");
}

TEST_CASE("pencil documents") {
  Json j = parse_json(R"({"m":1,"n":2,"A":[["0","1"]],"B":[["1","0"]]})");
  Pencil p = pencil_from_json(j);
  CHECK(p.A == Mat{{0, 1}});
  CHECK(to_json(p) == j);
  CHECK_THROWS_AS(pencil_from_json(parse_json(R"({"m":1,"n":2,"A":[["0"]],"B":[["1","0"]]})")), InputError);
  CHECK_THROWS_AS(pencil_from_json(parse_json(R"({"m":-1,"n":2,"A":[],"B":[]})")), InputError);
  CHECK_THROWS_AS(pencil_from_json(parse_json(R"([1,2])")), InputError);
  CHECK_THROWS_AS(parse_json("{"), InputError);
}

TEST_CASE("invariant reports round-trip byte for byte") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 40; ++t) {
    StrictInvariants inv = strict_invariants(scramble(rng, canonical_pencil(random_invariants(rng, 6, 6))));
    const std::string once = dump_canonical(to_json(inv));
    StrictInvariants back = invariants_from_json(parse_json(once));
    CHECK(back == inv);
    CHECK(dump_canonical(to_json(back)) == once);
    BundleSig sig = abstract_signature(inv);
    const std::string s1 = dump_canonical(to_json(sig));
    CHECK(dump_canonical(to_json(bundle_sig_from_json(parse_json(s1)))) == s1);
  }
  SkewJK jk{6, {2, 1}, {{EigClass::root(3), {2}}}};
  const std::string once = dump_canonical(to_json(jk));
  CHECK(skew_jk_from_json(parse_json(once)) == jk);
  SkewBundleSig ss{7, {2}, {{2}, {2}}};
  CHECK(skew_bundle_sig_from_json(to_json(ss)) == ss);
}

TEST_CASE("inconsistent signatures are input errors") {
  CHECK_THROWS_AS(bundle_sig_from_json(parse_json(R"({"m":2,"n":2,"rank":2,"horizontal":[],"vertical":[],"slots":[[1]]})")),
                  InputError);
  CHECK_THROWS_AS(bundle_sig_from_json(parse_json(R"({"m":2,"n":2,"rank":2,"horizontal":[0],"vertical":[],"slots":[]})")),
                  InputError);
  CHECK_THROWS_AS(skew_bundle_sig_from_json(parse_json(R"({"dim":3,"kronecker":[1],"slots":[[1]]})")), InputError);
  const char* wrong_count =
      R"({"m":1,"n":1,"rank":1,"horizontal":[],"vertical":[],"jordan":[{"class":"x","rootCount":2,"sizes":[1]}]})";
  CHECK_THROWS_AS(invariants_from_json(parse_json(wrong_count)), InputError);
}

TEST_CASE("algebra and representation documents") {
  Classical gl2 = build_classical(Family::parse("gl:2"));
  Json g = to_json(gl2.algebra);
  CHECK(lie_from_json(g) == gl2.algebra);
  Json r = to_json(gl2.standard);
  CHECK(rep_from_json(r, ".") == gl2.standard);
  Json noalg = r;
  noalg.erase("algebra");
  CHECK_THROWS_AS(rep_from_json(noalg, "."), InputError);
  CHECK(rep_from_json(noalg, ".", &gl2.algebra) == gl2.standard);
  LieAlgebra other(4);
  CHECK_THROWS_AS(rep_from_json(r, ".", &other), InputError);
  CHECK_THROWS_AS(lie_from_json(parse_json(R"({"dim":2,"brackets":[{"i":1,"j":0,"k":0,"c":"1"}]})")), InputError);
  CHECK_THROWS_AS(lie_from_json(parse_json(R"({"dim":2,"brackets":[{"i":0,"j":1,"k":2,"c":"1"}]})")), InputError);
}
