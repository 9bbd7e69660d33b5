#pragma once

#include "jkinv/matrix.hpp"
#include "jkinv/poly.hpp"

#include <cstddef>
#include <vector>

namespace jkinv {

// Linear algebra over Q[x]/(q) for a monic squarefree q, in the dynamic
// evaluation style: q is treated as if irreducible, and when a pivot turns out
// to be a zero divisor the modulus is split and the work restarts per factor.
// Every returned factor therefore sees one uniform rank profile, which is the
// profile at each of its roots.

struct PowerRankProfile {
  Poly modulus;
  // ranks[k] = rank of Z^k over the residue ring; stops once it stabilises.
  std::vector<std::size_t> ranks;
};

// Z = I + (x - shift) * N with N square over Q.
std::vector<PowerRankProfile> power_rank_profiles(const Mat& n, const Rat& shift, const Poly& q);

// Rank of M0 + x M1 over Q[x]/(q), split the same way.
struct RankProfile {
  Poly modulus;
  std::size_t rank;
};
std::vector<RankProfile> evaluated_rank(const Mat& m0, const Mat& m1, const Poly& q);

}  // namespace jkinv
