#pragma once

#include "jkinv/bundle.hpp"
#include "jkinv/matrix.hpp"
#include "jkinv/skew.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace jkinv {

// Structure constants [e_i, e_j] = sum_k c^k_ij e_k, stored for i < j only.
class LieAlgebra {
 public:
  struct Bracket {
    std::size_t i, j, k;
    Rat c;
    friend bool operator==(const Bracket&, const Bracket&) = default;
  };

  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  // Adds c to c^k_ij; i > j is stored as -c at (j, i).
  void add(std::size_t i, std::size_t j, std::size_t k, const Rat& c);
  // Canonical list: sorted by (i, j, k), no zeros.
  const std::vector<Bracket>& brackets() const { return brackets_; }
  Vec bracket(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  std::vector<std::string> labels;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Bracket> brackets_;
};

struct Representation {
  LieAlgebra algebra;
  std::size_t dim_v = 0;
  std::vector<Mat> mats;

  friend bool operator==(const Representation&, const Representation&) = default;
};

using Triple = std::array<std::size_t, 3>;
std::vector<Triple> check_jacobi(const LieAlgebra& g);
// Pairs i < j with rho([e_i, e_j]) != [rho(e_i), rho(e_j)]. Shape errors throw
// InputError.
std::vector<std::pair<std::size_t, std::size_t>> check_homomorphism(const Representation& rho);
// Throw InvalidAlgebraError on the first violation.
void validate(const LieAlgebra& g);
void validate(const Representation& rho);

Mat lie_poisson_matrix(const LieAlgebra& g, const Vec& x);
// dimV x n matrix whose i-th column is rho(e_i) x.
Mat rep_operator(const Representation& rho, const Vec& x);

struct SamplingConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 25;
  long bound = 101;
};

class Sampler {
 public:
  explicit Sampler(const SamplingConfig& cfg);
  // Integer coordinates uniform in [-bound, bound].
  Vec draw(std::size_t n);
  const SamplingConfig& config() const { return cfg_; }

 private:
  SamplingConfig cfg_;
  std::mt19937_64 rng_;
};

std::size_t lie_index(const LieAlgebra& g, Sampler& s, std::size_t samples);

enum class Genericity { certified, empirical };
std::string to_string(Genericity g);

struct SkewJKReport {
  SkewJK invariants;
  SkewBundleSig signature;
  Genericity status = Genericity::empirical;
  std::size_t samples_used = 0;
  std::size_t index_used = 0;
  bool index_exact = false;
};

struct RepJK {
  StrictInvariants invariants;
  BundleSig signature;
  Genericity status = Genericity::empirical;
  std::size_t samples_used = 0;
  // a with signature == generic_fixed_rank_sig(.., a) when certified
  std::optional<std::size_t> witness;
};

// Pencil A_x - lambda A_a, resp. R_x - lambda R_a.
Pencil lie_pencil(const LieAlgebra& g, const Vec& x, const Vec& a);
Pencil rep_pencil(const Representation& rho, const Vec& x, const Vec& a);

// exact_index: a known index replaces the sampled one.
SkewJKReport jk_invariants_of_lie(const LieAlgebra& g, Sampler& s, std::optional<std::size_t> exact_index = {});
RepJK jk_invariants_of_rep(const Representation& rho, Sampler& s);

// Selects the first signature, in order of decreasing frequency, that
// dominates every other; returns its position in `sigs`. SamplingError if none.
std::size_t dominant_sample(const std::vector<BundleSig>& sigs);
std::size_t dominant_sample(const std::vector<SkewBundleSig>& sigs);

}  // namespace jkinv
