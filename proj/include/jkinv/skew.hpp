#pragma once

#include "jkinv/pencil.hpp"

#include "jkinv/errors.hpp"

namespace jkinv {

// Jordan-Kronecker invariants of a skew pencil. Kronecker index k stands for
// a (2k-1)-block; Jordan sizes are the skew sizes 2n. Eigenvalue classes use
// the pencil convention (A + mu B drops rank at mu).
struct SkewJK {
  std::size_t dim = 0;
  Multiset kronecker;
  JordanMap jordan;

  void check() const;
  friend bool operator==(const SkewJK&, const SkewJK&) = default;
};

// Raised by jk_of_block_pencil when its input does not fit the block lemma.
class BlockPatternError : public InputError {
 public:
  using InputError::InputError;
};
class XyHypothesisError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};
class SsHypothesisError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

SkewJK fold_skew(const StrictInvariants& inv);
SkewJK skew_jk_invariants(const Pencil& p);

// Block-diagonal skew representative; upper-right blocks come from
// canonical_pencil, so classes need a rational root or infinity.
Pencil skew_canonical_pencil(const SkewJK& jk, const std::map<EigClass, Point>& assignment = {});

// Regular values are tried in the order 0, 1, 2, ...
std::vector<Rat> regular_sample_points(const Pencil& p, std::size_t count);
std::vector<Vec> core_subspace(const Pencil& p);
std::vector<Vec> mantle_subspace(const Pencil& p);

struct BlockPartition {
  std::size_t x = 0, s = 0, y = 0;
};

SkewJK jk_of_block_pencil(const Pencil& p, const BlockPartition& part);

}  // namespace jkinv
