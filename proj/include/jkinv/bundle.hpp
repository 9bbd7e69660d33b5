#pragma once

#include "jkinv/pencil.hpp"
#include "jkinv/skew.hpp"

#include <optional>

namespace jkinv {

// Eigenvalue-anonymous signature: one slot per distinct eigenvalue (infinity
// included), each holding that eigenvalue's Jordan sizes.
struct BundleSig {
  std::size_t m = 0, n = 0;
  std::size_t rank = 0;
  Multiset horizontal, vertical;
  std::vector<Multiset> slots;

  // Sorts every multiset and the slot list; drops nothing.
  void normalize();
  void check() const;
  unsigned jordan_total() const;

  friend bool operator==(const BundleSig&, const BundleSig&) = default;
  friend auto operator<=>(const BundleSig&, const BundleSig&) = default;
};

struct SkewBundleSig {
  std::size_t dim = 0;
  Multiset kronecker;
  std::vector<Multiset> slots;

  void normalize();
  void check() const;

  friend bool operator==(const SkewBundleSig&, const SkewBundleSig&) = default;
  friend auto operator<=>(const SkewBundleSig&, const SkewBundleSig&) = default;
};

BundleSig abstract_signature(const StrictInvariants& inv);
SkewBundleSig abstract_signature(const SkewJK& jk);
// Each Kronecker index k becomes h = v = k, each skew size 2s two blocks s.
BundleSig unfold(const SkewBundleSig& s);

// Rule parameters follow the block subscripts of the rules: L_k has
// horizontal index k + 1, E_k is a Jordan block of size k.
struct RuleApplication {
  int rule = 0;
  unsigned j = 0, k = 0;  // rules 1-5; for rule 6: p = j, q = k
  std::size_t slot = 0;   // rules 3-5
  // rule 6: (slot index, size) for existing slots, plus sizes for fresh ones
  std::vector<std::pair<std::size_t, unsigned>> into_existing;
  Multiset into_fresh;
};

BundleSig apply_rule(const BundleSig& sig, const RuleApplication& r);
// All signatures one rule away (normalized, deduplicated).
std::vector<BundleSig> successors(const BundleSig& sig);

// Segre sum: componentwise sum of the descending size sequences.
Multiset segre_sum(const Multiset& a, const Multiset& b);

// Search limit; exceeding it throws InputError.
inline constexpr std::size_t kMaxSearchStates = 2000000;

bool orbit_closure_contains(const BundleSig& upper, const BundleSig& lower);
bool bundle_closure_contains(const BundleSig& upper, const BundleSig& lower);
bool skew_bundle_closure_contains(const SkewBundleSig& upper, const SkewBundleSig& lower);

BundleSig generic_fixed_rank_sig(std::size_t m, std::size_t n, std::size_t r, std::size_t a);
// The a values for which generic_fixed_rank_sig(m, n, r, a) is defined.
std::vector<std::size_t> admissible_a(std::size_t m, std::size_t n, std::size_t r);

bool certify_generic_lie(const SkewBundleSig& sig, std::size_t ind_g);
// The matching a, if sig is one of the generic fixed-rank signatures.
std::optional<std::size_t> generic_repr_witness(const BundleSig& sig, std::size_t m, std::size_t n, std::size_t r);
bool certify_generic_repr(const BundleSig& sig, std::size_t m, std::size_t n, std::size_t r);

// Every signature of shape m x n and rank r.
std::vector<BundleSig> enumerate_signatures(std::size_t m, std::size_t n, std::size_t r);

}  // namespace jkinv
