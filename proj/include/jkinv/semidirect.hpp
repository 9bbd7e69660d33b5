#pragma once

#include "jkinv/lie.hpp"

#include <optional>

namespace jkinv {

// xi -> -rho(xi)^T on the dual space.
Representation dual_representation(const Representation& rho);
// m-fold block-diagonal sum.
Representation direct_sum(const Representation& rho, std::size_t m);

// q = g + V with basis (e_0..e_{n-1}, v_0..v_{dimV-1}); V is an abelian ideal
// and [e_i, v_p] = rho(e_i) v_p.
struct SemidirectSum {
  LieAlgebra g;
  Representation rho;
  LieAlgebra q;
};

SemidirectSum semidirect(const LieAlgebra& g, const Representation& rho);

// A^q at (x, a) against [[A^g_x, L_a^T], [-L_a, 0]] with L_a = -R^{rho*}_a.
bool verify_block_structure(const SemidirectSum& sd, const Vec& x, const Vec& a);

struct DualPrediction {
  Multiset kronecker;
  Multiset slot_totals;  // descending
};

// Empty when the dual invariants have horizontal indices.
std::optional<DualPrediction> predict_semidirect_jk(const RepJK& dual);

enum class Verdict { match, mismatch, not_applicable };
std::string to_string(Verdict v);

struct DualTheoremReport {
  RepJK dual;
  SkewJKReport lie;
  std::optional<DualPrediction> predicted;
  Multiset computed_kronecker;
  Multiset computed_slot_totals;  // halved, descending
  Verdict verdict = Verdict::not_applicable;
};

DualTheoremReport check_dual_theorem(const LieAlgebra& g, const Representation& rho, Sampler& s);

}  // namespace jkinv
