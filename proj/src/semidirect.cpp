#include "jkinv/semidirect.hpp"

#include "jkinv/errors.hpp"

namespace jkinv {

Representation dual_representation(const Representation& rho) {
  validate(rho);
  Representation d = rho;
  for (auto& m : d.mats) m = -m.transpose();
  validate(d);
  return d;
}

Representation direct_sum(const Representation& rho, std::size_t m) {
  if (m < 1) throw InputError("direct sum needs m >= 1");
  Representation s;
  s.algebra = rho.algebra;
  s.dim_v = rho.dim_v * m;
  for (const auto& x : rho.mats) {
    Mat b(s.dim_v, s.dim_v);
    for (std::size_t i = 0; i < m; ++i) b.set_block(i * rho.dim_v, i * rho.dim_v, x);
    s.mats.push_back(b);
  }
  return s;
}

SemidirectSum semidirect(const LieAlgebra& g, const Representation& rho) {
  if (!(rho.algebra == g)) throw InputError("representation belongs to a different algebra");
  validate(rho);
  const std::size_t n = g.dim();
  LieAlgebra q(n + rho.dim_v);
  for (const auto& b : g.brackets()) q.add(b.i, b.j, b.k, b.c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < rho.dim_v; ++p)
      for (std::size_t r = 0; r < rho.dim_v; ++r)
        if (rho.mats[i](r, p) != 0) q.add(i, n + p, n + r, rho.mats[i](r, p));
  if (!g.labels.empty()) {
    q.labels = g.labels;
    for (std::size_t p = 0; p < rho.dim_v; ++p) q.labels.push_back("v" + std::to_string(p));
  }
  validate(q);
  return {g, rho, q};
}

bool verify_block_structure(const SemidirectSum& sd, const Vec& x, const Vec& a) {
  const std::size_t n = sd.g.dim(), dv = sd.rho.dim_v;
  if (x.size() != n || a.size() != dv) throw InputError("covector lengths do not match the semi-direct sum");
  Vec xa = x;
  xa.insert(xa.end(), a.begin(), a.end());
  Mat got = lie_poisson_matrix(sd.q, xa);
  Representation dual = sd.rho;
  for (auto& m : dual.mats) m = -m.transpose();
  Mat l = -rep_operator(dual, a);
  Mat want(n + dv, n + dv);
  want.set_block(0, 0, lie_poisson_matrix(sd.g, x));
  want.set_block(0, n, l.transpose());
  want.set_block(n, 0, -l);
  return got == want;
}

std::optional<DualPrediction> predict_semidirect_jk(const RepJK& dual) {
  if (!dual.signature.horizontal.empty()) return std::nullopt;
  DualPrediction p;
  p.kronecker = dual.signature.vertical;
  for (const auto& s : dual.signature.slots) p.slot_totals.push_back(total(s));
  p.slot_totals = sorted_desc(p.slot_totals);
  return p;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::match:
      return "match";
    case Verdict::mismatch:
      return "mismatch";
    default:
      return "not-applicable";
  }
}

DualTheoremReport check_dual_theorem(const LieAlgebra& g, const Representation& rho, Sampler& s) {
  DualTheoremReport r;
  r.dual = jk_invariants_of_rep(dual_representation(rho), s);
  r.predicted = predict_semidirect_jk(r.dual);
  r.lie = jk_invariants_of_lie(semidirect(g, rho).q, s);
  r.computed_kronecker = r.lie.signature.kronecker;
  bool even = true;
  for (const auto& sl : r.lie.signature.slots) {
    for (auto v : sl) even = even && v % 2 == 0;
    r.computed_slot_totals.push_back(total(sl) / 2);
  }
  r.computed_slot_totals = sorted_desc(r.computed_slot_totals);
  if (!r.predicted) {
    r.verdict = Verdict::not_applicable;
  } else {
    const bool ok = even && r.predicted->kronecker == r.computed_kronecker &&
                    r.predicted->slot_totals == r.computed_slot_totals;
    r.verdict = ok ? Verdict::match : Verdict::mismatch;
  }
  return r;
}

}  // namespace jkinv
