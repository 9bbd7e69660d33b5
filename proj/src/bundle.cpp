#include "jkinv/bundle.hpp"

#include "jkinv/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <string>
#include <unordered_set>

namespace jkinv {

namespace {

bool take(Multiset& m, unsigned value) {
  auto it = std::find(m.begin(), m.end(), value);
  if (it == m.end()) return false;
  m.erase(it);
  return true;
}

void not_applicable(int rule, const std::string& why) {
  throw InputError("rule " + std::to_string(rule) + " not applicable: " + why);
}

// Descending partitions of n with parts at most cap.
void partitions(unsigned n, unsigned cap, Multiset& cur, const std::function<void(const Multiset&)>& f) {
  if (n == 0) {
    f(cur);
    return;
  }
  for (unsigned p = std::min(n, cap); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, f);
    cur.pop_back();
  }
}

// Descending multisets of exactly `count` positive parts, each at most cap,
// summing to at most budget.
void bounded_multisets(std::size_t count, unsigned cap, unsigned budget, Multiset& cur,
                       const std::function<void(const Multiset&)>& f) {
  if (count == 0) {
    f(cur);
    return;
  }
  // every remaining part needs at least 1
  for (unsigned p = 1; p <= cap && p + (count - 1) <= budget; ++p) {
    cur.push_back(p);
    bounded_multisets(count - 1, p, budget - p, cur, f);
    cur.pop_back();
  }
}

std::string key(const BundleSig& s) {
  std::string k;
  auto put = [&](const Multiset& m) {
    for (auto v : m) k.push_back(static_cast<char>(v));
    k.push_back('\xff');
  };
  k.push_back(static_cast<char>(s.rank));
  put(s.horizontal);
  put(s.vertical);
  for (const auto& sl : s.slots) put(sl);
  return k;
}

// dim ker of the d-th stacked matrix contributed by minimal indices
unsigned nu(const Multiset& idx, unsigned d) {
  unsigned t = 0;
  for (auto h : idx)
    if (d + 2 > h) t += d + 2 - h;
  return t;
}

// Necessary conditions for reaching `target` (or a coalescence of it) from s.
struct Bound {
  std::size_t rank;
  unsigned span;
  std::vector<unsigned> nh, nv;
  unsigned jordan;
  std::size_t min_slots;

  Bound(const BundleSig& t, std::size_t min_slots_) : rank(t.rank), jordan(t.jordan_total()), min_slots(min_slots_) {
    span = static_cast<unsigned>(t.m + t.n + 1);
    for (unsigned d = 0; d <= span; ++d) {
      nh.push_back(nu(t.horizontal, d));
      nv.push_back(nu(t.vertical, d));
    }
  }

  bool admits(const BundleSig& s) const {
    if (s.rank > rank) return false;
    for (unsigned d = 0; d <= span; ++d)
      if (nu(s.horizontal, d) < nh[d] || nu(s.vertical, d) < nv[d]) return false;
    if (s.rank == rank && (s.jordan_total() < jordan || s.slots.size() < min_slots)) return false;
    return true;
  }
};

bool search(const BundleSig& from, const std::set<std::string>& targets, const Bound& bound) {
  std::unordered_set<std::string> seen;
  std::deque<BundleSig> queue;
  const std::string k0 = key(from);
  if (targets.count(k0)) return true;
  if (!bound.admits(from)) return false;
  seen.insert(k0);
  queue.push_back(from);
  while (!queue.empty()) {
    BundleSig cur = std::move(queue.front());
    queue.pop_front();
    for (auto& nx : successors(cur)) {
      std::string k = key(nx);
      if (targets.count(k)) return true;
      if (!bound.admits(nx) || !seen.insert(k).second) continue;
      if (seen.size() > kMaxSearchStates) throw PreconditionError("closure search exceeded the state limit");
      queue.push_back(std::move(nx));
    }
  }
  return false;
}

void require_same_shape(const BundleSig& a, const BundleSig& b) {
  if (a.m != b.m || a.n != b.n) throw InputError("signatures differ in shape");
}

// All set partitions of {0..k-1}, as block labels.
void set_partitions(std::size_t k, std::vector<std::size_t>& labels, std::size_t blocks,
                    const std::function<void(const std::vector<std::size_t>&, std::size_t)>& f) {
  if (labels.size() == k) {
    f(labels, blocks);
    return;
  }
  for (std::size_t b = 0; b <= blocks; ++b) {
    labels.push_back(b);
    set_partitions(k, labels, std::max(blocks, b + 1), f);
    labels.pop_back();
  }
}

}  // namespace

void BundleSig::normalize() {
  horizontal = sorted_desc(horizontal);
  vertical = sorted_desc(vertical);
  for (auto& s : slots) s = sorted_desc(s);
  std::sort(slots.begin(), slots.end(), std::greater<>());
}

unsigned BundleSig::jordan_total() const {
  unsigned t = 0;
  for (const auto& s : slots) t += total(s);
  return t;
}

void BundleSig::check() const {
  std::size_t rows = jordan_total(), cols = jordan_total();
  for (auto h : horizontal) {
    if (h == 0) throw InternalConsistencyError("zero horizontal index");
    rows += h - 1;
    cols += h;
  }
  for (auto v : vertical) {
    if (v == 0) throw InternalConsistencyError("zero vertical index");
    rows += v;
    cols += v - 1;
  }
  for (const auto& s : slots) {
    if (s.empty()) throw InternalConsistencyError("empty Jordan slot");
    if (std::find(s.begin(), s.end(), 0u) != s.end()) throw InternalConsistencyError("zero Jordan size");
  }
  if (rows != m || cols != n) throw InternalConsistencyError("signature blocks do not fill the shape");
  if (rank + horizontal.size() != n || rank + vertical.size() != m)
    throw InternalConsistencyError("signature rank does not match its Kronecker part");
}

void SkewBundleSig::normalize() {
  kronecker = sorted_desc(kronecker);
  for (auto& s : slots) s = sorted_desc(s);
  std::sort(slots.begin(), slots.end(), std::greater<>());
}

void SkewBundleSig::check() const {
  std::size_t d = 0;
  for (auto k : kronecker) {
    if (k == 0) throw InternalConsistencyError("zero Kronecker index");
    d += 2 * k - 1;
  }
  for (const auto& s : slots) {
    if (s.empty()) throw InternalConsistencyError("empty Jordan slot");
    for (auto v : s)
      if (v == 0 || v % 2) throw InternalConsistencyError("skew Jordan sizes must be even and positive");
    d += total(s);
  }
  if (d != dim) throw InternalConsistencyError("skew signature sizes do not add up to the dimension");
}

BundleSig abstract_signature(const StrictInvariants& inv) {
  BundleSig s;
  s.m = inv.rows;
  s.n = inv.cols;
  s.rank = inv.rank;
  s.horizontal = inv.horizontal;
  s.vertical = inv.vertical;
  for (const auto& [c, sizes] : inv.jordan)
    for (unsigned i = 0; i < c.root_count(); ++i) s.slots.push_back(sizes);
  s.normalize();
  s.check();
  return s;
}

SkewBundleSig abstract_signature(const SkewJK& jk) {
  SkewBundleSig s;
  s.dim = jk.dim;
  s.kronecker = jk.kronecker;
  for (const auto& [c, sizes] : jk.jordan)
    for (unsigned i = 0; i < c.root_count(); ++i) s.slots.push_back(sizes);
  s.normalize();
  s.check();
  return s;
}

BundleSig unfold(const SkewBundleSig& s) {
  BundleSig b;
  b.m = b.n = s.dim;
  b.horizontal = b.vertical = s.kronecker;
  b.rank = s.dim - s.kronecker.size();
  for (const auto& sl : s.slots) {
    Multiset u;
    for (auto v : sl) {
      u.push_back(v / 2);
      u.push_back(v / 2);
    }
    b.slots.push_back(u);
  }
  b.normalize();
  b.check();
  return b;
}

BundleSig apply_rule(const BundleSig& sig, const RuleApplication& r) {
  BundleSig s = sig;
  const unsigned j = r.j, k = r.k;
  switch (r.rule) {
    case 1:
    case 2: {
      Multiset& idx = r.rule == 1 ? s.horizontal : s.vertical;
      if (j < 1 || j > k) not_applicable(r.rule, "needs 1 <= j <= k");
      // L_{j-1} + L_{k+1} -> L_j + L_k
      if (!take(idx, j) || !take(idx, k + 2)) not_applicable(r.rule, "blocks not present");
      idx.push_back(j + 1);
      idx.push_back(k + 1);
      break;
    }
    case 3:
    case 4: {
      Multiset& idx = r.rule == 3 ? s.horizontal : s.vertical;
      if (r.slot >= s.slots.size()) not_applicable(r.rule, "no such slot");
      // L_j + E_{k+1} -> L_{j+1} + E_k
      if (!take(idx, j + 1) || !take(s.slots[r.slot], k + 1)) not_applicable(r.rule, "blocks not present");
      idx.push_back(j + 2);
      if (k > 0) s.slots[r.slot].push_back(k);
      break;
    }
    case 5: {
      if (r.slot >= s.slots.size()) not_applicable(5, "no such slot");
      if (j < 1 || j > k) not_applicable(5, "needs 1 <= j <= k");
      Multiset& sl = s.slots[r.slot];
      if (!take(sl, j) || !take(sl, k)) not_applicable(5, "blocks not present");
      if (j > 1) sl.push_back(j - 1);
      sl.push_back(k + 1);
      break;
    }
    case 6: {
      if (!take(s.horizontal, j + 1) || !take(s.vertical, k + 1)) not_applicable(6, "blocks not present");
      unsigned sum = 0;
      std::set<std::size_t> used;
      for (const auto& [slot, size] : r.into_existing) {
        if (slot >= s.slots.size() || size == 0 || !used.insert(slot).second)
          not_applicable(6, "bad target slot");
        s.slots[slot].push_back(size);
        sum += size;
      }
      for (auto size : r.into_fresh) {
        if (size == 0) not_applicable(6, "zero Jordan size");
        s.slots.push_back({size});
        sum += size;
      }
      if (sum != j + k + 1) not_applicable(6, "sizes must add up to p + q + 1");
      s.rank += 1;
      break;
    }
    default:
      throw InputError("rule must be 1..6");
  }
  std::erase_if(s.slots, [](const Multiset& m) { return m.empty(); });
  s.normalize();
  s.check();
  return s;
}

std::vector<BundleSig> successors(const BundleSig& sig) {
  std::set<BundleSig> out;
  auto distinct = [](const Multiset& m) {
    Multiset d = m;
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
  };
  for (int rule : {1, 2}) {
    const Multiset d = distinct(rule == 1 ? sig.horizontal : sig.vertical);
    for (auto a : d)
      for (auto b : d)
        if (b >= a + 2) out.insert(apply_rule(sig, {rule, a, b - 2}));
  }
  for (std::size_t si = 0; si < sig.slots.size(); ++si) {
    if (si > 0 && sig.slots[si] == sig.slots[si - 1]) continue;
    const Multiset sizes = distinct(sig.slots[si]);
    for (int rule : {3, 4})
      for (auto a : distinct(rule == 3 ? sig.horizontal : sig.vertical))
        for (auto z : sizes) {
          RuleApplication r{rule, a - 1, z - 1};
          r.slot = si;
          out.insert(apply_rule(sig, r));
        }
    const Multiset& sl = sig.slots[si];
    for (auto x : sizes)
      for (auto y : sizes) {
        if (x > y || (x == y && std::count(sl.begin(), sl.end(), x) < 2)) continue;
        RuleApplication r{5, x, y};
        r.slot = si;
        out.insert(apply_rule(sig, r));
      }
  }
  for (auto h : distinct(sig.horizontal))
    for (auto v : distinct(sig.vertical)) {
      const unsigned t = h + v - 1;
      RuleApplication r{6, h - 1, v - 1};
      std::function<void(std::size_t, unsigned)> place = [&](std::size_t si, unsigned left) {
        if (si == sig.slots.size()) {
          Multiset cur;
          partitions(left, left, cur, [&](const Multiset& p) {
            r.into_fresh = p;
            out.insert(apply_rule(sig, r));
          });
          return;
        }
        place(si + 1, left);
        for (unsigned z = 1; z <= left; ++z) {
          r.into_existing.push_back({si, z});
          place(si + 1, left - z);
          r.into_existing.pop_back();
        }
      };
      place(0, t);
    }
  return {out.begin(), out.end()};
}

Multiset segre_sum(const Multiset& a, const Multiset& b) {
  Multiset x = sorted_desc(a), y = sorted_desc(b);
  Multiset out(std::max(x.size(), y.size()), 0);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

bool orbit_closure_contains(const BundleSig& upper, const BundleSig& lower) {
  require_same_shape(upper, lower);
  upper.check();
  lower.check();
  return search(lower, {key(upper)}, Bound(upper, upper.slots.size()));
}

bool bundle_closure_contains(const BundleSig& upper, const BundleSig& lower) {
  require_same_shape(upper, lower);
  upper.check();
  lower.check();
  // coalesce eigenvalues of upper: merged slots take the Segre sum
  std::set<std::string> targets;
  std::vector<std::size_t> labels;
  set_partitions(upper.slots.size(), labels, 0, [&](const std::vector<std::size_t>& lab, std::size_t blocks) {
    BundleSig c = upper;
    c.slots.assign(blocks, {});
    for (std::size_t i = 0; i < lab.size(); ++i) c.slots[lab[i]] = segre_sum(c.slots[lab[i]], upper.slots[i]);
    c.normalize();
    targets.insert(key(c));
  });
  return search(lower, targets, Bound(upper, upper.slots.empty() ? 0 : 1));
}

bool skew_bundle_closure_contains(const SkewBundleSig& upper, const SkewBundleSig& lower) {
  if (upper.dim != lower.dim) throw InputError("signatures differ in dimension");
  return bundle_closure_contains(unfold(upper), unfold(lower));
}

std::vector<std::size_t> admissible_a(std::size_t m, std::size_t n, std::size_t r) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a <= r; ++a)
    if ((n > r || a == 0) && (m > r || a == r)) out.push_back(a);
  return out;
}

BundleSig generic_fixed_rank_sig(std::size_t m, std::size_t n, std::size_t r, std::size_t a) {
  if (r < 1 || r > std::min(m, n) || (m == n && r > n - 1))
    throw InputError("rank out of range for the generic fixed-rank signature");
  if (a > r) throw InputError("a must lie in 0..r");
  if (n == r && a != 0) throw InputError("n = r forces a = 0");
  if (m == r && a != r) throw InputError("m = r forces a = r");
  BundleSig s;
  s.m = m;
  s.n = n;
  s.rank = r;
  if (n > r) {
    const std::size_t alpha = a / (n - r), sx = a % (n - r);
    for (std::size_t i = 0; i < n - r; ++i) s.horizontal.push_back(static_cast<unsigned>(i < sx ? alpha + 2 : alpha + 1));
  }
  if (m > r) {
    const std::size_t beta = (r - a) / (m - r), t = (r - a) % (m - r);
    for (std::size_t i = 0; i < m - r; ++i) s.vertical.push_back(static_cast<unsigned>(i < t ? beta + 2 : beta + 1));
  }
  s.normalize();
  s.check();
  return s;
}

bool certify_generic_lie(const SkewBundleSig& sig, std::size_t ind_g) {
  if (ind_g == 0) throw PreconditionError("certificate needs a positive index");
  if (!sig.slots.empty() || sig.kronecker.size() != ind_g) return false;
  auto [lo, hi] = std::minmax_element(sig.kronecker.begin(), sig.kronecker.end());
  return *hi - *lo <= 1;
}

std::optional<std::size_t> generic_repr_witness(const BundleSig& sig, std::size_t m, std::size_t n, std::size_t r) {
  if (m == n && r >= std::min(m, n)) throw PreconditionError("certificate not applicable: square pencil of full rank");
  if (sig.m != m || sig.n != n || sig.rank != r || r == 0) return std::nullopt;
  for (auto a : admissible_a(m, n, r))
    if (generic_fixed_rank_sig(m, n, r, a) == sig) return a;
  return std::nullopt;
}

bool certify_generic_repr(const BundleSig& sig, std::size_t m, std::size_t n, std::size_t r) {
  return generic_repr_witness(sig, m, n, r).has_value();
}

std::vector<BundleSig> enumerate_signatures(std::size_t m, std::size_t n, std::size_t r) {
  if (r > std::min(m, n)) throw InputError("rank exceeds the shape");
  std::set<BundleSig> out;
  const unsigned budget = static_cast<unsigned>(m + n - r);
  Multiset h, v;
  bounded_multisets(n - r, budget, budget, h, [&](const Multiset& hs) {
    const unsigned left = budget - total(hs);
    bounded_multisets(m - r, left, left, v, [&](const Multiset& vs) {
      const unsigned j = left - total(vs);
      // multisets of nonempty partitions with sizes adding up to j
      Multiset totals;
      partitions(j, j, totals, [&](const Multiset& ts) {
        std::vector<Multiset> slots(ts.size());
        std::function<void(std::size_t)> fill = [&](std::size_t i) {
          if (i == ts.size()) {
            BundleSig s;
            s.m = m;
            s.n = n;
            s.rank = r;
            s.horizontal = hs;
            s.vertical = vs;
            s.slots = slots;
            s.normalize();
            out.insert(s);
            return;
          }
          Multiset cur;
          partitions(ts[i], ts[i], cur, [&](const Multiset& p) {
            slots[i] = p;
            fill(i + 1);
          });
        };
        fill(0);
      });
    });
  });
  for (const auto& s : out) s.check();
  return {out.begin(), out.end()};
}

}  // namespace jkinv
