#pragma once

#include "jkinv/matrix.hpp"
#include "jkinv/poly.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace jkinv {

// The pencil A + lambda B. A value mu is an eigenvalue when rank(A + mu B)
// drops below the pencil rank (direct substitution, no sign flip).
struct Pencil {
  Mat A, B;

  Pencil() = default;
  Pencil(Mat a, Mat b);

  std::size_t rows() const { return A.rows(); }
  std::size_t cols() const { return A.cols(); }
  Mat at(const Rat& mu) const;
  Pencil transpose() const { return Pencil(A.transpose(), B.transpose()); }
  bool is_skew() const { return A.is_skew() && B.is_skew(); }

  friend bool operator==(const Pencil&, const Pencil&) = default;
};

struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};
using Point = std::variant<Rat, Infinity>;

// Either infinity or a monic squarefree polynomial whose roots all carry the
// same Jordan structure.
class EigClass {
 public:
  static EigClass infinity();
  static EigClass of(const Poly& p);  // p made monic; must be nonconstant
  static EigClass root(const Rat& mu) { return of(Poly::linear(mu)); }
  static EigClass parse(std::string_view label);

  bool is_infinite() const { return infinite_; }
  const Poly& poly() const { return poly_; }
  unsigned root_count() const { return infinite_ ? 1u : static_cast<unsigned>(poly_.degree()); }
  // Only for finite classes of degree 1.
  Rat rational_root() const;
  std::string label() const;

  friend bool operator==(const EigClass&, const EigClass&) = default;
  // Finite classes by polynomial order, infinity last.
  friend std::strong_ordering operator<=>(const EigClass& a, const EigClass& b);

 private:
  bool infinite_ = false;
  Poly poly_;
};

// Multisets of block sizes / indices, always stored in descending order.
using Multiset = std::vector<unsigned>;
Multiset sorted_desc(Multiset m);
unsigned total(const Multiset& m);

using JordanMap = std::map<EigClass, Multiset>;

// Finite classes sharing one size multiset are merged into their product, so
// the map is a canonical function of the pencil.
JordanMap merge_equal_classes(const JordanMap& j);
unsigned jordan_total(const JordanMap& j);

struct StrictInvariants {
  std::size_t rows = 0, cols = 0;
  std::size_t rank = 0;
  Multiset horizontal, vertical;
  JordanMap jordan;

  // Throws InternalConsistencyError unless all bookkeeping identities hold.
  void check() const;

  friend bool operator==(const StrictInvariants&, const StrictInvariants&) = default;
};

struct MinimalIndices {
  Multiset horizontal, vertical;
};

std::size_t pencil_rank(const Pencil& p);
bool is_regular_value(const Pencil& p, const Point& mu);

// gcd of the r x r minors of alpha A + beta B, normalised so that the highest
// nonzero beta power has coefficient one.
BinForm characteristic_polynomial(const Pencil& p);

MinimalIndices minimal_indices(const Pencil& p);
JordanMap elementary_divisors(const Pencil& p);
StrictInvariants strict_invariants(const Pencil& p);

// Reference routes, slow, used as oracles: minimal indices from kernel
// dimensions of the stacked coefficient systems, elementary divisors through
// the polynomial Smith form.
MinimalIndices minimal_indices_via_stacking(const Pencil& p);
JordanMap elementary_divisors_via_smith(const Pencil& p);

// Block-diagonal KCF representative. Each class is realised at the given
// point; classes without an entry must have a rational root (used directly)
// or be infinity.
Pencil canonical_pencil(const StrictInvariants& inv, const std::map<EigClass, Point>& assignment = {});

bool are_strictly_equivalent(const Pencil& p, const Pencil& q);

}  // namespace jkinv
