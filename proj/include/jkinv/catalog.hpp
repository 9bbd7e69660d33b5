#pragma once

#include "jkinv/bundle.hpp"
#include "jkinv/lie.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace jkinv {

struct Family {
  std::string name;  // gl, sl, so, sp
  std::size_t n = 0;

  // Parses "gl:3"; validates the size constraints.
  static Family parse(std::string_view s);
  // -1 for so, +1 for sp, 0 otherwise
  int epsilon() const;
  std::size_t algebra_dim() const;
  std::string label() const { return name + ":" + std::to_string(n); }
};

struct Classical {
  LieAlgebra algebra;
  Representation standard;
};

Classical build_classical(const Family& f);

// Lie algebra on a linearly independent set of matrices closed under the
// commutator; the matrices themselves form the returned representation.
Classical algebra_from_matrices(const std::vector<Mat>& basis);

// Closed forms for the sum of m standard representations (pencil shape
// mn x dim g) and for the semi-direct sum with (C^n)^m. Both are audited
// against the shape; the Lie one is empty where no closed form is known.
BundleSig expected_rep_jk(const Family& f, std::size_t m);
std::optional<SkewBundleSig> expected_lie_jk(const Family& f, std::size_t m);

}  // namespace jkinv
