#pragma once

#include "jkinv/rational.hpp"

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jkinv {

// Univariate polynomial over Q, coefficients lowest degree first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  static Poly constant(const Rat& c);
  static Poly x();
  // x - root
  static Poly linear(const Rat& root);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rat& lead() const { return c_.back(); }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Poly monic() const;
  Poly derivative() const;
  Rat eval(const Rat& t) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Rat& c, const Poly& a);

  friend bool operator==(const Poly& a, const Poly& b) = default;
  // Total order: by degree, then coefficients from the top down.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  // "x^2 - 2", "x + 1/2", "1"
  std::string to_string(char var = 'x') const;
  static Poly parse(std::string_view text);

 private:
  void trim();
  std::vector<Rat> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // exact or truncated quotient
Poly operator%(const Poly& a, const Poly& b);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// Extended Euclid: returns (g, s, t) with s*a + t*b = g monic.
struct Bezout {
  Poly g, s, t;
};
Bezout extended_gcd(const Poly& a, const Poly& b);

// Yun decomposition: monic squarefree pairwise coprime f_i with a = c * prod f_i^i.
// Only nonconstant factors are returned, with their multiplicity.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& a);
Poly squarefree_part(const Poly& a);

// Pairwise coprime monic squarefree polynomials such that every input is a
// constant times a product of powers of them.
std::vector<Poly> coprime_basis(std::span<const Poly> ps);

// Unique polynomial of degree < n through n points with distinct abscissae.
Poly interpolate(std::span<const Rat> xs, std::span<const Rat> ys);

// Multiplicity of f (squarefree, nonconstant) in a: largest e with f^e | a.
unsigned multiplicity(const Poly& f, Poly a);

// Homogeneous binary form sum_i coeffs[i] alpha^(deg-i) beta^i.
struct BinForm {
  std::vector<Rat> coeffs;
  unsigned degree() const { return coeffs.empty() ? 0 : static_cast<unsigned>(coeffs.size() - 1); }
  bool is_zero() const;
  std::string to_string() const;
  friend bool operator==(const BinForm&, const BinForm&) = default;
};

}  // namespace jkinv
