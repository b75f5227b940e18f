// Dense univariate polynomials over the rationals, little-endian coefficient
// storage (index = degree). The zero polynomial stores no coefficients and
// reports degree -1.

#ifndef RANKFORGE_UNIPOLY_HPP
#define RANKFORGE_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "rankforge/rational.hpp"

namespace rankforge {

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Rat& v);
  static UniPoly monomial(std::size_t deg, const Rat& coeff);
  // x (the variable itself)
  static UniPoly var();
  static UniPoly from_int_coeffs(const std::vector<long>& coeffs);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  // Coefficient of x^i (zero beyond the stored range).
  const Rat& coeff(std::size_t i) const;
  Rat lc() const;  // leading coefficient; 0 for the zero polynomial
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_integral() const;  // every coefficient an integer

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& s) const;
  UniPoly operator/(const Rat& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  Rat eval(const Rat& x) const;
  UniPoly derivative() const;

  // f^{(i)}/i! as a polynomial: the coefficient of z^i in f(u + z).
  UniPoly taylor_coeff(unsigned long i) const;

  // f(s * x): substitutes a scalar multiple of the variable.
  UniPoly scale_arg(const Rat& s) const;

  // x^deg(f) * f(1/x); drops trailing zero roots implicitly.
  UniPoly reversed() const;

  UniPoly monic() const;  // divides by lc(); identity for the zero polynomial

  std::string str(const std::string& var = "t") const;

  // Content/primitive decomposition: f = unit * P with P a primitive integer
  // polynomial whose leading coefficient is positive, unit a positive/negative
  // rational. For f = 0 returns (0, zero poly).
  struct IntegerForm {
    Rat unit;
    std::vector<Int> coeffs;  // little-endian, primitive, lc > 0
  };
  IntegerForm primitive_integer_form() const;
  static UniPoly from_integer_coeffs(const std::vector<Int>& coeffs);

 private:
  void trim();
  std::vector<Rat> c_;
};

// Quotient and remainder of a by b (b != 0), exact over the rationals.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

// Monic gcd over the rationals (gcd(0,0) = 0).
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
struct ExtendedGcd {
  UniPoly g, s, t;
};
ExtendedGcd poly_egcd(const UniPoly& a, const UniPoly& b);

// Sylvester-determinant resultant. Computed by a Euclidean remainder sequence
// with the usual sign/leading-coefficient bookkeeping, which reproduces the
// determinant exactly: Res(a,b) = lc(a)^deg(b) * prod b(alpha) over roots of a.
// Throws if both arguments are zero.
Rat resultant(const UniPoly& a, const UniPoly& b);

// (-1)^{n(n-1)/2} Res(f, f') / lc(f) for n = deg f >= 1.
Rat discriminant(const UniPoly& f);

// Unique interpolating polynomial of degree < xs.size() through (xs[i], ys[i]);
// the xs must be pairwise distinct.
UniPoly lagrange_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace rankforge

#endif
