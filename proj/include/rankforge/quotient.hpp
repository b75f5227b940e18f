// Arithmetic in Q[t]/(h): elements carry their modulus and a reduced
// representative of degree < deg h. This is the working model of the number
// field generated by a root of h once h is certified irreducible.

#ifndef RANKFORGE_QUOTIENT_HPP
#define RANKFORGE_QUOTIENT_HPP

#include <stdexcept>

#include "rankforge/unipoly.hpp"

namespace rankforge {

// Inversion failed because gcd(representative, modulus) is a proper factor:
// the modulus is reducible, which contradicts an upstream irreducibility
// certificate and must be surfaced, never swallowed.
class NonInvertibleError : public std::runtime_error {
 public:
  NonInvertibleError(std::string msg, UniPoly factor)
      : std::runtime_error(std::move(msg)), factor_(std::move(factor)) {}
  const UniPoly& factor() const { return factor_; }

 private:
  UniPoly factor_;
};

class QuotElem {
 public:
  // Reduces rep mod modulus. The modulus must have degree >= 1.
  QuotElem(UniPoly modulus, const UniPoly& rep);

  static QuotElem constant(const UniPoly& modulus, const Rat& v);
  // The residue class of t.
  static QuotElem generator(const UniPoly& modulus);

  const UniPoly& modulus() const { return modulus_; }
  const UniPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_constant() const { return rep_.is_constant(); }

  QuotElem operator-() const;
  QuotElem operator+(const QuotElem& o) const;
  QuotElem operator-(const QuotElem& o) const;
  QuotElem operator*(const QuotElem& o) const;
  QuotElem operator*(const Rat& s) const;
  QuotElem operator/(const Rat& s) const;
  bool operator==(const QuotElem& o) const;

  // Multiplicative inverse via the extended Euclidean relation; throws
  // NonInvertibleError (carrying the offending gcd) when the representative
  // shares a factor with the modulus.
  QuotElem inverse() const;

  // a^e; negative e inverts first.
  QuotElem pow(long e) const;

 private:
  void check_same_modulus(const QuotElem& o) const;
  UniPoly modulus_;
  UniPoly rep_;
};

// Monic minimal polynomial of a over the rationals (variable renamed z).
// Degree-1 case (constant representative) is decided exactly; otherwise the
// characteristic polynomial Res_t(modulus(t), z - rep(t)) is computed through
// evaluation/interpolation and normalized monic. For a prime-degree
// irreducible modulus the characteristic polynomial is the minimal polynomial.
UniPoly minimal_poly(const QuotElem& a);

// Evaluates a rational polynomial at a quotient-ring element.
QuotElem eval_poly_at(const UniPoly& f, const QuotElem& a);

}  // namespace rankforge

#endif
