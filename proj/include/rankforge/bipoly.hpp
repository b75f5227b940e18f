// Sparse bivariate polynomials in (u, t) over the rationals: map from
// (degree-in-u, degree-in-t) to a nonzero coefficient.

#ifndef RANKFORGE_BIPOLY_HPP
#define RANKFORGE_BIPOLY_HPP

#include <map>
#include <string>
#include <utility>

#include "rankforge/unipoly.hpp"

namespace rankforge {

class BiPoly {
 public:
  using Key = std::pair<long, long>;  // (deg_u, deg_t)
  using Terms = std::map<Key, Rat>;

  BiPoly() = default;

  static BiPoly monomial(long deg_u, long deg_t, const Rat& coeff);
  static BiPoly constant(const Rat& v) { return monomial(0, 0, v); }
  static BiPoly u_var() { return monomial(1, 0, Rat(1)); }
  static BiPoly t_var() { return monomial(0, 1, Rat(1)); }
  // Embeds a univariate polynomial as a polynomial in u (resp. t).
  static BiPoly from_poly_in_u(const UniPoly& f);
  static BiPoly from_poly_in_t(const UniPoly& f);

  bool is_zero() const { return terms_.empty(); }
  long deg_u() const;
  long deg_t() const;
  Rat coeff(long deg_u, long deg_t) const;
  const Terms& terms() const { return terms_; }

  BiPoly operator-() const;
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const Rat& s) const;
  bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  BiPoly pow(unsigned long e) const;

  Rat eval(const Rat& u0, const Rat& t0) const;

  // Substitutes u := u0, producing a polynomial in t.
  UniPoly specialize(const Rat& u0) const;

  // The coefficient of t^deg_t(h) as a polynomial in u.
  UniPoly leading_t_coeff() const;

  std::string str() const;

 private:
  void add_term(long du, long dt, const Rat& v);
  Terms terms_;
};

}  // namespace rankforge

#endif
