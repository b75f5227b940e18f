// Polynomial arithmetic and complete factorization over a small prime field
// F_ell (squarefree split, distinct-degree, equal-degree splitting). Used by
// the degree sieve and to seed Hensel lifting.
//
// Splitting elements for equal-degree splitting are drawn from a fixed
// deterministic enumeration rather than a RNG so that identical inputs always
// produce identical factor lists.

#ifndef RANKFORGE_FPPOLY_HPP
#define RANKFORGE_FPPOLY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rankforge/unipoly.hpp"

namespace rankforge {

// Little-endian coefficients in [0, ell). The modulus ell rides along.
struct FpPoly {
  std::uint64_t ell = 0;
  std::vector<std::uint64_t> c;

  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_one() const { return c.size() == 1 && c[0] == 1; }
  std::uint64_t lc() const { return c.empty() ? 0 : c.back(); }
  void trim();
};

FpPoly fp_from_int_poly(const std::vector<Int>& coeffs, std::uint64_t ell);
FpPoly fp_constant(std::uint64_t ell, std::uint64_t v);
FpPoly fp_var(std::uint64_t ell);

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul_scalar(const FpPoly& a, std::uint64_t s);
// (quotient, remainder); b != 0.
std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b);
FpPoly fp_mod(const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(FpPoly a, FpPoly b);  // monic (or zero)
// (g, s, t) with s*a + t*b = g, g monic (or zero).
struct FpEgcd {
  FpPoly g, s, t;
};
FpEgcd fp_egcd(const FpPoly& a, const FpPoly& b);
FpPoly fp_monic(const FpPoly& a);
FpPoly fp_derivative(const FpPoly& a);
// a^e mod m, e arbitrary-precision.
FpPoly fp_powmod(const FpPoly& a, const Int& e, const FpPoly& m);
bool fp_equal(const FpPoly& a, const FpPoly& b);

// Deterministic total order: degree, then coefficients from the top.
bool fp_less(const FpPoly& a, const FpPoly& b);

struct FpFactor {
  FpPoly poly;  // monic irreducible
  int multiplicity;
};

struct FpFactorization {
  std::uint64_t unit;             // leading unit: f = unit * prod poly^mult
  std::vector<FpFactor> factors;  // sorted by fp_less
};

// Complete factorization of a nonzero polynomial over F_ell.
FpFactorization fp_factor(const FpPoly& f);

// Reduction of f mod ell; rational coefficients are allowed as long as the
// denominators are invertible mod ell (else nullopt).
std::optional<FpPoly> fp_try_reduce(const UniPoly& f, std::uint64_t ell);

// Factorization of a rational polynomial modulo ell. Throws when a
// denominator or the leading coefficient vanishes mod ell.
FpFactorization factor_mod_prime(const UniPoly& f, std::uint64_t ell);

std::string fp_str(const FpPoly& f);

}  // namespace rankforge

#endif
