// Independent brute-force helpers used only by tests: Kronecker-style factor
// search for degrees <= 4 and a fixed-seed RNG so every run is reproducible.

#ifndef RANKFORGE_TESTS_ORACLES_HPP
#define RANKFORGE_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "rankforge/unipoly.hpp"

namespace testutil {

using rankforge::Int;
using rankforge::Rat;
using rankforge::UniPoly;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x00c0ffee1234ULL);
  return gen;
}

inline long rnd_long(long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return dist(rng());
}

inline Rat rnd_rat(long num_bound, long den_bound) {
  return rankforge::make_rat(Int(rnd_long(-num_bound, num_bound)),
                             Int(rnd_long(1, den_bound)));
}

inline Rat rnd_rat_nonzero(long num_bound, long den_bound) {
  for (;;) {
    Rat r = rnd_rat(num_bound, den_bound);
    if (r != 0) return r;
  }
}

inline std::vector<Int> signed_divisors(const Int& v) {
  std::vector<Int> out;
  Int a = v < 0 ? Int(-v) : v;
  for (Int d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      out.push_back(-d);
      Int e = a / d;
      if (e != d) {
        out.push_back(e);
        out.push_back(-e);
      }
    }
  }
  return out;
}

// Kronecker search: any factorization of a degree-(2..4) integer polynomial
// has a factor of degree <= 2; its values at -1, 0, 1 divide f there, so
// interpolating all divisor triples finds it.
inline bool oracle_has_proper_factor(const UniPoly& f) {
  const long n = f.degree();
  const Rat fm1 = f.eval(Rat(-1)), f0 = f.eval(Rat(0)), f1 = f.eval(Rat(1));
  if (fm1 == 0 || f0 == 0 || f1 == 0) return true;
  for (const Int& a : signed_divisors(fm1.get_num())) {
    for (const Int& b : signed_divisors(f0.get_num())) {
      for (const Int& c : signed_divisors(f1.get_num())) {
        // m(-1) = a, m(0) = b, m(1) = c
        const Rat lin = Rat(c - a) / 2;
        const Rat quad = (Rat(c) + Rat(a) - 2 * Rat(b)) / 2;
        UniPoly m({Rat(b), lin, quad});
        if (m.degree() < 1 || m.degree() >= n) continue;
        if (divrem(f, m).second.is_zero()) return true;
      }
    }
  }
  return false;
}

// Complete for integer polynomials of degree 1..4.
inline bool oracle_irreducible(const UniPoly& f) {
  const long n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  return !oracle_has_proper_factor(f);
}

// Sign-normalized primitive form, for comparing factor multisets.
inline UniPoly normalize_factor(const UniPoly& f) {
  UniPoly g = UniPoly::from_integer_coeffs(f.primitive_integer_form().coeffs);
  if (g.lc() < 0) g = g * Rat(-1);
  return g;
}

}  // namespace testutil

#endif
