// Curve inputs and the combinatorial data of a cover: orientation/Bezout
// exponents, the prime bound N = k(d-1)+1, prime representations
// p = mu*d + nu*k, admissibility of a model at (q, a), and the scaling
// substitution that makes a model admissible.

#ifndef RANKFORGE_CURVES_HPP
#define RANKFORGE_CURVES_HPP

#include "rankforge/rational.hpp"
#include "rankforge/unipoly.hpp"

namespace rankforge {

// Plane curve g(y) = f(x), both monic. k = deg f, d = deg g.
struct CurveSpec {
  UniPoly f;
  UniPoly g;

  long k() const { return f.degree(); }
  long d() const { return g.degree(); }
};

// Throws unless both polynomials are monic of degree >= 1.
void validate_curve(const CurveSpec& curve);

// Superelliptic family y^d = x^k + D.
struct SuperellipticSpec {
  long d = 0;
  long k = 0;
  Rat D;
};

void validate_super(const SuperellipticSpec& spec);

struct Orientation {
  CurveSpec curve;  // f and g possibly interchanged
  long a = 0;
  long b = 0;
  bool swapped = false;
};

// Minimal positive (a, b) with b*k - a*d = 1, interchanging the roles of f
// and g when necessary. Throws when gcd(d, k) != 1 or no positive pair
// exists (d = k = 1).
Orientation orient_and_bezout(const CurveSpec& curve);

// k(d-1) + 1; primes at or above this bound admit a representation.
long min_prime_bound(long d, long k);

struct PrimeRepresentation {
  long mu = 0;
  long nu = 0;  // 1 <= nu <= d-1
};

// The unique representation p = mu*d + nu*k with 1 <= nu <= d-1, mu >= 1.
// Throws when none exists.
PrimeRepresentation represent_prime(long p, long d, long k);

// True iff every non-leading coefficient of f and of g is an integer with
// q-valuation >= d*a + 1.
bool check_admissible(const CurveSpec& curve, const Int& q, long a);

struct NormalizedModel {
  CurveSpec curve;   // F(X) = q^{dke} f(X/q^{de}), G(Y) = q^{dke} g(Y/q^{ke})
  long scale_e = 0;  // minimal e making the model admissible
};

// Points map back through (x, y) = (X/q^{de}, Y/q^{ke}). Requires every
// non-leading coefficient to have a denominator supported on q alone.
NormalizedModel normalize_model(const CurveSpec& curve, const Int& q, long a);

// Full exponent data of one coprime-degree cover construction.
struct CoverPlan {
  Int q;
  long a = 0, b = 0;    // b*k - a*d = 1
  long mu = 0, nu = 0;  // p = mu*d + nu*k, 1 <= nu <= d-1
  long p = 0;
  long d = 0, k = 0;  // degrees of the oriented curve
  long bound_n = 0;   // k(d-1)+1
  bool swapped = false;
  long scale_e = 0;
};

struct PlannedCover {
  CurveSpec oriented;    // after any swap, before scaling
  CurveSpec normalized;  // admissible model the cover is built on
  CoverPlan plan;
};

// Orients, scales to an admissible model, and represents p. Throws
// std::domain_error when p < k(d-1)+1 (signalled distinctly so the CLI can
// exit with the documented code) and std::invalid_argument on bad input.
PlannedCover plan_cover(const CurveSpec& curve, const Int& q, long p);

// Exponent data of the lcm construction for y^d = x^k + D.
struct SuperCoverPlan {
  Int q;             // gcd(q, n_lcm) = 1, v_q(D) = 0
  long n_lcm = 0;    // lcm(d, k)
  long s = 0, r = 0;  // p = (n_lcm - 1)s + r, s > r >= 1
  long p = 0;
  long d = 0, k = 0;
  Rat d_scaled;       // q^{2n} * D
  long c1 = 0, c2 = 0;  // coordinate scalings 2n/k and 2n/d
};

SuperCoverPlan super_plan(const SuperellipticSpec& spec, const Int& q, long p);

}  // namespace rankforge

#endif
