// The cover polynomials themselves: h(u,t) built from an admissible model
// and a plan, its specializations, and the lifting of a root of h(u0,t) to a
// point on the original curve with coordinates in Q[t]/(h(u0,t)).

#ifndef RANKFORGE_COVER_HPP
#define RANKFORGE_COVER_HPP

#include "rankforge/bipoly.hpp"
#include "rankforge/curves.hpp"
#include "rankforge/quotient.hpp"

namespace rankforge {

// h(u,t) = g(q^a t^mu) t^{k nu} - sum_{i=0}^{k} (f^{(i)}/i!)(u) q^{ib} t^{nu(k-i)}
// over the admissible normalized model. deg_t h = p, leading t-coefficient
// q^{ad}, integer coefficients.
BiPoly build_cover(const CurveSpec& normalized, const CoverPlan& plan);

// The closed form for elliptic g = y^2, f = x^3 + Ax + B, a = b = 1, nu = 1:
// q^2 t^p - (u0^3 + A u0 + B) t^3 - (3 u0^2 + A) q t^2 - 3 u0 q^2 t - q^3.
UniPoly remark_polynomial(const Rat& A, const Rat& B, const Int& q, long p,
                          const Rat& u0);

// h(u0, t).
UniPoly specialize(const BiPoly& h, const Rat& u0);

struct LiftedPoint {
  QuotElem x, y;
};

// With alpha the class of t in Q[t]/(defining_poly): X = u0 + q^b alpha^{-nu},
// Y = q^a alpha^{mu} on the normalized model; returns the point mapped back to
// the original input curve ((X,Y) unscaled by q^{de}, q^{ke}, swapped back if
// the orientation interchanged x and y). Requires alpha invertible, which an
// irreducibility certificate guarantees (nonzero constant term).
LiftedPoint lift_point(const UniPoly& defining_poly, const Rat& u0,
                       const CoverPlan& plan);

// h(u,t) = sum_{j=1}^{n} C(n,j) (q^n t^r)^j (q t^s + u)^{n-j} - D_scaled.
// deg_t h = (n-1)s + r = p, leading t-coefficient n q^{2n-1}.
BiPoly super_build_cover(const SuperCoverPlan& plan);

// X = q alpha^s + u0, Y = X + q^n alpha^r on Y^n = X^n + D_scaled; maps through
// (X^{n/k}, Y^{n/d}) and the q^{c1}, q^{c2} unscaling to y^d = x^k + D.
LiftedPoint super_lift_point(const UniPoly& defining_poly, const Rat& u0,
                             const SuperCoverPlan& plan);

}  // namespace rankforge

#endif
