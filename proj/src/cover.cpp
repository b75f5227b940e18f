#include "rankforge/cover.hpp"

#include <stdexcept>

namespace rankforge {

BiPoly build_cover(const CurveSpec& normalized, const CoverPlan& plan) {
  validate_curve(normalized);
  if (normalized.d() != plan.d || normalized.k() != plan.k) {
    throw std::invalid_argument("build_cover: curve degrees disagree with plan");
  }
  if (plan.p != plan.mu * plan.d + plan.nu * plan.k || plan.nu < 1 ||
      plan.nu > plan.d - 1 || plan.mu < 1) {
    throw std::invalid_argument("build_cover: inconsistent exponents");
  }
  if (!check_admissible(normalized, plan.q, plan.a)) {
    throw std::invalid_argument("build_cover: model not admissible at (q, a)");
  }
  const UniPoly& f = normalized.f;
  const UniPoly& g = normalized.g;
  BiPoly h;
  // g(q^a t^mu) t^{k nu}
  for (long j = 0; j <= g.degree(); ++j) {
    const Rat& c = g.coeff(j);
    if (c == 0) continue;
    Rat qa = Rat(int_pow(plan.q, static_cast<unsigned long>(plan.a * j)));
    h = h + BiPoly::monomial(0, plan.mu * j + plan.k * plan.nu, c * qa);
  }
  // - sum_i (f^{(i)}/i!)(u) q^{ib} t^{nu(k-i)}
  for (long i = 0; i <= f.degree(); ++i) {
    UniPoly ti = f.taylor_coeff(static_cast<unsigned long>(i));
    if (ti.is_zero()) continue;
    Rat qb = Rat(int_pow(plan.q, static_cast<unsigned long>(plan.b * i)));
    BiPoly term = BiPoly::from_poly_in_u(ti * qb) *
                  BiPoly::monomial(0, plan.nu * (plan.k - i), Rat(1));
    h = h - term;
  }
  return h;
}

UniPoly remark_polynomial(const Rat& A, const Rat& B, const Int& q, long p,
                          const Rat& u0) {
  if (p < 5) {
    throw std::invalid_argument("remark_polynomial: p must be a prime >= 5");
  }
  const Rat q1(q);
  const Rat q2 = q1 * q1;
  const Rat q3 = q2 * q1;
  UniPoly h = UniPoly::monomial(static_cast<std::size_t>(p), q2);
  h = h - UniPoly::monomial(3, u0 * u0 * u0 + A * u0 + B);
  h = h - UniPoly::monomial(2, (Rat(3) * u0 * u0 + A) * q1);
  h = h - UniPoly::monomial(1, Rat(3) * u0 * q2);
  h = h - UniPoly::constant(q3);
  return h;
}

UniPoly specialize(const BiPoly& h, const Rat& u0) { return h.specialize(u0); }

LiftedPoint lift_point(const UniPoly& defining_poly, const Rat& u0,
                       const CoverPlan& plan) {
  if (defining_poly.degree() != plan.p) {
    throw std::invalid_argument("lift_point: defining polynomial degree != p");
  }
  if (defining_poly.coeff(0) == 0) {
    throw std::invalid_argument("lift_point: zero constant term (alpha = 0 root)");
  }
  QuotElem alpha = QuotElem::generator(defining_poly);
  const Rat qb(int_pow(plan.q, static_cast<unsigned long>(plan.b)));
  const Rat qa(int_pow(plan.q, static_cast<unsigned long>(plan.a)));
  QuotElem x_scaled =
      QuotElem::constant(defining_poly, u0) + alpha.pow(-plan.nu) * qb;
  QuotElem y_scaled = alpha.pow(plan.mu) * qa;
  // back through the admissibility scaling, then undo any orientation swap
  const Rat xden(int_pow(plan.q, static_cast<unsigned long>(plan.d * plan.scale_e)));
  const Rat yden(int_pow(plan.q, static_cast<unsigned long>(plan.k * plan.scale_e)));
  QuotElem x = x_scaled / xden;
  QuotElem y = y_scaled / yden;
  if (plan.swapped) return {y, x};
  return {x, y};
}

BiPoly super_build_cover(const SuperCoverPlan& plan) {
  const long n = plan.n_lcm;
  const BiPoly base = BiPoly::monomial(0, plan.s, Rat(plan.q)) + BiPoly::u_var();
  const Rat qn(int_pow(plan.q, static_cast<unsigned long>(n)));
  BiPoly h;
  for (long j = 1; j <= n; ++j) {
    Rat cj = Rat(binomial(static_cast<unsigned long>(n),
                          static_cast<unsigned long>(j))) *
             rat_pow(qn, j);
    BiPoly term = BiPoly::monomial(0, plan.r * j, cj) *
                  base.pow(static_cast<unsigned long>(n - j));
    h = h + term;
  }
  return h - BiPoly::constant(plan.d_scaled);
}

LiftedPoint super_lift_point(const UniPoly& defining_poly, const Rat& u0,
                             const SuperCoverPlan& plan) {
  if (defining_poly.degree() != plan.p) {
    throw std::invalid_argument("super_lift_point: defining polynomial degree != p");
  }
  const long n = plan.n_lcm;
  QuotElem alpha = QuotElem::generator(defining_poly);
  QuotElem X = alpha.pow(plan.s) * Rat(plan.q) +
               QuotElem::constant(defining_poly, u0);
  QuotElem W = alpha.pow(plan.r) *
               Rat(int_pow(plan.q, static_cast<unsigned long>(n)));
  QuotElem Y = X + W;
  QuotElem xp = X.pow(n / plan.k);
  QuotElem yp = Y.pow(n / plan.d);
  const Rat xden(int_pow(plan.q, static_cast<unsigned long>(plan.c1)));
  const Rat yden(int_pow(plan.q, static_cast<unsigned long>(plan.c2)));
  return {xp / xden, yp / yden};
}

}  // namespace rankforge
