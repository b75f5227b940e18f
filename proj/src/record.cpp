#include "rankforge/record.hpp"

#include <stdexcept>

namespace rankforge {

std::string path_kind_name(PathKind k) {
  switch (k) {
    case PathKind::Thm1: return "thm1";
    case PathKind::Thm4: return "thm4";
    case PathKind::P2: return "p2";
    case PathKind::P3: return "p3";
  }
  return "thm1";
}

std::optional<PathKind> path_kind_from_name(const std::string& s) {
  if (s == "thm1") return PathKind::Thm1;
  if (s == "thm4") return PathKind::Thm4;
  if (s == "p2") return PathKind::P2;
  if (s == "p3") return PathKind::P3;
  return std::nullopt;
}

namespace {

void certify(ExtensionRecord& rec, const FactorConfig& cfg) {
  rec.verdict = factor_over_rationals(rec.defining_poly, cfg);
  if (!is_irreducible(rec.verdict)) {
    rec.skip_reason = rec.verdict.kind == VerdictKind::Reducible
                          ? "reducible specialization"
                          : "inconclusive certification";
  }
}

}  // namespace

ExtensionRecord make_thm1_record(const PlannedCover& planned, const BiPoly& h,
                                 const CurveSpec& original_curve, const Rat& u0,
                                 const FactorConfig& cfg) {
  ExtensionRecord rec;
  rec.kind = PathKind::Thm1;
  rec.curve = original_curve;
  rec.plan = planned.plan;
  rec.q = planned.plan.q;
  rec.p = planned.plan.p;
  rec.u0 = u0;
  rec.defining_poly = specialize(h, u0);
  certify(rec, cfg);
  if (is_irreducible(rec.verdict)) {
    LiftedPoint pt = lift_point(rec.defining_poly, u0, planned.plan);
    rec.point_x = pt.x;
    rec.point_y = pt.y;
  }
  return rec;
}

ExtensionRecord make_thm4_record(const SuperellipticSpec& spec,
                                 const SuperCoverPlan& plan, const BiPoly& h,
                                 const Rat& u0, const FactorConfig& cfg) {
  ExtensionRecord rec;
  rec.kind = PathKind::Thm4;
  rec.super = spec;
  rec.lcm_plan = plan;
  rec.q = plan.q;
  rec.p = plan.p;
  rec.u0 = u0;
  rec.defining_poly = specialize(h, u0);
  certify(rec, cfg);
  if (is_irreducible(rec.verdict)) {
    LiftedPoint pt = super_lift_point(rec.defining_poly, u0, plan);
    rec.point_x = pt.x;
    rec.point_y = pt.y;
  }
  return rec;
}

ExtensionRecord make_small_prime_record(const CurveSpec& curve, long p,
                                        const Rat& u0, const Int& q,
                                        const FactorConfig& cfg) {
  validate_curve(curve);
  const UniPoly y_squared = UniPoly::monomial(2, Rat(1));
  if (curve.g != y_squared || curve.f.degree() != 3) {
    throw std::invalid_argument(
        "small prime path: needs y^2 = f(x) with f a monic cubic");
  }
  if (p != 2 && p != 3) {
    throw std::invalid_argument("small prime path: p must be 2 or 3");
  }
  ExtensionRecord rec;
  rec.kind = p == 2 ? PathKind::P2 : PathKind::P3;
  rec.curve = curve;
  rec.q = q;
  rec.p = p;
  rec.u0 = u0;
  if (p == 2) {
    rec.defining_poly =
        UniPoly::monomial(2, Rat(1)) - UniPoly::constant(curve.f.eval(u0));
  } else {
    rec.defining_poly = curve.f - UniPoly::constant(u0 * u0);
  }
  certify(rec, cfg);
  if (!is_irreducible(rec.verdict)) {
    rec.skip_reason = p == 2 ? "f(u0) is a rational square"
                             : "f(x) - u0^2 has a rational root";
    return rec;
  }
  {
    QuotElem alpha = QuotElem::generator(rec.defining_poly);
    QuotElem c = QuotElem::constant(rec.defining_poly, u0);
    if (p == 2) {
      rec.point_x = c;
      rec.point_y = alpha;
    } else {
      rec.point_x = alpha;
      rec.point_y = c;
    }
  }
  return rec;
}

std::vector<Int> allowed_denominator_primes(const ExtensionRecord& rec) {
  std::vector<Int> allowed{rec.q};
  if (rec.kind == PathKind::Thm4 && rec.lcm_plan) {
    long n = rec.lcm_plan->n_lcm;
    for (long f = 2; f * f <= n; ++f) {
      if (n % f == 0) {
        allowed.emplace_back(f);
        while (n % f == 0) n /= f;
      }
    }
    if (n > 1) allowed.emplace_back(n);
  }
  return allowed;
}

bool verify_record(ExtensionRecord& rec,
                   const std::vector<std::uint64_t>& fingerprint_primes) {
  if (!is_irreducible(rec.verdict)) {
    rec.accepted = false;
    return true;
  }
  if (!rec.point_x || !rec.point_y) {
    rec.accepted = false;
    rec.skip_reason = "missing point";
    return false;
  }
  if (rec.kind == PathKind::Thm4) {
    rec.report.on_curve = verify_on_curve(*rec.point_x, *rec.point_y, *rec.super);
  } else {
    rec.report.on_curve = verify_on_curve(*rec.point_x, *rec.point_y, *rec.curve);
  }
  rec.report.strictly_l = strictly_l_check(*rec.point_x, *rec.point_y, rec.p);
  const std::vector<Int> allowed = allowed_denominator_primes(rec);
  rec.report.s_integral = s_integrality_check(*rec.point_x, allowed) &&
                          s_integrality_check(*rec.point_y, allowed);
  rec.report.fingerprint = fingerprint(rec.defining_poly, fingerprint_primes);
  rec.accepted =
      rec.report.on_curve && rec.report.strictly_l && rec.report.s_integral;
  return rec.accepted;
}

}  // namespace rankforge
