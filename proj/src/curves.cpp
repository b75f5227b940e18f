#include "rankforge/curves.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace rankforge {

void validate_curve(const CurveSpec& curve) {
  if (curve.f.degree() < 1 || curve.g.degree() < 1) {
    throw std::invalid_argument("curve: f and g must have degree >= 1");
  }
  if (!curve.f.is_monic() || !curve.g.is_monic()) {
    throw std::invalid_argument("curve: f and g must be monic");
  }
}

void validate_super(const SuperellipticSpec& spec) {
  if (spec.d < 2 || spec.k < 2) {
    throw std::invalid_argument("superelliptic: d and k must be >= 2");
  }
  if (spec.D == 0) {
    throw std::invalid_argument("superelliptic: D must be nonzero");
  }
}

namespace {

// Smallest b in 1..d with b*k - 1 divisible by d and (b*k - 1)/d >= 1.
bool positive_bezout(long d, long k, long& a, long& b) {
  for (long bb = 1; bb <= d; ++bb) {
    long num = bb * k - 1;
    if (num >= d && num % d == 0) {
      a = num / d;
      b = bb;
      return true;
    }
  }
  return false;
}

}  // namespace

Orientation orient_and_bezout(const CurveSpec& curve) {
  validate_curve(curve);
  const long d = curve.d(), k = curve.k();
  if (std::gcd(d, k) != 1) {
    throw std::invalid_argument("orient_and_bezout: gcd(d, k) = " +
                                std::to_string(std::gcd(d, k)) + ", need 1");
  }
  Orientation o;
  if (positive_bezout(d, k, o.a, o.b)) {
    o.curve = curve;
    o.swapped = false;
    return o;
  }
  // interchange x and y: the curve becomes f(y') = g(x')
  if (positive_bezout(k, d, o.a, o.b)) {
    o.curve = CurveSpec{curve.g, curve.f};
    o.swapped = true;
    return o;
  }
  throw std::invalid_argument(
      "orient_and_bezout: no positive Bezout pair (degrees 1 and 1)");
}

long min_prime_bound(long d, long k) { return k * (d - 1) + 1; }

PrimeRepresentation represent_prime(long p, long d, long k) {
  for (long nu = 1; nu <= d - 1; ++nu) {
    const long rest = p - nu * k;
    if (rest >= d && rest % d == 0) {
      return {rest / d, nu};
    }
  }
  throw std::domain_error("represent_prime: no representation p = mu*" +
                          std::to_string(d) + " + nu*" + std::to_string(k) +
                          " for p = " + std::to_string(p));
}

bool check_admissible(const CurveSpec& curve, const Int& q, long a) {
  const long need = curve.d() * a + 1;
  auto coeffs_ok = [&](const UniPoly& h) {
    for (long i = 0; i < h.degree(); ++i) {
      const Rat& c = h.coeff(i);
      if (c == 0) continue;
      if (!is_integer(c)) return false;
      if (*valuation(c, q) < need) return false;
    }
    return true;
  };
  return coeffs_ok(curve.f) && coeffs_ok(curve.g);
}

NormalizedModel normalize_model(const CurveSpec& curve, const Int& q, long a) {
  validate_curve(curve);
  const long d = curve.d(), k = curve.k();
  auto q_only_denominators = [&](const UniPoly& h) {
    for (long i = 0; i < h.degree(); ++i) {
      if (!denominator_supported_on(h.coeff(i), {q})) return false;
    }
    return true;
  };
  if (!q_only_denominators(curve.f) || !q_only_denominators(curve.g)) {
    throw std::invalid_argument(
        "normalize_model: non-leading coefficients must have q-power denominators");
  }
  auto scaled = [&](const UniPoly& h, long weight_e) {
    // q^{dke} h(X / q^{weight_e}): coefficient i picks up q^{weight_e*(deg-i)}
    std::vector<Rat> cs(h.degree() + 1);
    for (long i = 0; i <= h.degree(); ++i) {
      cs[i] = h.coeff(i) *
              Rat(int_pow(q, static_cast<unsigned long>(weight_e * (h.degree() - i))));
    }
    return UniPoly(std::move(cs));
  };
  for (long e = 0;; ++e) {
    CurveSpec model{scaled(curve.f, d * e), scaled(curve.g, k * e)};
    if (check_admissible(model, q, a)) {
      return {model, e};
    }
  }
}

PlannedCover plan_cover(const CurveSpec& curve, const Int& q, long p) {
  if (!is_prime(q)) {
    throw std::invalid_argument("plan_cover: q must be prime");
  }
  Orientation o = orient_and_bezout(curve);
  const long d = o.curve.d(), k = o.curve.k();
  const long bound = min_prime_bound(d, k);
  if (p < bound) {
    throw std::domain_error("plan_cover: p = " + std::to_string(p) +
                            " below the bound k(d-1)+1 = " + std::to_string(bound));
  }
  if (!is_prime(Int(p))) {
    throw std::invalid_argument("plan_cover: p must be prime");
  }
  PrimeRepresentation rep = represent_prime(p, d, k);
  NormalizedModel model = normalize_model(o.curve, q, o.a);
  CoverPlan plan;
  plan.q = q;
  plan.a = o.a;
  plan.b = o.b;
  plan.mu = rep.mu;
  plan.nu = rep.nu;
  plan.p = p;
  plan.d = d;
  plan.k = k;
  plan.bound_n = bound;
  plan.swapped = o.swapped;
  plan.scale_e = model.scale_e;
  return {o.curve, model.curve, plan};
}

SuperCoverPlan super_plan(const SuperellipticSpec& spec, const Int& q, long p) {
  validate_super(spec);
  if (!is_prime(q)) {
    throw std::invalid_argument("super_plan: q must be prime");
  }
  const long n = std::lcm(spec.d, spec.k);
  if (gcd(q, Int(n)) != 1) {
    throw std::invalid_argument("super_plan: q shares a factor with lcm(d, k)");
  }
  if (valuation(spec.D, q).value_or(1) != 0) {
    throw std::invalid_argument("super_plan: D must be a q-unit (v_q(D) = 0)");
  }
  const long bound = std::max((n - 1) * (n - 2), n + 1);
  if (p < bound || !is_prime(Int(p))) {
    throw std::domain_error("super_plan: need a prime p >= " +
                            std::to_string(bound) + ", got " + std::to_string(p));
  }
  long r = p % (n - 1);
  if (r == 0) r = n - 1;
  const long s = (p - r) / (n - 1);
  if (!(s > r && r >= 1)) {
    throw std::domain_error("super_plan: representation p = (n-1)s + r has s = " +
                            std::to_string(s) + " <= r = " + std::to_string(r));
  }
  SuperCoverPlan plan;
  plan.q = q;
  plan.n_lcm = n;
  plan.s = s;
  plan.r = r;
  plan.p = p;
  plan.d = spec.d;
  plan.k = spec.k;
  plan.d_scaled = Rat(int_pow(q, static_cast<unsigned long>(2 * n))) * spec.D;
  plan.c1 = 2 * n / spec.k;
  plan.c2 = 2 * n / spec.d;
  return plan;
}

}  // namespace rankforge
