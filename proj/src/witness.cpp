#include "rankforge/witness.hpp"

#include <algorithm>
#include <stdexcept>

namespace rankforge {

bool verify_on_curve(const QuotElem& x, const QuotElem& y,
                     const CurveSpec& curve) {
  if (x.modulus() != y.modulus()) {
    throw std::invalid_argument("verify_on_curve: modulus mismatch");
  }
  QuotElem diff = eval_poly_at(curve.g, y) - eval_poly_at(curve.f, x);
  return diff.is_zero();
}

bool verify_on_curve(const QuotElem& x, const QuotElem& y,
                     const SuperellipticSpec& spec) {
  if (x.modulus() != y.modulus()) {
    throw std::invalid_argument("verify_on_curve: modulus mismatch");
  }
  QuotElem diff =
      y.pow(spec.d) - x.pow(spec.k) - QuotElem::constant(x.modulus(), spec.D);
  return diff.is_zero();
}

bool strictly_l_check(const QuotElem& x, const QuotElem& y, long p) {
  if (minimal_poly(x).degree() == p) return true;
  return minimal_poly(y).degree() == p;
}

bool s_integrality_check(const QuotElem& a, const std::vector<Int>& allowed) {
  UniPoly m = minimal_poly(a);
  for (long i = 0; i <= m.degree(); ++i) {
    if (!denominator_supported_on(m.coeff(i), allowed)) return false;
  }
  return true;
}

bool s_integrality_check(const QuotElem& a, const Int& q) {
  return s_integrality_check(a, std::vector<Int>{q});
}

FieldFingerprint fingerprint(const UniPoly& defining_poly,
                             const std::vector<std::uint64_t>& primes) {
  if (defining_poly.degree() < 1) {
    throw std::invalid_argument("fingerprint: degree >= 1 required");
  }
  const Rat disc = discriminant(defining_poly);
  const Rat lead = defining_poly.lc();
  FieldFingerprint fp;
  for (std::uint64_t ell : primes) {
    FieldFingerprint::Entry e;
    e.prime = ell;
    const Int ellz(static_cast<unsigned long>(ell));
    e.disc_valuation = disc == 0 ? 0 : *valuation(disc, ellz);
    const bool lead_ok =
        valuation(lead, ellz).value_or(1) == 0;  // ell divides neither side of lc
    if (!lead_ok || disc == 0 || e.disc_valuation != 0) {
      e.skipped = true;
      fp.entries.push_back(std::move(e));
      continue;
    }
    auto reduced = fp_try_reduce(defining_poly, ell);
    if (!reduced || reduced->degree() != defining_poly.degree()) {
      e.skipped = true;
      fp.entries.push_back(std::move(e));
      continue;
    }
    FpFactorization ff = fp_factor(*reduced);
    for (const FpFactor& fac : ff.factors) {
      for (int i = 0; i < fac.multiplicity; ++i) {
        e.degrees.push_back(fac.poly.degree());
      }
    }
    std::sort(e.degrees.begin(), e.degrees.end());
    fp.entries.push_back(std::move(e));
  }
  return fp;
}

std::vector<std::uint64_t> default_fingerprint_primes(
    const UniPoly& defining_poly, const Int& q, int count) {
  std::vector<std::uint64_t> out;
  if (defining_poly.degree() < 1 || count <= 0) return out;
  const Rat disc = discriminant(defining_poly);
  const Rat lead = defining_poly.lc();
  Int ellz(2);
  int scanned = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++scanned > 5000) {
      throw std::runtime_error(
          "default_fingerprint_primes: prime search exhausted");
    }
    if (ellz != q && valuation(lead, ellz).value_or(1) == 0 && disc != 0 &&
        *valuation(disc, ellz) == 0) {
      out.push_back(ellz.get_ui());
    }
    mpz_nextprime(ellz.get_mpz_t(), ellz.get_mpz_t());
  }
  return out;
}

bool distinguished(const FieldFingerprint& a, const FieldFingerprint& b) {
  for (const auto& ea : a.entries) {
    if (ea.skipped) continue;
    for (const auto& eb : b.entries) {
      if (eb.prime != ea.prime || eb.skipped) continue;
      if (eb.degrees != ea.degrees) return true;
    }
  }
  return false;
}

DistinctnessReport distinctness_report(
    const std::vector<FieldFingerprint>& fps) {
  DistinctnessReport report;
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < fps.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (!distinguished(fps[i], fps[reps[c]])) {
        report.classes[c].push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) {
      reps.push_back(i);
      report.classes.push_back({i});
    }
  }
  return report;
}

}  // namespace rankforge
