// Acceptance gate: ten checks, one [PASS]/[FAIL] line each, exit code = number
// of failures. Pinned counts in this file come from an independent sympy
// factorization of the same specializations (see notes in each criterion).

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "rankforge/pipeline.hpp"

using namespace rankforge;
namespace fs = std::filesystem;
using testutil::oracle_has_proper_factor;
using testutil::oracle_irreducible;
using testutil::rnd_long;
using testutil::rnd_rat;
using testutil::rnd_rat_nonzero;

namespace {

int failures = 0;

class Criterion {
 public:
  explicit Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& what) {
    if (!ok && reasons_.size() < 4) reasons_.push_back(what);
    ok_ = ok_ && ok;
  }

  void note(const std::string& s) { notes_ = notes_.empty() ? s : notes_ + ", " + s; }

  void finish() {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    std::printf("[%s] %2d %s (%s) [%lld ms]\n", ok_ ? "PASS" : "FAIL", number_,
                title_.c_str(), notes_.c_str(), static_cast<long long>(ms));
    for (const std::string& r : reasons_) std::printf("        - %s\n", r.c_str());
    if (!ok_) ++failures;
  }

 private:
  int number_;
  std::string title_;
  std::string notes_;
  std::vector<std::string> reasons_;
  bool ok_ = true;
  std::chrono::steady_clock::time_point start_;
};

CurveSpec elliptic_288() {
  return {UniPoly::from_int_coeffs({8, 8, 0, 1}), UniPoly::monomial(2, Rat(1))};
}

// Bezout exponents re-derived independently of the library.
bool naive_bezout(long d, long k, long& a, long& b) {
  for (long bb = 1; bb <= d; ++bb) {
    if ((bb * k - 1) % d == 0 && (bb * k - 1) / d >= 1) {
      b = bb;
      a = (bb * k - 1) / d;
      return true;
    }
  }
  return false;
}

UniPoly random_admissible(long degree, const Int& q, long need_val) {
  std::vector<Rat> cs(degree + 1);
  const Int unit = int_pow(q, static_cast<unsigned long>(need_val));
  for (long i = 0; i < degree; ++i) cs[i] = Rat(unit) * Rat(rnd_long(-30, 30));
  cs[degree] = 1;
  return UniPoly(std::move(cs));
}

std::vector<long> primes_in(long lo, long hi) {
  std::vector<long> out;
  for (long p = lo; p <= hi; ++p) {
    if (is_prime(Int(p))) out.push_back(p);
  }
  return out;
}

fs::path work_dir() {
  const fs::path dir = fs::temp_directory_path() / "rankforge_acceptance";
  fs::create_directories(dir);
  return dir;
}

std::vector<std::string> catalog_lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

struct BuiltPlan {
  CoverPlan plan;
  BiPoly h;
};

std::vector<BuiltPlan> c1_plans;           // reused by criterion 2
std::vector<FieldFingerprint> c5_p5_fps;   // reused by criterion 7

void criterion1() {
  Criterion c(1, "cover identity on random admissible models");
  long plans = 0, points = 0;
  for (auto [d, k] : std::vector<std::pair<long, long>>{{2, 3}, {2, 5}, {3, 4}}) {
    long a = 0, b = 0;
    if (!naive_bezout(d, k, a, b)) {
      c.require(false, "no Bezout pair");
      continue;
    }
    for (long qv : {2L, 3L, 5L}) {
      const Int q(qv);
      const CurveSpec curve{random_admissible(k, q, d * a + 1),
                            random_admissible(d, q, d * a + 1)};
      for (long p : primes_in(min_prime_bound(d, k), 60)) {
        const PlannedCover pc = plan_cover(curve, q, p);
        c.require(pc.plan.a == a && pc.plan.b == b, "unexpected exponents");
        c.require(pc.plan.scale_e == 0, "admissible model was rescaled");
        const BiPoly h = build_cover(pc.normalized, pc.plan);
        c.require(h.deg_t() == p, "deg_t differs from p");
        c.require(h.leading_t_coeff() ==
                      UniPoly::constant(Rat(int_pow(q, a * d))),
                  "leading t-coefficient is not q^{ad}");
        ++plans;
        bool all = true;
        for (int i = 0; i < 100; ++i) {
          const Rat u0 = rnd_rat(6, 3), t0 = rnd_rat_nonzero(6, 3);
          const Rat lhs = h.eval(u0, t0);
          const Rat rhs =
              rat_pow(t0, pc.plan.nu * k) *
              (pc.normalized.g.eval(Rat(int_pow(q, pc.plan.a)) *
                                    rat_pow(t0, pc.plan.mu)) -
               pc.normalized.f.eval(u0 + Rat(int_pow(q, pc.plan.b)) *
                                             rat_pow(t0, -pc.plan.nu)));
          if (lhs != rhs) all = false;
          ++points;
        }
        c.require(all, "identity failed at p=" + std::to_string(p));
        c1_plans.push_back({pc.plan, h});
      }
    }
  }
  c.require(plans == 126, "expected 126 plans, built " + std::to_string(plans));
  c.note(std::to_string(plans) + " plans, " + std::to_string(points) +
         " exact point checks");
  c.finish();
}

void criterion2() {
  Criterion c(2, "specialization at zero is Eisenstein after content removal");
  long checked = 0;
  for (const BuiltPlan& bp : c1_plans) {
    const UniPoly h0 = specialize(bp.h, Rat(0));
    const UniPoly reduced =
        h0 / Rat(int_pow(bp.plan.q,
                         static_cast<unsigned long>(bp.plan.a * bp.plan.d)));
    c.require(reduced.is_integral(), "h(0,t)/q^{da} is not integral");
    const auto cert = eisenstein_check(reduced, bp.plan.q);
    c.require(cert.verified, "Eisenstein conditions fail");
    c.require(cert.content_valuation == 0, "content was not exactly q^{da}");
    const auto v0 = valuation(reduced.coeff(0), bp.plan.q);
    c.require(v0 && *v0 == 1, "constant term valuation is not exactly 1");
    ++checked;
  }
  c.require(checked == 126, "expected 126 plans from criterion 1");
  c.note(std::to_string(checked) + " certificates");
  c.finish();
}

void criterion3() {
  Criterion c(3, "prime representation p = mu d + nu k matches brute force");
  long checked = 0;
  for (auto [d, k] : std::vector<std::pair<long, long>>{
           {2, 3}, {2, 5}, {3, 4}, {4, 5}, {3, 7}}) {
    for (long p : primes_in(min_prime_bound(d, k), 1000)) {
      long hits = 0, bmu = 0, bnu = 0;
      for (long nu = 1; nu <= d - 1; ++nu) {
        for (long mu = 1; mu * d + nu * k <= p; ++mu) {
          if (mu * d + nu * k == p) {
            ++hits;
            bmu = mu;
            bnu = nu;
          }
        }
      }
      if (hits != 1) {
        c.require(false, "representation not unique at p=" + std::to_string(p));
        continue;
      }
      const auto r = represent_prime(p, d, k);
      c.require(r.mu == bmu && r.nu == bnu,
                "mismatch at p=" + std::to_string(p));
      ++checked;
    }
  }
  c.note(std::to_string(checked) + " primes across 5 degree pairs");
  c.finish();
}

void criterion4() {
  Criterion c(4, "closed elliptic form equals the general cover");
  long checked = 0;
  const std::vector<long> ps{5, 7, 11, 13, 17, 19, 23};
  for (int trial = 0; trial < 50; ++trial) {
    const Int q(std::vector<long>{2, 3, 5}[static_cast<std::size_t>(rnd_long(0, 2))]);
    const long p = ps[static_cast<std::size_t>(rnd_long(0, 6))];
    const Rat A = Rat(int_pow(q, 3)) * Rat(rnd_long(-20, 20));
    const Rat B = Rat(int_pow(q, 3)) * Rat(rnd_long(-20, 20));
    const Rat u0 = rnd_rat(9, 4);
    const CurveSpec curve{UniPoly({B, A, Rat(0), Rat(1)}),
                          UniPoly::monomial(2, Rat(1))};
    const PlannedCover pc = plan_cover(curve, q, p);
    c.require(pc.plan.a == 1 && pc.plan.b == 1 && pc.plan.nu == 1 &&
                  pc.plan.scale_e == 0,
              "unexpected plan for the elliptic shape");
    const UniPoly got = specialize(build_cover(pc.normalized, pc.plan), u0);
    c.require(got == remark_polynomial(A, B, q, p, u0),
              "closed form differs at p=" + std::to_string(p));
    ++checked;
  }
  c.note(std::to_string(checked) + " random (A,B,q,p,u0) instances");
  c.finish();
}

void criterion5() {
  Criterion c(5, "end-to-end elliptic catalog with pinned acceptance counts");
  const fs::path cat = work_dir() / "c5.jsonl";
  RunConfig cfg;
  cfg.curve = elliptic_288();
  cfg.q = 2;
  cfg.primes = {5, 7, 11, 13};
  cfg.u0_lo = 1;
  cfg.u0_hi = 20;
  cfg.out_path = cat.string();
  std::ostringstream log;
  const int rc = run_construct(cfg, log);
  c.require(rc == 0, "construct exited " + std::to_string(rc));

  // accepted-per-degree counts pinned by an independent sympy factorization
  // of all 80 specializations: every one is irreducible
  std::map<long, long> accepted;
  long eisenstein_confirmed = 0, modular_confirmed = 0, sieve_confirmed = 0,
       oracle_confirmed = 0;
  for (const std::string& line : catalog_lines(cat)) {
    const ExtensionRecord rec = record_from_line(line);
    c.require(rec.accepted, "record not accepted at p=" + std::to_string(rec.p) +
                                " u0=" + to_string(rec.u0));
    if (!rec.accepted) continue;
    ++accepted[rec.p];
    c.require(rec.defining_poly.degree() == rec.p, "degree differs from p");
    c.require(is_irreducible(rec.verdict), "no irreducibility certificate");
    c.require(rec.report.on_curve && rec.report.strictly_l && rec.report.s_integral,
              "witness report not all true");
    c.require(recheck_record(rec).empty(), "record does not recheck");

    const auto prim = rec.defining_poly.primitive_integer_form();
    if (rec.verdict.eisenstein) {
      // re-checked by direct integer arithmetic, not through the library
      const Int q = rec.verdict.eisenstein->prime;
      bool ok = prim.coeffs.back() % q != 0 && prim.coeffs.front() % q == 0 &&
                prim.coeffs.front() % (q * q) != 0;
      for (std::size_t i = 0; i + 1 < prim.coeffs.size(); ++i) {
        if (prim.coeffs[i] % q != 0) ok = false;
      }
      c.require(ok, "Eisenstein certificate fails direct arithmetic");
      if (ok) ++eisenstein_confirmed;
    } else if (rec.verdict.modular_prime) {
      const auto fac = factor_mod_prime(rec.defining_poly, *rec.verdict.modular_prime);
      c.require(fac.factors.size() == 1 && fac.factors[0].multiplicity == 1 &&
                    fac.factors[0].poly.degree() == rec.p,
                "modular certificate does not re-verify");
      ++modular_confirmed;
    } else if (rec.verdict.kind == VerdictKind::IrreducibleModular) {
      // no single witness prime: the certificate is the empty intersection of
      // modular factor-degree sets, re-derived here from the recorded primes
      const UniPoly prim_poly = UniPoly::from_integer_coeffs(prim.coeffs);
      c.require(!rec.verdict.sieve_primes.empty(),
                "sieve certificate without primes");
      c.require(degree_sieve(prim_poly, rec.verdict.sieve_primes).empty(),
                "sieve certificate does not re-verify");
      ++sieve_confirmed;
    } else {
      c.require(rec.verdict.kind == VerdictKind::IrreducibleLifted,
                "accepted record carries no checkable certificate");
    }
    if (rec.p == 5) {
      // brute-force oracle is complete here: a reducible quintic has a factor
      // of degree <= 2
      const UniPoly prim_poly = UniPoly::from_integer_coeffs(prim.coeffs);
      c.require(oracle_irreducible(prim_poly), "brute-force oracle disagrees");
      ++oracle_confirmed;
      c5_p5_fps.push_back(rec.report.fingerprint);
    }
  }
  for (long p : {5L, 7L, 11L, 13L}) {
    c.require(accepted[p] == 20,
              "p=" + std::to_string(p) + " accepted " + std::to_string(accepted[p]) +
                  ", pinned 20");
  }
  std::ostringstream note;
  note << "80 records, accepted 20+20+20+20, certificates re-verified: "
       << eisenstein_confirmed << " Eisenstein + " << modular_confirmed
       << " single-prime + " << sieve_confirmed << " sieve; " << oracle_confirmed
       << " quintics brute-force confirmed";
  c.note(note.str());
  c.finish();
}

void criterion6() {
  Criterion c(6, "lcm construction worked instance (d=2, k=4, D=1, q=3, p=7)");
  const SuperellipticSpec spec{2, 4, Rat(1)};
  const SuperCoverPlan plan = super_plan(spec, Int(3), 7);
  c.require(plan.s == 2 && plan.r == 1, "plan (s,r) differs from (2,1)");
  const BiPoly h = super_build_cover(plan);
  const UniPoly h0 = specialize(h, Rat(0)) / Rat(int_pow(Int(3), 7));
  c.require(h0 == UniPoly::from_int_coeffs({-3, 0, 0, 0, 19683, 2916, 162, 4}),
            "h(0,t)/3^7 differs from the pinned expansion");
  const auto cert = eisenstein_check(h0, Int(3));
  c.require(cert.verified && cert.content_valuation == 0,
            "pinned expansion is not Eisenstein at 3");

  long accepted = 0;
  bool lift_checked = false;
  for (long u = 1; u <= 20; ++u) {
    auto rec = make_thm4_record(spec, plan, h, Rat(u), FactorConfig{});
    verify_record(rec, default_fingerprint_primes(rec.defining_poly, Int(3), 12));
    if (!rec.accepted) continue;
    ++accepted;
    if (!lift_checked) {
      lift_checked = true;
      const QuotElem one = QuotElem::constant(rec.defining_poly, Rat(1));
      const QuotElem residue = rec.point_y->pow(2) - rec.point_x->pow(4) - one;
      c.require(residue.is_zero(), "y^2 - x^4 - 1 != 0 in the quotient ring");
      c.require(verify_on_curve(*rec.point_x, *rec.point_y, spec),
                "lifted point fails the curve equation");
      c.require(rec.defining_poly.degree() == 7, "quotient ring degree is not 7");
    }
  }
  c.require(lift_checked, "no certified-irreducible specialization found");
  c.require(accepted == 20, "accepted " + std::to_string(accepted) + ", pinned 20");
  c.note("pinned expansion matched, " + std::to_string(accepted) +
         "/20 accepted, lift identity exact");
  c.finish();
}

void criterion7() {
  Criterion c(7, "distinct degree-5 fields among accepted records");
  const auto rep = distinctness_report(c5_p5_fps);
  c.require(c5_p5_fps.size() == 20, "expected 20 fingerprints from criterion 5");
  c.require(rep.class_count() >= 5, "fewer than 5 separated classes");
  c.require(rep.class_count() == 20,
            "class count " + std::to_string(rep.class_count()) + ", pinned 20");
  c.note(std::to_string(rep.class_count()) + " pairwise-distinguished classes of " +
         std::to_string(c5_p5_fps.size()));
  c.finish();
}

void criterion8() {
  Criterion c(8, "rational factorization round trips and Eisenstein confirmation");
  long round_trips = 0;
  while (round_trips < 200) {
    auto rnd_irr = [&]() -> UniPoly {
      for (;;) {
        std::vector<long> cs;
        const long deg = rnd_long(1, 4);
        for (long i = 0; i < deg; ++i) cs.push_back(rnd_long(-20, 20));
        cs.push_back(rnd_long(1, 20));
        UniPoly f = testutil::normalize_factor(UniPoly::from_int_coeffs(cs));
        if (f.degree() >= 1 && oracle_irreducible(f)) return f;
      }
    };
    const UniPoly g1 = rnd_irr(), g2 = rnd_irr();
    if (g1 == g2) continue;
    const auto v = factor_over_rationals(g1 * g2);
    bool ok = v.kind == VerdictKind::Reducible && v.factors.size() == 2;
    if (ok) {
      const UniPoly a = testutil::normalize_factor(v.factors[0]);
      const UniPoly b = testutil::normalize_factor(v.factors[1]);
      ok = (a == g1 && b == g2) || (a == g2 && b == g1);
      if (!(v.factors[0] * v.factors[1] * v.unit == g1 * g2)) ok = false;
    }
    c.require(ok, "round trip failed");
    ++round_trips;
  }

  long eisenstein_cases = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const Int q(std::vector<long>{2, 3, 5, 7}[static_cast<std::size_t>(rnd_long(0, 3))]);
    const long deg = rnd_long(2, 6);
    std::vector<Rat> cs(deg + 1);
    Int u0 = q * rnd_long(1, 9);
    while (u0 % (q * q) == 0) u0 += q;
    cs[0] = Rat(u0) * (rnd_long(0, 1) ? 1 : -1);
    for (long i = 1; i < deg; ++i) cs[i] = Rat(q) * Rat(rnd_long(-9, 9));
    Int lead(rnd_long(1, 9));
    while (lead % q == 0) lead += 1;
    cs[deg] = Rat(lead);
    const UniPoly f(std::move(cs));
    c.require(eisenstein_check(f, q).verified, "constructed polynomial not Eisenstein");
    FactorConfig no_shortcut;
    no_shortcut.try_eisenstein = false;
    c.require(is_irreducible(factor_over_rationals(f, no_shortcut)),
              "full pipeline disagrees with an Eisenstein certificate");
    ++eisenstein_cases;
  }
  c.note(std::to_string(round_trips) + " oracle round trips, " +
         std::to_string(eisenstein_cases) + " Eisenstein cross-checks");
  c.finish();
}

void criterion9() {
  Criterion c(9, "direct p=2 and p=3 paths with pinned degeneracy counts");
  const CurveSpec curve = elliptic_288();
  long accepted2 = 0, skipped2 = 0, accepted3 = 0, skipped3 = 0;
  for (long u = 1; u <= 20; ++u) {
    const Rat u0(u);
    {
      auto rec = make_small_prime_record(curve, 2, u0, Int(2), FactorConfig{});
      verify_record(rec, rec.skip_reason.empty()
                             ? default_fingerprint_primes(rec.defining_poly, Int(2), 12)
                             : std::vector<std::uint64_t>{});
      const bool square = exact_sqrt(curve.f.eval(u0)).has_value();
      c.require(square == !rec.accepted, "square oracle disagrees with the record");
      if (rec.accepted) {
        ++accepted2;
        c.require(recheck_record(rec).empty(), "p=2 record does not recheck");
      } else {
        ++skipped2;
      }
    }
    {
      auto rec = make_small_prime_record(curve, 3, u0, Int(2), FactorConfig{});
      verify_record(rec, rec.skip_reason.empty()
                             ? default_fingerprint_primes(rec.defining_poly, Int(2), 12)
                             : std::vector<std::uint64_t>{});
      const UniPoly shifted = curve.f - UniPoly::constant(u0 * u0);
      const bool has_root = oracle_has_proper_factor(shifted);
      c.require(has_root == !rec.accepted, "root oracle disagrees with the record");
      if (rec.accepted) {
        ++accepted3;
        c.require(recheck_record(rec).empty(), "p=3 record does not recheck");
      } else {
        ++skipped3;
      }
    }
  }
  // pinned: no u0 in 1..20 hits a rational square or a rational root
  c.require(accepted2 == 20 && skipped2 == 0, "p=2 counts differ from pin 20/0");
  c.require(accepted3 == 20 && skipped3 == 0, "p=3 counts differ from pin 20/0");
  std::ostringstream note;
  note << "p=2: " << accepted2 << " accepted/" << skipped2 << " skipped; p=3: "
       << accepted3 << " accepted/" << skipped3 << " skipped";
  c.note(note.str());
  c.finish();
}

void criterion10() {
  Criterion c(10, "catalog verification detects single-character corruption");
  const fs::path cat = work_dir() / "c10.jsonl";
  RunConfig cfg;
  cfg.curve = elliptic_288();
  cfg.q = 2;
  cfg.primes = {5, 7};
  cfg.u0_lo = 1;
  cfg.u0_hi = 10;
  cfg.out_path = cat.string();
  std::ostringstream clog;
  c.require(run_construct(cfg, clog) == 0, "construct failed");
  std::ostringstream vlog;
  c.require(run_verify(cat.string(), vlog) == 0, "fresh catalog does not verify");

  const std::vector<std::string> lines = catalog_lines(cat);
  c.require(lines.size() == 20, "expected 20 records");
  long caught = 0;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::string> copy = lines;
    std::string& line = copy[static_cast<std::size_t>(
        rnd_long(0, static_cast<long>(copy.size()) - 1))];
    const auto field = line.find("\"defining_poly\":[");
    const auto end = line.find(']', field);
    std::vector<std::size_t> digit_positions;
    for (std::size_t i = field; i < end; ++i) {
      if (line[i] >= '0' && line[i] <= '9') digit_positions.push_back(i);
    }
    const std::size_t pos = digit_positions[static_cast<std::size_t>(
        rnd_long(0, static_cast<long>(digit_positions.size()) - 1))];
    line[pos] = static_cast<char>('0' + (line[pos] - '0' + 1 + rnd_long(0, 8)) % 10);

    const fs::path bad = work_dir() / ("c10_bad_" + std::to_string(trial) + ".jsonl");
    std::ofstream out(bad);
    for (const std::string& l : copy) out << l << "\n";
    out.close();
    std::ostringstream blog;
    const int rc = run_verify(bad.string(), blog);
    if (rc != 0) ++caught;
    c.require(rc != 0, "corruption not detected in trial " + std::to_string(trial));
  }
  c.note("fresh catalog verified, " + std::to_string(caught) +
         "/10 corruptions detected");
  c.finish();
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (failures == 0) {
    std::printf("all 10 acceptance criteria hold\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
