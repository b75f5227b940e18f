#include "rankforge/factorize.hpp"

#include <algorithm>
#include <climits>
#include <iterator>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rankforge {

namespace {

// ---- integer polynomials modulo M (little-endian coefficients in [0, M)) --

using ZPoly = std::vector<Int>;

void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Int mod_pos(const Int& v, const Int& m) {
  Int r = v % m;
  if (r < 0) r += m;
  return r;
}

ZPoly zp_reduce(const ZPoly& a, const Int& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_pos(a[i], m);
  zp_trim(r);
  return r;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < r.size(); ++i) {
    Int s = (i < a.size() ? a[i] : Int(0)) + (i < b.size() ? b[i] : Int(0));
    r[i] = mod_pos(s, m);
  }
  zp_trim(r);
  return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < r.size(); ++i) {
    Int s = (i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0));
    r[i] = mod_pos(s, m);
  }
  zp_trim(r);
  return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& v : r) v = mod_pos(v, m);
  zp_trim(r);
  return r;
}

// b monic (stored leading entry exactly 1).
std::pair<ZPoly, ZPoly> zp_divrem_monic(const ZPoly& a, const ZPoly& b,
                                        const Int& m) {
  const long db = static_cast<long>(b.size()) - 1;
  ZPoly r = a;
  if (static_cast<long>(r.size()) - 1 < db) return {{}, r};
  ZPoly q(r.size() - db, Int(0));
  for (long i = static_cast<long>(r.size()) - 1; i >= db; --i) {
    Int f = r[i];
    if (f == 0) continue;
    q[i - db] = f;
    for (long j = 0; j <= db; ++j) {
      r[i - db + j] = mod_pos(r[i - db + j] - f * b[j], m);
    }
  }
  zp_trim(q);
  zp_trim(r);
  return {q, r};
}

ZPoly zp_from_fp(const FpPoly& p) {
  ZPoly r(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    r[i] = Int(static_cast<unsigned long>(p.c[i]));
  }
  return r;
}

UniPoly zp_to_unipoly_symmetric(const ZPoly& a, const Int& m) {
  std::vector<Rat> cs(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Int v = a[i];
    if (2 * v > m) v -= m;
    cs[i] = Rat(v);
  }
  return UniPoly(std::move(cs));
}

// ---- Hensel lifting (monic two-factor quadratic step, binary tree) --------

struct PairLift {
  ZPoly g, h, s, t;
};

// f ≡ g·h and s·g + t·h ≡ 1 (mod m) in, same (mod m²) out. f, g, h monic.
PairLift lift_step(const ZPoly& f, const PairLift& pl, const Int& m) {
  const Int m2 = m * m;
  ZPoly fr = zp_reduce(f, m2);
  ZPoly e = zp_sub(fr, zp_mul(pl.g, pl.h, m2), m2);
  auto [q, r] = zp_divrem_monic(zp_mul(pl.s, e, m2), pl.h, m2);
  ZPoly gs = zp_add(pl.g, zp_add(zp_mul(pl.t, e, m2), zp_mul(q, pl.g, m2), m2), m2);
  ZPoly hs = zp_add(pl.h, r, m2);
  ZPoly one{Int(1)};
  ZPoly e2 = zp_sub(zp_add(zp_mul(pl.s, gs, m2), zp_mul(pl.t, hs, m2), m2), one, m2);
  auto [q2, r2] = zp_divrem_monic(zp_mul(pl.s, e2, m2), hs, m2);
  ZPoly ss = zp_sub(pl.s, r2, m2);
  ZPoly ts = zp_sub(pl.t, zp_add(zp_mul(pl.t, e2, m2), zp_mul(q2, gs, m2), m2), m2);
  return {std::move(gs), std::move(hs), std::move(ss), std::move(ts)};
}

// Lifts the complete factorization f ≡ prod hs (mod ell) to mod M, where M is
// a power ell^(2^j). Everything monic; factors pairwise coprime mod ell.
std::vector<ZPoly> lift_tree(const ZPoly& f, const std::vector<FpPoly>& hs,
                             std::uint64_t ell, const Int& M) {
  if (hs.size() == 1) return {zp_reduce(f, M)};
  const std::size_t mid = hs.size() / 2;
  FpPoly g0 = fp_constant(ell, 1);
  FpPoly h0 = fp_constant(ell, 1);
  for (std::size_t i = 0; i < mid; ++i) g0 = fp_mul(g0, hs[i]);
  for (std::size_t i = mid; i < hs.size(); ++i) h0 = fp_mul(h0, hs[i]);
  FpEgcd eg = fp_egcd(g0, h0);
  if (!eg.g.is_one()) {
    throw std::logic_error("hensel: modular factors not coprime");
  }
  PairLift pl{zp_from_fp(g0), zp_from_fp(h0), zp_from_fp(eg.s), zp_from_fp(eg.t)};
  Int m(static_cast<unsigned long>(ell));
  while (m < M) {
    pl = lift_step(f, pl, m);
    m = m * m;
  }
  std::vector<FpPoly> left(hs.begin(), hs.begin() + mid);
  std::vector<FpPoly> right(hs.begin() + mid, hs.end());
  std::vector<ZPoly> out = lift_tree(pl.g, left, ell, M);
  std::vector<ZPoly> rhs = lift_tree(pl.h, right, ell, M);
  out.insert(out.end(), std::make_move_iterator(rhs.begin()),
             std::make_move_iterator(rhs.end()));
  return out;
}

// ---- recombination --------------------------------------------------------

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Splits the monic integer polynomial F into true monic factors by testing
// subset products of the lifted modular factors (symmetric representatives).
std::vector<UniPoly> recombine(const std::vector<ZPoly>& lifted, const Int& M,
                               UniPoly F) {
  std::vector<std::size_t> live(lifted.size());
  std::iota(live.begin(), live.end(), 0);
  std::vector<UniPoly> out;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c = 1; !progress && 2 * c <= live.size(); ++c) {
      std::vector<std::size_t> comb(c);
      std::iota(comb.begin(), comb.end(), 0);
      do {
        ZPoly prod{Int(1)};
        for (std::size_t i : comb) prod = zp_mul(prod, lifted[live[i]], M);
        UniPoly g = zp_to_unipoly_symmetric(prod, M);
        auto [quo, rem] = divrem(F, g);
        if (rem.is_zero()) {
          out.push_back(g);
          F = quo;
          for (std::size_t i = c; i-- > 0;) live.erase(live.begin() + comb[i]);
          progress = true;
          break;
        }
      } while (next_combination(comb, live.size()));
    }
  }
  out.push_back(F);  // whatever remains is irreducible
  return out;
}

// ---- shared helpers --------------------------------------------------------

bool poly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (long i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

bool prime_valid_for(const UniPoly& f, std::uint64_t ell) {
  if (!is_prime(Int(static_cast<unsigned long>(ell)))) return false;
  auto r = fp_try_reduce(f, ell);
  if (!r || r->degree() != f.degree()) return false;
  return fp_gcd(*r, fp_derivative(*r)).degree() == 0;
}

std::vector<std::uint64_t> choose_primes(const UniPoly& f,
                                         const FactorConfig& cfg) {
  if (!cfg.sieve_primes.empty()) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t ell : cfg.sieve_primes) {
      if (prime_valid_for(f, ell)) out.push_back(ell);
    }
    if (!out.empty()) return out;
  }
  return select_sieve_primes(f, cfg.sieve_prime_count);
}

struct SieveData {
  std::set<long> achievable;
  std::optional<std::uint64_t> single_prime;
  std::map<std::uint64_t, int> factor_counts;
  std::vector<std::uint64_t> used;
};

SieveData compute_sieve(const UniPoly& f,
                        const std::vector<std::uint64_t>& primes) {
  SieveData out;
  const long n = f.degree();
  bool first = true;
  for (std::uint64_t ell : primes) {
    FpFactorization ff = factor_mod_prime(f, ell);
    out.used.push_back(ell);
    std::vector<long> degs;
    for (const FpFactor& fac : ff.factors) {
      for (int i = 0; i < fac.multiplicity; ++i) degs.push_back(fac.poly.degree());
    }
    out.factor_counts[ell] = static_cast<int>(degs.size());
    if (degs.size() == 1 && degs[0] == n && !out.single_prime) {
      out.single_prime = ell;
    }
    std::vector<char> reach(n + 1, 0);
    reach[0] = 1;
    for (long d : degs) {
      for (long s = n; s >= d; --s) {
        if (reach[s - d]) reach[s] = 1;
      }
    }
    std::set<long> proper;
    for (long s = 1; s < n; ++s) {
      if (reach[s]) proper.insert(s);
    }
    if (first) {
      out.achievable = std::move(proper);
      first = false;
    } else {
      std::set<long> inter;
      std::set_intersection(out.achievable.begin(), out.achievable.end(),
                            proper.begin(), proper.end(),
                            std::inserter(inter, inter.begin()));
      out.achievable = std::move(inter);
    }
    if (out.achievable.empty()) break;
  }
  if (first) {
    for (long s = 1; s < n; ++s) out.achievable.insert(s);
  }
  return out;
}

Rat unit_against(const UniPoly& f, const std::vector<UniPoly>& factors) {
  Rat prod_lc = 1;
  for (const UniPoly& g : factors) prod_lc *= g.lc();
  return f.lc() / prod_lc;
}

// Factors a primitive squarefree integer polynomial, choosing the lifting
// prime with the fewest modular factors.
std::vector<UniPoly> factor_part(const UniPoly& p, const FactorConfig& cfg) {
  if (p.degree() == 1) return {p};
  SieveData sd = compute_sieve(p, choose_primes(p, cfg));
  if (sd.achievable.empty() && !sd.used.empty()) return {p};
  std::uint64_t ell = 0;
  int best = INT_MAX;
  for (const auto& [pr, cnt] : sd.factor_counts) {
    if (cnt < best) {
      best = cnt;
      ell = pr;
    }
  }
  if (ell == 0) ell = select_sieve_primes(p, 1).at(0);
  return factor_squarefree_primitive(p, ell);
}

}  // namespace

// ---- Eisenstein ------------------------------------------------------------

EisensteinCertificate eisenstein_check(const UniPoly& f, const Int& q) {
  if (f.degree() < 1) {
    throw std::invalid_argument("eisenstein_check: degree >= 1 required");
  }
  if (!f.is_integral()) {
    throw std::invalid_argument("eisenstein_check: integer coefficients required");
  }
  if (q < 2 || !is_prime(q)) {
    throw std::invalid_argument("eisenstein_check: q must be prime");
  }
  EisensteinCertificate cert;
  cert.prime = q;
  const long n = f.degree();
  std::vector<std::optional<long>> vals(n + 1);
  long content = LONG_MAX;
  for (long i = 0; i <= n; ++i) {
    vals[i] = valuation(f.coeff(i), q);
    if (vals[i] && *vals[i] < content) content = *vals[i];
  }
  cert.content_valuation = content;
  if (*vals[n] != content) {
    cert.failure = "leading coefficient divisible by " + to_string(q) +
                   " after content removal";
    return cert;
  }
  if (!vals[0]) {
    cert.failure = "constant coefficient is zero";
    return cert;
  }
  const long v0 = *vals[0] - content;
  if (v0 == 0) {
    cert.failure = "constant coefficient not divisible by " + to_string(q);
    return cert;
  }
  if (v0 >= 2) {
    cert.failure = "constant coefficient divisible by " + to_string(q) + "^2";
    return cert;
  }
  for (long i = 1; i < n; ++i) {
    if (vals[i] && *vals[i] - content < 1) {
      cert.failure = "coefficient of t^" + std::to_string(i) +
                     " not divisible by " + to_string(q);
      return cert;
    }
  }
  cert.leading_valuation = 0;
  cert.verified = true;
  return cert;
}

// ---- verdict plumbing ------------------------------------------------------

std::string verdict_kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::IrreducibleEisenstein: return "IrreducibleEisenstein";
    case VerdictKind::IrreducibleModular: return "IrreducibleModular";
    case VerdictKind::IrreducibleLifted: return "IrreducibleLifted";
    case VerdictKind::Reducible: return "Reducible";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::optional<VerdictKind> verdict_kind_from_name(const std::string& s) {
  if (s == "IrreducibleEisenstein") return VerdictKind::IrreducibleEisenstein;
  if (s == "IrreducibleModular") return VerdictKind::IrreducibleModular;
  if (s == "IrreducibleLifted") return VerdictKind::IrreducibleLifted;
  if (s == "Reducible") return VerdictKind::Reducible;
  if (s == "Inconclusive") return VerdictKind::Inconclusive;
  return std::nullopt;
}

bool is_irreducible(const IrreducibilityVerdict& v) {
  return v.kind == VerdictKind::IrreducibleEisenstein ||
         v.kind == VerdictKind::IrreducibleModular ||
         v.kind == VerdictKind::IrreducibleLifted;
}

// ---- sieve -----------------------------------------------------------------

std::set<long> degree_sieve(const UniPoly& f,
                            const std::vector<std::uint64_t>& primes) {
  if (f.degree() < 1) {
    throw std::invalid_argument("degree_sieve: degree >= 1 required");
  }
  return compute_sieve(f, primes).achievable;
}

std::vector<std::uint64_t> select_sieve_primes(const UniPoly& f, int count) {
  std::vector<std::uint64_t> out;
  if (f.degree() < 1 || count <= 0) return out;
  Int ellz(2);
  int scanned = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++scanned > 5000) {
      throw std::runtime_error(
          "select_sieve_primes: prime search exhausted (input not squarefree?)");
    }
    std::uint64_t ell = ellz.get_ui();
    if (prime_valid_for(f, ell)) out.push_back(ell);
    mpz_nextprime(ellz.get_mpz_t(), ellz.get_mpz_t());
  }
  return out;
}

// ---- squarefree decomposition (Yun) ----------------------------------------

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  if (f.degree() < 1) {
    throw std::invalid_argument("squarefree_decomposition: degree >= 1 required");
  }
  std::vector<std::pair<UniPoly, int>> out;
  const UniPoly fm = f.monic();
  const UniPoly df = fm.derivative();
  UniPoly g = poly_gcd(fm, df);
  if (g.degree() == 0) {
    out.emplace_back(fm, 1);
    return out;
  }
  UniPoly b = divrem(fm, g).first;
  UniPoly c = divrem(df, g).first;
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly a = poly_gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = divrem(b, a).first;
    c = divrem(d, a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

// ---- Zassenhaus ------------------------------------------------------------

std::vector<UniPoly> factor_squarefree_primitive(const UniPoly& f,
                                                 std::uint64_t ell) {
  if (f.degree() < 1) {
    throw std::invalid_argument("factor_squarefree_primitive: degree >= 1 required");
  }
  if (!f.is_integral()) {
    throw std::invalid_argument("factor_squarefree_primitive: integer coefficients required");
  }
  const long n = f.degree();
  if (n == 1) return {f};
  const Int lead = f.lc().get_num();

  // monic transform: F(x) = lead^(n-1) * f(x/lead), integer and monic
  std::vector<Int> fm(n + 1);
  fm[n] = 1;
  for (long i = 0; i < n; ++i) {
    fm[i] = f.coeff(i).get_num() *
            int_pow(lead, static_cast<unsigned long>(n - 1 - i));
  }
  const UniPoly f_monic = UniPoly::from_integer_coeffs(fm);

  FpFactorization ff = factor_mod_prime(f_monic, ell);
  std::vector<FpPoly> hs;
  for (const FpFactor& fac : ff.factors) {
    if (fac.multiplicity != 1) {
      throw std::invalid_argument(
          "factor_squarefree_primitive: input not squarefree mod ell");
    }
    hs.push_back(fac.poly);
  }
  if (hs.size() == 1) return {f};

  // factor coefficient bound (Mignotte-style) and the lifting modulus
  Int norm_sq = 0;
  for (const Int& v : fm) norm_sq += v * v;
  Int norm;
  mpz_sqrt(norm.get_mpz_t(), norm_sq.get_mpz_t());
  const Int bound = int_pow(Int(2), static_cast<unsigned long>(n)) * (norm + 1);
  const Int needed = 2 * bound + 1;
  Int modulus(static_cast<unsigned long>(ell));
  while (modulus < needed) modulus = modulus * modulus;

  ZPoly f_target = zp_reduce(ZPoly(fm.begin(), fm.end()), modulus);
  std::vector<ZPoly> lifted = lift_tree(f_target, hs, ell, modulus);
  std::vector<UniPoly> monic_factors = recombine(lifted, modulus, f_monic);

  // map back through x -> lead*x and strip content
  std::vector<UniPoly> out;
  out.reserve(monic_factors.size());
  for (const UniPoly& g : monic_factors) {
    auto pif = g.scale_arg(Rat(lead)).primitive_integer_form();
    out.push_back(UniPoly::from_integer_coeffs(pif.coeffs));
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

// ---- full pipeline ---------------------------------------------------------

IrreducibilityVerdict factor_over_rationals(const UniPoly& f) {
  return factor_over_rationals(f, FactorConfig{});
}

IrreducibilityVerdict factor_over_rationals(const UniPoly& f,
                                            const FactorConfig& cfg) {
  if (f.degree() < 1) {
    throw std::invalid_argument("factor_over_rationals: degree >= 1 required");
  }
  const UniPoly p = UniPoly::from_integer_coeffs(f.primitive_integer_form().coeffs);
  auto sqf = squarefree_decomposition(p);
  const bool squarefree = sqf.size() == 1 && sqf[0].second == 1;

  if (!squarefree) {
    IrreducibilityVerdict v;
    v.kind = VerdictKind::Reducible;
    for (const auto& [part, mult] : sqf) {
      UniPoly pp = UniPoly::from_integer_coeffs(part.primitive_integer_form().coeffs);
      std::vector<UniPoly> fs = factor_part(pp, cfg);
      for (const UniPoly& g : fs) {
        for (int i = 0; i < mult; ++i) v.factors.push_back(g);
      }
    }
    std::sort(v.factors.begin(), v.factors.end(), poly_less);
    v.unit = unit_against(f, v.factors);
    v.detail = "not squarefree; factored with multiplicity";
    return v;
  }

  IrreducibilityVerdict v;
  if (cfg.try_eisenstein) {
    for (const Int& q :
         first_primes(static_cast<std::size_t>(cfg.eisenstein_prime_count))) {
      EisensteinCertificate cert = eisenstein_check(p, q);
      if (cert.verified) {
        v.kind = VerdictKind::IrreducibleEisenstein;
        v.eisenstein = cert;
        return v;
      }
    }
  }

  SieveData sd = compute_sieve(p, choose_primes(p, cfg));
  v.sieve_primes = sd.used;
  if (!sd.used.empty() && sd.achievable.empty()) {
    v.kind = VerdictKind::IrreducibleModular;
    v.modular_prime = sd.single_prime;
    v.detail = sd.single_prime
                   ? "irreducible modulo " + std::to_string(*sd.single_prime)
                   : "modular factor-degree intersection empty";
    return v;
  }
  if (!cfg.enable_hensel) {
    std::string degs;
    for (long d : sd.achievable) {
      if (!degs.empty()) degs += ",";
      degs += std::to_string(d);
    }
    v.kind = VerdictKind::Inconclusive;
    v.detail = "sieve-only mode; candidate factor degrees {" + degs + "}";
    return v;
  }

  std::uint64_t ell = 0;
  int best = INT_MAX;
  for (const auto& [pr, cnt] : sd.factor_counts) {
    if (cnt < best) {
      best = cnt;
      ell = pr;
    }
  }
  if (ell == 0) ell = select_sieve_primes(p, 1).at(0);
  std::vector<UniPoly> factors = factor_squarefree_primitive(p, ell);
  v.lift_prime = ell;
  if (factors.size() == 1) {
    v.kind = VerdictKind::IrreducibleLifted;
    return v;
  }
  v.kind = VerdictKind::Reducible;
  v.factors = std::move(factors);
  std::sort(v.factors.begin(), v.factors.end(), poly_less);
  v.unit = unit_against(f, v.factors);
  return v;
}

}  // namespace rankforge
