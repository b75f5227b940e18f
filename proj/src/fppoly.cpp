#include "rankforge/fppoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rankforge {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t ell) {
  if (a % ell == 0) throw std::domain_error("invmod: zero");
  return powmod_u64(a, ell - 2, ell);
}

void check_same_field(const FpPoly& a, const FpPoly& b) {
  if (a.ell != b.ell) throw std::invalid_argument("FpPoly: field mismatch");
}

}  // namespace

void FpPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

FpPoly fp_from_int_poly(const std::vector<Int>& coeffs, std::uint64_t ell) {
  FpPoly r;
  r.ell = ell;
  r.c.reserve(coeffs.size());
  Int m(static_cast<unsigned long>(ell));
  for (const Int& a : coeffs) {
    Int v = a % m;
    if (v < 0) v += m;
    r.c.push_back(v.get_ui());
  }
  r.trim();
  return r;
}

FpPoly fp_constant(std::uint64_t ell, std::uint64_t v) {
  FpPoly r;
  r.ell = ell;
  v %= ell;
  if (v) r.c.push_back(v);
  return r;
}

FpPoly fp_var(std::uint64_t ell) {
  FpPoly r;
  r.ell = ell;
  r.c = {0, 1};
  return r;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
  check_same_field(a, b);
  FpPoly r;
  r.ell = a.ell;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) {
    std::uint64_t s = (i < a.c.size() ? a.c[i] : 0);
    if (i < b.c.size()) {
      s += b.c[i];
      if (s >= a.ell) s -= a.ell;
    }
    r.c[i] = s;
  }
  r.trim();
  return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
  check_same_field(a, b);
  FpPoly r;
  r.ell = a.ell;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) {
    std::uint64_t s = (i < a.c.size() ? a.c[i] : 0);
    std::uint64_t t = (i < b.c.size() ? b.c[i] : 0);
    r.c[i] = s >= t ? s - t : s + a.ell - t;
  }
  r.trim();
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
  check_same_field(a, b);
  FpPoly r;
  r.ell = a.ell;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      r.c[i + j] = (r.c[i + j] + mulmod(a.c[i], b.c[j], a.ell)) % a.ell;
    }
  }
  r.trim();
  return r;
}

FpPoly fp_mul_scalar(const FpPoly& a, std::uint64_t s) {
  FpPoly r = a;
  s %= a.ell;
  for (auto& x : r.c) x = mulmod(x, s, a.ell);
  r.trim();
  return r;
}

std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b) {
  check_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("fp_divrem: division by zero");
  FpPoly q;
  q.ell = a.ell;
  FpPoly r = a;
  const long db = b.degree();
  if (a.degree() < db) return {q, r};
  q.c.assign(a.degree() - db + 1, 0);
  const std::uint64_t inv_lc = invmod(b.lc(), a.ell);
  for (long i = r.degree(); i >= db; --i) {
    if (static_cast<size_t>(i) >= r.c.size() || r.c[i] == 0) continue;
    std::uint64_t f = mulmod(r.c[i], inv_lc, a.ell);
    q.c[i - db] = f;
    for (long j = 0; j <= db; ++j) {
      std::uint64_t sub = mulmod(f, b.c[j], a.ell);
      std::uint64_t& cell = r.c[i - db + j];
      cell = cell >= sub ? cell - sub : cell + a.ell - sub;
    }
  }
  q.trim();
  r.trim();
  return {q, r};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b) { return fp_divrem(a, b).second; }

FpPoly fp_monic(const FpPoly& a) {
  if (a.is_zero()) return a;
  return fp_mul_scalar(a, invmod(a.lc(), a.ell));
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = fp_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a);
}

FpEgcd fp_egcd(const FpPoly& a, const FpPoly& b) {
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = fp_constant(a.ell, 1), s1 = fp_constant(a.ell, 0);
  FpPoly t0 = fp_constant(a.ell, 0), t1 = fp_constant(a.ell, 1);
  while (!r1.is_zero()) {
    auto [q, r2] = fp_divrem(r0, r1);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1));
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1));
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (!r0.is_zero()) {
    std::uint64_t inv = powmod_u64(r0.lc(), a.ell - 2, a.ell);
    r0 = fp_mul_scalar(r0, inv);
    s0 = fp_mul_scalar(s0, inv);
    t0 = fp_mul_scalar(t0, inv);
  }
  return {r0, s0, t0};
}

FpPoly fp_derivative(const FpPoly& a) {
  FpPoly r;
  r.ell = a.ell;
  if (a.degree() < 1) return r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) {
    r.c[i - 1] = mulmod(a.c[i], i % a.ell, a.ell);
  }
  r.trim();
  return r;
}

FpPoly fp_powmod(const FpPoly& a, const Int& e, const FpPoly& m) {
  if (e < 0) throw std::domain_error("fp_powmod: negative exponent");
  FpPoly base = fp_mod(a, m);
  FpPoly result = fp_constant(a.ell, 1);
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = fp_mod(fp_mul(result, base), m);
    base = fp_mod(fp_mul(base, base), m);
    k >>= 1;
  }
  return result;
}

bool fp_equal(const FpPoly& a, const FpPoly& b) {
  return a.ell == b.ell && a.c == b.c;
}

bool fp_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (long i = a.degree(); i >= 0; --i) {
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  }
  return false;
}

namespace {

// f squarefree monic -> list of (product of irreducibles of degree d, d).
std::vector<std::pair<FpPoly, long>> fp_ddf(FpPoly f) {
  std::vector<std::pair<FpPoly, long>> out;
  const std::uint64_t ell = f.ell;
  FpPoly h = fp_mod(fp_var(ell), f);
  long d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = fp_powmod(h, Int(static_cast<unsigned long>(ell)), f);
    FpPoly g = fp_gcd(fp_sub(h, fp_var(ell)), f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = fp_divrem(f, g).first;
      h = fp_mod(h, f);
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

// j-th polynomial over F_ell in a fixed enumeration (base-ell digits of j).
FpPoly nth_candidate(std::uint64_t ell, std::uint64_t j) {
  FpPoly a;
  a.ell = ell;
  while (j) {
    a.c.push_back(j % ell);
    j /= ell;
  }
  a.trim();
  return a;
}

// f: monic product of distinct irreducibles, all of degree d. Appends the
// irreducible factors. Candidate splitting elements come from the fixed
// enumeration, so the output is deterministic.
void fp_edf(const FpPoly& f, long d, std::vector<FpPoly>& out) {
  if (f.degree() == d) {
    out.push_back(fp_monic(f));
    return;
  }
  const std::uint64_t ell = f.ell;
  const FpPoly one = fp_constant(ell, 1);
  Int ell_pow_d;
  mpz_ui_pow_ui(ell_pow_d.get_mpz_t(), ell, static_cast<unsigned long>(d));
  for (std::uint64_t j = ell;; ++j) {  // start at deg >= 1 candidates
    FpPoly a = nth_candidate(ell, j);
    FpPoly g;
    if (ell == 2) {
      // trace map over F_{2^d}
      FpPoly t = fp_mod(a, f);
      FpPoly acc = t;
      for (long i = 1; i < d; ++i) {
        t = fp_mod(fp_mul(t, t), f);
        acc = fp_add(acc, t);
      }
      g = fp_gcd(acc, f);
    } else {
      FpPoly b = fp_powmod(a, (ell_pow_d - 1) / 2, f);
      g = fp_gcd(fp_sub(b, one), f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      fp_edf(g, d, out);
      fp_edf(fp_divrem(f, g).first, d, out);
      return;
    }
  }
}

// Monic f -> squarefree parts (g_i, multiplicity) with f = prod g_i^{m_i}.
std::vector<std::pair<FpPoly, int>> fp_squarefree(const FpPoly& f) {
  std::vector<std::pair<FpPoly, int>> out;
  const std::uint64_t ell = f.ell;
  FpPoly df = fp_derivative(f);
  if (df.is_zero()) {
    // f = g(x^ell); coefficientwise ell-th root is the identity on F_ell
    FpPoly g;
    g.ell = ell;
    g.c.resize(f.degree() / ell + 1, 0);
    for (size_t i = 0; i < g.c.size(); ++i) g.c[i] = f.c[i * ell];
    g.trim();
    for (auto& [part, m] : fp_squarefree(g)) {
      out.emplace_back(part, m * static_cast<int>(ell));
    }
    return out;
  }
  FpPoly c = fp_gcd(f, df);
  FpPoly w = fp_divrem(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    FpPoly y = fp_gcd(w, c);
    FpPoly part = fp_divrem(w, y).first;
    if (part.degree() > 0) out.emplace_back(fp_monic(part), i);
    w = y;
    c = fp_divrem(c, y).first;
    ++i;
  }
  if (c.degree() > 0) {
    // remaining ell-th power
    FpPoly g;
    g.ell = ell;
    g.c.resize(c.degree() / ell + 1, 0);
    for (size_t k = 0; k < g.c.size(); ++k) g.c[k] = c.c[k * ell];
    g.trim();
    for (auto& [part, m] : fp_squarefree(fp_monic(g))) {
      out.emplace_back(part, m * static_cast<int>(ell));
    }
  }
  return out;
}

}  // namespace

FpFactorization fp_factor(const FpPoly& f) {
  if (f.is_zero()) throw std::domain_error("fp_factor: zero polynomial");
  FpFactorization result;
  result.unit = f.lc();
  FpPoly g = fp_monic(f);
  if (g.degree() == 0) return result;
  for (auto& [sqf, mult] : fp_squarefree(g)) {
    for (auto& [prod, d] : fp_ddf(sqf)) {
      std::vector<FpPoly> irreds;
      fp_edf(prod, d, irreds);
      for (auto& p : irreds) result.factors.push_back({p, mult});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const FpFactor& a, const FpFactor& b) {
              return fp_less(a.poly, b.poly);
            });
  return result;
}

std::optional<FpPoly> fp_try_reduce(const UniPoly& f, std::uint64_t ell) {
  FpPoly r;
  r.ell = ell;
  r.c.reserve(f.degree() + 1);
  Int m(static_cast<unsigned long>(ell));
  for (long i = 0; i <= f.degree(); ++i) {
    const Rat& a = f.coeff(i);
    Int den = a.get_den() % m;
    if (den == 0) return std::nullopt;
    Int num = a.get_num() % m;
    if (num < 0) num += m;
    Int deninv(static_cast<unsigned long>(invmod(den.get_ui(), ell)));
    Int v = (num * deninv) % m;
    r.c.push_back(v.get_ui());
  }
  r.trim();
  return r;
}

FpFactorization factor_mod_prime(const UniPoly& f, std::uint64_t ell) {
  if (f.degree() < 0) throw std::domain_error("factor_mod_prime: zero polynomial");
  auto r = fp_try_reduce(f, ell);
  if (!r) {
    throw std::invalid_argument("factor_mod_prime: denominator divisible by modulus");
  }
  if (r->degree() != f.degree()) {
    throw std::invalid_argument("factor_mod_prime: leading coefficient vanishes mod ell");
  }
  return fp_factor(*r);
}

std::string fp_str(const FpPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = f.degree(); i >= 0; --i) {
    if (f.c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || f.c[i] != 1) os << f.c[i];
    if (i > 0) {
      if (f.c[i] != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace rankforge
