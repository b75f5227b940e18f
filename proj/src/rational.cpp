#include "rankforge/rational.hpp"

#include <stdexcept>

namespace rankforge {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (base == 0) throw std::invalid_argument("rat_pow: 0 to a negative power");
    Rat inv = Rat(1) / base;
    return rat_pow(inv, -e);
  }
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), static_cast<unsigned long>(e));
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), static_cast<unsigned long>(e));
  // base canonical => powers of coprime num/den stay coprime
  return r;
}

bool is_integer(const Rat& x) { return x.get_den() == 1; }

Int parse_int(const std::string& s) {
  Int v;
  if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_int: malformed integer '" + s + "'");
  return v;
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("parse_rat: denominator must be positive in '" + s + "'");
  return make_rat(num, den);
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::optional<long> valuation(const Int& x, const Int& q) {
  if (q < 2) throw std::invalid_argument("valuation: q must be >= 2");
  if (x == 0) return std::nullopt;
  Int n = abs(x);
  long v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
    ++v;
  }
  return v;
}

std::optional<long> valuation(const Rat& x, const Int& q) {
  if (x == 0) return std::nullopt;
  auto vn = valuation(Int(x.get_num()), q);
  auto vd = valuation(Int(x.get_den()), q);
  return *vn - *vd;
}

bool is_prime(const Int& n) {
  // 2-sided for our sizes: mpz_probab_prime_p is deterministic well beyond
  // anything this project feeds it.
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool denominator_supported_on(const Rat& x, const std::vector<Int>& primes) {
  Int d = x.get_den();
  for (const Int& p : primes) {
    while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()))
      mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
  }
  return d == 1;
}

std::vector<Int> first_primes(std::size_t count, const std::vector<Int>& exclude) {
  std::vector<Int> out;
  Int p = 2;
  while (out.size() < count) {
    bool skip = false;
    for (const Int& e : exclude)
      if (e == p) { skip = true; break; }
    if (!skip) out.push_back(p);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  return out;
}

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::optional<Rat> exact_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  Int num = x.get_num(), den = x.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return make_rat(rn, rd);
}

}  // namespace rankforge
