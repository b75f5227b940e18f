// Exact integer/rational scalars and small number-theory helpers.
//
// All arithmetic in this project is exact: integers are GMP mpz, rationals
// are GMP mpq kept canonical (lowest terms, positive denominator). Nothing
// here ever rounds.

#ifndef RANKFORGE_RATIONAL_HPP
#define RANKFORGE_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace rankforge {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical rational from a (possibly uncanonical) num/den pair.
Rat make_rat(const Int& num, const Int& den);

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// base^e for e >= 0.
Int int_pow(const Int& base, unsigned long e);

// base^e, e may be negative (base != 0 then).
Rat rat_pow(const Rat& base, long e);

bool is_integer(const Rat& x);

// Parses "123", "-4/7". Throws std::invalid_argument on malformed input.
Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);

// Canonical decimal form: "123" or "-4/7" (denominator omitted when 1).
std::string to_string(const Int& x);
std::string to_string(const Rat& x);

// v_q(x): exponent of q in the numerator minus exponent in the denominator.
// Returns nullopt for x = 0 (+infinity by convention).
std::optional<long> valuation(const Rat& x, const Int& q);
std::optional<long> valuation(const Int& x, const Int& q);

bool is_prime(const Int& n);

// True iff every prime factor of the denominator of x lies in `primes`.
// An empty list therefore demands an integer.
bool denominator_supported_on(const Rat& x, const std::vector<Int>& primes);

// First `count` primes, skipping any listed in `exclude`.
std::vector<Int> first_primes(std::size_t count, const std::vector<Int>& exclude = {});

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// C(n, k) as an exact integer (0 for k < 0 or k > n).
Int binomial(unsigned long n, unsigned long k);

// Floor square root test: returns the exact square root if x is a perfect
// square of a rational, nullopt otherwise.
std::optional<Rat> exact_sqrt(const Rat& x);

}  // namespace rankforge

#endif
