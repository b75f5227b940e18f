// Irreducibility certification and complete factorization over the
// rationals: Eisenstein certificates, modular degree sieves, and Hensel
// lifting with factor recombination.
//
// Everything is deterministic: prime lists are fixed enumerations and the
// finite-field factoring underneath uses no randomness, so identical inputs
// always yield identical verdicts.

#ifndef RANKFORGE_FACTORIZE_HPP
#define RANKFORGE_FACTORIZE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rankforge/fppoly.hpp"
#include "rankforge/unipoly.hpp"

namespace rankforge {

struct EisensteinCertificate {
  Int prime = 0;
  // power of the prime divided out of the whole polynomial first
  long content_valuation = 0;
  long leading_valuation = 0;  // always 0 after content removal
  bool verified = false;
  std::string failure;  // names the violated condition when !verified
};

// Tests the Eisenstein conditions at q after dividing out the coefficient
// content q^c: leading coefficient a unit, middle coefficients divisible by
// q, constant coefficient divisible by q exactly once. Success certifies
// irreducibility of f / content over the rationals.
EisensteinCertificate eisenstein_check(const UniPoly& f, const Int& q);

enum class VerdictKind {
  IrreducibleEisenstein,
  IrreducibleModular,
  IrreducibleLifted,
  Reducible,
  Inconclusive,
};

std::string verdict_kind_name(VerdictKind k);
std::optional<VerdictKind> verdict_kind_from_name(const std::string& s);

struct IrreducibilityVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<EisensteinCertificate> eisenstein;
  std::vector<std::uint64_t> sieve_primes;  // primes the sieve consulted
  // a single prime at which the polynomial stays irreducible, when one exists
  std::optional<std::uint64_t> modular_prime;
  std::optional<std::uint64_t> lift_prime;  // prime used for Hensel lifting
  // Reducible: input = unit * prod(factors); factors are primitive integer
  // polynomials with positive leading coefficients, repeated per multiplicity.
  Rat unit = 0;
  std::vector<UniPoly> factors;
  std::string detail;
};

bool is_irreducible(const IrreducibilityVerdict& v);

struct FactorConfig {
  // Explicit sieve primes; empty selects the first sieve_prime_count primes
  // dividing neither the leading coefficient nor the discriminant.
  std::vector<std::uint64_t> sieve_primes;
  int sieve_prime_count = 8;
  bool try_eisenstein = true;
  int eisenstein_prime_count = 25;
  bool enable_hensel = true;  // off = sieve-only mode (may be Inconclusive)
};

// Degrees of proper rational factors not ruled out by factoring modulo each
// prime (intersection of subset sums of the modular factor-degree multisets,
// 0 and deg f excluded). Empty set certifies irreducibility. Requires f
// squarefree over the rationals for the certificate to be meaningful.
std::set<long> degree_sieve(const UniPoly& f,
                            const std::vector<std::uint64_t>& primes);

// First `count` primes ell such that ell does not divide the leading
// coefficient and f stays squarefree mod ell (equivalently ell does not
// divide the discriminant).
std::vector<std::uint64_t> select_sieve_primes(const UniPoly& f, int count);

// Squarefree decomposition over the rationals (Yun): monic parts a_i with
// f = lc(f) * prod a_i^i. Requires deg f >= 1.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

// Complete factorization of a primitive squarefree integer polynomial into
// primitive irreducibles with positive leading coefficients, via Hensel
// lifting of the factorization mod ell and subset recombination. ell must
// not divide the leading coefficient and f must be squarefree mod ell.
std::vector<UniPoly> factor_squarefree_primitive(const UniPoly& f,
                                                 std::uint64_t ell);

// Definitive verdict for any rational polynomial of degree >= 1.
IrreducibilityVerdict factor_over_rationals(const UniPoly& f);
IrreducibilityVerdict factor_over_rationals(const UniPoly& f,
                                            const FactorConfig& config);

}  // namespace rankforge

#endif
