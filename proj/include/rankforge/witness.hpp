// Independent verification of constructed points and fields: on-curve checks
// in the quotient ring, strict non-rationality of coordinates, S-integrality
// of minimal polynomials, and sound field-distinctness fingerprints
// (factor-degree multisets at good primes).

#ifndef RANKFORGE_WITNESS_HPP
#define RANKFORGE_WITNESS_HPP

#include <cstdint>
#include <vector>

#include "rankforge/curves.hpp"
#include "rankforge/fppoly.hpp"
#include "rankforge/quotient.hpp"

namespace rankforge {

// g(y) - f(x) = 0 in the shared quotient ring.
bool verify_on_curve(const QuotElem& x, const QuotElem& y,
                     const CurveSpec& curve);
// y^d - x^k - D = 0.
bool verify_on_curve(const QuotElem& x, const QuotElem& y,
                     const SuperellipticSpec& spec);

// True iff minimal_poly of x or of y has degree p; for a prime-degree field
// there are no intermediate subfields, so this certifies that the point does
// not live over the rationals.
bool strictly_l_check(const QuotElem& x, const QuotElem& y, long p);

// The monic minimal polynomial of a has coefficients whose denominators are
// supported on the given primes alone.
bool s_integrality_check(const QuotElem& a, const std::vector<Int>& allowed);
// Denominators must be powers of q.
bool s_integrality_check(const QuotElem& a, const Int& q);

struct FieldFingerprint {
  struct Entry {
    std::uint64_t prime = 0;
    bool skipped = false;        // prime divides lc or disc, or reduction fails
    std::vector<long> degrees;   // sorted modular factor degrees, with multiplicity
    long disc_valuation = 0;     // informational; not used for separation
  };
  std::vector<Entry> entries;
};

// Factor-degree multisets of the defining polynomial modulo each listed
// prime. Primes dividing the leading coefficient or the discriminant are
// marked skipped; at the others the multiset is the splitting type of the
// prime in the field, a sound isomorphism invariant.
FieldFingerprint fingerprint(const UniPoly& defining_poly,
                             const std::vector<std::uint64_t>& primes);

// First `count` primes distinct from q and dividing neither the leading
// coefficient nor the discriminant of the defining polynomial.
std::vector<std::uint64_t> default_fingerprint_primes(
    const UniPoly& defining_poly, const Int& q, int count = 12);

// True when some prime is non-skipped in both fingerprints with different
// degree multisets: the two fields are then provably non-isomorphic.
bool distinguished(const FieldFingerprint& a, const FieldFingerprint& b);

struct DistinctnessReport {
  // index classes over the input order; members of one class were not
  // separated by the prime list (sound separations only)
  std::vector<std::vector<std::size_t>> classes;
  std::size_t class_count() const { return classes.size(); }
};

// Greedy partition: a fingerprint joins the first class whose representative
// it cannot be distinguished from, else founds a new class.
DistinctnessReport distinctness_report(const std::vector<FieldFingerprint>& fps);

struct VerificationReport {
  bool on_curve = false;
  bool strictly_l = false;
  bool s_integral = false;
  FieldFingerprint fingerprint;
};

}  // namespace rankforge

#endif
