// Batch driver: scan u0 over a range for each requested degree p, route each
// (curve, p) to a construction path, certify and verify every record, and
// stream the results as one JSON object per line. The verify driver replays
// every check of a catalog from scratch; the report driver aggregates one.

#ifndef RANKFORGE_PIPELINE_HPP
#define RANKFORGE_PIPELINE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "rankforge/catalog.hpp"
#include "rankforge/record.hpp"

namespace rankforge {

struct RunConfig {
  CurveInput curve;
  Int q = 0;
  std::vector<long> primes;  // target extension degrees
  long u0_lo = 1;
  long u0_hi = 20;
  long budget = 0;  // specializations attempted per degree; 0 = whole range
  std::vector<std::uint64_t> fingerprint_primes;  // empty = pick per record
  int fingerprint_prime_count = 12;
  std::string out_path;       // empty = stdout
  std::string path = "auto";  // thm1 | thm4 | p2 | p3 | auto
  FactorConfig factor;
};

// Exit codes: 0 ok, 1 invalid input, 2 degree not representable for the
// curve, 3 internal verification failure. RANKFORGE_SIEVE_PRIMES (comma or
// space separated) overrides factor.sieve_primes when that list is empty.
int run_construct(RunConfig cfg, std::ostream& log);

// Re-derives every line of a catalog: rebuilds the cover from the recorded
// inputs, re-certifies irreducibility, and re-runs the witness checks.
// Exit codes: 0 all lines check, 1 unreadable input, 3 some line fails.
int run_verify(const std::string& in_path, std::ostream& log);

// Aggregates a catalog per (curve, degree): acceptance ratios, distinct
// field classes, and a verdict histogram. Exit codes: 0 ok, 1 unreadable.
int run_report(const std::string& in_path, std::ostream& log);

// One re-check of a parsed record; empty result means the line is good.
std::vector<std::string> recheck_record(const ExtensionRecord& rec);

}  // namespace rankforge

#endif
