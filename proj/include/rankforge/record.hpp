// One output unit: a specialization value, its defining polynomial and
// irreducibility verdict, the lifted point, and the verification report.
// Construction helpers for each path and the witness pass that fills the
// report live here.

#ifndef RANKFORGE_RECORD_HPP
#define RANKFORGE_RECORD_HPP

#include <optional>
#include <string>

#include "rankforge/cover.hpp"
#include "rankforge/factorize.hpp"
#include "rankforge/witness.hpp"

namespace rankforge {

enum class PathKind { Thm1, Thm4, P2, P3 };

std::string path_kind_name(PathKind k);
std::optional<PathKind> path_kind_from_name(const std::string& s);

struct ExtensionRecord {
  PathKind kind = PathKind::Thm1;
  std::optional<CurveSpec> curve;          // input curve (thm1, p2, p3)
  std::optional<SuperellipticSpec> super;  // input family (thm4)
  std::optional<CoverPlan> plan;           // thm1
  std::optional<SuperCoverPlan> lcm_plan;  // thm4
  Int q = 0;
  long p = 0;
  Rat u0;
  UniPoly defining_poly;
  IrreducibilityVerdict verdict;
  std::optional<QuotElem> point_x, point_y;
  VerificationReport report;
  bool accepted = false;
  std::string skip_reason;  // nonempty when the record was skipped
};

// specialize -> certify -> lift for one u0 on a built coprime-degree cover.
ExtensionRecord make_thm1_record(const PlannedCover& planned, const BiPoly& h,
                                 const CurveSpec& original_curve, const Rat& u0,
                                 const FactorConfig& cfg);

// Same for the lcm construction.
ExtensionRecord make_thm4_record(const SuperellipticSpec& spec,
                                 const SuperCoverPlan& plan, const BiPoly& h,
                                 const Rat& u0, const FactorConfig& cfg);

// Direct p = 2 / p = 3 constructions on y^2 = f(x), f a monic cubic:
// p = 2 uses t^2 - f(u0) with the point (u0, alpha); p = 3 uses f(t) - u0^2
// with the point (alpha, u0). Degenerate specializations are skipped, not
// errors.
ExtensionRecord make_small_prime_record(const CurveSpec& curve, long p,
                                        const Rat& u0, const Int& q,
                                        const FactorConfig& cfg);

// The prime set S a record's coordinates may have denominators in: {q}, plus
// the primes dividing lcm(d,k) for the lcm construction (its cover has
// non-unit leading coefficient n*q^{2n-1}, so conjugates acquire those
// denominators).
std::vector<Int> allowed_denominator_primes(const ExtensionRecord& rec);

// Fills report and accepted. Returns false only when an irreducible-verdict
// record fails a witness check, which indicates a construction bug and must
// abort the run.
bool verify_record(ExtensionRecord& rec,
                   const std::vector<std::uint64_t>& fingerprint_primes);

}  // namespace rankforge

#endif
