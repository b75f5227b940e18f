#include "rankforge/pipeline.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace rankforge {

namespace {

std::vector<std::uint64_t> parse_prime_list(const std::string& s) {
  std::string norm = s;
  for (char& c : norm) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(norm);
  std::vector<std::uint64_t> out;
  unsigned long long v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) {
    throw std::invalid_argument("RANKFORGE_SIEVE_PRIMES: expected integers");
  }
  return out;
}

bool elliptic_shape(const CurveSpec& c) {
  return c.g == UniPoly::monomial(2, Rat(1)) && c.f.degree() == 3;
}

PathKind route_for(const RunConfig& cfg, long p) {
  const bool is_super = std::holds_alternative<SuperellipticSpec>(cfg.curve);
  if (cfg.path == "thm4") {
    if (!is_super) {
      throw std::invalid_argument("path thm4 needs a superelliptic input");
    }
    return PathKind::Thm4;
  }
  if (is_super) {
    if (cfg.path != "auto") {
      throw std::invalid_argument("superelliptic input only supports thm4");
    }
    return PathKind::Thm4;
  }
  const CurveSpec& curve = std::get<CurveSpec>(cfg.curve);
  if (cfg.path == "thm1") return PathKind::Thm1;
  if (cfg.path == "p2" || cfg.path == "p3") {
    const long want = cfg.path == "p2" ? 2 : 3;
    if (p != want) {
      throw std::invalid_argument("path " + cfg.path + " only constructs p=" +
                                  std::to_string(want));
    }
    return want == 2 ? PathKind::P2 : PathKind::P3;
  }
  if (cfg.path != "auto") {
    throw std::invalid_argument("unknown path: " + cfg.path);
  }
  if ((p == 2 || p == 3) && elliptic_shape(curve)) {
    return p == 2 ? PathKind::P2 : PathKind::P3;
  }
  return PathKind::Thm1;
}

std::string curve_label(const ExtensionRecord& rec) {
  if (rec.super) {
    std::ostringstream os;
    os << "y^" << rec.super->d << " = x^" << rec.super->k << " + ("
       << to_string(rec.super->D) << ")";
    return os.str();
  }
  if (rec.curve) return rec.curve->g.str("y") + " = " + rec.curve->f.str("x");
  return "?";
}

bool plans_match(const CoverPlan& a, const CoverPlan& b) {
  return a.q == b.q && a.a == b.a && a.b == b.b && a.mu == b.mu &&
         a.nu == b.nu && a.p == b.p && a.d == b.d && a.k == b.k &&
         a.bound_n == b.bound_n && a.swapped == b.swapped &&
         a.scale_e == b.scale_e;
}

bool plans_match(const SuperCoverPlan& a, const SuperCoverPlan& b) {
  return a.q == b.q && a.n_lcm == b.n_lcm && a.s == b.s && a.r == b.r &&
         a.p == b.p && a.d == b.d && a.k == b.k && a.d_scaled == b.d_scaled &&
         a.c1 == b.c1 && a.c2 == b.c2;
}

}  // namespace

int run_construct(RunConfig cfg, std::ostream& log) {
  try {
    if (cfg.factor.sieve_primes.empty()) {
      if (const char* env = std::getenv("RANKFORGE_SIEVE_PRIMES")) {
        cfg.factor.sieve_primes = parse_prime_list(env);
      }
    }
    if (cfg.primes.empty()) {
      throw std::invalid_argument("no extension degrees requested");
    }
    if (!is_prime(cfg.q)) throw std::invalid_argument("q must be prime");
    if (const CurveSpec* c = std::get_if<CurveSpec>(&cfg.curve)) {
      validate_curve(*c);
    } else {
      validate_super(std::get<SuperellipticSpec>(cfg.curve));
    }

    std::ofstream fout;
    std::ostream* out = &std::cout;
    if (!cfg.out_path.empty()) {
      fout.open(cfg.out_path);
      if (!fout) {
        throw std::invalid_argument("cannot open output file: " + cfg.out_path);
      }
      out = &fout;
    }

    long total_attempted = 0, total_accepted = 0, total_skipped = 0;
    for (long p : cfg.primes) {
      const PathKind route = route_for(cfg, p);
      std::optional<PlannedCover> planned;
      std::optional<SuperCoverPlan> splan;
      BiPoly h;
      if (route == PathKind::Thm1) {
        planned = plan_cover(std::get<CurveSpec>(cfg.curve), cfg.q, p);
        h = build_cover(planned->normalized, planned->plan);
      } else if (route == PathKind::Thm4) {
        splan = super_plan(std::get<SuperellipticSpec>(cfg.curve), cfg.q, p);
        h = super_build_cover(*splan);
      }

      long attempted = 0, accepted = 0, skipped = 0;
      std::vector<FieldFingerprint> accepted_fps;
      for (long u = cfg.u0_lo; u <= cfg.u0_hi; ++u) {
        if (cfg.budget > 0 && attempted >= cfg.budget) break;
        const Rat u0(u);
        ++attempted;
        ExtensionRecord rec;
        switch (route) {
          case PathKind::Thm1:
            rec = make_thm1_record(*planned, h, std::get<CurveSpec>(cfg.curve),
                                   u0, cfg.factor);
            break;
          case PathKind::Thm4:
            rec = make_thm4_record(std::get<SuperellipticSpec>(cfg.curve),
                                   *splan, h, u0, cfg.factor);
            break;
          case PathKind::P2:
          case PathKind::P3:
            rec = make_small_prime_record(std::get<CurveSpec>(cfg.curve), p,
                                          u0, cfg.q, cfg.factor);
            break;
        }
        std::vector<std::uint64_t> fp_primes;
        if (is_irreducible(rec.verdict)) {
          fp_primes = cfg.fingerprint_primes.empty()
                          ? default_fingerprint_primes(
                                rec.defining_poly, cfg.q,
                                cfg.fingerprint_prime_count)
                          : cfg.fingerprint_primes;
        }
        if (!verify_record(rec, fp_primes)) {
          log << "internal error: witness check failed at p=" << p
              << " u0=" << u << "\n";
          return 3;
        }
        (*out) << record_to_line(rec) << "\n";
        if (rec.accepted) {
          ++accepted;
          accepted_fps.push_back(rec.report.fingerprint);
        } else {
          ++skipped;
        }
      }
      const long classes =
          accepted_fps.empty()
              ? 0
              : static_cast<long>(distinctness_report(accepted_fps).class_count());
      log << "p=" << p << " [" << path_kind_name(route) << "]: attempted "
          << attempted << ", accepted " << accepted << ", skipped " << skipped
          << ", distinct fields " << classes << "\n";
      total_attempted += attempted;
      total_accepted += accepted;
      total_skipped += skipped;
    }
    log << "total: attempted " << total_attempted << ", accepted "
        << total_accepted << ", skipped " << total_skipped << "\n";
    if (!cfg.out_path.empty()) {
      log << "wrote " << total_attempted << " records to " << cfg.out_path
          << "\n";
    }
    return 0;
  } catch (const std::domain_error& e) {
    log << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    log << "internal error: " << e.what() << "\n";
    return 3;
  }
}

std::vector<std::string> recheck_record(const ExtensionRecord& rec) {
  std::vector<std::string> problems;

  // The defining polynomial must be reproducible from the recorded inputs.
  try {
    std::optional<UniPoly> rebuilt;
    switch (rec.kind) {
      case PathKind::Thm1: {
        if (!rec.curve || !rec.plan) {
          problems.push_back("thm1 record missing curve or plan");
          break;
        }
        PlannedCover planned = plan_cover(*rec.curve, rec.q, rec.p);
        if (!plans_match(planned.plan, *rec.plan)) {
          problems.push_back("recorded plan does not match replay");
        }
        rebuilt = specialize(build_cover(planned.normalized, planned.plan),
                             rec.u0);
        break;
      }
      case PathKind::Thm4: {
        if (!rec.super || !rec.lcm_plan) {
          problems.push_back("thm4 record missing family or plan");
          break;
        }
        SuperCoverPlan plan = super_plan(*rec.super, rec.q, rec.p);
        if (!plans_match(plan, *rec.lcm_plan)) {
          problems.push_back("recorded plan does not match replay");
        }
        rebuilt = specialize(super_build_cover(plan), rec.u0);
        break;
      }
      case PathKind::P2: {
        if (!rec.curve) {
          problems.push_back("p2 record missing curve");
          break;
        }
        rebuilt = UniPoly::monomial(2, Rat(1)) -
                  UniPoly::constant(rec.curve->f.eval(rec.u0));
        break;
      }
      case PathKind::P3: {
        if (!rec.curve) {
          problems.push_back("p3 record missing curve");
          break;
        }
        rebuilt = rec.curve->f - UniPoly::constant(rec.u0 * rec.u0);
        break;
      }
    }
    if (rebuilt && !(*rebuilt == rec.defining_poly)) {
      problems.push_back("defining polynomial does not match the recorded inputs");
    }
  } catch (const std::exception& e) {
    problems.push_back(std::string("replay failed: ") + e.what());
  }

  if (rec.defining_poly.degree() != rec.p) {
    problems.push_back("defining polynomial degree differs from p");
  }

  // Independent re-certification; only the irreducible/reducible split must
  // agree, since certificate kinds depend on configuration.
  try {
    IrreducibilityVerdict fresh = factor_over_rationals(rec.defining_poly);
    if (is_irreducible(fresh) != is_irreducible(rec.verdict)) {
      problems.push_back("irreducibility verdict mismatch");
    }
  } catch (const std::exception& e) {
    problems.push_back(std::string("re-certification failed: ") + e.what());
  }

  if (rec.verdict.eisenstein) {
    // Certificates are issued for the primitive part, so re-verify that.
    const UniPoly prim = UniPoly::from_integer_coeffs(
        rec.defining_poly.primitive_integer_form().coeffs);
    EisensteinCertificate fresh =
        eisenstein_check(prim, rec.verdict.eisenstein->prime);
    if (!fresh.verified ||
        fresh.content_valuation != rec.verdict.eisenstein->content_valuation ||
        fresh.leading_valuation != rec.verdict.eisenstein->leading_valuation) {
      problems.push_back("Eisenstein certificate does not re-verify");
    }
  }

  if (rec.verdict.kind == VerdictKind::Reducible) {
    if (rec.verdict.factors.size() < 2) {
      problems.push_back("reducible verdict without a proper factorization");
    } else {
      UniPoly prod = UniPoly::constant(rec.verdict.unit);
      for (const UniPoly& g : rec.verdict.factors) prod = prod * g;
      if (!(prod == rec.defining_poly)) {
        problems.push_back("recorded factorization does not multiply back");
      }
    }
  }

  if (rec.accepted) {
    if (!is_irreducible(rec.verdict)) {
      problems.push_back("accepted without an irreducibility certificate");
    }
    if (!rec.point_x || !rec.point_y) {
      problems.push_back("accepted record missing its point");
      return problems;
    }
    try {
      bool on_curve = false;
      if (rec.kind == PathKind::Thm4) {
        on_curve = verify_on_curve(*rec.point_x, *rec.point_y, *rec.super);
      } else if (rec.curve) {
        on_curve = verify_on_curve(*rec.point_x, *rec.point_y, *rec.curve);
      } else {
        problems.push_back("accepted record missing its curve");
      }
      if (!on_curve) {
        problems.push_back("point does not satisfy the curve equation");
      }
      if (!strictly_l_check(*rec.point_x, *rec.point_y, rec.p)) {
        problems.push_back("point does not generate a degree-p field");
      }
      const std::vector<Int> allowed = allowed_denominator_primes(rec);
      if (!s_integrality_check(*rec.point_x, allowed) ||
          !s_integrality_check(*rec.point_y, allowed)) {
        problems.push_back("coordinates are not S-integral");
      }
    } catch (const std::exception& e) {
      problems.push_back(std::string("witness replay failed: ") + e.what());
    }
    if (!(rec.report.on_curve && rec.report.strictly_l &&
          rec.report.s_integral)) {
      problems.push_back("stored report contradicts acceptance");
    }
    std::vector<std::uint64_t> fp_primes;
    for (const auto& e : rec.report.fingerprint.entries) {
      fp_primes.push_back(e.prime);
    }
    FieldFingerprint fresh = fingerprint(rec.defining_poly, fp_primes);
    bool fp_ok = fresh.entries.size() == rec.report.fingerprint.entries.size();
    if (fp_ok) {
      for (std::size_t i = 0; i < fresh.entries.size(); ++i) {
        const auto& a = fresh.entries[i];
        const auto& b = rec.report.fingerprint.entries[i];
        if (a.prime != b.prime || a.skipped != b.skipped ||
            a.degrees != b.degrees || a.disc_valuation != b.disc_valuation) {
          fp_ok = false;
          break;
        }
      }
    }
    if (!fp_ok) problems.push_back("fingerprint does not reproduce");
  } else {
    if (is_irreducible(rec.verdict)) {
      problems.push_back("irreducible record not accepted");
    }
    if (rec.skip_reason.empty()) {
      problems.push_back("skipped record without a reason");
    }
  }
  return problems;
}

int run_verify(const std::string& in_path, std::ostream& log) {
  std::ifstream in(in_path);
  if (!in) {
    log << "error: cannot open " << in_path << "\n";
    return 1;
  }
  long n = 0, bad = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++n;
    ExtensionRecord rec;
    try {
      rec = record_from_line(line);
    } catch (const std::invalid_argument& e) {
      log << "record " << n << ": " << e.what() << "\n";
      return 1;
    }
    const std::vector<std::string> problems = recheck_record(rec);
    if (!problems.empty()) {
      ++bad;
      log << "record " << n << ": FAIL";
      for (const std::string& s : problems) log << "; " << s;
      log << "\n";
    }
  }
  log << (n - bad) << " of " << n << " records verified\n";
  return bad == 0 ? 0 : 3;
}

int run_report(const std::string& in_path, std::ostream& log) {
  std::ifstream in(in_path);
  if (!in) {
    log << "error: cannot open " << in_path << "\n";
    return 1;
  }
  struct Group {
    long total = 0;
    long accepted = 0;
    std::vector<FieldFingerprint> fps;
    std::map<std::string, long> skip_reasons;
  };
  std::vector<std::string> order;
  std::map<std::string, Group> groups;
  std::map<std::string, long> verdicts;
  std::string line;
  long n = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++n;
    ExtensionRecord rec;
    try {
      rec = record_from_line(line);
    } catch (const std::invalid_argument& e) {
      log << "record " << n << ": " << e.what() << "\n";
      return 1;
    }
    std::ostringstream key;
    key << curve_label(rec) << ", p=" << rec.p << " ["
        << path_kind_name(rec.kind) << "]";
    if (!groups.count(key.str())) order.push_back(key.str());
    Group& g = groups[key.str()];
    ++g.total;
    if (rec.accepted) {
      ++g.accepted;
      g.fps.push_back(rec.report.fingerprint);
    } else {
      ++g.skip_reasons[rec.skip_reason.empty() ? "(unspecified)"
                                               : rec.skip_reason];
    }
    ++verdicts[verdict_kind_name(rec.verdict.kind)];
  }
  if (n == 0) {
    log << "no records\n";
    return 0;
  }
  for (const std::string& key : order) {
    const Group& g = groups[key];
    const long classes =
        g.fps.empty()
            ? 0
            : static_cast<long>(distinctness_report(g.fps).class_count());
    const double ratio =
        g.total == 0 ? 0.0
                     : 100.0 * static_cast<double>(g.total - g.accepted) /
                           static_cast<double>(g.total);
    log << key << ": records " << g.total << ", accepted " << g.accepted
        << ", skipped " << (g.total - g.accepted) << " (" << std::fixed
        << std::setprecision(1) << ratio << "%), distinct fields " << classes
        << "\n";
    for (const auto& [reason, count] : g.skip_reasons) {
      log << "  skipped " << count << ": " << reason << "\n";
    }
  }
  log << "verdicts:";
  for (const auto& [kind, count] : verdicts) {
    log << " " << kind << "=" << count;
  }
  log << "\n";
  return 0;
}

}  // namespace rankforge
