#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rankforge/pipeline.hpp"

namespace {

std::pair<long, long> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  std::size_t pos = 0;
  if (dots == std::string::npos) {
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad range: " + s);
    return {v, v};
  }
  const std::string lo_s = s.substr(0, dots), hi_s = s.substr(dots + 2);
  const long lo = std::stol(lo_s, &pos);
  if (pos != lo_s.size()) throw std::invalid_argument("bad range: " + s);
  const long hi = std::stol(hi_s, &pos);
  if (pos != hi_s.size()) throw std::invalid_argument("bad range: " + s);
  return {lo, hi};
}

std::vector<std::uint64_t> parse_u64_list(const std::string& s) {
  std::string norm = s;
  for (char& c : norm) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(norm);
  std::vector<std::uint64_t> out;
  unsigned long long v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw std::invalid_argument("expected integer list: " + s);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rankforge: construct degree-p field extensions with marked points on "
      "curves g(y) = f(x), and verify or summarize the resulting catalogs"};
  app.require_subcommand(1);

  std::string curve_path, q_str, out_path, fmode = "auto";
  std::string p_range, u0_range = "1..20", fprimes;
  std::vector<long> ps;
  long budget = 0;

  CLI::App* c = app.add_subcommand(
      "construct", "scan u0 over a range for each degree p and emit records");
  c->add_option("--curve", curve_path, "curve description file")->required();
  c->add_option("--q", q_str, "auxiliary prime q")->required();
  c->add_option("--p", ps, "extension degree (repeatable)");
  c->add_option("--p-range", p_range, "degrees A..B (non-primes dropped)");
  c->add_option("--u0-range", u0_range, "integer specializations A..B")
      ->capture_default_str();
  c->add_option("--budget", budget,
                "max specializations per degree (0 = whole range)")
      ->capture_default_str();
  c->add_option("--out", out_path, "catalog output path (default stdout)");
  c->add_option("--fingerprint-primes", fprimes,
                "comma separated primes used for field fingerprints");
  c->add_option("--path", fmode, "thm1 | thm4 | p2 | p3 | auto")
      ->capture_default_str()
      ->check(CLI::IsMember({"thm1", "thm4", "p2", "p3", "auto"}));

  std::string verify_in;
  CLI::App* v =
      app.add_subcommand("verify", "re-check every record of a catalog");
  v->add_option("catalog", verify_in, "catalog path")->required();

  std::string report_in;
  CLI::App* r = app.add_subcommand(
      "report", "summarize acceptance and field distinctness per curve and p");
  r->add_option("catalog", report_in, "catalog path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c->parsed()) {
      rankforge::RunConfig cfg;
      cfg.curve = rankforge::load_curve_file(curve_path);
      cfg.q = rankforge::parse_int(q_str);
      cfg.primes = ps;
      if (!p_range.empty()) {
        const auto [lo, hi] = parse_range(p_range);
        for (long p = lo; p <= hi; ++p) {
          if (rankforge::is_prime(rankforge::Int(p))) cfg.primes.push_back(p);
        }
      }
      const auto [ulo, uhi] = parse_range(u0_range);
      cfg.u0_lo = ulo;
      cfg.u0_hi = uhi;
      cfg.budget = budget;
      cfg.out_path = out_path;
      cfg.path = fmode;
      if (!fprimes.empty()) cfg.fingerprint_primes = parse_u64_list(fprimes);
      return rankforge::run_construct(std::move(cfg), std::cerr);
    }
    if (v->parsed()) return rankforge::run_verify(verify_in, std::cerr);
    if (r->parsed()) return rankforge::run_report(report_in, std::cerr);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
