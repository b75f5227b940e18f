#include "rankforge/catalog.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rankforge {

namespace {

using json = nlohmann::ordered_json;

json poly_json(const UniPoly& f) {
  json arr = json::array();
  for (long i = 0; i <= f.degree(); ++i) arr.push_back(to_string(f.coeff(i)));
  return arr;
}

UniPoly poly_from(const json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("polynomial: expected array");
  std::vector<Rat> cs;
  cs.reserve(arr.size());
  for (const auto& v : arr) cs.push_back(parse_rat(v.get<std::string>()));
  return UniPoly(std::move(cs));
}

json verdict_json(const IrreducibilityVerdict& v) {
  json j;
  j["kind"] = verdict_kind_name(v.kind);
  if (v.eisenstein) {
    j["eisenstein"] = {{"prime", to_string(v.eisenstein->prime)},
                       {"content_valuation", v.eisenstein->content_valuation},
                       {"leading_valuation", v.eisenstein->leading_valuation}};
  }
  if (!v.sieve_primes.empty()) j["sieve_primes"] = v.sieve_primes;
  if (v.modular_prime) j["modular_prime"] = *v.modular_prime;
  if (v.lift_prime) j["lift_prime"] = *v.lift_prime;
  if (v.kind == VerdictKind::Reducible) {
    j["unit"] = to_string(v.unit);
    json fs = json::array();
    for (const UniPoly& g : v.factors) fs.push_back(poly_json(g));
    j["factors"] = fs;
  }
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

IrreducibilityVerdict verdict_from(const json& j) {
  IrreducibilityVerdict v;
  auto kind = verdict_kind_from_name(j.at("kind").get<std::string>());
  if (!kind) throw std::invalid_argument("verdict: unknown kind");
  v.kind = *kind;
  if (j.contains("eisenstein")) {
    EisensteinCertificate cert;
    cert.prime = parse_int(j["eisenstein"].at("prime").get<std::string>());
    cert.content_valuation = j["eisenstein"].at("content_valuation").get<long>();
    cert.leading_valuation = j["eisenstein"].at("leading_valuation").get<long>();
    cert.verified = true;
    v.eisenstein = cert;
  }
  if (j.contains("sieve_primes")) {
    v.sieve_primes = j["sieve_primes"].get<std::vector<std::uint64_t>>();
  }
  if (j.contains("modular_prime")) {
    v.modular_prime = j["modular_prime"].get<std::uint64_t>();
  }
  if (j.contains("lift_prime")) {
    v.lift_prime = j["lift_prime"].get<std::uint64_t>();
  }
  if (j.contains("unit")) v.unit = parse_rat(j["unit"].get<std::string>());
  if (j.contains("factors")) {
    for (const auto& g : j["factors"]) v.factors.push_back(poly_from(g));
  }
  if (j.contains("detail")) v.detail = j["detail"].get<std::string>();
  return v;
}

json fingerprint_json(const FieldFingerprint& fp) {
  json arr = json::array();
  for (const auto& e : fp.entries) {
    json je;
    je["prime"] = e.prime;
    je["skipped"] = e.skipped;
    if (!e.skipped) je["degrees"] = e.degrees;
    je["disc_valuation"] = e.disc_valuation;
    arr.push_back(je);
  }
  return arr;
}

FieldFingerprint fingerprint_from(const json& arr) {
  FieldFingerprint fp;
  for (const auto& je : arr) {
    FieldFingerprint::Entry e;
    e.prime = je.at("prime").get<std::uint64_t>();
    e.skipped = je.at("skipped").get<bool>();
    if (je.contains("degrees")) e.degrees = je["degrees"].get<std::vector<long>>();
    e.disc_valuation = je.at("disc_valuation").get<long>();
    fp.entries.push_back(std::move(e));
  }
  return fp;
}

}  // namespace

std::string record_to_line(const ExtensionRecord& rec) {
  json j;
  j["schema_version"] = kCatalogSchemaVersion;
  j["kind"] = path_kind_name(rec.kind);
  if (rec.curve) {
    j["curve"] = {{"f", poly_json(rec.curve->f)}, {"g", poly_json(rec.curve->g)}};
  }
  if (rec.super) {
    j["super"] = {{"d", rec.super->d},
                  {"k", rec.super->k},
                  {"D", to_string(rec.super->D)}};
  }
  j["q"] = to_string(rec.q);
  j["p"] = rec.p;
  if (rec.plan) {
    const CoverPlan& pl = *rec.plan;
    j["plan"] = {{"a", pl.a},       {"b", pl.b},
                 {"mu", pl.mu},     {"nu", pl.nu},
                 {"d", pl.d},       {"k", pl.k},
                 {"bound_n", pl.bound_n}, {"swapped", pl.swapped},
                 {"scale_e", pl.scale_e}};
  }
  if (rec.lcm_plan) {
    const SuperCoverPlan& pl = *rec.lcm_plan;
    j["lcm_plan"] = {{"n", pl.n_lcm},
                     {"s", pl.s},
                     {"r", pl.r},
                     {"d", pl.d},
                     {"k", pl.k},
                     {"d_scaled", to_string(pl.d_scaled)},
                     {"c1", pl.c1},
                     {"c2", pl.c2}};
  }
  j["u0"] = to_string(rec.u0);
  j["defining_poly"] = poly_json(rec.defining_poly);
  j["verdict"] = verdict_json(rec.verdict);
  j["accepted"] = rec.accepted;
  if (!rec.skip_reason.empty()) j["skip_reason"] = rec.skip_reason;
  if (rec.point_x) j["point_x"] = poly_json(rec.point_x->rep());
  if (rec.point_y) j["point_y"] = poly_json(rec.point_y->rep());
  if (rec.accepted) {
    j["report"] = {{"on_curve", rec.report.on_curve},
                   {"strictly_l", rec.report.strictly_l},
                   {"s_integral", rec.report.s_integral}};
    j["fingerprint"] = fingerprint_json(rec.report.fingerprint);
  }
  return j.dump();
}

ExtensionRecord record_from_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("catalog line: ") + e.what());
  }
  try {
    if (j.at("schema_version").get<int>() != kCatalogSchemaVersion) {
      throw std::invalid_argument("catalog line: unsupported schema_version");
    }
    ExtensionRecord rec;
    auto kind = path_kind_from_name(j.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("catalog line: unknown kind");
    rec.kind = *kind;
    if (j.contains("curve")) {
      CurveSpec c{poly_from(j["curve"].at("f")), poly_from(j["curve"].at("g"))};
      rec.curve = c;
    }
    if (j.contains("super")) {
      SuperellipticSpec s;
      s.d = j["super"].at("d").get<long>();
      s.k = j["super"].at("k").get<long>();
      s.D = parse_rat(j["super"].at("D").get<std::string>());
      rec.super = s;
    }
    rec.q = parse_int(j.at("q").get<std::string>());
    rec.p = j.at("p").get<long>();
    if (j.contains("plan")) {
      CoverPlan pl;
      const json& jp = j["plan"];
      pl.q = rec.q;
      pl.a = jp.at("a").get<long>();
      pl.b = jp.at("b").get<long>();
      pl.mu = jp.at("mu").get<long>();
      pl.nu = jp.at("nu").get<long>();
      pl.d = jp.at("d").get<long>();
      pl.k = jp.at("k").get<long>();
      pl.p = rec.p;
      pl.bound_n = jp.at("bound_n").get<long>();
      pl.swapped = jp.at("swapped").get<bool>();
      pl.scale_e = jp.at("scale_e").get<long>();
      rec.plan = pl;
    }
    if (j.contains("lcm_plan")) {
      SuperCoverPlan pl;
      const json& jp = j["lcm_plan"];
      pl.q = rec.q;
      pl.n_lcm = jp.at("n").get<long>();
      pl.s = jp.at("s").get<long>();
      pl.r = jp.at("r").get<long>();
      pl.d = jp.at("d").get<long>();
      pl.k = jp.at("k").get<long>();
      pl.p = rec.p;
      pl.d_scaled = parse_rat(jp.at("d_scaled").get<std::string>());
      pl.c1 = jp.at("c1").get<long>();
      pl.c2 = jp.at("c2").get<long>();
      rec.lcm_plan = pl;
    }
    rec.u0 = parse_rat(j.at("u0").get<std::string>());
    rec.defining_poly = poly_from(j.at("defining_poly"));
    rec.verdict = verdict_from(j.at("verdict"));
    rec.accepted = j.at("accepted").get<bool>();
    if (j.contains("skip_reason")) {
      rec.skip_reason = j["skip_reason"].get<std::string>();
    }
    if (j.contains("point_x")) {
      rec.point_x = QuotElem(rec.defining_poly, poly_from(j["point_x"]));
    }
    if (j.contains("point_y")) {
      rec.point_y = QuotElem(rec.defining_poly, poly_from(j["point_y"]));
    }
    if (j.contains("report")) {
      rec.report.on_curve = j["report"].at("on_curve").get<bool>();
      rec.report.strictly_l = j["report"].at("strictly_l").get<bool>();
      rec.report.s_integral = j["report"].at("s_integral").get<bool>();
    }
    if (j.contains("fingerprint")) {
      rec.report.fingerprint = fingerprint_from(j["fingerprint"]);
    }
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("catalog line: ") + e.what());
  }
}

CurveInput parse_curve_input(const std::string& text) {
  std::map<std::string, std::string> fields;
  std::istringstream in(text);
  std::string line;
  auto trim = [](std::string s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return std::string();
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("curve file: expected 'name: value' in \"" +
                                  line + "\"");
    }
    fields[trim(line.substr(0, colon))] = trim(line.substr(colon + 1));
  }
  auto need = [&](const std::string& name) -> const std::string& {
    auto it = fields.find(name);
    if (it == fields.end()) {
      throw std::invalid_argument("curve file: missing field '" + name + "'");
    }
    return it->second;
  };
  auto parse_poly = [](const std::string& s) {
    std::istringstream ps(s);
    std::vector<Rat> cs;
    std::string tok;
    while (ps >> tok) cs.push_back(parse_rat(tok));
    return UniPoly(std::move(cs));
  };
  const std::string kind = need("kind");
  if (kind == "curve") {
    CurveSpec c{parse_poly(need("f")), parse_poly(need("g"))};
    validate_curve(c);
    return c;
  }
  if (kind == "super") {
    SuperellipticSpec s;
    s.d = std::stol(need("d"));
    s.k = std::stol(need("k"));
    s.D = parse_rat(need("D"));
    validate_super(s);
    return s;
  }
  throw std::invalid_argument("curve file: kind must be 'curve' or 'super'");
}

CurveInput load_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open curve file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_curve_input(buf.str());
}

}  // namespace rankforge
