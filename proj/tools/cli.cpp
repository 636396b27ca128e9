#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "tricomi/asym.hpp"
#include "tricomi/exact.hpp"
#include "tricomi/harness.hpp"
#include "tricomi/suites.hpp"

namespace tricomi::cli {

namespace {

using json = nlohmann::ordered_json;
using mp::Complex;
using mp::LogComplex;
using mp::Precision;
using mp::Real;

// Values leave the process as (log_mod, phase); the plain value is added
// only where exp(log_mod) is comfortably inside the double range.
constexpr double kValueLogLimit = 700.0;

struct Common {
  long bits = 0;  // 0: environment or default
  std::string alpha = "1";
  double delta = asym::Params{}.delta;
  double epsilon = asym::Params{}.epsilon;
};

Precision resolve_precision(long flag_bits) {
  if (flag_bits != 0) return Precision(flag_bits);
  if (const char* env = std::getenv(kPrecisionEnv); env != nullptr && *env != '\0') {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0') throw ConfigError(std::string(kPrecisionEnv) + " must be an integer, got '" + env + "'");
    return Precision(v);
  }
  return Precision(mp::kDefaultBits);
}

Real parse_real(const std::string& text, Precision p, const char* what) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
  if (t.empty()) throw ConfigError(std::string(what) + ": empty number");
  char* end = nullptr;
  std::strtod(t.c_str(), &end);
  if (*end != '\0') throw ConfigError(std::string(what) + ": not a number: '" + text + "'");
  Real r(t, p);
  if (!r.is_finite()) throw ConfigError(std::string(what) + ": must be finite");
  return r;
}

Real parse_alpha(const std::string& text, Precision p) {
  Real a = parse_real(text, p, "--alpha");
  if (a.sign() <= 0) throw ConfigError("--alpha must be positive");
  return a;
}

Complex parse_point(const std::string& text, Precision p) {
  auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw ConfigError("a point is written re,im; got '" + text + "'");
  return Complex(parse_real(text.substr(0, comma), p, "point"), parse_real(text.substr(comma + 1), p, "point"));
}

std::vector<Complex> parse_point_list(const std::string& text, Precision p) {
  std::vector<Complex> pts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';'))
    if (!item.empty()) pts.push_back(parse_point(item, p));
  if (pts.empty()) throw ConfigError("--z-list is empty");
  return pts;
}

asym::Params make_params(const Common& c) {
  asym::Params prm{c.delta, c.epsilon};
  prm.validate();
  return prm;
}

std::optional<asym::Region> parse_region(const std::string& s) {
  for (auto r : {asym::Region::Origin, asym::Region::A, asym::Region::B, asym::Region::C, asym::Region::D})
    if (s == asym::region_name(r)) return r;
  return std::nullopt;
}

std::string g17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Doubles as JSON numbers (17 significant digits); non-finite as strings.
json jnum(double v) {
  if (std::isfinite(v)) return v;
  return g17(v);
}

// The log representation: doubles plus full-precision decimal strings.
void put_log(json& o, const LogComplex& v) {
  o["log_mod"] = jnum(v.log_mod().to_double());
  o["phase"] = jnum(v.is_zero() ? 0.0 : v.reduced_phase().to_double());
  o["log_mod_full"] = v.log_mod().to_string();
  o["phase_full"] = v.is_zero() ? std::string("0") : v.reduced_phase().to_string();
  if (!v.is_zero() && std::abs(v.log_mod().to_double()) < kValueLogLimit) {
    Complex c = v.to_complex();
    o["value_re"] = c.re().to_double();
    o["value_im"] = c.im().to_double();
  } else if (v.is_zero()) {
    o["value_re"] = 0.0;
    o["value_im"] = 0.0;
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// ------------------------------------------------------------------ eval

int cmd_eval(const Common& c, const std::string& mode, long n, const std::string& z_text, bool rescaled, std::ostream& out) {
  Precision p = resolve_precision(c.bits);
  if (n < 0) throw ConfigError("--n must be >= 0");
  Real a = parse_alpha(c.alpha, p);
  Complex z = parse_point(z_text, p);
  json o;
  o["mode"] = mode;
  o["n"] = n;
  o["alpha"] = a.to_double();
  o["z_re"] = z.re().to_double();
  o["z_im"] = z.im().to_double();
  o["rescaled"] = rescaled;
  o["precision_bits"] = p.bits();
  if (mode == "exact") {
    LogComplex v = rescaled ? exact::eval_monic_rescaled(n, a, z, p) : exact::eval_f(n, a, z, p);
    put_log(o, v);
    o["dropped_term_bound"] = nullptr;
  } else {
    if (!rescaled) throw ConfigError("--mode asym evaluates pi_n(z / sqrt(n)) only; drop --rescaled=false");
    if (n < 1) throw ConfigError("--mode asym needs --n >= 1");
    asym::AsymResult r = asym::eval_asym(n, a, z, make_params(c));
    o["region"] = asym::region_name(r.region.tag);
    o["negated"] = r.region.quadrant_map.negated;
    o["conjugated"] = r.region.quadrant_map.conjugated;
    put_log(o, r.value);
    o["dropped_term_bound"] = jnum(r.dropped_term_bound.to_double());
    o["flags"] = r.flags();
  }
  out << o.dump(2) << '\n';
  return kExitOk;
}

// --------------------------------------------------------------- compare

struct CompareArgs {
  std::vector<long> n_list;
  std::string grid;
  std::string z_list;
  std::string region_grid;
  std::string format = "csv";
  std::string output;
  int threads = 1;
};

void write_csv(const std::vector<harness::EvalRecord>& recs, std::ostream& os) {
  os << kCompareHeader << '\n';
  auto log_pair = [](const std::optional<LogComplex>& v) -> std::pair<std::string, std::string> {
    if (!v) return {"", ""};
    if (v->is_zero()) return {"-inf", "0"};
    return {v->log_mod().to_string(), v->reduced_phase().to_string()};
  };
  for (const auto& r : recs) {
    auto [em, ep] = log_pair(r.log_exact);
    auto [am, ap] = log_pair(r.log_asym);
    std::string flags = r.flags();
    if (!r.error().empty()) flags += (flags.empty() ? "" : " ") + std::string("error=") + r.error();
    os << r.n << ',' << g17(r.alpha.to_double()) << ',' << g17(r.z.re().to_double()) << ',' << g17(r.z.im().to_double()) << ','
       << (r.region ? asym::region_name(*r.region) : "") << ',' << em << ',' << ep << ',' << am << ',' << ap << ','
       << (r.rel_err ? g17(r.rel_err->to_double()) : "") << ',' << (r.dropped_term_bound ? g17(r.dropped_term_bound->to_double()) : "")
       << ',' << csv_field(flags) << '\n';
  }
}

json record_json(const harness::EvalRecord& r) {
  auto put = [](json& o, const char* mod_key, const char* phase_key, const std::optional<LogComplex>& v) {
    if (!v) {
      o[mod_key] = nullptr;
      o[phase_key] = nullptr;
    } else {
      o[mod_key] = jnum(v->log_mod().to_double());
      o[phase_key] = jnum(v->is_zero() ? 0.0 : v->reduced_phase().to_double());
    }
  };
  json o;
  o["n"] = r.n;
  o["alpha"] = r.alpha.to_double();
  o["z_re"] = r.z.re().to_double();
  o["z_im"] = r.z.im().to_double();
  o["region"] = r.region ? json(asym::region_name(*r.region)) : json(nullptr);
  put(o, "log_exact_mod", "log_exact_phase", r.log_exact);
  put(o, "log_asym_mod", "log_asym_phase", r.log_asym);
  o["rel_err"] = r.rel_err ? jnum(r.rel_err->to_double()) : json(nullptr);
  o["dropped_term_bound"] = r.dropped_term_bound ? jnum(r.dropped_term_bound->to_double()) : json(nullptr);
  o["flags"] = r.flags();
  o["error"] = r.error().empty() ? json(nullptr) : json(r.error());
  return o;
}

int cmd_compare(const Common& c, const CompareArgs& a, std::ostream& out) {
  Precision p = resolve_precision(c.bits);
  Real alpha = parse_alpha(c.alpha, p);
  asym::Params prm = make_params(c);
  if (a.n_list.empty()) throw ConfigError("--n-list is required");
  for (long n : a.n_list)
    if (n < 1) throw ConfigError("--n-list entries must be >= 1");
  if (a.threads < 1) throw ConfigError("--threads must be >= 1");
  int sources = !a.grid.empty() + !a.z_list.empty() + !a.region_grid.empty();
  if (sources != 1) throw ConfigError("give exactly one of --grid, --z-list, --region-grid");
  if (a.format != "csv" && a.format != "json") throw ConfigError("--format must be csv or json");
  std::vector<Complex> pts;
  if (!a.grid.empty()) {
    pts = harness::grid_points(harness::parse_grid(a.grid), p);
  } else if (!a.z_list.empty()) {
    pts = parse_point_list(a.z_list, p);
  } else {
    auto r = parse_region(a.region_grid);
    if (!r) throw ConfigError("--region-grid must be one of Origin, A, B, C, D");
    pts = harness::default_region_grid(*r, a.n_list.front(), alpha, prm, p);
  }
  auto recs = harness::compare_sweep(a.n_list, alpha, pts, prm, p, a.threads);
  std::ofstream file;
  std::ostream* os = &out;
  if (!a.output.empty()) {
    file.open(a.output, std::ios::out | std::ios::trunc);
    if (!file) throw ConfigError("cannot open --output '" + a.output + "'");
    os = &file;
  }
  if (a.format == "csv") {
    write_csv(recs, *os);
  } else {
    json o;
    o["alpha"] = alpha.to_double();
    o["precision_bits"] = p.bits();
    o["delta"] = prm.delta;
    o["epsilon"] = prm.epsilon;
    json rows = json::array();
    for (const auto& r : recs) rows.push_back(record_json(r));
    o["records"] = rows;
    *os << o.dump(2) << '\n';
  }
  return kExitOk;
}

// ----------------------------------------------------------------- ortho

int cmd_ortho(const Common& c, long max_deg, long k_max, bool serial, std::ostream& out) {
  Precision p = resolve_precision(c.bits);
  Real alpha = parse_alpha(c.alpha, p);
  if (k_max < 0) throw ConfigError("--kmax must be >= 0");
  harness::OrthoReport r = harness::ortho_report(alpha, max_deg, k_max, p, serial);
  json o;
  o["alpha"] = alpha.to_double();
  o["max_deg"] = max_deg;
  o["k_max"] = k_max;
  o["precision_bits"] = p.bits();
  o["all_within"] = r.all_within;
  o["odd_exact_zero"] = r.odd_exact_zero;
  json rows = json::array();
  for (const auto& e : r.entries) {
    json j;
    j["m"] = e.m;
    j["n"] = e.n;
    j["value"] = e.value.to_double();
    j["tail_bound"] = e.tail_bound.to_double();
    j["expected"] = e.expected.to_double();
    j["deviation"] = e.deviation.to_double();
    j["within_bound"] = e.within_bound;
    j["exact_zero"] = e.exact_zero;
    rows.push_back(j);
  }
  o["entries"] = rows;
  out << o.dump(2) << '\n';
  return kExitOk;
}

// --------------------------------------------------------------- regions

int cmd_regions(const Common& c, long n, const std::string& z_text, bool as_json, std::ostream& out) {
  Precision p = resolve_precision(c.bits);
  if (n < 1) throw ConfigError("--n must be >= 1");
  Real alpha = parse_alpha(c.alpha, p);
  Complex z = parse_point(z_text, p);
  asym::RegionLabel lab = asym::classify(n, alpha, z, make_params(c));
  if (as_json) {
    json o;
    o["region"] = asym::region_name(lab.tag);
    o["negated"] = lab.quadrant_map.negated;
    o["conjugated"] = lab.quadrant_map.conjugated;
    out << o.dump() << '\n';
  } else {
    out << asym::region_name(lab.tag) << '\n';
  }
  return kExitOk;
}

// -------------------------------------------------------------- selftest

int cmd_selftest(std::ostream& out) {
  int failed = 0;
  for (const auto& s : suites::acceptance_suites()) {
    auto r = suites::run_suite(s);
    out << suites::format_line(r) << '\n' << std::flush;
    if (!r.pass) ++failed;
  }
  out << (failed == 0 ? "selftest: all suites passed" : "selftest: " + std::to_string(failed) + " suite(s) failed") << '\n';
  return failed == 0 ? kExitOk : kExitSelftestFailed;
}

int report_error(std::ostream& out, int code, const std::string& kind, const std::string& message) {
  json o;
  o["error"] = {{"kind", kind}, {"message", message}, {"exit_code", code}};
  out << o.dump() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tricomi-Carlitz polynomials: exact recurrence vs. uniform asymptotics", "tricomi"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--prec", c.bits, "Working precision in bits (>= 64; default $TRICOMI_PREC or 256)");

  auto add_shape = [&c](CLI::App* sub, bool with_alpha) {
    if (with_alpha) sub->add_option("--alpha", c.alpha, "Parameter alpha > 0 (decimal, rounded once)")->capture_default_str();
    sub->add_option("--delta", c.delta, "Strip half-width delta")->capture_default_str();
    sub->add_option("--epsilon", c.epsilon, "Disk radius epsilon (< delta)")->capture_default_str();
  };

  std::string mode, z_text;
  long n = 0;
  bool rescaled = true;
  auto* eval = app.add_subcommand("eval", "Evaluate one value as JSON");
  eval->add_option("--mode", mode, "exact or asym")->required()->check(CLI::IsMember({"exact", "asym"}));
  eval->add_option("--n", n, "Degree")->required();
  eval->add_option("--z", z_text, "Point re,im")->required();
  eval->add_option("--rescaled", rescaled, "true: pi_n(z / sqrt(n)); false: f_n(z) (exact mode only)")->capture_default_str();
  add_shape(eval, true);

  CompareArgs ca;
  auto* compare = app.add_subcommand("compare", "Exact vs. asymptotic sweep (CSV or JSON)");
  compare->add_option("--n-list", ca.n_list, "Degrees, comma separated")->required()->delimiter(',');
  compare->add_option("--grid", ca.grid, "re0:re1:nre,im0:im1:nim (inclusive, linear)");
  compare->add_option("--z-list", ca.z_list, "Points re,im;re,im;...");
  compare->add_option("--region-grid", ca.region_grid, "Default interior grid of a region: Origin, A, B, C, D");
  compare->add_option("--format", ca.format, "csv or json")->capture_default_str();
  compare->add_option("--output", ca.output, "Write to this file instead of standard output");
  compare->add_option("--threads", ca.threads, "Sweep threads (1 gives byte-identical reruns)")->capture_default_str();
  add_shape(compare, true);

  long max_deg = 4, k_max = 100000;
  bool serial = false;
  auto* ortho = app.add_subcommand("ortho", "Discrete orthogonality report (JSON)");
  ortho->add_option("--max-deg", max_deg, "Largest degree (<= 10)")->capture_default_str();
  ortho->add_option("--kmax", k_max, "Last node index summed")->capture_default_str();
  ortho->add_flag("--serial", serial, "Use the serial reference kernel");
  ortho->add_option("--alpha", c.alpha, "Parameter alpha > 0")->capture_default_str();

  bool as_json = false;
  auto* regions = app.add_subcommand("regions", "Print the region label of a point");
  regions->add_option("--n", n, "Degree")->required();
  regions->add_option("--z", z_text, "Point re,im")->required();
  regions->add_flag("--json", as_json, "Emit {region, negated, conjugated}");
  add_shape(regions, true);

  auto* selftest = app.add_subcommand("selftest", "Run the invariant suites; nonzero exit on failure");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    err << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report_error(out, kExitConfig, "config_error", e.what());
  }

  try {
    if (*eval) return cmd_eval(c, mode, n, z_text, rescaled, out);
    if (*compare) return cmd_compare(c, ca, out);
    if (*ortho) return cmd_ortho(c, max_deg, k_max, serial, out);
    if (*regions) return cmd_regions(c, n, z_text, as_json, out);
    if (*selftest) return cmd_selftest(out);
  } catch (const ConfigError& e) {
    return report_error(out, kExitConfig, "config_error", e.what());
  } catch (const DomainError& e) {
    return report_error(out, kExitDomain, "domain_error", e.what());
  } catch (const harness::FitError& e) {
    return report_error(out, kExitDomain, "domain_error", e.what());
  }
  return report_error(out, kExitConfig, "config_error", "no subcommand");
}

}  // namespace tricomi::cli
