#include "mtc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "mtc/analytic.hpp"
#include "mtc/error.hpp"
#include "mtc/modgroup.hpp"
#include "mtc/specialforms.hpp"
#include "mtc/weilrep.hpp"

namespace mtc::cli {

namespace {

const char* status_name(int code) {
  switch (code) {
    case kPass: return "pass";
    case kMismatch: return "mismatch";
    case kConvergence: return "convergence-failure";
    default: return "error";
  }
}

CheckOutcome verdict(bool ok, std::string msg, Json detail = Json::object()) {
  return {ok ? kPass : kMismatch, std::move(msg), std::move(detail)};
}

bool faulted(const RunConfig& cfg, const std::string& id) {
  return std::find(cfg.inject_fault.begin(), cfg.inject_fault.end(), id) != cfg.inject_fault.end();
}

Check identity_check(const RunConfig& cfg, const std::string& id) {
  return {id, false, [cfg, id] {
            const IdentityReport r = verify_identity(id, cfg.bound, {cfg.force, faulted(cfg, id)});
            std::string msg = r.equal ? "exact through q^" + to_string(r.bound)
                                      : "first mismatch at q^" + (r.first_mismatch ? to_string(*r.first_mismatch) : "?");
            return verdict(r.equal, msg, to_json(r));
          }};
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << x;
  return os.str();
}

std::string point_name(Complex z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

std::vector<Complex> sample_points(const RunConfig& cfg) {
  std::vector<Complex> out;
  if (cfg.sample_points.empty())
    for (const auto& p : standard_sample_points()) out.push_back(p.z);
  else
    for (const auto& s : cfg.sample_points) out.push_back(parse_sample_point(s).z);
  return out;
}

std::vector<Check> numeric_checks(const RunConfig& cfg) {
  std::vector<Check> out;
  const double tol = cfg.tolerance;
  const double budget_tol = tol * 1e-2;
  const double t_tol = std::min(tol, 1e-10);
  const double eta_tol = std::min(tol, 1e-9);
  for (const Complex z : sample_points(cfg)) {
    for (const char v : {'F', 'G'}) {
      const std::string at = std::string(1, v) + "@" + point_name(z);
      out.push_back({"numeric-S-" + at, true, [=] {
                       const ResidualReport r = check_S_transformation(v, z);
                       return verdict(r.max_residual < tol && r.max_error_budget < budget_tol,
                                      "max residual " + fmt(r.max_residual) + ", error budget " + fmt(r.max_error_budget),
                                      to_json(r));
                     }});
      out.push_back({"numeric-T-" + at, true, [=] {
                       const ResidualReport r = check_T_transformation(v, z);
                       return verdict(r.max_residual < t_tol, "max residual " + fmt(r.max_residual), to_json(r));
                     }});
    }
  }
  out.push_back({"numeric-eta-S", true, [=] {
                   std::vector<Complex> pts = {{0, 1}, {0, 2}, {0.25, 1}, {-1.0 / 3.0, 1.5}, {0.3, 0.7}};
                   double worst = 0.0;
                   Json per = Json::array();
                   for (const Complex z : pts) {
                     const double r = eta_S_residual(z);
                     worst = std::max(worst, r);
                     per.push_back({{"z", to_json(z)}, {"abs_residual", r}});
                   }
                   return verdict(worst < eta_tol, "max residual " + fmt(worst), {{"points", per}});
                 }});
  return out;
}

std::vector<Check> weil_checks(const RunConfig& cfg) {
  std::vector<Check> out;
  out.push_back({"weil-intertwining", false, [] {
                   const IntertwiningReport r = verify_intertwining();
                   return verdict(r.t_holds && r.s_holds,
                                  "T " + std::string(r.t_holds ? "holds" : "fails") + ", S " +
                                      (r.s_holds ? "holds" : "fails") + " on " + std::to_string(r.cells_checked) +
                                      " cells each",
                                  to_json(r));
                 }});
  out.push_back({"weil-metaplectic", false, [] {
                   const bool ok = verify_metaplectic();
                   return verdict(ok, ok ? "(rho_S rho_T)^3 = rho_S^2" : "(rho_S rho_T)^3 != rho_S^2", {{"holds", ok}});
                 }});
  out.push_back({"weil-assembly-rank", false, [] {
                   const int r = rank(assembly());
                   return verdict(r == 6, "rank " + std::to_string(r), {{"rank", r}});
                 }});
  out.push_back({"weil-vanishing", false, [cfg] {
                   if (!cfg.force && cfg.bound < identity_min_bound())
                     throw Error(ErrorKind::insufficient_precision, "bound " + to_string(cfg.bound) + " is below " +
                                                                        to_string(identity_min_bound()));
                   const VanishingReport r = check_vanishing(cfg.bound);
                   return verdict(r.vanishes,
                                  r.vanishes ? "all 120 rows vanish through q^" + to_string(r.bound)
                                             : std::to_string(r.nonzero_rows.size()) + " nonzero rows",
                                  to_json(r));
                 }});
  out.push_back({"completion-cancellation", false, [] {
                   const CancellationReport r = verify_completion_cancellation();
                   Json d = {{"equal", r.equal}, {"mismatched_components", r.mismatched}};
                   return verdict(r.equal, r.equal ? "completion multisets of F and G agree" : "completion multisets differ",
                                  d);
                 }});
  return out;
}

std::vector<Check> group_checks() {
  std::vector<Check> out;
  out.push_back({"group-index", false, [] {
                   const auto i50 = index({50, 5}), i25 = index({25, 5});
                   return verdict(i50 == 180, "index " + std::to_string(i50) + " (180 expected)",
                                  {{"index_50_5", i50}, {"index_25_5", i25}, {"sturm_bound_weight_1", sturm_bound(QExponent(1), i50)}});
                 }});
  out.push_back({"group-cusps", false, [] {
                   const GroupContext ctx{50, 5};
                   const auto reps = cusp_representatives(ctx);
                   const CuspMatchReport m = match_cusps(ctx, reference_cusps_50_5());
                   const bool ok = reps.size() == 24 && m.pairwise_inequivalent && m.exhaustive && m.candidates.size() == 24;
                   return verdict(ok, std::to_string(reps.size()) + " classes; reference list " +
                                          (m.pairwise_inequivalent && m.exhaustive ? "matches" : "does not match"),
                                  to_json(m));
                 }});
  out.push_back({"group-orders", false, [] {
                   const QExponent o1 = ord_m25_at_13_50(1), o2 = ord_m25_at_13_50(2);
                   Json lower = Json::object();
                   bool nonneg = true;
                   for (const long s : {1, 2, 5, 10, 25, 50}) {
                     const QExponent v = R_lower_bound(s);
                     lower[std::to_string(s)] = to_string(v);
                     if (v < QExponent(0)) nonneg = false;
                   }
                   const QExponent mn = ord_table_min();
                   const bool ok = o1 == QExponent(9) && o2 == QExponent(6) && nonneg && mn == QExponent(-1, 24);
                   return verdict(ok,
                                  "ord m(25z) at 13/50: " + to_string(o1) + ", " + to_string(o2) +
                                      "; R lower bounds " + (nonneg ? "nonnegative" : "negative somewhere"),
                                  {{"ord_m25_13_50", {to_string(o1), to_string(o2)}},
                                   {"R_lower_bound", lower},
                                   {"ord_table_min", to_string(mn)}});
                 }});
  return out;
}

std::vector<Check> lemma_checks(const RunConfig& cfg) {
  std::vector<Check> out;
  for (const char* id : {"lemma3", "lemma4", "n1-id-2"}) out.push_back(identity_check(cfg, id));
  out.push_back({"lemma3-golden", false, [] {
                   const IdentitySides s = identity_sides("lemma3", QExponent(16));
                   const QSeries g = lemma3_golden_expansion();
                   const CompareReport l = compare(s.lhs, g, QExponent(15)), r = compare(s.rhs, g, QExponent(15));
                   return verdict(l.equal && r.equal, "both sides against the closed expansion through q^15",
                                  {{"lhs_equal", l.equal}, {"rhs_equal", r.equal}, {"expansion", to_json(g)}});
                 }});
  out.push_back({"galois-coherence", false, [] {
                   const GaloisCoherenceReport r = verify_galois_coherence();
                   const bool ok = r.lhs_matches && r.rhs_matches && r.n_series_matches;
                   return verdict(ok, "tau(lemma3) vs lemma4 through q^15, sigma(N(1/5)) vs N(2/5) through q^30",
                                  {{"lhs_matches", r.lhs_matches},
                                   {"rhs_matches", r.rhs_matches},
                                   {"n_series_matches", r.n_series_matches}});
                 }});
  return out;
}

void write_json(const RunConfig& cfg, const Json& j, std::ostream& out) {
  if (cfg.json_path.empty()) return;
  if (cfg.json_path == "-") {
    out << dump_json(j);
    return;
  }
  std::ofstream f(cfg.json_path, std::ios::binary);
  if (!f) throw Error(ErrorKind::domain, "cannot open " + cfg.json_path + " for writing");
  f << dump_json(j);
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

int code_for(const Error& e) {
  return e.kind() == ErrorKind::convergence_failure ? kConvergence : kConfig;
}

// Human-readable lines go to stderr when stdout carries the JSON.
std::ostream& summary_stream(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return cfg.json_path == "-" ? err : out;
}

void print_records(std::ostream& os, const std::vector<CheckRecord>& records) {
  for (const auto& r : records)
    os << std::left << std::setw(5) << (r.outcome.code == kPass ? "PASS" : "FAIL") << " " << std::setw(28) << r.id << " "
       << r.outcome.message << "\n";
}

}  // namespace

QExponent default_bound() {
  if (const char* env = std::getenv("MTC_DEFAULT_BOUND"); env && *env) return parse_exponent(env);
  return QExponent(60);
}

std::vector<Check> suite_checks(const RunConfig& cfg) {
  std::vector<Check> out;
  const auto add_ids = [&](std::initializer_list<const char*> ids) {
    for (const char* id : ids) out.push_back(identity_check(cfg, id));
  };
  const auto append = [&](std::vector<Check> more) {
    for (auto& c : more) out.push_back(std::move(c));
  };
  const std::string& s = cfg.suite;
  const bool all = s == "all";
  if (s == "mtc" || all) add_ids({"mtc1", "mtc2", "mtc3", "mtc4"});
  if (s == "lemmas" || all) append(lemma_checks(cfg));
  if (s == "remaining" || all)
    add_ids({"mtc2-1", "mtc2-2", "mtc2-3", "mtc2-4", "chi0", "chi1", "robins1", "robins2", "watson0", "watson1"});
  if (s == "weil" || all) append(weil_checks(cfg));
  if (all) {
    append(group_checks());
    append(numeric_checks(cfg));
  }
  if (out.empty()) throw Error(ErrorKind::unknown_name, "verify suite '" + s + "'");
  for (const auto& id : cfg.inject_fault) {
    const auto ids = identity_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
      throw Error(ErrorKind::unknown_name, "cannot inject a fault into '" + id + "'");
  }
  return out;
}

std::vector<CheckRecord> run_checks(const std::vector<Check>& checks) {
  std::vector<CheckRecord> records(checks.size());
  auto run_one = [&](std::size_t i) {
    records[i].id = checks[i].id;
    try {
      records[i].outcome = checks[i].run();
    } catch (const ConvergenceError& e) {
      records[i].outcome = {kConvergence, e.what(), {{"achieved_error", e.achieved_error()}}};
    } catch (const Error& e) {
      records[i].outcome = {code_for(e), e.what(), Json::object()};
    } catch (const std::exception& e) {
      records[i].outcome = {kConfig, e.what(), Json::object()};
    }
  };
  // exact checks complete before any numeric check starts
  for (const bool numeric : {false, true}) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < checks.size(); ++i)
      if (checks[i].numeric == numeric) idx.push_back(i);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t k = 0; k < idx.size(); ++k) run_one(idx[k]);
  }
  std::sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return records;
}

int combine(const std::vector<CheckRecord>& records) {
  bool config = false, conv = false, mismatch = false;
  for (const auto& r : records) {
    config |= r.outcome.code == kConfig;
    conv |= r.outcome.code == kConvergence;
    mismatch |= r.outcome.code == kMismatch;
  }
  return config ? kConfig : conv ? kConvergence : mismatch ? kMismatch : kPass;
}

Json report_json(const RunConfig& cfg, const std::vector<CheckRecord>& records, int code) {
  Json checks = Json::array();
  for (const auto& r : records)
    checks.push_back({{"id", r.id}, {"status", status_name(r.outcome.code)}, {"message", r.outcome.message},
                      {"detail", r.outcome.detail}});
  Json j = {{"command", cfg.subcommand}, {"checks", checks}, {"exit_code", code}, {"passed", code == kPass}};
  if (cfg.subcommand == "verify") {
    j["suite"] = cfg.suite;
    j["bound"] = to_string(cfg.bound);
  }
  if (cfg.timestamp) j["generated_at"] = utc_timestamp();
  return j;
}

namespace {

int finish(const RunConfig& cfg, const std::vector<CheckRecord>& records, std::ostream& out, std::ostream& err) {
  const int code = combine(records);
  print_records(summary_stream(cfg, out, err), records);
  write_json(cfg, report_json(cfg, records, code), out);
  return code;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return finish(cfg, run_checks(suite_checks(cfg)), out, err);
}

namespace {

GroupContext parse_group(const std::string& text) {
  const auto comma = text.find(',');
  GroupContext ctx;
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t p1 = 0, p2 = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    ctx.N = std::stoll(a, &p1);
    ctx.M = std::stoll(b, &p2);
    if (p1 != a.size() || p2 != b.size()) throw std::invalid_argument(text);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::parse, "group must be given as N,M, got '" + text + "'");
  }
  ctx.validate();
  return ctx;
}

std::vector<CuspPoint> parse_cusp_list(const std::string& text) {
  std::vector<CuspPoint> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_cusp(item));
  return out;
}

}  // namespace

int cmd_cusps(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GroupContext ctx = parse_group(cfg.group);
  const auto reps = cusp_representatives(ctx);
  std::ostream& os = summary_stream(cfg, out, err);
  for (const auto& c : reps) os << to_string(c) << "\n";
  os << "# " << reps.size() << " cusp classes, index " << index(ctx) << "\n";

  Json list = Json::array();
  for (const auto& c : reps) list.push_back(to_string(c));
  Json j = {{"command", "cusps"},
            {"group", {{"N", ctx.N}, {"M", ctx.M}}},
            {"index", index(ctx)},
            {"count", reps.size()},
            {"representatives", list}};
  int code = kPass;
  if (!cfg.match.empty()) {
    const CuspMatchReport m = match_cusps(ctx, parse_cusp_list(cfg.match));
    j["match"] = to_json(m);
    const bool ok = m.pairwise_inequivalent && m.exhaustive;
    os << "# supplied list " << (ok ? "is a complete set of inequivalent representatives" : "does not match") << "\n";
    if (!ok) code = kMismatch;
  }
  j["exit_code"] = code;
  if (cfg.timestamp) j["generated_at"] = utc_timestamp();
  write_json(cfg, j, out);
  return code;
}

int cmd_ords(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ostream& os = summary_stream(cfg, out, err);
  Json table = Json::object();
  for (const auto& s : ord_table_symbols()) {
    const QExponent v = ord_table_infty(s);
    table[to_string(s)] = to_string(v);
    os << std::left << std::setw(10) << to_string(s) << " " << to_string(v) << "\n";
  }
  const GroupContext ctx{50, 5};
  Json per_cusp = Json::array();
  bool ok = true;
  for (const auto& c : cusp_representatives(ctx)) {
    const QExponent r = ord_eta_R_at_cusp(c);
    if (r < QExponent(0)) ok = false;
    per_cusp.push_back({{"cusp", to_string(c)}, {"ord_eta_R", to_string(r)}});
  }
  Json lower = Json::object();
  for (const long s : {1, 2, 5, 10, 25, 50}) {
    const QExponent v = R_lower_bound(s);
    if (v < QExponent(0)) ok = false;
    lower[std::to_string(s)] = to_string(v);
    os << "R lower bound, s = " << s << ": " << to_string(v) << "\n";
  }
  const QExponent m1 = ord_m25_at_13_50(1), m2 = ord_m25_at_13_50(2);
  os << "ord(m(25z), 13/50): " << to_string(m1) << " (a = 1), " << to_string(m2) << " (a = 2)\n";
  os << "minimum over the table: " << to_string(ord_table_min()) << "\n";
  const int code = ok ? kPass : kMismatch;
  Json j = {{"command", "ords"},
            {"table", table},
            {"ord_table_min", to_string(ord_table_min())},
            {"ord_eta_R", per_cusp},
            {"R_lower_bound", lower},
            {"ord_m25_13_50", {to_string(m1), to_string(m2)}},
            {"exit_code", code}};
  if (cfg.timestamp) j["generated_at"] = utc_timestamp();
  write_json(cfg, j, out);
  return code;
}

int cmd_numeric(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.tolerance > 0.0)) throw Error(ErrorKind::domain, "tolerance must be positive");
  return finish(cfg, run_checks(numeric_checks(cfg)), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric verification of the mock theta conjectures"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string bound_text;
  bool no_timestamp = false;

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cfg.suite, "mtc, lemmas, remaining, weil or all")
      ->required()
      ->check(CLI::IsMember({"mtc", "lemmas", "remaining", "weil", "all"}));
  verify->add_option("--bound", bound_text, "Compare through q^BOUND (rational); default $MTC_DEFAULT_BOUND or 60");
  verify->add_option("--json", cfg.json_path, "Write the JSON report to PATH ('-' for stdout)");
  verify->add_flag("--force", cfg.force, "Run below the coefficient bound that makes the check a proof");
  verify->add_flag("--no-timestamp", no_timestamp, "Omit generated_at so reports are byte-identical");
  verify->add_option("--inject-fault", cfg.inject_fault, "Negate one constant of identity ID (self-test)");
  verify->add_option("--tol", cfg.tolerance, "Residual tolerance for numeric checks");

  auto* cusps = app.add_subcommand("cusps", "List cusp representatives of Gamma0(N) ∩ Gamma1(M)");
  cusps->add_option("--group", cfg.group, "N,M")->required();
  cusps->add_option("--match", cfg.match, "Comma-separated cusps to match against the classes");
  cusps->add_option("--json", cfg.json_path, "Write JSON to PATH ('-' for stdout)");
  cusps->add_flag("--no-timestamp", no_timestamp, "Omit generated_at");

  auto* ords = app.add_subcommand("ords", "Invariant orders used for holomorphy at the cusps");
  ords->add_option("--json", cfg.json_path, "Write JSON to PATH ('-' for stdout)");
  ords->add_flag("--no-timestamp", no_timestamp, "Omit generated_at");

  auto* numeric = app.add_subcommand("numeric", "Numeric S and T transformation checks");
  numeric->add_option("--z", cfg.sample_points, "Sample point such as 0+1i (repeatable)");
  numeric->add_option("--tol", cfg.tolerance, "Residual tolerance for the S-transformation");
  numeric->add_option("--json", cfg.json_path, "Write JSON to PATH ('-' for stdout)");
  numeric->add_flag("--no-timestamp", no_timestamp, "Omit generated_at");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kPass : kConfig;
  }
  cfg.timestamp = !no_timestamp;
  try {
    cfg.bound = bound_text.empty() ? default_bound() : parse_exponent(bound_text);
    if (*verify) {
      cfg.subcommand = "verify";
      return cmd_verify(cfg, out, err);
    }
    if (*cusps) {
      cfg.subcommand = "cusps";
      return cmd_cusps(cfg, out, err);
    }
    if (*ords) {
      cfg.subcommand = "ords";
      return cmd_ords(cfg, out, err);
    }
    cfg.subcommand = "numeric";
    return cmd_numeric(cfg, out, err);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfig;
  }
}

}  // namespace mtc::cli
