#include "polyconj/findings.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "polyconj/descartes.hpp"
#include "polyconj/error.hpp"
#include "polyconj/expsum.hpp"
#include "polyconj/fields.hpp"
#include "polyconj/hb.hpp"
#include "polyconj/jensen.hpp"
#include "polyconj/meshops.hpp"
#include "polyconj/rng.hpp"
#include "polyconj/rolle.hpp"
#include "polyconj/sos.hpp"
#include "polyconj/tropical.hpp"

#ifndef POLYCONJ_VERSION
#define POLYCONJ_VERSION "0.0.0"
#endif

namespace polyconj::findings {

const char* artifact_version() { return POLYCONJ_VERSION; }

std::string to_string(Severity s) {
  switch (s) {
    case Severity::ViolationCandidate:
      return "VIOLATION_CANDIDATE";
    case Severity::Critical:
      return "CRITICAL";
    case Severity::Info:
      return "INFO";
  }
  return "INFO";
}

Severity parse_severity(const std::string& s) {
  if (s == "VIOLATION_CANDIDATE") return Severity::ViolationCandidate;
  if (s == "CRITICAL") return Severity::Critical;
  if (s == "INFO") return Severity::Info;
  throw Error(ErrorKind::Parse, "unknown severity " + s);
}

json to_json(const Finding& f) {
  return {{"id", f.id},
          {"conjecture_id", f.conjecture_id},
          {"input", f.input},
          {"observation", f.observation},
          {"severity", to_string(f.severity)},
          {"seed", f.seed},
          {"trial_index", f.trial_index},
          {"tolerances", f.tolerances},
          {"certified", f.certified},
          {"artifact_version", f.artifact_version},
          {"timestamp", f.timestamp}};
}

Finding finding_from_json(const json& j) {
  try {
    Finding f;
    f.id = j.at("id").get<std::string>();
    f.conjecture_id = j.at("conjecture_id").get<std::string>();
    f.input = j.at("input");
    f.observation = j.at("observation").get<std::string>();
    f.severity = parse_severity(j.at("severity").get<std::string>());
    f.seed = j.value("seed", std::uint64_t{0});
    f.trial_index = j.value("trial_index", std::uint64_t{0});
    f.tolerances = j.value("tolerances", json::object());
    f.certified = j.value("certified", true);
    f.artifact_version = j.value("artifact_version", std::string{});
    f.timestamp = j.value("timestamp", std::string{});
    return f;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("finding: ") + e.what());
  }
}

namespace {

std::string verdict_line(bool violation, const std::string& detail) {
  return std::string(violation ? "VIOLATION" : "HOLDS") + " | " + detail;
}

Evaluation certified(bool violation, Severity sev, const std::string& detail) {
  return {verdict_line(violation, detail), violation, sev, true};
}

std::string counts(long lhs, long rhs) { return "lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs); }

Evaluation eval_conj11(const json& in) {
  auto sp = descartes::SignPattern::parse(in.at("pattern").get<std::string>());
  descartes::PairPN pair{in.at("pair").at(0).get<int>(), in.at("pair").at(1).get<int>()};
  descartes::SearchLaw law;
  law.spread = in.value("spread", law.spread);
  law.sweep_fraction = in.value("sweep_fraction", law.sweep_fraction);
  auto res = descartes::realize_search(sp, pair, in.at("budget").get<std::uint64_t>(), in.at("seed").get<std::uint64_t>(), law);
  std::string detail = "pattern=" + sp.to_string() + " pair=(" + std::to_string(pair.pos) + "," +
                       std::to_string(pair.neg) + ") trials=" + std::to_string(res.trials);
  if (res.realized) detail += " witness=" + res.witness->to_list_string();
  bool violation = !res.realized && pair.pos > 0 && pair.neg > 0;
  return {std::string(res.realized ? "REALIZED" : "OPEN") + " | " + detail, violation, Severity::ViolationCandidate, true};
}

Evaluation eval_tropical(const std::string& which, const json& in) {
  auto f = poly_from_json(in.at("coeffs"));
  auto b = tropical::check_bounds(f);
  std::string rz = "real_zeros=" + std::to_string(b.real_zeros);
  if (which == "corners") return certified(b.violates_corners, Severity::ViolationCandidate, rz + " corners=" + std::to_string(b.corner_bound));
  if (which == "vtilde") return certified(b.violates_vtilde, Severity::ViolationCandidate, rz + " vtilde=" + std::to_string(b.vtilde));
  if (which == "vc") return certified(b.violates_vc, Severity::ViolationCandidate, rz + " vc=" + std::to_string(b.vc));
  return certified(!b.all_real_negative, Severity::Critical, rz + " all_real_negative=" + (b.all_real_negative ? "true" : "false"));
}

Evaluation eval_conj8(const json& in) {
  meshops::DiffOp t;
  for (const auto& a : in.at("op")) t.a.push_back(rational_from_json(a));
  int m = in.at("m").get<int>();
  auto p = poly_from_json(in.at("p"));
  bool hyp = meshops::in_class(meshops::apply_diffop(t, meshops::pochhammer(m)));
  auto image = meshops::apply_diffop(t, p);
  bool preserved = meshops::in_class(image);
  bool violation = hyp && meshops::in_class(p) && !preserved;
  return certified(violation, Severity::ViolationCandidate,
                   std::string("hypothesis=") + (hyp ? "true" : "false") + " image_in_class=" +
                       (preserved ? "true" : "false") + " image=" + image.to_list_string());
}

Evaluation eval_conj9(const json& in) {
  auto p = poly_from_json(in.at("p"));
  auto q = poly_from_json(in.at("q"));
  int d = in.at("d").get<int>();
  auto r = meshops::bullet(p, q, d);
  bool inside = meshops::in_class(r);
  bool violation = meshops::in_class(p) && meshops::in_class(q) && !inside;
  return certified(violation, Severity::ViolationCandidate,
                   std::string("product_in_class=") + (inside ? "true" : "false") + " product=" + r.to_list_string());
}

Evaluation eval_jensen(const std::string& which, const json& in) {
  auto p = poly_from_json(in.at("p"));
  jensen::Counting c{in.value("real_with_multiplicity", false)};
  if (which == "crit") {
    auto a = jensen::criterion1(p);
    auto b = jensen::criterion2(p);
    bool violation = !a.agree() || !b.agree();
    auto yn = [](bool v) { return v ? "1" : "0"; };
    return certified(violation, Severity::Critical,
                     std::string("crit1=") + yn(a.all_positive) + "/" + yn(a.real_simple) + " crit2=" + yn(b.all_positive) +
                         "/" + yn(b.real_simple));
  }
  jensen::InequalityRecord r;
  Severity sev = Severity::ViolationCandidate;
  if (which == "haw") {
    r = jensen::hawaiian_check(p, c);
    sev = Severity::Critical;
  } else if (which == "weight") {
    r = jensen::conjweight_check(p, c);
  } else if (which == "wplus") {
    r = jensen::conjwplus_check(p, c);
  } else if (which == "conj2") {
    r = jensen::conj2_check(p, c);
  } else {
    r = jensen::corollary19_check(p, c);
  }
  std::string detail = counts(r.lhs, r.rhs);
  for (const auto& row : r.rows) {
    if (!row.holds) detail += " failing[" + row.detail + ": " + counts(row.lhs, row.rhs) + "]";
  }
  if (r.rows.empty() && !r.detail.empty()) detail += " " + r.detail;
  return certified(!r.holds, sev, detail);
}

Evaluation eval_rolle(const json& in) {
  auto p = poly_from_json(in.at("p"));
  auto cfg = rolle::config_of(p);
  bool ok = rolle::check_rolle(cfg);
  return certified(!ok, Severity::Critical, std::string("rolle_order=") + (ok ? "true" : "false"));
}

Evaluation eval_hb(const json& in, const json& tol) {
  auto p = poly_from_json(in.at("p"));
  auto q = poly_from_json(in.at("q"));
  auto r = hb::hb_verify(p, q, tol.value("tol", 1e-9));
  bool violation = r.hypotheses_hold && r.placement == hb::Placement::NotUpper;
  std::ostringstream d;
  d.precision(17);
  d << "hypotheses=" << (r.hypotheses_hold ? "true" : "false") << " placement=" << hb::to_string(r.placement)
    << " min_imag=" << r.min_imag;
  return {std::string(violation ? "VIOLATION " : "HOLDS ") + hb::to_string(r.placement) + " | " + d.str(), violation,
          Severity::Critical, false};
}

Evaluation eval_maxwell(const std::string& which, const json& in, const json& tol) {
  auto cfg = charge_config_from_json(in.at("config"));
  auto opts = equilibrium_options_from_json(tol);
  auto set = fields::find_equilibria(cfg, opts);
  const int n = cfg.size();
  const auto count = static_cast<long>(set.points.size());
  std::string detail = "points=" + std::to_string(count) + " nondegenerate=" + std::to_string(set.nondegenerate()) +
                       " suspected_curve=" + (set.suspected_curve ? "true" : "false");
  bool same_sign = std::all_of(cfg.charges.begin(), cfg.charges.end(), [&](double c) { return (c > 0) == (cfg.charges[0] > 0); });
  if (which == "finiteness") {
    bool violation = same_sign && set.suspected_curve;
    return {verdict_line(violation, detail), violation, Severity::ViolationCandidate, false};
  }
  bool violation = !set.suspected_curve && count > static_cast<long>(n - 1) * (n - 1);
  // the verdict carries the census so a replay must reproduce the count
  return {std::string(violation ? "VIOLATION" : "HOLDS") + " " + std::to_string(count) + " | " + detail, violation,
          Severity::ViolationCandidate, false};
}

Evaluation eval_psi(const json& in, const json& tol) {
  auto cfg = psi_config_from_json(in.at("config"));
  auto m = fields::psi_local_maxima(cfg, tol.value("resolution", 20));
  bool violation = m.count() > cfg.size();
  std::ostringstream d;
  d.precision(17);
  d << "maxima=" << m.count() << " indeterminate=" << (m.indeterminate ? "true" : "false") << " locations=[";
  for (std::size_t i = 0; i < m.locations.size(); ++i) d << (i ? "," : "") << m.locations[i];
  d << "]";
  return {std::string(violation ? "VIOLATION" : "HOLDS") + " " + std::to_string(m.count()) + " | " + d.str(), violation,
          Severity::ViolationCandidate, false};
}

Evaluation eval_expsum(const std::string& which, const json& in, const json& tol) {
  auto a = complex_list_from_json(in.at("a"));
  auto c = complex_list_from_json(in.at("c"));
  auto s = expsum::solution(a, c);
  expsum::CountOptions o;
  o.max_samples = tol.value("max_samples", o.max_samples);
  o.max_depth = tol.value("max_depth", o.max_depth);
  auto z = expsum::count_real_zeros(s, o);
  int support = 0;
  for (const auto& x : s.coeffs) support += x != 0.0;
  std::ostringstream d;
  d.precision(17);
  d << "zeros=" << z.count << " support=" << support << " indeterminate=" << (z.indeterminate ? "true" : "false")
    << " at=[";
  for (std::size_t i = 0; i < z.zeros.size(); ++i) d << (i ? "," : "") << z.zeros[i];
  d << "]";
  if (which == "record") return {"ZEROS " + std::to_string(z.count) + " | " + d.str(), false, Severity::Info, false};
  // a real-valued sum of m exponentials with distinct real exponents has at
  // most m - 1 real zeros; more means a numerical failure
  bool violation = z.count > support - 1;
  return {verdict_line(violation, d.str()), violation, Severity::Critical, false};
}

Evaluation eval_sos(const json& in) {
  std::vector<std::vector<Rational>> roots;
  for (const auto& axis : in.at("roots")) {
    std::vector<Rational> r;
    for (const auto& e : axis) r.push_back(rational_from_json(e));
    roots.push_back(r);
  }
  auto g = sos::grid_sos(in.at("k").get<int>(), in.at("l").get<int>(), roots);
  auto v = sos::verify_isolated(g);
  return certified(!v.ok, Severity::Critical,
                   "zeros=" + std::to_string(v.zeros_checked) + " min_hessian=" + format_rational(v.min_hessian_entry));
}

using Evaluator = std::function<Evaluation(const json&, const json&)>;

const std::map<std::string, Evaluator>& registry() {
  static const std::map<std::string, Evaluator> r = [] {
    std::map<std::string, Evaluator> m;
    m["descartes.conj11"] = [](const json& in, const json&) { return eval_conj11(in); };
    for (std::string w : {"corners", "vtilde", "vc", "negative"}) {
      m["tropical." + w] = [w](const json& in, const json&) { return eval_tropical(w, in); };
    }
    m["mesh.conj8"] = [](const json& in, const json&) { return eval_conj8(in); };
    m["mesh.conj9"] = [](const json& in, const json&) { return eval_conj9(in); };
    for (std::string w : {"haw", "weight", "wplus", "conj2", "cor19", "crit"}) {
      m["jensen." + w] = [w](const json& in, const json&) { return eval_jensen(w, in); };
    }
    m["rolle.theorem"] = [](const json& in, const json&) { return eval_rolle(in); };
    m["hb.theorem"] = eval_hb;
    for (std::string w : {"bound", "finiteness"}) {
      m["maxwell." + w] = [w](const json& in, const json& t) { return eval_maxwell(w, in, t); };
    }
    m["psi.maxima"] = eval_psi;
    for (std::string w : {"bound", "record"}) {
      m["expsum." + w] = [w](const json& in, const json& t) { return eval_expsum(w, in, t); };
    }
    m["sos.grid"] = [](const json& in, const json&) { return eval_sos(in); };
    return m;
  }();
  return r;
}

std::string utc_now() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

Evaluation evaluate(const std::string& conjecture_id, const json& input, const json& tolerances) {
  auto it = registry().find(conjecture_id);
  if (it == registry().end()) throw Error(ErrorKind::InvalidArgument, "unknown conjecture id " + conjecture_id);
  try {
    return it->second(input, tolerances);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, conjecture_id + " input: " + e.what());
  }
}

std::vector<std::string> known_conjectures() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

std::string finding_id(const std::string& conjecture_id, const json& input, const json& tolerances) {
  // nlohmann::json objects are key-sorted, so dump() is canonical
  std::uint64_t h = fnv1a(conjecture_id + "\n" + input.dump() + "\n" + tolerances.dump());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string verdict_of(const std::string& observation) {
  auto bar = observation.find(" | ");
  return bar == std::string::npos ? observation : observation.substr(0, bar);
}

Finding make_finding(const std::string& conjecture_id, const json& input, const json& tolerances, std::uint64_t seed,
                     std::uint64_t trial_index) {
  auto e = evaluate(conjecture_id, input, tolerances);
  Finding f;
  f.id = finding_id(conjecture_id, input, tolerances);
  f.conjecture_id = conjecture_id;
  f.input = input;
  f.observation = e.observation;
  f.severity = e.severity;
  f.seed = seed;
  f.trial_index = trial_index;
  f.tolerances = tolerances;
  f.certified = e.certified;
  f.artifact_version = artifact_version();
  f.timestamp = utc_now();
  return f;
}

std::string to_string(ReplayStatus s) { return s == ReplayStatus::Confirmed ? "CONFIRMED" : "NOT_REPRODUCED"; }

ReplayResult replay(const Finding& f, const std::optional<json>& tolerances) {
  ReplayResult r;
  r.recorded = f.observation;
  auto e = evaluate(f.conjecture_id, f.input, tolerances.value_or(f.tolerances));
  r.observed = e.observation;
  bool same = f.certified ? e.observation == f.observation : verdict_of(e.observation) == verdict_of(f.observation);
  r.status = same ? ReplayStatus::Confirmed : ReplayStatus::NotReproduced;
  return r;
}

void Ledger::append(const Finding& f) const {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot open ledger " + path_);
  out << to_json(f).dump() << '\n';
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write ledger " + path_);
}

std::vector<Finding> Ledger::read() const {
  std::vector<Finding> out;
  std::ifstream in(path_);
  if (!in) return out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(finding_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::Parse, path_ + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

Finding Ledger::find(const std::string& id) const {
  for (auto& f : read()) {
    if (f.id == id) return f;
  }
  throw Error(ErrorKind::MissingFinding, "no finding " + id + " in " + path_);
}

std::string resolve_ledger_path(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv(kLedgerEnv); env && *env) return env;
  return kDefaultLedger;
}

}  // namespace polyconj::findings
