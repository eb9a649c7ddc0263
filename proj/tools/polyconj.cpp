#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polyconj/descartes.hpp"
#include "polyconj/error.hpp"
#include "polyconj/expsum.hpp"
#include "polyconj/fields.hpp"
#include "polyconj/findings.hpp"
#include "polyconj/hb.hpp"
#include "polyconj/jensen.hpp"
#include "polyconj/meshops.hpp"
#include "polyconj/parallel.hpp"
#include "polyconj/rolle.hpp"
#include "polyconj/sos.hpp"
#include "polyconj/tropical.hpp"

using namespace polyconj;
using findings::Finding;
using findings::Severity;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  std::optional<std::string> out;
  std::optional<std::string> ledger;
  std::optional<double> tol;
};

/// Collects findings for one run and appends them to the ledger.
class Run {
 public:
  Run(const Globals& g, std::string command) : g_(g), command_(std::move(command)), ledger_(findings::resolve_ledger_path(g.ledger)) {}

  std::uint64_t budget(std::uint64_t fallback) {
    used_ = g_.budget.value_or(fallback);
    return *used_;
  }
  double tol(double fallback) const { return g_.tol.value_or(fallback); }
  std::uint64_t seed() const { return g_.seed; }

  void record(const std::string& conjecture, const json& input, const json& tolerances, std::uint64_t trial) {
    auto f = findings::make_finding(conjecture, input, tolerances.is_null() ? json::object() : tolerances, g_.seed, trial);
    ledger_.append(f);
    ids_.push_back(f.id);
    if (f.severity != Severity::Info) ++violations_;
  }

  int violations() const { return violations_; }

  json report(json result) const {
    json config{{"seed", g_.seed}, {"budget", used_ ? json(*used_) : json(nullptr)}, {"ledger", ledger_.path()}};
    config["tol"] = g_.tol ? json(*g_.tol) : json(nullptr);
    config["out"] = g_.out ? json(*g_.out) : json(nullptr);
    return {{"schema_version", findings::kSchemaVersion},
            {"tool", "polyconj"},
            {"artifact_version", findings::artifact_version()},
            {"command", command_},
            {"config", config},
            {"result", std::move(result)},
            {"findings", ids_},
            {"violations", violations_}};
  }

 private:
  Globals g_;
  std::string command_;
  findings::Ledger ledger_;
  std::vector<std::string> ids_;
  int violations_ = 0;
  std::optional<std::uint64_t> used_;
};

void emit(const json& doc, const std::optional<std::string>& out) {
  if (out && !out->empty() && *out != "-") {
    std::ofstream f(*out);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + *out);
    f << doc.dump(2) << '\n';
  } else {
    std::cout << doc.dump(2) << '\n';
  }
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw Error(ErrorKind::InvalidArgument, "empty range " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Parse, "expected a range like 2..10, got " + text);
  }
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

json pair_json(const descartes::PairPN& p) { return json::array({p.pos, p.neg}); }

// ---- descartes ----

json descartes_survey(Run& run, int degree, int spread) {
  descartes::SearchLaw law;
  law.spread = spread;
  const auto budget = run.budget(100000);
  auto rows = descartes::survey_degree(degree, budget, run.seed(), law);
  json out = json::array();
  int open = 0;
  for (const auto& r : rows) {
    json orbit = json::array();
    for (const auto& e : r.orbit) orbit.push_back(e.pattern.to_string());
    out.push_back({{"pattern", r.pattern.to_string()},
                   {"pair", pair_json(r.pair)},
                   {"status", descartes::to_string(r.status)},
                   {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
                   {"trials", r.trials},
                   {"orbit", orbit}});
    if (r.status == descartes::Status::Open) ++open;
    if (r.conj11_candidate) {
      run.record("descartes.conj11",
                 {{"pattern", r.pattern.to_string()},
                  {"pair", pair_json(r.pair)},
                  {"budget", budget},
                  {"seed", run.seed()},
                  {"spread", law.spread},
                  {"sweep_fraction", law.sweep_fraction}},
                 json::object(), 0);
    }
  }
  return {{"degree", degree}, {"law", law.describe()}, {"combinations", rows.size()}, {"open", open}, {"rows", out}};
}

// ---- tropical ----

json tropical_check(Run& run, const std::string& range, int spread) {
  auto [lo, hi] = parse_range(range);
  if (lo < 1) throw Error(ErrorKind::InvalidArgument, "degrees start at 1");
  const auto trials = run.budget(10000);
  std::vector<tropical::BoundCheck> checks(trials);
  std::vector<RatPoly> polys(trials);
  parallel_for(trials, [&](std::size_t t) {
    int d = lo + static_cast<int>(t % static_cast<std::size_t>(hi - lo + 1));
    polys[t] = tropical::random_positive_poly(d, spread, run.seed(), t);
    checks[t] = tropical::check_bounds(polys[t]);
  });
  int corners = 0, vt = 0, vcc = 0, negative = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& b = checks[t];
    json input{{"coeffs", to_json(polys[t])}};
    if (b.violates_corners) ++corners, run.record("tropical.corners", input, {}, t);
    if (b.violates_vtilde) ++vt, run.record("tropical.vtilde", input, {}, t);
    if (b.violates_vc) ++vcc, run.record("tropical.vc", input, {}, t);
    if (!b.all_real_negative) ++negative, run.record("tropical.negative", input, {}, t);
  }
  return {{"degrees", {lo, hi}},
          {"trials", trials},
          {"law", "a_k = 10^u, u ~ U[-spread, spread], 5 significant digits; spread = " + std::to_string(spread)},
          {"violations", {{"corners", corners}, {"vtilde", vt}, {"vc", vcc}, {"non_negative_real_root", negative}}}};
}

// ---- mesh ----

json mesh_conj8(Run& run, const std::string& op, int m) {
  auto t = meshops::parse_diffop(op);
  const auto trials = run.budget(1000);
  auto rep = meshops::check_conj8(t, m, trials, run.seed());
  json ops = json::array();
  for (const auto& a : t.a) ops.push_back(to_json(a));
  json viol = json::array();
  for (std::size_t i = 0; i < rep.violations.size(); ++i) {
    viol.push_back({{"trial", rep.violation_trials[i]}, {"p", to_json(rep.violations[i])}});
    if (rep.hypothesis) {
      run.record("mesh.conj8", {{"op", ops}, {"m", m}, {"p", to_json(rep.violations[i])}}, {}, rep.violation_trials[i]);
    }
  }
  std::string reading = rep.hypothesis
                            ? (rep.violations.empty() ? "hypothesis true, class preserved on every sample"
                                                      : "hypothesis true but class not preserved: counterexample to sufficiency")
                            : (rep.violations.empty() ? "hypothesis false yet class preserved on every sample: evidence against necessity"
                                                      : "hypothesis false and class not preserved: consistent with necessity");
  return {{"op", ops}, {"m", m}, {"hypothesis", rep.hypothesis}, {"trials", rep.trials},
          {"violations", viol}, {"reading", reading}};
}

json mesh_conj9(Run& run, int d) {
  const auto trials = run.budget(1000);
  auto rep = meshops::check_conj9(trials, d, run.seed());
  json viol = json::array();
  for (std::size_t i = 0; i < rep.violations.size(); ++i) {
    const auto& [p, q] = rep.violations[i];
    viol.push_back({{"trial", rep.violation_trials[i]}, {"p", to_json(p)}, {"q", to_json(q)}});
    run.record("mesh.conj9", {{"p", to_json(p)}, {"q", to_json(q)}, {"d", d}}, {}, rep.violation_trials[i]);
  }
  return {{"d", d}, {"trials", rep.trials}, {"violations", viol}};
}

// ---- jensen ----

json jensen_run(Run& run, const std::string& conjecture, const std::string& range, const std::string& poly,
                bool with_multiplicity) {
  static const std::set<std::string> known{"haw", "weight", "wplus", "conj2", "cor19", "crit1", "crit2"};
  if (!known.count(conjecture)) throw Error(ErrorKind::InvalidArgument, "unknown jensen conjecture " + conjecture);
  auto [lo, hi] = parse_range(range);
  std::vector<RatPoly> corpus;
  if (!poly.empty()) {
    corpus.push_back(parse_poly(poly));
  } else {
    const auto trials = run.budget(1000);
    corpus.resize(trials);
    parallel_for(trials, [&](std::size_t t) { corpus[t] = jensen::random_corpus_poly(lo, hi, run.seed(), t); });
  }
  const std::string id = conjecture.rfind("crit", 0) == 0 ? "jensen.crit" : "jensen." + conjecture;
  jensen::Counting counting{with_multiplicity};
  std::vector<int> status(corpus.size(), 0);  // 0 holds, 1 violated, 2 skipped
  parallel_for(corpus.size(), [&](std::size_t t) {
    const auto& p = corpus[t];
    if (conjecture == "crit1") {
      status[t] = jensen::criterion1(p).agree() ? 0 : 1;
    } else if (conjecture == "crit2") {
      status[t] = jensen::criterion2(p).agree() ? 0 : 1;
    } else if (conjecture == "wplus" && p.degree() % 2 == 1) {
      status[t] = 2;
    } else if ((conjecture == "weight" || conjecture == "wplus") && p.degree() < 2) {
      status[t] = 2;
    } else {
      jensen::InequalityRecord r;
      if (conjecture == "haw") r = jensen::hawaiian_check(p, counting);
      if (conjecture == "weight") r = jensen::conjweight_check(p, counting);
      if (conjecture == "wplus") r = jensen::conjwplus_check(p, counting);
      if (conjecture == "conj2") r = jensen::conj2_check(p, counting);
      if (conjecture == "cor19") r = jensen::corollary19_check(p, counting);
      status[t] = r.holds ? 0 : 1;
    }
  });
  int holds = 0, violated = 0, skipped = 0;
  json viol = json::array();
  for (std::size_t t = 0; t < corpus.size(); ++t) {
    if (status[t] == 2) {
      ++skipped;
      continue;
    }
    if (status[t] == 0) {
      ++holds;
      continue;
    }
    ++violated;
    json input{{"p", to_json(corpus[t])}};
    if (with_multiplicity) input["real_with_multiplicity"] = true;
    viol.push_back({{"trial", t}, {"p", to_json(corpus[t])}});
    run.record(id, input, {}, t);
  }
  return {{"conjecture", conjecture},
          {"degrees", {lo, hi}},
          {"samples", corpus.size()},
          {"holds", holds},
          {"violations", violated},
          {"skipped", skipped},
          {"real_with_multiplicity", with_multiplicity},
          {"violating", viol}};
}

// ---- rolle ----

json rolle_enumerate(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  json out{{"n", n}, {"flat_count", rolle::flat_count(n).get_str()}};
  if (n <= 6) {
    auto words = rolle::enumerate_sequences(n);
    out["count"] = words.size();
    out["sequences"] = words;
  } else if (n == 7) {
    out["count"] = rolle::count_sequences(n);
  } else {
    out["count"] = nullptr;
    out["note"] = "enumeration too large; flat_count is the closed form";
  }
  return out;
}

json rolle_realize(Run& run, int n) {
  const auto trials = run.budget(1000);
  auto table = rolle::realized_sequences(n, trials, run.seed());
  json counts = json::object();
  int invalid = 0;
  for (const auto& [w, c] : table.counts) {
    counts[w] = c;
    if (!rolle::is_valid_sequence(w, n)) ++invalid;
  }
  json out{{"n", n}, {"trials", table.trials}, {"non_generic", table.non_generic}, {"observed", counts},
           {"distinct_observed", table.counts.size()}, {"invalid_words", invalid}};
  if (n <= 6) {
    json missing = json::array();
    for (const auto& w : rolle::enumerate_sequences(n)) {
      if (!table.counts.count(w)) missing.push_back(w);
    }
    out["unobserved"] = missing;
  }
  return out;
}

// ---- hb ----

json hb_scan(Run& run, int k, const std::optional<std::string>& corpus_path) {
  const auto trials = run.budget(1000);
  const double tol = run.tol(1e-9);
  auto rows = hb::fisk_scan(k, trials, run.seed(), tol);
  std::ofstream corpus;
  if (corpus_path) {
    corpus.open(*corpus_path);
    if (!corpus) throw Error(ErrorKind::InvalidArgument, "cannot write " + *corpus_path);
  }
  int upper = 0, not_upper = 0, indeterminate = 0, degenerate = 0, interlacing = 0;
  for (const auto& r : rows) {
    json row{{"trial", r.trial},           {"law", r.law},
             {"p", to_json(r.p)},          {"q", to_json(r.q)},
             {"wronskian", to_json(r.w)},  {"roots_p", roots_json(r.roots_p)},
             {"roots_q", roots_json(r.roots_q)}, {"roots_s", roots_json(r.roots_s)},
             {"roots_w", roots_json(r.roots_w)}, {"interlacing", r.interlacing},
             {"degenerate", r.degenerate}, {"placement", hb::to_string(r.placement)},
             {"seed", run.seed()}};
    if (corpus.is_open()) corpus << row.dump() << '\n';
    upper += r.placement == hb::Placement::Upper;
    not_upper += r.placement == hb::Placement::NotUpper;
    indeterminate += r.placement == hb::Placement::Indeterminate;
    degenerate += r.degenerate;
    interlacing += r.interlacing;
    if (r.interlacing && !r.degenerate && r.placement == hb::Placement::NotUpper) {
      run.record("hb.theorem", {{"p", to_json(r.p)}, {"q", to_json(r.q)}}, {{"tol", tol}}, r.trial);
    }
  }
  return {{"degree", k},
          {"trials", trials},
          {"corpus", corpus_path ? json(*corpus_path) : json(nullptr)},
          {"placements", {{"UPPER", upper}, {"NOT_UPPER", not_upper}, {"INDETERMINATE", indeterminate}}},
          {"interlacing_rows", interlacing},
          {"degenerate_rows", degenerate}};
}

// ---- maxwell / psi ----

json equilibria_json(const fields::EquilibriumSet& set) {
  json pts = json::array();
  for (const auto& p : set.points) {
    pts.push_back({{"x", std::vector<double>(p.x.data(), p.x.data() + p.x.size())},
                   {"residual", p.residual},
                   {"jacobian", p.jacobian == fields::JacobianClass::Degenerate ? "degenerate" : "nondegenerate"},
                   {"hits", p.hits}});
  }
  return {{"count", set.points.size()}, {"nondegenerate", set.nondegenerate()}, {"suspected_curve", set.suspected_curve},
          {"starts", set.starts},       {"converged", set.converged},         {"points", pts}};
}

json maxwell_find(Run& run, const std::string& config, int charges, bool planar, fields::EquilibriumOptions opts) {
  opts.tolerance = run.tol(opts.tolerance);
  opts.seed = run.seed();
  std::vector<fields::ChargeConfig> configs;
  if (!config.empty()) {
    configs.push_back(charge_config_from_json(read_json_file(config)));
  } else {
    if (charges < 1) throw Error(ErrorKind::InvalidArgument, "give --config or --charges N");
    const auto trials = run.budget(10);
    for (std::uint64_t t = 0; t < trials; ++t) configs.push_back(fields::random_charge_config(charges, planar, run.seed(), t));
  }
  json tolerances = to_json(opts);
  json results = json::array();
  long max_count = 0;
  for (std::size_t t = 0; t < configs.size(); ++t) {
    const auto& cfg = configs[t];
    auto set = fields::find_equilibria(cfg, opts);
    const long n = cfg.size();
    const auto count = static_cast<long>(set.points.size());
    max_count = std::max(max_count, count);
    bool same_sign = std::all_of(cfg.charges.begin(), cfg.charges.end(), [&](double c) { return (c > 0) == (cfg.charges[0] > 0); });
    json input{{"config", to_json(cfg)}};
    if (!set.suspected_curve && count > (n - 1) * (n - 1)) run.record("maxwell.bound", input, tolerances, t);
    if (same_sign && set.suspected_curve) run.record("maxwell.finiteness", input, tolerances, t);
    json r = equilibria_json(set);
    r["config"] = to_json(cfg);
    r["bound"] = (n - 1) * (n - 1);
    results.push_back(r);
  }
  return {{"options", tolerances},
          {"configs", configs.size()},
          {"max_count", max_count},
          {"note", "multistart census: counts are lower bounds"},
          {"results", results}};
}

json psi_maxima(Run& run, const std::string& config, int n, double alpha, int resolution) {
  std::vector<fields::PsiConfig> configs;
  if (!config.empty()) {
    configs.push_back(psi_config_from_json(read_json_file(config)));
  } else {
    const auto trials = run.budget(1000);
    for (std::uint64_t t = 0; t < trials; ++t) configs.push_back(fields::random_psi_config(n, alpha, run.seed(), t));
  }
  std::vector<fields::PsiMaxima> res(configs.size());
  parallel_for(configs.size(), [&](std::size_t i) { res[i] = fields::psi_local_maxima(configs[i], resolution); });
  json tolerances{{"resolution", resolution}};
  std::map<int, int> histogram;
  int indeterminate = 0, uncertified = 0;
  json rows = json::array();
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const auto& m = res[i];
    ++histogram[m.count()];
    indeterminate += m.indeterminate;
    uncertified += !m.window_certified;
    if (m.count() > configs[i].size()) run.record("psi.maxima", {{"config", to_json(configs[i])}}, tolerances, i);
    if (configs.size() == 1) {
      rows.push_back({{"config", to_json(configs[i])}, {"count", m.count()}, {"locations", m.locations},
                      {"indeterminate", m.indeterminate}, {"window", {m.lo, m.hi}},
                      {"window_certified", m.window_certified}, {"grid_points", m.grid_points}});
    }
  }
  json hist = json::object();
  for (auto [k, v] : histogram) hist[std::to_string(k)] = v;
  json out{{"configs", configs.size()}, {"resolution", resolution}, {"histogram", hist},
           {"indeterminate", indeterminate}, {"uncertified_windows", uncertified}};
  if (config.empty()) {
    out["n"] = n;
    out["alpha"] = alpha;
    out["law"] = "unit charges, x_i ~ U[-3, 3], |y_i| ~ U[0.1, 2] with random sign";
  } else {
    out["rows"] = rows;
  }
  return out;
}

// ---- expsum ----

json witness_json(const expsum::Witness& w) {
  return {{"trial", w.trial}, {"law", w.law},         {"a", to_json(w.a)},
          {"c", to_json(w.c)}, {"lambdas", to_json(w.lambdas)}, {"zeros", w.zeros},
          {"indeterminate", w.indeterminate}};
}

json expsum_search(Run& run, int k) {
  const auto trials = run.budget(1000);
  auto rec = expsum::max_zero_search(k, static_cast<int>(trials), run.seed());
  // a real sum of m exponentials has at most m - 1 real zeros; recheck every
  // trial that exceeds k - 1
  if (rec.max_count > k - 1 && rec.witness) {
    run.record("expsum.bound", {{"a", to_json(rec.witness->a)}, {"c", to_json(rec.witness->c)}}, {}, rec.witness->trial);
  }
  if (rec.witness) {
    run.record("expsum.record", {{"a", to_json(rec.witness->a)}, {"c", to_json(rec.witness->c)}}, {}, rec.witness->trial);
  }
  return {{"k", k},
          {"trials", rec.trials},
          {"accepted", rec.accepted},
          {"rejected", rec.rejected},
          {"indeterminate", rec.indeterminate},
          {"max_count", rec.max_count},
          {"histogram", rec.histogram},
          {"witness", rec.witness ? witness_json(*rec.witness) : json(nullptr)},
          {"law", rec.law},
          {"reading", "real-valued solutions only"}};
}

// ---- sos ----

json sos_build(Run& run, int k, int l, const std::string& roots_text) {
  std::vector<std::vector<Rational>> roots;
  if (roots_text.empty()) {
    std::vector<Rational> r;
    for (int i = 0; i < k; ++i) r.emplace_back(i);
    roots.push_back(r);
  } else {
    std::stringstream axes(roots_text);
    std::string axis;
    while (std::getline(axes, axis, ';')) {
      std::vector<Rational> r;
      std::stringstream items(axis);
      std::string item;
      while (std::getline(items, item, ',')) r.push_back(parse_rational(item));
      roots.push_back(r);
    }
  }
  auto g = sos::grid_sos(k, l, roots);
  auto v = sos::verify_isolated(g);
  auto b = sos::bounds_table(k, l);
  json axis_roots = json::array();
  json polys = json::array();
  for (int j = 0; j < l; ++j) {
    json r = json::array();
    for (const auto& q : g.axis_roots[static_cast<std::size_t>(j)]) r.push_back(to_json(q));
    axis_roots.push_back(r);
    polys.push_back(to_json(g.axis_polys[static_cast<std::size_t>(j)]));
  }
  if (!v.ok) run.record("sos.grid", {{"k", k}, {"l", l}, {"roots", axis_roots}}, {}, 0);
  json bounds{{"sos_lower", b.sos_lower.get_str()}, {"general_upper", b.general_upper.get_str()},
              {"best_upper", b.best_upper.get_str()}};
  if (b.has_plane_refinement) {
    bounds["plane_sos_exact"] = b.plane_sos_exact.get_str();
    bounds["plane_upper"] = b.plane_upper.get_str();
  }
  return {{"k", k},
          {"l", l},
          {"degree", 2 * k},
          {"axis_roots", axis_roots},
          {"axis_polys", polys},
          {"form", "f = sum_j A_j(x_j)^2"},
          {"zero_count", g.zero_count()},
          {"verification",
           {{"ok", v.ok},
            {"zeros_checked", v.zeros_checked},
            {"all_vanish", v.all_vanish},
            {"all_hessians_positive", v.all_hessians_positive},
            {"zero_set_exact", v.zero_set_exact},
            {"min_hessian_entry", to_json(v.min_hessian_entry)}}},
          {"bounds", bounds}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seeded experiments on open problems about real polynomials, with a replayable findings ledger."};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  std::uint64_t budget = 0;
  app.add_option("--seed", g.seed, "Global seed");
  auto* budget_opt = app.add_option("--budget,--trials", budget, "Search budget or number of trials");
  app.add_option("--out", g.out, "Report path (stdout when absent)");
  app.add_option("--ledger", g.ledger, "Findings ledger (JSONL); overrides $POLYCONJ_LEDGER");
  app.add_option("--tol", g.tol, "Tolerance override for numeric checks");

  std::function<json(Run&)> action;
  std::string command;
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    auto* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  auto* descartes_cmd = sub(&app, "descartes", "Descartes rule of signs realizability");
  descartes_cmd->require_subcommand(1);
  auto* survey = sub(descartes_cmd, "survey", "Realize every admissible (pattern, pair) up to symmetry");
  int degree = 4, spread = 6;
  survey->add_option("--degree", degree)->required();
  survey->add_option("--spread", spread, "Log10 magnitude range of sampled roots and coefficients");
  survey->callback([&] {
    command = "descartes survey";
    action = [&](Run& r) { return descartes_survey(r, degree, spread); };
  });

  auto* tropical_cmd = sub(&app, "tropical", "Tropical and Newton-type bounds on real zeros");
  tropical_cmd->require_subcommand(1);
  auto* tcheck = sub(tropical_cmd, "check", "Check the three bounds on random positive polynomials");
  std::string range = "2..10";
  int tspread = 6;
  tcheck->add_option("--degree-range", range);
  tcheck->add_option("--spread", tspread, "Coefficients are 10^u with |u| <= spread");
  tcheck->callback([&] {
    command = "tropical check";
    action = [&](Run& r) { return tropical_check(r, range, tspread); };
  });

  auto* mesh_cmd = sub(&app, "mesh", "Mesh-preserving operators");
  mesh_cmd->require_subcommand(1);
  auto* conj8 = sub(mesh_cmd, "conj8", "Does T preserve real-rooted polynomials with mesh >= 1?");
  std::string op;
  int m = 5;
  conj8->add_option("--op", op, "Coefficients a0,a1,... of T = sum a_j E^{-j}")->required();
  conj8->add_option("--m", m);
  conj8->callback([&] {
    command = "mesh conj8";
    action = [&](Run& r) { return mesh_conj8(r, op, m); };
  });
  auto* conj9 = sub(mesh_cmd, "conj9", "Is p . q in the class for p, q in the class?");
  int d = 4;
  conj9->add_option("--d", d);
  conj9->callback([&] {
    command = "mesh conj9";
    action = [&](Run& r) { return mesh_conj9(r, d); };
  });

  auto* jensen_cmd = sub(&app, "jensen", "Jensen polynomials and related inequalities");
  jensen_cmd->require_subcommand(1);
  auto* jrun = sub(jensen_cmd, "run", "Test one inequality on a seeded corpus or a given polynomial");
  std::string conjecture = "haw", jrange = "2..6", poly;
  bool with_mult = false;
  jrun->add_option("--conjecture", conjecture)
      ->check(CLI::IsMember({"haw", "weight", "wplus", "conj2", "cor19", "crit1", "crit2"}));
  jrun->add_option("--degree-range", jrange);
  jrun->add_option("--poly", poly, "Check this polynomial instead of sampling");
  jrun->add_flag("--real-with-multiplicity", with_mult, "Count real zeros with multiplicity");
  jrun->callback([&] {
    command = "jensen run";
    action = [&](Run& r) { return jensen_run(r, conjecture, jrange, poly, with_mult); };
  });

  auto* rolle_cmd = sub(&app, "rolle", "Symbolic sequences of root configurations");
  rolle_cmd->require_subcommand(1);
  int n = 4;
  auto* enumerate = sub(rolle_cmd, "enumerate", "Enumerate admissible symbolic sequences");
  enumerate->add_option("--n", n)->required();
  enumerate->callback([&] {
    command = "rolle enumerate";
    action = [&](Run&) { return rolle_enumerate(n); };
  });
  auto* realize = sub(rolle_cmd, "realize", "Tabulate sequences realized by random polynomials");
  realize->add_option("--n", n)->required();
  realize->callback([&] {
    command = "rolle realize";
    action = [&](Run& r) { return rolle_realize(r, n); };
  });

  auto* hb_cmd = sub(&app, "hb", "Hermite-Biehler pairs and the Fisk corpus");
  hb_cmd->require_subcommand(1);
  auto* scan = sub(hb_cmd, "scan", "Root data of p + iq for random pairs");
  int k = 4;
  std::optional<std::string> corpus;
  scan->add_option("--degree", k);
  scan->add_option("--corpus", corpus, "JSONL corpus path (defaults to --out)");
  scan->callback([&] {
    command = "hb scan";
    action = [&](Run& r) {
      // --out names the corpus here, as one JSON object per row
      auto path = corpus ? corpus : g.out;
      g.out.reset();
      return hb_scan(r, k, path);
    };
  });

  auto* maxwell_cmd = sub(&app, "maxwell", "Equilibria of point-charge fields");
  maxwell_cmd->require_subcommand(1);
  auto* find = sub(maxwell_cmd, "find", "Multistart census of equilibrium points");
  std::string charge_file;
  int charges = 0;
  bool planar = false;
  fields::EquilibriumOptions eq;
  find->add_option("--config", charge_file, "charges.json: {positions: [[..]], charges: [..]}");
  find->add_option("--charges", charges, "Random unit positive charges (with --trials configurations)");
  find->add_flag("--planar", planar, "Random charges in the plane z = 0");
  find->add_option("--grid", eq.grid_per_axis, "Start grid points per axis");
  find->add_option("--starts", eq.random_starts, "Random starts (0 = 256 N^2)");
  find->add_option("--dedupe", eq.dedupe_radius, "Dedupe radius relative to the configuration scale");
  find->add_option("--exponent", eq.exponent, "Field exponent, 3 for Coulomb");
  find->callback([&] {
    command = "maxwell find";
    action = [&](Run& r) { return maxwell_find(r, charge_file, charges, planar, eq); };
  });

  auto* psi_cmd = sub(&app, "psi", "Local maxima of the one-dimensional potential");
  psi_cmd->require_subcommand(1);
  auto* maxima = sub(psi_cmd, "maxima", "Count local maxima");
  std::string psi_file;
  int psi_n = 3, resolution = 20;
  double alpha = 1.0;
  maxima->add_option("--config", psi_file, "psi.json: {points: [[x, y], ..], charges: [..], alpha}");
  maxima->add_option("--n", psi_n, "Random configurations with n unit charges");
  maxima->add_option("--alpha", alpha);
  maxima->add_option("--resolution", resolution, "Grid steps per min |y_i|");
  maxima->callback([&] {
    command = "psi maxima";
    action = [&](Run& r) { return psi_maxima(r, psi_file, psi_n, alpha, resolution); };
  });

  auto* expsum_cmd = sub(&app, "expsum", "Real zeros of exponential sums");
  expsum_cmd->require_subcommand(1);
  auto* search = sub(expsum_cmd, "search", "Largest observed number of real zeros");
  int ek = 3;
  search->add_option("--k", ek);
  search->callback([&] {
    command = "expsum search";
    action = [&](Run& r) { return expsum_search(r, ek); };
  });

  auto* sos_cmd = sub(&app, "sos", "Sums of squares with many isolated zeros");
  sos_cmd->require_subcommand(1);
  auto* build = sub(sos_cmd, "build", "Build and verify the grid construction");
  int sk = 2, sl = 2;
  std::string roots;
  build->add_option("--k", sk);
  build->add_option("--l", sl);
  build->add_option("--roots", roots, "Axis roots, e.g. \"0,1;0,2\" (default 0..k-1 on every axis)");
  build->callback([&] {
    command = "sos build";
    action = [&](Run& r) { return sos_build(r, sk, sl, roots); };
  });

  auto* ledger_cmd = sub(&app, "ledger", "Inspect and replay recorded findings");
  ledger_cmd->require_subcommand(1);
  auto* list = sub(ledger_cmd, "list", "List findings");
  std::string filter;
  list->add_option("--conjecture", filter, "Only this conjecture id");
  auto* replay_cmd = sub(ledger_cmd, "replay", "Rerun a finding deterministically");
  std::string finding;
  std::string tolerances;
  replay_cmd->add_option("--id", finding)->required();
  replay_cmd->add_option("--tolerances", tolerances, "JSON object replacing the recorded tolerances");
  int replay_exit = 0;
  list->callback([&] {
    command = "ledger list";
    action = [&](Run&) {
      findings::Ledger ledger(findings::resolve_ledger_path(g.ledger));
      json rows = json::array();
      for (const auto& f : ledger.read()) {
        if (!filter.empty() && f.conjecture_id != filter) continue;
        rows.push_back({{"id", f.id},
                        {"conjecture_id", f.conjecture_id},
                        {"severity", findings::to_string(f.severity)},
                        {"observation", f.observation},
                        {"seed", f.seed},
                        {"trial_index", f.trial_index},
                        {"timestamp", f.timestamp}});
      }
      return json{{"ledger", ledger.path()}, {"count", rows.size()}, {"findings", rows}};
    };
  });
  replay_cmd->callback([&] {
    command = "ledger replay";
    action = [&](Run&) {
      findings::Ledger ledger(findings::resolve_ledger_path(g.ledger));
      auto f = ledger.find(finding);
      std::optional<json> tol;
      if (!tolerances.empty()) {
        tol = json::parse(tolerances);
      } else if (g.tol) {
        tol = f.tolerances;
        (*tol)[f.conjecture_id.rfind("maxwell.", 0) == 0 ? "tolerance" : "tol"] = *g.tol;
      }
      auto res = findings::replay(f, tol);
      if (res.status != findings::ReplayStatus::Confirmed) replay_exit = 2;
      return json{{"id", f.id},
                  {"conjecture_id", f.conjecture_id},
                  {"status", findings::to_string(res.status)},
                  {"certified", f.certified},
                  {"recorded", res.recorded},
                  {"observed", res.observed},
                  {"tolerances", tol.value_or(f.tolerances)}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (*budget_opt) g.budget = budget;

  try {
    Run run(g, command);
    json result = action(run);
    emit(run.report(std::move(result)), g.out);
    if (replay_exit) return replay_exit;
    return run.violations() > 0 ? 2 : 0;
  } catch (const Error& e) {
    std::cerr << "polyconj: " << e.what() << '\n';
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "polyconj: Parse: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "polyconj: " << e.what() << '\n';
    return 1;
  }
}
