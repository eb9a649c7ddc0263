#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyconj/serialize.hpp"

namespace polyconj::findings {

constexpr int kSchemaVersion = 1;
const char* artifact_version();

enum class Severity { ViolationCandidate, Critical, Info };
std::string to_string(Severity s);
Severity parse_severity(const std::string& s);

/// One ledger record. The id hashes (conjecture_id, input, tolerances), the
/// triple that replay needs.
struct Finding {
  std::string id;
  std::string conjecture_id;
  json input;
  std::string observation;
  Severity severity = Severity::Info;
  std::uint64_t seed = 0;
  std::uint64_t trial_index = 0;
  json tolerances = json::object();
  bool certified = true;
  std::string artifact_version;
  std::string timestamp;
};

json to_json(const Finding& f);
Finding finding_from_json(const json& j);

/// Observations read "VERDICT | detail". Certified checks replay the whole
/// string; numeric ones replay the verdict.
struct Evaluation {
  std::string observation;
  bool violation = false;
  Severity severity = Severity::Info;
  bool certified = true;
};

/// Recomputes one check from its serialized input. Conjecture ids:
/// descartes.conj11, tropical.{corners,vtilde,vc,negative}, mesh.{conj8,conj9},
/// jensen.{haw,weight,wplus,conj2,cor19,crit}, rolle.theorem, hb.theorem,
/// maxwell.{bound,finiteness}, psi.maxima, expsum.{bound,record}, sos.grid.
Evaluation evaluate(const std::string& conjecture_id, const json& input, const json& tolerances = json::object());
std::vector<std::string> known_conjectures();

std::string finding_id(const std::string& conjecture_id, const json& input, const json& tolerances);
std::string verdict_of(const std::string& observation);

/// Evaluates and wraps the result, stamping id, version and UTC time.
Finding make_finding(const std::string& conjecture_id, const json& input, const json& tolerances, std::uint64_t seed,
                     std::uint64_t trial_index);

enum class ReplayStatus { Confirmed, NotReproduced };
std::string to_string(ReplayStatus s);

struct ReplayResult {
  ReplayStatus status = ReplayStatus::NotReproduced;
  std::string recorded;
  std::string observed;
};

/// Reruns the finding, optionally with other tolerances. Never touches the
/// ledger.
ReplayResult replay(const Finding& f, const std::optional<json>& tolerances = std::nullopt);

/// Append-only JSONL file of findings.
class Ledger {
 public:
  explicit Ledger(std::string path) : path_(std::move(path)) {}
  const std::string& path() const { return path_; }
  void append(const Finding& f) const;
  /// Missing file reads as empty.
  std::vector<Finding> read() const;
  /// First record with this id; MissingFinding otherwise.
  Finding find(const std::string& id) const;

 private:
  std::string path_;
};

constexpr const char* kLedgerEnv = "POLYCONJ_LEDGER";
constexpr const char* kDefaultLedger = "polyconj-ledger.jsonl";
/// Flag, then the POLYCONJ_LEDGER environment variable, then the default.
std::string resolve_ledger_path(const std::optional<std::string>& flag);

}  // namespace polyconj::findings
