#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace k3inv::registry {

/// One numbered integer assertion of the source text: a stable id, the
/// location and verbatim quote it came from, the expected value (integer or
/// small tuple), and a recipe naming an operation with literal arguments.
struct Claim {
  std::string id;
  std::string where;   // short location, e.g. "(5.12) case (i)"
  std::string quote;   // verbatim quote backing the expected value
  std::string op;      // operation identifier; "stored" for echoed data
  nlohmann::json args; // literal arguments for the operation
  nlohmann::json expected;
  std::string status_override;  // "", "STORED" or "DISPUTED"
  std::string note;
};

/// The claims manifest, loaded from JSON and held sorted by id.
class Manifest {
 public:
  static Manifest load_file(const std::string& path);
  static Manifest parse(const nlohmann::json& doc);

  const std::vector<Claim>& claims() const { return claims_; }

 private:
  std::vector<Claim> claims_;
};

struct ClaimResult {
  std::string id;
  std::string where;
  std::string quote;
  std::string note;
  nlohmann::json expected;
  nlohmann::json computed;  // null for stored claims
  std::string status;       // PASS, FAIL, STORED or DISPUTED
};

struct Report {
  std::vector<ClaimResult> records;
  long long pass = 0;
  long long fail = 0;
  long long stored = 0;
  long long disputed = 0;
};

/// Recompute every claim whose id starts with one of the given prefixes
/// (all claims when the filter is empty). A prefix matching no claim is an
/// error listing the valid ids.
Report run_claims(const Manifest& manifest, std::span<const std::string> prefixes = {});

/// Aligned table, one claim per line, summary footer. Byte-stable.
std::string emit_text(const Report& report);
/// {"claims": [...], "summary": {...}}, records ordered by id. Byte-stable.
std::string emit_json(const Report& report);

bool has_failures(const Report& report);

/// Evaluates a recipe; exposed so tests can drive single operations.
nlohmann::json evaluate_recipe(const std::string& op, const nlohmann::json& args);

const std::vector<std::string>& known_operations();

/// Manifest lookup order: the explicit path if non-empty, then
/// data/claims.json under the current directory, then the copy in the
/// source tree this binary was configured from.
std::string default_manifest_path(const std::string& explicit_path = {});

}  // namespace k3inv::registry
