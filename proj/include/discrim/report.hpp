#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "discrim/entropy.hpp"
#include "discrim/oracle.hpp"

namespace discrim {

/// Every lower bound that applies to an ensemble, next to the oracle bracket.
struct BoundReport {
  double entropic;
  double srm;
  std::optional<double> pairwise;    // pure members only
  std::optional<double> helstrom;    // two members only
  std::optional<double> pure_state;  // 2^{S(rho)}/N, pure members only
  double oracle_primal;
  double oracle_dual;
};

/// BoundReport plus the quantities it was derived from.
struct FullReport {
  std::string label;
  Eigen::Index dim;
  std::size_t members;
  BoundReport bounds;
  EntropyProfile entropy;
  OracleResult oracle;
  MinEntropy min_entropy;
  MonotonicityCheck monotonicity;
  double srm_completeness_residual;
  double srm_min_eigenvalue;
};

FullReport make_report(const Ensemble& e, const OracleOptions& options = {});

nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const FullReport& r);

/// Serializes with 2-space indentation, sorted keys, and every
/// floating-point number printed with 17 significant digits.
std::string format_json(const nlohmann::json& doc);

}  // namespace discrim
