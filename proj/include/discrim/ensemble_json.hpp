#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "discrim/ensemble.hpp"

namespace discrim {

// Ensemble file layout:
//   { "dim": n, "label": "...",
//     "members": [ { "prob": p, "vector": [[re, im], ...] }
//                | { "prob": p, "matrix": [[[re, im], ...], ...] } ] }
// A vector within 1e-6 of unit norm is normalized on load; others are rejected.

inline constexpr double kVectorNormTolerance = 1e-6;

/// A member as written in the file, before any state invariant is checked.
struct RawMember {
  double prob;
  std::optional<ComplexVector> vector;
  std::optional<ComplexMatrix> matrix;
};

struct RawEnsemble {
  Eigen::Index dim;
  std::string label;
  std::vector<RawMember> members;
};

/// Structural parse. Throws SchemaError naming the offending field.
RawEnsemble parse_ensemble(const nlohmann::json& doc);
RawEnsemble read_raw_ensemble(const std::filesystem::path& path);

/// Applies every state and probability invariant.
Ensemble to_ensemble(const RawEnsemble& raw);
Ensemble read_ensemble(const std::filesystem::path& path);

nlohmann::json to_json(const Ensemble& e);

struct MemberDiagnostics {
  double prob;
  double trace;
  double min_eigenvalue;
  double hermiticity_residual;
  std::optional<double> vector_norm;
};

struct EnsembleDiagnostics {
  double prob_sum;
  std::vector<MemberDiagnostics> members;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Per-member numbers and a list of violated invariants; never throws on
/// invalid states.
EnsembleDiagnostics diagnose(const RawEnsemble& raw);

}  // namespace discrim
