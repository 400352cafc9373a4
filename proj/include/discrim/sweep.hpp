#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discrim/oracle.hpp"

namespace discrim {

enum class Family { ThreeStateOriginal, ThreeStateReplaced, FourState, File };
enum class BoundKind { Entropic, Srm, Pairwise, Helstrom, Oracle };

std::optional<Family> parse_family(std::string_view name);
std::string_view to_string(Family f);
std::optional<BoundKind> parse_bound(std::string_view name);
std::string_view to_string(BoundKind b);

struct SweepSpec {
  Family family = Family::ThreeStateOriginal;
  double theta_min = 0.0;
  double theta_max = 1.5707963267948966;
  std::size_t points = 181;
  double q = 0.5;
  std::optional<std::filesystem::path> input;  // Family::File
  std::vector<BoundKind> outputs{BoundKind::Entropic, BoundKind::Srm, BoundKind::Pairwise};
  OracleOptions oracle;
};

struct SweepRow {
  double theta;
  std::vector<double> values;  // ordered as sweep_columns()
};

/// Throws SchemaError for points < 2, an empty or reversed theta range, or a
/// file family without an input path.
void validate(const SweepSpec& spec);

/// Column names after "theta"; oracle contributes oracle_primal and oracle_dual.
std::vector<std::string> sweep_columns(const SweepSpec& spec);

/// Inclusive linear grid theta_min..theta_max with `points` entries.
std::vector<double> theta_grid(const SweepSpec& spec);

/// Evaluates every grid point, in parallel when threads > 1. Rows come back
/// ordered by theta.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads = 0);

void write_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRow>& rows);

/// Single-panel line chart: entropic solid, srm dashed, pairwise dot-dashed.
void write_svg(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRow>& rows);

}  // namespace discrim
