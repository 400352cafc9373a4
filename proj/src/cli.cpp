#include "discrim/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "discrim/ensemble_json.hpp"
#include "discrim/report.hpp"
#include "discrim/sweep.hpp"

namespace discrim::cli {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SchemaError:
      return kSchemaError;
    case ErrorCode::NonHermitianInput:
    case ErrorCode::NonFiniteInput:
    case ErrorCode::InvalidState:
    case ErrorCode::NotNormalized:
    case ErrorCode::ProbabilityOutOfRange:
    case ErrorCode::MixedStateMember:
    case ErrorCode::WrongMemberCount:
    case ErrorCode::InconsistentInput:
    case ErrorCode::DimensionMismatch:
      return kInvariantViolation;
    case ErrorCode::ConvergenceFailure:
    case ErrorCode::DomainError:
      break;
  }
  return kFailure;
}

struct GeneratorFlags {
  std::string family;
  std::string input;
  double theta = 0.0;
  double q = 0.5;
};

Ensemble build_ensemble(const GeneratorFlags& g) {
  if (!g.input.empty()) return read_ensemble(g.input);
  if (g.family.empty()) {
    throw Error(ErrorCode::SchemaError, "field 'input' or 'family' is required");
  }
  const auto family = parse_family(g.family);
  if (!family) throw Error(ErrorCode::SchemaError, "field 'family' has unknown value '" + g.family + "'");
  switch (*family) {
    case Family::ThreeStateOriginal:
      return make_three_state(g.theta, ThreeStateVariant::Original);
    case Family::ThreeStateReplaced:
      return make_three_state(g.theta, ThreeStateVariant::ReplacedPsi2);
    case Family::FourState:
      return make_four_state(g.theta, g.q);
    case Family::File:
      break;
  }
  throw Error(ErrorCode::SchemaError, "field 'input' is required for the file family");
}

std::vector<BoundKind> parse_bounds(const std::vector<std::string>& names) {
  std::vector<BoundKind> out;
  for (const auto& n : names) {
    const auto b = parse_bound(n);
    if (!b) throw Error(ErrorCode::SchemaError, "field 'bounds' has unknown value '" + n + "'");
    out.push_back(*b);
  }
  return out;
}

int cmd_report(const GeneratorFlags& g, const OracleOptions& oracle, std::ostream& out) {
  const Ensemble e = build_ensemble(g);
  out << format_json(to_json(make_report(e, oracle)));
  return kOk;
}

int cmd_validate(const std::string& input, std::ostream& out) {
  const RawEnsemble raw = read_raw_ensemble(input);
  const EnsembleDiagnostics d = diagnose(raw);
  std::ostringstream os;
  os.precision(17);
  os << "dim " << raw.dim << ", members " << raw.members.size() << ", probability sum "
     << d.prob_sum << "\n";
  for (std::size_t i = 0; i < d.members.size(); ++i) {
    const auto& m = d.members[i];
    os << "member " << i << ": prob " << m.prob << ", trace " << m.trace << ", min eigenvalue "
       << m.min_eigenvalue << ", hermiticity residual " << m.hermiticity_residual;
    if (m.vector_norm) os << ", vector norm " << *m.vector_norm;
    os << "\n";
  }
  if (d.ok()) {
    os << "OK\n";
    out << os.str();
    return kOk;
  }
  for (const auto& v : d.violations) os << "FAIL " << v << "\n";
  out << os.str();
  return kInvariantViolation;
}

int cmd_sweep(SweepSpec spec, const std::string& out_path, const std::string& svg_path,
              unsigned threads, std::ostream& out, std::ostream& err) {
  validate(spec);
  std::ofstream csv(out_path);
  if (!csv) {
    err << "error: cannot write output '" << out_path << "'\n";
    return kUnwritableOutput;
  }
  std::optional<std::ofstream> svg;
  if (!svg_path.empty()) {
    svg.emplace(svg_path);
    if (!*svg) {
      err << "error: cannot write output '" << svg_path << "'\n";
      return kUnwritableOutput;
    }
  }
  const auto rows = run_sweep(spec, threads);
  write_csv(csv, spec, rows);
  if (svg) write_svg(*svg, spec, rows);
  csv.flush();
  if (!csv || (svg && !svg->flush())) {
    err << "error: writing output failed\n";
    return kUnwritableOutput;
  }
  out << "wrote " << rows.size() << " rows to " << out_path << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lower bounds and certified optimum for minimum-error state discrimination",
               "discrim"};
  app.require_subcommand(1);

  OracleOptions oracle;
  auto add_oracle_flags = [&oracle](CLI::App* cmd) {
    cmd->add_option("--tol", oracle.tol, "Duality-gap target for the oracle")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", oracle.max_iter, "Oracle iteration budget");
  };

  GeneratorFlags gen;
  auto* report = app.add_subcommand("report", "Print every bound for one ensemble as JSON");
  report->add_option("input,--input", gen.input, "Ensemble JSON file");
  report->add_option("--family", gen.family,
                     "Generator: three_state_original, three_state_replaced, four_state");
  report->add_option("--theta", gen.theta, "Generator angle (radians)");
  report->add_option("--q", gen.q, "Four-state weight q");
  add_oracle_flags(report);

  SweepSpec spec;
  std::string family_name = "three_state_original";
  std::string input_path;
  std::vector<std::string> bound_names{"entropic", "srm", "pairwise"};
  std::string out_path, svg_path;
  unsigned threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Tabulate bounds over a theta grid");
  sweep->add_option("--family", family_name, "three_state_original, three_state_replaced, "
                                             "four_state or file");
  sweep->add_option("--input", input_path, "Ensemble JSON file for the file family");
  sweep->add_option("--theta-min", spec.theta_min, "Grid start (radians)");
  sweep->add_option("--theta-max", spec.theta_max, "Grid end (radians)");
  sweep->add_option("--points", spec.points, "Grid size, endpoints included");
  sweep->add_option("--q", spec.q, "Four-state weight q");
  sweep->add_option("--bounds", bound_names, "entropic, srm, pairwise, helstrom, oracle")
      ->delimiter(',');
  sweep->add_option("--out", out_path, "CSV output path")->required();
  sweep->add_option("--svg", svg_path, "Optional SVG chart path");
  sweep->add_option("--threads", threads, "Worker threads (0 = hardware)");
  add_oracle_flags(sweep);

  std::string validate_input;
  auto* validate_cmd = app.add_subcommand("validate", "Check an ensemble file's invariants");
  validate_cmd->add_option("input", validate_input, "Ensemble JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << ex.what() << "\n";
    return kSchemaError;
  }

  try {
    if (*report) return cmd_report(gen, oracle, out);
    if (*validate_cmd) return cmd_validate(validate_input, out);
    const auto family = parse_family(family_name);
    if (!family) {
      throw Error(ErrorCode::SchemaError, "field 'family' has unknown value '" + family_name + "'");
    }
    spec.family = *family;
    if (!input_path.empty()) spec.input = input_path;
    spec.outputs = parse_bounds(bound_names);
    spec.oracle = oracle;
    return cmd_sweep(spec, out_path, svg_path, threads, out, err);
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_code_for(ex.code());
  }
}

}  // namespace discrim::cli
