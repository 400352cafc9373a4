#include "discrim/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <exception>
#include <ostream>
#include <thread>

#include "discrim/ensemble_json.hpp"
#include "discrim/entropy.hpp"

namespace discrim {

namespace {

constexpr std::array<std::pair<std::string_view, Family>, 4> kFamilies{{
    {"three_state_original", Family::ThreeStateOriginal},
    {"three_state_replaced", Family::ThreeStateReplaced},
    {"four_state", Family::FourState},
    {"file", Family::File},
}};

constexpr std::array<std::pair<std::string_view, BoundKind>, 5> kBounds{{
    {"entropic", BoundKind::Entropic},
    {"srm", BoundKind::Srm},
    {"pairwise", BoundKind::Pairwise},
    {"helstrom", BoundKind::Helstrom},
    {"oracle", BoundKind::Oracle},
}};

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SweepRow evaluate(const SweepSpec& spec, const Ensemble& e, double theta) {
  SweepRow row{theta, {}};
  for (BoundKind b : spec.outputs) {
    switch (b) {
      case BoundKind::Entropic: row.values.push_back(entropic_bound(e)); break;
      case BoundKind::Srm: row.values.push_back(srm_bound(e)); break;
      case BoundKind::Pairwise: row.values.push_back(pairwise_bound(e)); break;
      case BoundKind::Helstrom: row.values.push_back(helstrom(e)); break;
      case BoundKind::Oracle: {
        const OracleResult r = optimal_success(e, spec.oracle);
        row.values.push_back(r.primal);
        row.values.push_back(r.dual);
        break;
      }
    }
  }
  return row;
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [key, f] : kFamilies) {
    if (key == name) return f;
  }
  return std::nullopt;
}

std::string_view to_string(Family f) {
  for (const auto& [key, v] : kFamilies) {
    if (v == f) return key;
  }
  return "unknown";
}

std::optional<BoundKind> parse_bound(std::string_view name) {
  for (const auto& [key, b] : kBounds) {
    if (key == name) return b;
  }
  return std::nullopt;
}

std::string_view to_string(BoundKind b) {
  for (const auto& [key, v] : kBounds) {
    if (v == b) return key;
  }
  return "unknown";
}

void validate(const SweepSpec& spec) {
  if (spec.points < 2) throw Error(ErrorCode::SchemaError, "field 'points' must be at least 2");
  if (!(spec.theta_min < spec.theta_max)) {
    throw Error(ErrorCode::SchemaError, "field 'theta_min' must be below 'theta_max'");
  }
  if (spec.family == Family::File && !spec.input) {
    throw Error(ErrorCode::SchemaError, "field 'input' is required for the file family");
  }
  if (spec.outputs.empty()) throw Error(ErrorCode::SchemaError, "field 'bounds' is empty");
  if (spec.family == Family::FourState && !(spec.q >= 0.0 && spec.q <= 1.0)) {
    throw Error(ErrorCode::ProbabilityOutOfRange, "field 'q' must lie in [0, 1]");
  }
}

std::vector<std::string> sweep_columns(const SweepSpec& spec) {
  std::vector<std::string> cols;
  for (BoundKind b : spec.outputs) {
    if (b == BoundKind::Oracle) {
      cols.emplace_back("oracle_primal");
      cols.emplace_back("oracle_dual");
    } else {
      cols.emplace_back(to_string(b));
    }
  }
  return cols;
}

std::vector<double> theta_grid(const SweepSpec& spec) {
  std::vector<double> grid(spec.points);
  const double step = (spec.theta_max - spec.theta_min) / static_cast<double>(spec.points - 1);
  for (std::size_t i = 0; i < spec.points; ++i) {
    grid[i] = spec.theta_min + step * static_cast<double>(i);
  }
  grid.back() = spec.theta_max;
  return grid;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads) {
  validate(spec);
  const std::vector<double> grid = theta_grid(spec);
  std::optional<Ensemble> fixed;
  if (spec.family == Family::File) fixed = read_ensemble(*spec.input);

  auto ensemble_at = [&](double theta) {
    switch (spec.family) {
      case Family::ThreeStateOriginal:
        return make_three_state(theta, ThreeStateVariant::Original);
      case Family::ThreeStateReplaced:
        return make_three_state(theta, ThreeStateVariant::ReplacedPsi2);
      case Family::FourState:
        return make_four_state(theta, spec.q);
      case Family::File:
        break;
    }
    return *fixed;
  };

  std::vector<SweepRow> rows(grid.size());
  std::vector<std::exception_ptr> failures(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        rows[i] = evaluate(spec, ensemble_at(grid[i]), grid[i]);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(grid.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return rows;
}

void write_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  out << "theta";
  for (const auto& c : sweep_columns(spec)) out << ',' << c;
  out << '\n';
  for (const auto& row : rows) {
    out << fmt17(row.theta);
    for (double v : row.values) out << ',' << fmt17(v);
    out << '\n';
  }
}

void write_svg(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  constexpr double kWidth = 640, kHeight = 420;
  constexpr double kLeft = 60, kRight = 150, kTop = 20, kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const std::vector<std::string> cols = sweep_columns(spec);

  double lo = 1.0, hi = 0.0;
  for (const auto& r : rows) {
    for (double v : r.values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  lo = std::max(0.0, std::floor(lo * 10.0) / 10.0);
  hi = std::min(1.0, std::ceil(hi * 10.0) / 10.0);
  if (hi - lo < 0.1) {
    lo = std::max(0.0, lo - 0.1);
    hi = std::min(1.0, hi + 0.1);
  }

  auto sx = [&](double theta) {
    return kLeft + plot_w * (theta - spec.theta_min) / (spec.theta_max - spec.theta_min);
  };
  auto sy = [&](double v) { return kTop + plot_h * (hi - v) / (hi - lo); };

  auto style = [](std::string_view col) -> std::pair<std::string_view, std::string_view> {
    if (col == "entropic") return {"#1f77b4", ""};
    if (col == "srm") return {"#d62728", "8,5"};
    if (col == "pairwise") return {"#2ca02c", "10,4,2,4"};
    if (col == "helstrom") return {"#9467bd", "2,3"};
    if (col == "oracle_primal") return {"#555555", "1,2"};
    return {"#999999", "1,2"};
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
      << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double v = lo + (hi - lo) * i / 4.0;
    const double theta = spec.theta_min + (spec.theta_max - spec.theta_min) * i / 4.0;
    out << "<text x=\"" << kLeft - 6 << "\" y=\"" << sy(v) + 4
        << "\" text-anchor=\"end\">" << fmt17(std::round(v * 1000) / 1000) << "</text>\n";
    out << "<text x=\"" << sx(theta) << "\" y=\"" << kTop + plot_h + 18
        << "\" text-anchor=\"middle\">" << fmt17(std::round(theta * 1000) / 1000) << "</text>\n";
  }
  out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
      << "\" text-anchor=\"middle\">theta</text>\n";

  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto [color, dash] = style(cols[c]);
    out << "<path fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
    if (!dash.empty()) out << " stroke-dasharray=\"" << dash << "\"";
    out << " d=\"";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << (i ? " L" : "M") << sx(rows[i].theta) << ',' << sy(rows[i].values[c]);
    }
    out << "\"/>\n";
    const double ly = kTop + 16.0 * static_cast<double>(c + 1);
    out << "<line x1=\"" << kLeft + plot_w + 10 << "\" y1=\"" << ly << "\" x2=\""
        << kLeft + plot_w + 40 << "\" y2=\"" << ly << "\" stroke=\"" << color << "\"";
    if (!dash.empty()) out << " stroke-dasharray=\"" << dash << "\"";
    out << "/>\n<text x=\"" << kLeft + plot_w + 46 << "\" y=\"" << ly + 4 << "\">" << cols[c]
        << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace discrim
