#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "discrim/sweep.hpp"

using namespace discrim;

TEST_CASE("names round-trip") {
  for (Family f : {Family::ThreeStateOriginal, Family::ThreeStateReplaced, Family::FourState,
                   Family::File})
    CHECK(parse_family(to_string(f)) == f);
  for (BoundKind b : {BoundKind::Entropic, BoundKind::Srm, BoundKind::Pairwise,
                      BoundKind::Helstrom, BoundKind::Oracle})
    CHECK(parse_bound(to_string(b)) == b);
  CHECK_FALSE(parse_family("five_state").has_value());
  CHECK_FALSE(parse_bound("upper").has_value());
}

TEST_CASE("spec validation") {
  SweepSpec s;
  s.points = 1;
  CHECK_THROWS_AS(validate(s), Error);
  s.points = 5;
  s.theta_min = 1.0;
  s.theta_max = 1.0;
  CHECK_THROWS_AS(validate(s), Error);
  s.theta_max = 2.0;
  CHECK_NOTHROW(validate(s));
  s.family = Family::File;
  try {
    validate(s);
    FAIL("expected SchemaError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SchemaError);
  }
}

TEST_CASE("theta grid includes both endpoints") {
  SweepSpec s;
  s.theta_min = -1.0;
  s.theta_max = 3.0;
  s.points = 5;
  const auto g = theta_grid(s);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == -1.0);
  CHECK(g.back() == 3.0);
  CHECK(g[2] == doctest::Approx(1.0));
}

TEST_CASE("columns") {
  SweepSpec s;
  s.outputs = {BoundKind::Srm, BoundKind::Oracle, BoundKind::Entropic};
  CHECK(sweep_columns(s) == std::vector<std::string>{"srm", "oracle_primal", "oracle_dual", "entropic"});
}

TEST_CASE("three-state sweep orders srm above pairwise") {
  SweepSpec s;
  s.points = 5;
  const auto rows = run_sweep(s, 1);
  REQUIRE(rows.size() == 5);
  for (const auto& r : rows) {
    REQUIRE(r.values.size() == 3);
    CHECK(r.values[1] >= r.values[2] - 1e-9);
  }
}

TEST_CASE("four-state sweep is flat at one half") {
  SweepSpec s;
  s.family = Family::FourState;
  s.theta_max = 2 * std::numbers::pi;
  s.points = 9;
  s.outputs = {BoundKind::Entropic, BoundKind::Srm, BoundKind::Pairwise, BoundKind::Oracle};
  for (const auto& r : run_sweep(s, 2)) {
    for (double v : r.values) CHECK(std::abs(v - 0.5) <= 1e-9);
  }
}

TEST_CASE("oracle columns bound every other column") {
  SweepSpec s;
  s.family = Family::ThreeStateReplaced;
  s.points = 7;
  s.outputs = {BoundKind::Entropic, BoundKind::Srm, BoundKind::Pairwise, BoundKind::Oracle};
  for (const auto& r : run_sweep(s)) {
    const double dual = r.values[4];
    for (std::size_t c = 0; c < 4; ++c) CHECK(r.values[c] <= dual + 1e-6);
    for (double v : r.values) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("parallel and serial sweeps agree exactly") {
  SweepSpec s;
  s.points = 13;
  s.outputs = {BoundKind::Entropic, BoundKind::Srm, BoundKind::Oracle};
  const auto a = run_sweep(s, 1);
  const auto b = run_sweep(s, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].theta == b[i].theta);
    CHECK(a[i].values == b[i].values);
  }
}

TEST_CASE("helstrom column rejects ensembles with more than two members") {
  SweepSpec s;
  s.points = 2;
  s.outputs = {BoundKind::Helstrom};
  CHECK_THROWS_AS(run_sweep(s), Error);
}

TEST_CASE("CSV and SVG output") {
  SweepSpec s;
  s.points = 2;
  const auto rows = run_sweep(s);
  std::ostringstream csv;
  write_csv(csv, s, rows);
  std::istringstream lines(csv.str());
  std::string header, line;
  std::getline(lines, header);
  CHECK(header == "theta,entropic,srm,pairwise");
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 2);

  std::ostringstream svg;
  write_svg(svg, s, rows);
  const std::string text = svg.str();
  CHECK(text.rfind("<svg", 0) == 0);
  CHECK(text.find("stroke-dasharray=\"8,5\"") != std::string::npos);
  CHECK(text.find("stroke-dasharray=\"10,4,2,4\"") != std::string::npos);
  CHECK(text.find(">entropic</text>") != std::string::npos);
}
