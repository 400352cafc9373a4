#include "discrim/report.hpp"

#include <cmath>
#include <cstdio>

namespace discrim {

using nlohmann::json;

FullReport make_report(const Ensemble& e, const OracleOptions& options) {
  const Povm srm = srm_povm(e);
  const double srm_value = success_probability(e, srm.elements);
  const bool pure = e.all_pure();
  const EntropyProfile entropy = profile(e);
  OracleResult oracle = optimal_success(e, options);
  const MinEntropy hmin{-std::log2(oracle.midpoint()),
                        0.5 * std::log2(oracle.dual / oracle.primal)};

  BoundReport b{
      .entropic = std::exp2(-std::max(0.0, entropy.cond)),
      .srm = srm_value,
      .pairwise = pure ? std::optional(pairwise_bound(e)) : std::nullopt,
      .helstrom = e.size() == 2 ? std::optional(helstrom(e)) : std::nullopt,
      .pure_state = pure ? std::optional(pure_state_bound(average_state(e), e.size()))
                         : std::nullopt,
      .oracle_primal = oracle.primal,
      .oracle_dual = oracle.dual,
  };
  return FullReport{
      .label = e.label(),
      .dim = e.dim(),
      .members = e.size(),
      .bounds = b,
      .entropy = entropy,
      .oracle = std::move(oracle),
      .min_entropy = hmin,
      .monotonicity = {hmin.value, entropy.cond, hmin.value <= entropy.cond + 1e-6},
      .srm_completeness_residual = srm.completeness_residual(),
      .srm_min_eigenvalue = srm.min_eigenvalue(),
  };
}

json to_json(const BoundReport& r) {
  json j;
  j["entropic"] = r.entropic;
  j["srm"] = r.srm;
  if (r.pairwise) j["pairwise"] = *r.pairwise;
  if (r.helstrom) j["helstrom"] = *r.helstrom;
  if (r.pure_state) j["pure_state"] = *r.pure_state;
  j["oracle_primal"] = r.oracle_primal;
  j["oracle_dual"] = r.oracle_dual;
  return j;
}

json to_json(const FullReport& r) {
  json j;
  j["label"] = r.label;
  j["dim"] = r.dim;
  j["members"] = r.members;
  j["bounds"] = to_json(r.bounds);
  j["entropy"] = {
      {"h_x", r.entropy.h_x},         {"s_avg", r.entropy.s_avg},
      {"s_members", r.entropy.s_members}, {"holevo", r.entropy.holevo},
      {"cond", r.entropy.cond},
  };
  j["oracle"] = {
      {"primal", r.oracle.primal},
      {"dual", r.oracle.dual},
      {"gap", r.oracle.gap},
      {"iterations", r.oracle.iterations},
      {"converged", r.oracle.converged},
      {"min_entropy", r.min_entropy.value},
      {"min_entropy_half_width", r.min_entropy.half_width},
  };
  j["monotonicity"] = {
      {"s_min", r.monotonicity.s_min},
      {"s_cond", r.monotonicity.s_cond},
      {"holds", r.monotonicity.holds},
  };
  j["srm_povm"] = {
      {"completeness_residual", r.srm_completeness_residual},
      {"min_eigenvalue", r.srm_min_eigenvalue},
  };
  return j;
}

namespace {

void write_number(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

void write(std::string& out, const json& v, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close_pad(2 * depth, ' ');
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(it.key()).dump() + ": ";
        write(out, it.value(), depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        write(out, v[i], depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case json::value_t::number_float:
      write_number(out, v.get<double>());
      return;
    default:
      out += v.dump();
  }
}

}  // namespace

std::string format_json(const json& doc) {
  std::string out;
  write(out, doc, 0);
  out += "\n";
  return out;
}

}  // namespace discrim
