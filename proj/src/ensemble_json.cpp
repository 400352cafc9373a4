#include "discrim/ensemble_json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace discrim {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& field, const std::string& problem) {
  throw Error(ErrorCode::SchemaError, "field '" + field + "' " + problem);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path + key, "is missing");
  return *it;
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) schema_error(path, "must be a number");
  return v.get<double>();
}

Complex complex_entry(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) schema_error(path, "must be a [re, im] pair");
  return {number(v[0], path + "[0]"), number(v[1], path + "[1]")};
}

ComplexVector parse_vector(const json& v, Eigen::Index dim, const std::string& path) {
  if (!v.is_array()) schema_error(path, "must be an array");
  if (static_cast<Eigen::Index>(v.size()) != dim) {
    schema_error(path, "has " + std::to_string(v.size()) + " entries, expected " +
                           std::to_string(dim));
  }
  ComplexVector out(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    out(i) = complex_entry(v[i], path + "[" + std::to_string(i) + "]");
  }
  return out;
}

ComplexMatrix parse_matrix(const json& v, Eigen::Index dim, const std::string& path) {
  if (!v.is_array()) schema_error(path, "must be an array of rows");
  if (static_cast<Eigen::Index>(v.size()) != dim) {
    schema_error(path, "has " + std::to_string(v.size()) + " rows, expected " +
                           std::to_string(dim));
  }
  ComplexMatrix out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    out.row(r) = parse_vector(v[r], dim, path + "[" + std::to_string(r) + "]").transpose();
  }
  return out;
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

// Operator for a raw member; vectors are normalized if they pass the norm check.
struct Resolved {
  ComplexMatrix matrix;
  std::optional<ComplexVector> vector;
  std::optional<double> norm;
  bool norm_ok = true;
};

Resolved resolve(const RawMember& m) {
  Resolved r;
  if (m.vector) {
    const double norm = m.vector->norm();
    r.norm = norm;
    r.norm_ok = std::isfinite(norm) && std::abs(norm - 1.0) <= kVectorNormTolerance;
    ComplexVector v = r.norm_ok ? ComplexVector(*m.vector / norm) : *m.vector;
    r.matrix = v * v.adjoint();
    r.vector = std::move(v);
  } else {
    r.matrix = *m.matrix;
  }
  return r;
}

}  // namespace

RawEnsemble parse_ensemble(const json& doc) {
  if (!doc.is_object()) schema_error("<root>", "must be an object");
  const json& dim_v = require(doc, "dim", "");
  if (!dim_v.is_number_integer() || dim_v.get<long long>() <= 0) {
    schema_error("dim", "must be a positive integer");
  }
  RawEnsemble raw;
  raw.dim = dim_v.get<Eigen::Index>();
  if (auto it = doc.find("label"); it != doc.end()) {
    if (!it->is_string()) schema_error("label", "must be a string");
    raw.label = it->get<std::string>();
  }
  const json& members = require(doc, "members", "");
  if (!members.is_array() || members.empty()) {
    schema_error("members", "must be a non-empty array");
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::string path = "members[" + std::to_string(i) + "]";
    const json& m = members[i];
    if (!m.is_object()) schema_error(path, "must be an object");
    RawMember rm{number(require(m, "prob", path + "."), path + ".prob"), {}, {}};
    const bool has_vector = m.contains("vector");
    const bool has_matrix = m.contains("matrix");
    if (has_vector == has_matrix) {
      schema_error(path, "must have exactly one of 'vector' or 'matrix'");
    }
    if (has_vector) {
      rm.vector = parse_vector(m["vector"], raw.dim, path + ".vector");
    } else {
      rm.matrix = parse_matrix(m["matrix"], raw.dim, path + ".matrix");
    }
    raw.members.push_back(std::move(rm));
  }
  return raw;
}

RawEnsemble read_raw_ensemble(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& ex) {
    throw Error(ErrorCode::SchemaError, "'" + path.string() + "' is not valid JSON: " + ex.what());
  }
  return parse_ensemble(doc);
}

Ensemble to_ensemble(const RawEnsemble& raw) {
  std::vector<Member> members;
  members.reserve(raw.members.size());
  for (std::size_t i = 0; i < raw.members.size(); ++i) {
    const std::string path = "members[" + std::to_string(i) + "]";
    Resolved r = resolve(raw.members[i]);
    if (!r.norm_ok) {
      std::ostringstream os;
      os << path << ".vector has norm " << *r.norm << ", not within " << kVectorNormTolerance
         << " of 1";
      throw Error(ErrorCode::InvalidState, os.str());
    }
    try {
      members.push_back({raw.members[i].prob, DensityOperator(HermitianOperator(r.matrix)),
                         std::move(r.vector)});
    } catch (const Error& ex) {
      throw Error(ex.code(), path + ": " + ex.what());
    }
  }
  return Ensemble(std::move(members), raw.label);
}

Ensemble read_ensemble(const std::filesystem::path& path) {
  return to_ensemble(read_raw_ensemble(path));
}

json to_json(const Ensemble& e) {
  json members = json::array();
  for (const auto& m : e.members()) {
    json entry{{"prob", m.prob}};
    if (m.vector) {
      json v = json::array();
      for (Eigen::Index i = 0; i < m.vector->size(); ++i) v.push_back(complex_json((*m.vector)(i)));
      entry["vector"] = std::move(v);
    } else {
      json rows = json::array();
      for (Eigen::Index r = 0; r < e.dim(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < e.dim(); ++c) row.push_back(complex_json(m.state.op()(r, c)));
        rows.push_back(std::move(row));
      }
      entry["matrix"] = std::move(rows);
    }
    members.push_back(std::move(entry));
  }
  return json{{"dim", e.dim()}, {"label", e.label()}, {"members", std::move(members)}};
}

EnsembleDiagnostics diagnose(const RawEnsemble& raw) {
  EnsembleDiagnostics d{0.0, {}, {}};
  for (std::size_t i = 0; i < raw.members.size(); ++i) {
    const std::string path = "members[" + std::to_string(i) + "]";
    const RawMember& m = raw.members[i];
    const Resolved r = resolve(m);
    MemberDiagnostics md{m.prob, 0.0, 0.0, 0.0, r.norm};
    d.prob_sum += m.prob;

    if (!r.matrix.allFinite()) {
      d.violations.push_back(path + ": entries are not finite");
      md.trace = md.min_eigenvalue = md.hermiticity_residual = std::nan("");
      d.members.push_back(md);
      continue;
    }
    md.trace = r.matrix.trace().real();
    md.hermiticity_residual = hermiticity_residual(r.matrix);
    md.min_eigenvalue =
        eig(HermitianOperator::hermitian_part(r.matrix)).min_eigenvalue();

    std::ostringstream os;
    os.precision(17);
    if (!r.norm_ok) {
      os << path << ": vector norm " << *r.norm << " is not within " << kVectorNormTolerance
         << " of 1";
      d.violations.push_back(os.str());
      os.str("");
    }
    if (md.hermiticity_residual > tolerance::hermiticity) {
      os << path << ": Hermiticity residual " << md.hermiticity_residual << " exceeds "
         << tolerance::hermiticity;
      d.violations.push_back(os.str());
      os.str("");
    }
    if (std::abs(md.trace - 1.0) > DensityOperator::kTraceTolerance) {
      os << path << ": trace " << md.trace << " differs from 1";
      d.violations.push_back(os.str());
      os.str("");
    }
    if (md.min_eigenvalue < -DensityOperator::kPsdTolerance) {
      os << path << ": PSD violation, min eigenvalue " << md.min_eigenvalue;
      d.violations.push_back(os.str());
      os.str("");
    }
    if (!(m.prob >= 0.0 && m.prob <= 1.0)) {
      os << path << ": probability " << m.prob << " outside [0, 1]";
      d.violations.push_back(os.str());
    }
    d.members.push_back(md);
  }
  if (std::abs(d.prob_sum - 1.0) > Ensemble::kProbSumTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "probability sum " << d.prob_sum << " differs from 1";
    d.violations.push_back(os.str());
  }
  return d;
}

}  // namespace discrim
