#include "shops/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "shops/errors.hpp"

namespace shops::io {
namespace {

const char* applicability_name(Applicability a) {
  switch (a) {
    case Applicability::yes:
      return "yes";
    case Applicability::no:
      return "no";
    case Applicability::uncertain:
      return "uncertain";
  }
  return "no";
}

const char* kind_name(EntryKind k) {
  switch (k) {
    case EntryKind::theorem:
      return "theorem";
    case EntryKind::claim_check:
      return "claim_check";
    case EntryKind::question:
      return "question";
  }
  return "theorem";
}

/// Keys of an instance file that never name an operator.
bool reserved_key(const std::string& key) {
  static const char* const reserved[] = {"dim",    "A",     "B", "alpha", "beta", "alpha2",
                                         "beta2",  "r",     "n", "lambda", "seed"};
  for (const char* k : reserved) {
    if (key == k) return true;
  }
  return false;
}

json suite_result_to_json(const TheoremSuiteResult& r) {
  json out;
  out["id"] = r.id;
  out["kind"] = kind_name(r.kind);
  out["summary"] = r.summary;
  out["requested"] = r.requested;
  out["attempts"] = r.attempts;
  out["applicable"] = r.applicable;
  out["uncertain"] = r.uncertain;
  out["holds"] = r.holds;
  out["failures"] = r.failures;
  out["min_margin"] = real_to_json(r.min_margin);
  out["insufficient"] = r.insufficient;
  json failing = json::array();
  for (const FailureRecord& f : r.failing) {
    json rec;
    rec["instance"] = instance_to_json(f.instance);
    rec["verdict"] = verdict_to_json(f.verdict);
    failing.push_back(std::move(rec));
  }
  out["failing"] = std::move(failing);
  return out;
}

}  // namespace

json real_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double real_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    fail(Errc::bad_file, "expected a real number, got the string \"" + s + "\"");
  }
  fail(Errc::bad_file, "expected a real number, got " + std::string(j.type_name()));
}

json complex_to_json(const Complex& z) {
  return json::array({real_to_json(z.real()), real_to_json(z.imag())});
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array()) {
    if (j.size() != 2) {
      fail(Errc::bad_file, "a complex entry must be [re, im], got an array of size " +
                               std::to_string(j.size()));
    }
    return Complex(real_from_json(j[0]), real_from_json(j[1]));
  }
  fail(Errc::bad_file, "expected a complex entry, got " + std::string(j.type_name()));
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    fail(Errc::bad_file, "a matrix must be a nonempty array of rows");
  }
  const std::size_t nrows = j.size();
  if (!j[0].is_array() || j[0].empty()) {
    fail(Errc::bad_file, "a matrix row must be a nonempty array");
  }
  const std::size_t ncols = j[0].size();
  Matrix m(static_cast<Eigen::Index>(nrows), static_cast<Eigen::Index>(ncols));
  for (std::size_t i = 0; i < nrows; ++i) {
    if (!j[i].is_array() || j[i].size() != ncols) {
      fail(Errc::bad_file, "matrix rows must all have the same width");
    }
    for (std::size_t k = 0; k < ncols; ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          complex_from_json(j[i][k]);
    }
  }
  return m;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    fail(Errc::bad_file, "a vector must be a nonempty array");
  }
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  }
  return v;
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::bad_file, "an instance must be a JSON object");
  if (!j.contains("dim")) fail(Errc::bad_file, "instance is missing \"dim\"");
  if (!j["dim"].is_number_integer() || j["dim"].get<std::int64_t>() < 1) {
    fail(Errc::bad_file, "\"dim\" must be a positive integer");
  }
  const Eigen::Index dim = j["dim"].get<Eigen::Index>();
  if (!j.contains("A")) fail(Errc::bad_file, "instance is missing the metric \"A\"");

  Instance inst;
  Matrix a = matrix_from_json(j["A"]);
  if (a.rows() != dim || a.cols() != dim) {
    fail(Errc::bad_file, "\"A\" must be " + std::to_string(dim) + "x" + std::to_string(dim));
  }
  inst.space = SemiSpace::make(a);
  if (j.contains("B")) {
    inst.space_b = SemiSpace::make(matrix_from_json(j["B"]));
  }

  for (const char* key : {"alpha", "beta", "alpha2", "beta2", "r", "n"}) {
    if (j.contains(key)) inst.params[key] = real_from_json(j[key]);
  }
  if (j.contains("lambda")) inst.lambda = complex_from_json(j["lambda"]);
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() && !j["seed"].is_number_unsigned()) {
      fail(Errc::bad_file, "\"seed\" must be an integer");
    }
    inst.seed = j["seed"].get<std::uint64_t>();
  }

  for (auto it = j.begin(); it != j.end(); ++it) {
    if (reserved_key(it.key())) continue;
    inst.ops.emplace(it.key(), matrix_from_json(it.value()));
  }
  return inst;
}

json instance_to_json(const Instance& inst) {
  json out;
  out["dim"] = inst.space ? inst.space->dim() : 0;
  if (inst.space) out["A"] = matrix_to_json(inst.space->a());
  if (inst.space_b) out["B"] = matrix_to_json(inst.space_b->a());

  std::vector<std::string> names;
  for (const auto& [name, m] : inst.ops) names.push_back(name);
  std::sort(names.begin(), names.end());
  auto emit = [&](const std::string& name) {
    auto it = inst.ops.find(name);
    if (it != inst.ops.end()) out[name] = matrix_to_json(it->second);
  };
  for (const char* preferred : {"T", "S", "V", "R", "u", "v"}) emit(preferred);
  for (const std::string& name : names) {
    if (!out.contains(name)) emit(name);
  }

  for (const char* key : {"alpha", "beta", "alpha2", "beta2", "r", "n"}) {
    auto it = inst.params.find(key);
    if (it != inst.params.end()) out[key] = real_to_json(it->second);
  }
  if (inst.lambda) out["lambda"] = complex_to_json(*inst.lambda);
  out["seed"] = inst.seed;
  return out;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_file, "cannot open \"" + path + "\"");
  json j;
  try {
    j = json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::bad_file, "cannot parse \"" + path + "\": " + e.what());
  }
  return instance_from_json(j);
}

json psd_verdict_to_json(const linalg::PsdVerdict& v) {
  json out;
  out["is_psd"] = v.is_psd;
  out["min_eigenvalue"] = real_to_json(v.min_eigenvalue);
  if (v.witness.size() > 0) out["witness"] = vector_to_json(v.witness);
  return out;
}

json flag_to_json(const Flag& f) {
  json out;
  out["holds"] = f.holds;
  out["margin"] = real_to_json(f.margin);
  if (f.witness) out["witness"] = vector_to_json(*f.witness);
  return out;
}

json classification_to_json(const ClassificationReport& r) {
  json out;
  out["a_selfadjoint"] = flag_to_json(r.a_selfadjoint);
  out["a_normal"] = flag_to_json(r.a_normal);
  out["a_hyponormal"] = flag_to_json(r.a_hyponormal);
  out["a_isometry"] = flag_to_json(r.a_isometry);
  out["a_unitary"] = flag_to_json(r.a_unitary);
  return out;
}

json pair_check_to_json(const AlphaBetaCheck& c) {
  json out;
  out["holds"] = c.holds;
  out["lower_slack"] = real_to_json(c.lower_slack);
  out["upper_slack"] = real_to_json(c.upper_slack);
  if (c.witness) out["witness"] = vector_to_json(*c.witness);
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

json bounds_to_json(const AlphaBetaBounds& b) {
  json out;
  out["alpha_opt"] = real_to_json(b.alpha_opt);
  out["beta_opt"] = real_to_json(b.beta_opt);
  if (b.alpha_witness) out["alpha_witness"] = vector_to_json(*b.alpha_witness);
  if (b.beta_witness) out["beta_witness"] = vector_to_json(*b.beta_witness);
  out["method"] = b.method;
  out["zero_seminorm"] = b.zero_seminorm;
  return out;
}

json radius_to_json(const RadiusResult& r) {
  json out;
  out["value"] = real_to_json(r.value);
  out["theta_star"] = real_to_json(r.theta_star);
  if (r.argmax) out["argmax"] = vector_to_json(*r.argmax);
  if (!r.method_note.empty()) out["method_note"] = r.method_note;
  return out;
}

json mu_to_json(const MuEstimate& m) {
  json out;
  out["mu1"] = real_to_json(m.mu1);
  out["mu2"] = real_to_json(m.mu2);
  out["samples_used"] = m.samples_used;
  out["certified"] = m.certified;
  if (m.arginf) out["arginf"] = vector_to_json(*m.arginf);
  if (m.argsup) out["argsup"] = vector_to_json(*m.argsup);
  return out;
}

json verdict_to_json(const TheoremVerdict& v) {
  json out;
  out["theorem_id"] = v.theorem_id;
  out["applicable"] = applicability_name(v.applicable);
  out["holds"] = v.holds;
  out["margin"] = real_to_json(v.margin);
  if (v.witness) out["witness"] = vector_to_json(*v.witness);
  out["notes"] = v.notes;
  return out;
}

json suite_report_to_json(const SuiteReport& r) {
  json out;
  out["seed"] = r.seed;
  out["trials"] = r.trials;
  out["dim_max"] = r.dim_max;
  out["pass"] = r.pass;
  json results = json::array();
  for (const TheoremSuiteResult& res : r.results) results.push_back(suite_result_to_json(res));
  out["results"] = std::move(results);
  json disc = json::array();
  for (const TheoremSuiteResult& res : r.discrepancies) {
    disc.push_back(suite_result_to_json(res));
  }
  out["discrepancies"] = std::move(disc);
  return out;
}

json search_report_to_json(const SearchReport& r) {
  json out;
  out["trials"] = r.trials;
  out["power"] = r.power;
  out["dims"] = r.dims;
  out["seed"] = r.seed;
  out["tested"] = r.tested;
  out["skipped"] = r.skipped;
  json cxs = json::array();
  for (const SearchCounterexample& c : r.counterexamples) {
    json cx;
    cx["instance"] = instance_to_json(c.instance);
    cx["alpha"] = real_to_json(c.alpha);
    cx["beta"] = real_to_json(c.beta);
    cx["lower_slack"] = real_to_json(c.lower_slack);
    cx["upper_slack"] = real_to_json(c.upper_slack);
    cxs.push_back(std::move(cx));
  }
  out["counterexamples"] = std::move(cxs);
  out["exponent_count"] = r.exponent_count;
  out["exponent_min"] = real_to_json(r.exponent_min);
  out["exponent_max"] = real_to_json(r.exponent_max);
  out["exponent_mean"] = real_to_json(r.exponent_mean);
  return out;
}

}  // namespace shops::io
