#pragma once

#include <string>

#include <json.hpp>

#include "shops/classify.hpp"
#include "shops/constructions.hpp"
#include "shops/extremal.hpp"
#include "shops/harness.hpp"

namespace shops::io {

/// Insertion-ordered JSON so reports are byte-stable across runs.
using json = nlohmann::ordered_json;

/// Scalars: finite reals serialize as numbers, infinities as the strings
/// "inf" / "-inf" (standard JSON has no infinity literal).
json real_to_json(double x);
double real_from_json(const json& j);

/// Complex scalars as [re, im]; matrices as row-major arrays of rows.
json complex_to_json(const Complex& z);
Complex complex_from_json(const json& j);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);
json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j);

/// Instance files: dim, A, optional B, optional named operators T, S, V, R,
/// optional reals alpha, beta, alpha2, beta2, r, optional complex lambda,
/// optional seed. Throws Errc::bad_file / validation errors on malformed
/// content.
Instance instance_from_json(const json& j);
json instance_to_json(const Instance& inst);
Instance load_instance(const std::string& path);

json psd_verdict_to_json(const linalg::PsdVerdict& v);
json flag_to_json(const Flag& f);
json classification_to_json(const ClassificationReport& r);
json pair_check_to_json(const AlphaBetaCheck& c);
json bounds_to_json(const AlphaBetaBounds& b);
json radius_to_json(const RadiusResult& r);
json mu_to_json(const MuEstimate& m);
json verdict_to_json(const TheoremVerdict& v);
json suite_report_to_json(const SuiteReport& r);
json search_report_to_json(const SearchReport& r);

}  // namespace shops::io
