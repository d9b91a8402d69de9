#pragma once

#include <json.hpp>

#include "cubelab/approx.hpp"
#include "cubelab/dnf.hpp"
#include "cubelab/dyadic.hpp"
#include "cubelab/influence.hpp"
#include "cubelab/rational.hpp"
#include "cubelab/sampling.hpp"

// JSON schemas (schema_version 1):
//   dyadic   -> {"num": int, "den_pow2": int}
//   rational -> {"num": int, "den": int}
//   reals    -> decimal strings, shortest round-trip form
// Every to_json here has a matching from_json so CLI output re-parses.

namespace cubelab {

using nlohmann::json;

json to_json(const Dyadic& d);
Dyadic dyadic_from_json(const json& j);

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

std::string real_to_string(double x);
double real_from_json(const json& j);

json to_json(const Term& t, int n);
json to_json(const Dnf& d);
Dnf dnf_from_json(const json& j);

json to_json(const InfluenceReport& r);
InfluenceReport influence_report_from_json(const json& j);

json to_json(const Estimate& e);
Estimate estimate_from_json(const json& j);

json to_json(const TraceNode& t);
json to_json(const ApproxResult& r, bool include_trace = true);
ApproxResult approx_result_from_json(const json& j);

}  // namespace cubelab
