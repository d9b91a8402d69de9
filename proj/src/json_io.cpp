#include "cubelab/json_io.hpp"

#include <cstdio>

namespace cubelab {

json to_json(const Dyadic& d) { return json{{"num", d.num}, {"den_pow2", d.log2_den}}; }

Dyadic dyadic_from_json(const json& j) {
  return Dyadic(j.at("num").get<long long>(), j.at("den_pow2").get<int>());
}

json to_json(const Rational& r) { return json{{"num", r.num}, {"den", r.den}}; }

Rational rational_from_json(const json& j) {
  return Rational(j.at("num").get<long long>(), j.at("den").get<long long>());
}

std::string real_to_string(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double real_from_json(const json& j) { return std::stod(j.get<std::string>()); }

json to_json(const Term& t, int n) {
  json pos = json::array(), neg = json::array();
  for (int i = 1; i <= n; ++i) {
    if (t.pos >> (i - 1) & 1) pos.push_back(i);
    if (t.neg >> (i - 1) & 1) neg.push_back(i);
  }
  return json{{"pos", pos}, {"neg", neg}};
}

json to_json(const Dnf& d) {
  json terms = json::array();
  for (const Term& t : d.terms) terms.push_back(to_json(t, d.n));
  return json{{"n", d.n}, {"terms", terms}, {"text", format_dnf(d)}};
}

Dnf dnf_from_json(const json& j) {
  Dnf d;
  d.n = j.at("n").get<int>();
  for (const auto& jt : j.at("terms")) {
    d.terms.push_back(make_term(jt.at("pos").get<std::vector<int>>(),
                                jt.at("neg").get<std::vector<int>>(), d.n));
  }
  return d;
}

json to_json(const InfluenceReport& r) {
  json per_coord = json::array();
  for (const Dyadic& d : r.per_coord) per_coord.push_back(to_json(d));
  return json{{"n", r.n},
              {"mu", to_json(r.mu)},
              {"per_coord", per_coord},
              {"total", to_json(r.total)},
              {"M", real_to_string(r.M)},
              {"M_degenerate", r.M_degenerate},
              {"iso_bound", real_to_string(r.iso_bound)},
              {"kkl_bound", real_to_string(r.kkl_bound)},
              {"kkl_defined", r.kkl_defined},
              {"max_coord", r.max_coord}};
}

InfluenceReport influence_report_from_json(const json& j) {
  InfluenceReport r;
  r.n = j.at("n").get<int>();
  r.mu = dyadic_from_json(j.at("mu"));
  for (const auto& jd : j.at("per_coord")) r.per_coord.push_back(dyadic_from_json(jd));
  r.total = dyadic_from_json(j.at("total"));
  r.M = real_from_json(j.at("M"));
  r.M_degenerate = j.at("M_degenerate").get<bool>();
  r.iso_bound = real_from_json(j.at("iso_bound"));
  r.kkl_bound = real_from_json(j.at("kkl_bound"));
  r.kkl_defined = j.at("kkl_defined").get<bool>();
  r.max_coord = j.at("max_coord").get<int>();
  return r;
}

json to_json(const Estimate& e) {
  return json{{"quantity", e.quantity},
              {"value", real_to_string(e.value)},
              {"half_width", real_to_string(e.half_width)},
              {"samples", e.samples},
              {"confidence", real_to_string(e.confidence)},
              {"seed", e.seed},
              {"scale", real_to_string(e.scale)}};
}

Estimate estimate_from_json(const json& j) {
  Estimate e;
  e.quantity = j.at("quantity").get<std::string>();
  e.value = real_from_json(j.at("value"));
  e.half_width = real_from_json(j.at("half_width"));
  e.samples = j.at("samples").get<uint64_t>();
  e.confidence = real_from_json(j.at("confidence"));
  e.seed = j.at("seed").get<uint64_t>();
  e.scale = real_from_json(j.at("scale"));
  return e;
}

json to_json(const TraceNode& t) {
  json node{{"id", t.id},         {"parent", t.parent},
            {"depth", t.depth},   {"m", t.m},
            {"branch", t.branch}, {"budget_points", to_json(t.budget_points)},
            {"error_points", t.error_points}};
  if (t.branch == "split") {
    node["split_coord"] = t.split_coord;
    node["mu0"] = to_json(t.mu0);
    node["mu1"] = to_json(t.mu1);
    node["M0"] = real_to_string(t.M0);
    node["M1"] = real_to_string(t.M1);
    node["child_budget1"] = to_json(t.child_budget1);
    node["child_budget0"] = to_json(t.child_budget0);
  }
  return node;
}

json to_json(const ApproxResult& r, bool include_trace) {
  json out{{"dnf", to_json(r.dnf)},
           {"error", to_json(r.error)},
           {"error_points", r.error_points},
           {"budget", to_json(r.budget)},
           {"budget_points", to_json(r.budget_points)},
           {"size", r.size},
           {"width", r.width},
           {"certified", true}};
  if (include_trace) {
    json trace = json::array();
    for (const TraceNode& t : r.trace) trace.push_back(to_json(t));
    out["trace"] = trace;
  }
  return out;
}

ApproxResult approx_result_from_json(const json& j) {
  ApproxResult r;
  r.dnf = dnf_from_json(j.at("dnf"));
  r.error = dyadic_from_json(j.at("error"));
  r.error_points = j.at("error_points").get<uint64_t>();
  r.budget = rational_from_json(j.at("budget"));
  r.budget_points = rational_from_json(j.at("budget_points"));
  r.size = j.at("size").get<int>();
  r.width = j.at("width").get<int>();
  return r;
}

}  // namespace cubelab
