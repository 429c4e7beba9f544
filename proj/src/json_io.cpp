#include "ssice/json_io.hpp"

#include <cstdio>

namespace ssice::json_io {

std::string format_statistic(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

Json to_json(const ParamPoint& p) {
  Json z = Json::array();
  for (const auto& v : p.zs()) z.push_back(to_string(v));
  return {{"z", z}, {"q", to_string(p.q())}};
}

Json to_json(const LatticeSpec& s) {
  Json j{{"model", to_string(s.model)}, {"n", s.n}, {"L", s.L}, {"lambda", s.lambda.parts}};
  if (is_colored(s.model)) {
    j["sigma"] = s.sigma.images();
    j["tau"] = s.tau.images();
  }
  j["point"] = to_json(s.point);
  return j;
}

Json to_json(const Outcome& o) {
  if (o.escaped) return {{"escape", true}};
  Json j{{"lambda", o.lambda.parts}};
  if (!o.colors.empty()) j["colors"] = o.colors;
  return j;
}

Json to_json(const RelationFailure& f) {
  Json j{{"point", to_json(f.point)}};
  if (!f.boundary.empty()) j["boundary"] = f.boundary;
  j["lhs"] = to_string(f.lhs);
  j["rhs"] = to_string(f.rhs);
  if (!f.note.empty()) j["note"] = f.note;
  return j;
}

Json to_json(const RelationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(to_json(f));
  return {{"id", r.id},
          {"pass", r.pass()},
          {"points_tested", r.points_tested},
          {"boundaries_tested", r.boundaries_tested},
          {"failure_count", r.failures.size()},
          {"failures", failures}};
}

Json to_json(const SampleSummary& s) {
  Json hist = Json::array();
  for (const auto& [o, c] : s.histogram) {
    Json e = to_json(o);
    e["count"] = c;
    hist.push_back(e);
  }
  return {{"num_samples", s.num_samples}, {"escape_count", s.escape_count}, {"histogram", hist}};
}

Json to_json(const StatisticsReport& r) {
  Json outcomes = Json::array();
  for (const auto& o : r.outcomes) {
    Json e = to_json(o.outcome);
    e["count"] = o.count;
    e["exact"] = to_string(o.exact);
    e["empirical"] = format_statistic(o.empirical);
    e["z_score"] = format_statistic(o.z_score);
    outcomes.push_back(e);
  }
  return {{"outcomes", outcomes},
          {"chi_square", format_statistic(r.chi_square)},
          {"degrees_of_freedom", r.degrees_of_freedom},
          {"chi_square_quantile_0_999", format_statistic(r.chi_square_quantile)},
          {"max_z", format_statistic(r.max_z)}};
}

Json to_json(const Trajectory& t, Model model) {
  Json times = Json::array();
  for (const auto& row : t.positions) {
    Json ps = Json::array();
    for (const auto& [col, lab] : row) {
      Json e{{"column", col}};
      if (is_colored(model)) e["color"] = lab;
      ps.push_back(e);
    }
    times.push_back(ps);
  }
  return times;
}

Json to_json(const acceptance::CriterionResult& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(to_json(f));
  return {{"id", r.id},       {"name", r.name},     {"pass", r.pass},
          {"detail", r.detail}, {"seconds", format_statistic(r.seconds)}, {"failures", failures}};
}

}  // namespace ssice::json_io
