#include "macrocheck/json_io.hpp"

#include "macrocheck/errors.hpp"

namespace macrocheck {

namespace {

nlohmann::json rationals(std::span<const Rational> values) {
  auto out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

}  // namespace

nlohmann::json to_json(const verify::Report& report) {
  return {
      {"check", report.check_name},
      {"status", std::string(verify::to_string(report.status))},
      {"witness", report.witness ? nlohmann::json(*report.witness) : nlohmann::json(nullptr)},
      {"term_count", report.term_count},
      {"elapsed_ms", report.elapsed_ms},
  };
}

verify::Report report_from_json(const nlohmann::json& j) {
  try {
    verify::Report r;
    r.check_name = j.at("check").get<std::string>();
    const auto status = j.at("status").get<std::string>();
    if (status == "verified") {
      r.status = verify::Status::verified;
    } else if (status == "refuted") {
      r.status = verify::Status::refuted;
    } else if (status == "error") {
      r.status = verify::Status::error;
    } else {
      throw StructuralError("unknown report status '" + status + "'");
    }
    if (!j.at("witness").is_null()) r.witness = j.at("witness").get<std::string>();
    r.term_count = j.at("term_count").get<std::size_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    if (r.witness.has_value() != (r.status == verify::Status::refuted)) {
      throw StructuralError("witness must be present exactly when status is refuted");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("report JSON: ") + e.what());
  }
}

nlohmann::json to_json(const explore::MacroState& state) {
  return {{"p", rationals(state.p)}, {"z", rationals(state.z)}, {"c", rationals(state.c())}};
}

nlohmann::json to_json(const explore::SamplePoint& point) {
  return {{"index", point.index}, {"point", rationals(point.coordinates)}, {"value", point.value.str()}};
}

nlohmann::json to_json(const explore::SearchReport& report) {
  auto listed = [](const std::vector<explore::SamplePoint>& points) {
    auto out = nlohmann::json::array();
    for (const auto& p : points) out.push_back(to_json(p));
    return out;
  };
  nlohmann::json j = {
      {"target", std::string(explore::target_name(report.target))},
      {"variables", report.variables},
      {"seed", report.seed},
      {"samples_run", report.samples_run},
      {"min_value", report.min_value.str()},
      {"argmin", to_json(report.argmin)},
      {"probe", to_json(report.probe)},
      {"counterexample_count", report.counterexample_count},
      {"counterexamples", listed(report.counterexamples)},
      {"equality_count", report.equality_count},
      {"equality_points", listed(report.equality_points)},
  };
  if (report.target == explore::Target::d_k) j["constant"] = report.constant.str();
  return j;
}

nlohmann::json to_json(const explore::MinimizeTrace& trace) {
  auto steps = nlohmann::json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"coordinate", s.coordinate},
                     {"old", s.old_value.str()},
                     {"new", s.new_value.str()},
                     {"d_before", s.d_before.str()},
                     {"d_after", s.d_after.str()}});
  }
  return {{"initial", to_json(trace.initial)},
          {"initial_d", trace.initial.d_value().str()},
          {"steps", steps},
          {"final", to_json(trace.final_state)},
          {"final_d", trace.final_state.d_value().str()},
          {"case", std::string(explore::to_string(trace.label))}};
}

nlohmann::json to_json(const explore::CaseClassification& cls) {
  return {{"case", std::string(explore::to_string(cls.label))},
          {"permutation", cls.permutation},
          {"closed_form_value", cls.closed_form_value.str()}};
}

nlohmann::json to_json(const explore::SharpnessWitness& w) {
  return {{"constant", w.constant.str()},
          {"b", rationals(w.b)},
          {"k", rationals(w.k)},
          {"value", w.value.str()}};
}

nlohmann::json to_json(const explore::FuzzSummary& s) {
  return {{"samples", s.samples},
          {"passed", s.passed()},
          {"failed", s.failed_samples},
          {"negative_product_samples", s.negative_product_samples},
          {"monotonicity_failures", s.monotonicity_failures},
          {"vertex_failures", s.vertex_failures},
          {"negative_d_failures", s.negative_d_failures},
          {"closed_form_failures", s.closed_form_failures},
          {"case_iv_fatal", s.case_iv_fatal},
          {"positive_branch_failures", s.positive_branch_failures},
          {"case_counts",
           {{"i", s.case_counts[0]}, {"ii", s.case_counts[1]}, {"iii", s.case_counts[2]},
            {"iv", s.case_counts[3]}}},
          {"initial_vertex_samples", s.initial_vertex_samples},
          {"initial_vertex_case_counts",
           {{"i", s.initial_vertex_case_counts[0]}, {"ii", s.initial_vertex_case_counts[1]},
            {"iii", s.initial_vertex_case_counts[2]}, {"iv", s.initial_vertex_case_counts[3]}}}};
}

}  // namespace macrocheck
