#pragma once

#include <nlohmann/json.hpp>

#include "macrocheck/explorer.hpp"
#include "macrocheck/verifier.hpp"

// JSON forms of the reports. Rationals are always strings ("num/den" or an
// integer), never JSON numbers.
namespace macrocheck {

/// {"check", "status", "witness", "term_count", "elapsed_ms"}
nlohmann::json to_json(const verify::Report& report);

/// Inverse of to_json for reports; throws StructuralError on schema violations.
verify::Report report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const explore::MacroState& state);
nlohmann::json to_json(const explore::SamplePoint& point);
nlohmann::json to_json(const explore::SearchReport& report);
nlohmann::json to_json(const explore::MinimizeTrace& trace);
nlohmann::json to_json(const explore::CaseClassification& cls);
nlohmann::json to_json(const explore::SharpnessWitness& witness);
nlohmann::json to_json(const explore::FuzzSummary& summary);

}  // namespace macrocheck
