#pragma once

#include "toric/approx_designs.hpp"
#include "toric/difference_sets.hpp"
#include "toric/finite_field.hpp"
#include "toric/quantum_designs.hpp"
#include "toric/toric_designs.hpp"

#include "json.hpp"

namespace toric::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Rationals are always {num, den} objects in exact-mode files, never floats.
json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json field_spec_to_json(const ff::FieldSpec& spec);
ff::FieldSpec field_spec_from_json(const json& j);

json bt_set_to_json(const ds::BtSet& z);
ds::BtSet bt_set_from_json(const json& j);

json phase_set_to_json(const designs::WeightedPhaseSet& X);
designs::WeightedPhaseSet phase_set_from_json(const json& j);

json simplex_to_json(const quantum::SimplexDesign& S);
quantum::SimplexDesign simplex_from_json(const json& j);

json state_design_to_json(const quantum::StateDesign& D);
quantum::StateDesign state_design_from_json(const json& j);

json verification_report_to_json(const designs::VerificationReport& r);
json moment_report_to_json(const quantum::MomentReport& r);

json experiment_to_json(const approx::ApproxExperiment& cfg);
/// Strict: unknown fields are rejected with UsageError.
approx::ApproxExperiment experiment_from_json(const json& j);

/// Read/write helpers; throw UsageError on missing files or invalid JSON.
json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace toric::io
