#pragma once

#include <iosfwd>

#include "json.hpp"
#include "tow/dpp.hpp"
#include "tow/strategy.hpp"
#include "tow/trees.hpp"

namespace tow {

// Setup file: {"n_points": N, "boundary": [ids], "balls": [[..] per point,
// empty for boundary points], "diam": D}. Unknown fields are rejected.
nlohmann::json setup_to_json(const AdmissibleSetup& setup);
AdmissibleSetup setup_from_json(const nlohmann::json& j);

// Problem file: {"setup": {..}, "mu": m, "f": [per point], "F": [per point]}
// with optional "Lambda" and "lambda_min" overrides.
nlohmann::json problem_to_json(const AdmissibleSetup& setup, const DppProblem& problem);

struct ProblemFile {
    AdmissibleSetup setup;
    DppProblem problem;
};
ProblemFile problem_from_json(const nlohmann::json& j);

// Value functions are plain JSON arrays of numbers.
nlohmann::json values_to_json(const ValueFunction& u);
ValueFunction values_from_json(const nlohmann::json& j);

// Trace CSV with fixed header sweep,step,residual,sup,inf.
void write_trace_csv(std::ostream& os, const ConvergenceTrace& trace);

// Trees as nested arrays: a leaf is [], an interior node is [left, right].
TreeShape tree_shape_from_json(const nlohmann::json& j);

// Labeled strategies as nested objects {"x": id, "children": [left, right]}.
nlohmann::json strategy_to_json(const LabeledStrategy& s);

}  // namespace tow
