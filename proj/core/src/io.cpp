#include "tow/io.hpp"

#include <cstdio>
#include <ostream>
#include <set>

namespace tow {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed, const char* what) {
    if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!allowed.contains(it.key())) {
            throw ParseError(std::string(what) + ": unknown field '" + it.key() + "'");
        }
    }
}

template <typename T>
T get_field(const json& j, const char* key, const char* what) {
    if (!j.contains(key)) throw ParseError(std::string(what) + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": bad field '" + key + "': " + e.what());
    }
}

}  // namespace

json setup_to_json(const AdmissibleSetup& setup) {
    json j;
    j["n_points"] = setup.n_points;
    json boundary = json::array();
    for (PointId x = 0; x < setup.n_points; ++x) {
        if (setup.boundary(x)) boundary.push_back(x);
    }
    j["boundary"] = std::move(boundary);
    j["balls"] = setup.balls;
    j["diam"] = setup.diam;
    return j;
}

AdmissibleSetup setup_from_json(const json& j) {
    reject_unknown(j, {"n_points", "boundary", "balls", "diam"}, "setup");
    AdmissibleSetup s;
    s.n_points = get_field<std::size_t>(j, "n_points", "setup");
    s.diam = get_field<int>(j, "diam", "setup");
    auto boundary = get_field<std::vector<PointId>>(j, "boundary", "setup");
    s.is_boundary.assign(s.n_points, false);
    for (PointId x : boundary) {
        if (x >= s.n_points) throw ParseError("setup: boundary index out of range");
        s.is_boundary[x] = true;
    }
    s.balls = get_field<std::vector<std::vector<PointId>>>(j, "balls", "setup");
    if (s.balls.size() != s.n_points) {
        throw ParseError("setup: balls must have one entry per point");
    }
    for (PointId x = 0; x < s.n_points; ++x) {
        if (s.is_boundary[x] && !s.balls[x].empty()) {
            throw ParseError("setup: boundary point " + std::to_string(x) + " has a ball");
        }
    }
    return s;
}

json problem_to_json(const AdmissibleSetup& setup, const DppProblem& problem) {
    json j;
    j["setup"] = setup_to_json(setup);
    j["mu"] = problem.mu;
    j["f"] = problem.f;
    j["F"] = problem.F;
    j["Lambda"] = problem.Lambda;
    j["lambda_min"] = problem.lambda_min;
    return j;
}

ProblemFile problem_from_json(const json& j) {
    reject_unknown(j, {"setup", "mu", "f", "F", "Lambda", "lambda_min"}, "problem");
    ProblemFile pf;
    if (!j.contains("setup")) throw ParseError("problem: missing field 'setup'");
    pf.setup = setup_from_json(j.at("setup"));
    double mu = get_field<double>(j, "mu", "problem");
    auto f = get_field<std::vector<double>>(j, "f", "problem");
    auto F = get_field<std::vector<double>>(j, "F", "problem");
    try {
        pf.problem = make_problem(pf.setup, mu, std::move(f), std::move(F));
    } catch (const Error& e) {
        throw ParseError(std::string("problem: ") + e.what());
    }
    if (j.contains("Lambda")) pf.problem.Lambda = get_field<double>(j, "Lambda", "problem");
    if (j.contains("lambda_min")) {
        pf.problem.lambda_min = get_field<double>(j, "lambda_min", "problem");
    }
    return pf;
}

json values_to_json(const ValueFunction& u) { return json(u); }

ValueFunction values_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("values: expected a JSON array of numbers");
    try {
        return j.get<ValueFunction>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("values: ") + e.what());
    }
}

void write_trace_csv(std::ostream& os, const ConvergenceTrace& trace) {
    os << "sweep,step,residual,sup,inf\n";
    char buf[160];
    for (std::size_t k = 0; k < trace.sweeps.size(); ++k) {
        const auto& row = trace.sweeps[k];
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g,%.17g\n", k + 1, row.step,
                      row.residual, row.sup, row.inf);
        os << buf;
    }
}

TreeShape tree_shape_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("tree: expected nested JSON arrays");
    TreeShape shape;
    for (const auto& child : j) shape.children.push_back(tree_shape_from_json(child));
    return shape;
}

namespace {

json strategy_node_to_json(const LabeledStrategy& s, int t) {
    json j;
    j["x"] = s.labels[t];
    if (!s.tree.is_leaf(t)) {
        j["children"] = json::array({strategy_node_to_json(s, s.tree.nodes[t].left),
                                     strategy_node_to_json(s, s.tree.nodes[t].right)});
    }
    return j;
}

}  // namespace

json strategy_to_json(const LabeledStrategy& s) { return strategy_node_to_json(s, 0); }

}  // namespace tow
