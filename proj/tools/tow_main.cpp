// Command-line front end: validate setups, solve problems, report bounds,
// check trees, extract strategies, and run the built-in demos.
//
// Exit codes: 0 success, 1 non-convergence, 2 invalid input, 3 internal error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tow/bounds.hpp"
#include "tow/dpp.hpp"
#include "tow/instances.hpp"
#include "tow/io.hpp"
#include "tow/strategy.hpp"

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tow::ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw tow::ParseError(path + ": " + e.what());
    }
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw tow::Error("cannot write " + path);
    out << text;
}

int cmd_validate(const std::string& setup_path) {
    tow::AdmissibleSetup setup = tow::setup_from_json(load_json(setup_path));
    tow::LayerDecomposition layers = tow::validate(setup);
    json report;
    report["layers"] = layers.layer_of;
    report["max_layer"] = layers.max_layer;
    std::cout << report.dump(2) << "\n";
    return 0;
}

tow::ValueFunction initial_values(const std::string& u0_spec, std::size_t n) {
    if (u0_spec == "zero") return tow::ValueFunction(n, 0.0);
    if (u0_spec.starts_with("const:")) {
        return tow::ValueFunction(n, std::stod(u0_spec.substr(6)));
    }
    if (u0_spec.starts_with("file:")) {
        tow::ValueFunction u = tow::values_from_json(load_json(u0_spec.substr(5)));
        if (u.size() != n) throw tow::ParseError("u0 file has wrong length");
        return u;
    }
    throw tow::ParseError("u0 must be zero, const:<c>, or file:<path>");
}

int cmd_solve(const std::string& problem_path, const std::string& u0_spec, double tol,
              std::uint64_t max_sweeps, const std::string& out_dir) {
    tow::ProblemFile pf = tow::problem_from_json(load_json(problem_path));
    tow::validate(pf.setup);
    tow::ValueFunction u0 = initial_values(u0_spec, pf.setup.n_points);
    auto [u, trace] = tow::solve(pf.setup, pf.problem, u0, {tol, max_sweeps});

    if (trace.no_uniqueness_guarantee) {
        std::cerr << "warning: NoUniquenessGuarantee (min f <= 0 on the interior)\n";
    }
    write_text(out_dir + "/solution.json", tow::values_to_json(u).dump() + "\n");
    std::ofstream csv(out_dir + "/trace.csv", std::ios::binary | std::ios::trunc);
    if (!csv) throw tow::Error("cannot write " + out_dir + "/trace.csv");
    tow::write_trace_csv(csv, trace);

    bool converged = trace.status == tow::ConvergenceTrace::Status::Converged;
    std::cout << (converged ? "Converged" : "MaxIterations") << " after " << trace.sweeps.size()
              << " sweeps, residual " << tow::residual(pf.setup, pf.problem, u) << "\n";
    return converged ? 0 : 1;
}

int cmd_bounds(int d, double mu, double Lambda) {
    tow::SystemWeights w = tow::system_weights(d, mu);
    json report;
    report["tau"] = w.tau;
    report["lambdas"] = w.lambdas;
    report["theta"] = w.theta;
    report["C"] = tow::boundedness_constant(d, mu, Lambda);
    report["worst_case"] = tow::system_fixed_point(d, mu, Lambda);
    std::cout << report.dump(2) << "\n";
    return 0;
}

int cmd_tree_check(const std::string& tree_path, double mu, double C, double delta) {
    tow::GameTree tree = tow::build_tree(tow::tree_shape_from_json(load_json(tree_path)));
    tow::MassProfile p = tow::mass_profile(tree, mu);
    json report;
    report["depth"] = tree.max_depth;
    report["nodes"] = tree.size();
    report["a"] = p.a;
    report["b"] = p.b;
    report["leaf_mass"] = p.leaf_mass_total();
    report["interior_mass"] = p.interior_mass_total();
    report["satisfies_sum_estimate"] = tow::satisfies_sum_estimate(tree, mu, C);
    report["sparsity_threshold"] = tow::sparsity_threshold(C, delta);
    if (tow::satisfies_sum_estimate(tree, mu, C)) {
        report["sparsity_conclusion"] = tow::check_sparsity_conclusion(tree, mu, C, delta);
    }
    std::cout << report.dump(2) << "\n";
    return 0;
}

int cmd_strategy(const std::string& problem_path, const std::string& values_path,
                 tow::PointId root, int depth) {
    tow::ProblemFile pf = tow::problem_from_json(load_json(problem_path));
    tow::validate(pf.setup);
    tow::ValueFunction u = tow::values_from_json(load_json(values_path));
    if (u.size() != pf.setup.n_points) throw tow::ParseError("values file has wrong length");
    if (root >= pf.setup.n_points) throw tow::ParseError("root out of range");

    tow::LabeledStrategy s = tow::extract_strategy_tree(pf.setup, pf.problem, u, root, depth);
    json report;
    report["tree"] = tow::strategy_to_json(s);
    report["w"] = tow::evaluate_w(pf.setup, pf.problem, s, u);
    std::cout << report.dump(2) << "\n";
    return 0;
}

int demo_example11() {
    bool ok = true;
    for (int f_const : {0, 1}) {
        tow::SolvedInstance inst = tow::example_1_1(f_const);
        double r = tow::residual(inst.setup, inst.problem, inst.solution);
        std::cout << "example11 f=" << f_const << ": residual " << r
                  << (r == 0.0 ? " (exact fixed point)" : " UNEXPECTED") << "\n";
        ok = ok && r == 0.0;
    }
    return ok ? 0 : 3;
}

int demo_pde1d(std::vector<double> eps_list, double tol, std::uint64_t max_sweeps) {
    if (eps_list.empty()) eps_list = {0.1, 0.05, 0.025};
    auto exact = [](double x) { return 0.5 * x * (1.0 - x); };
    double prev_err = std::numeric_limits<double>::infinity();
    bool decreasing = true;
    for (double eps : eps_list) {
        tow::GridSpec1D spec;
        spec.eps = eps;
        spec.h = eps / 4.0;
        spec.beta = 0.0;
        spec.f_tilde = [](double) { return 1.0; };
        spec.boundary_values = exact;
        tow::Grid1D grid = tow::grid_1d(spec);

        tow::ValueFunction u0(grid.setup.n_points);
        for (std::size_t i = 0; i < u0.size(); ++i) u0[i] = exact(grid.coords[i]);
        auto [u, trace] = tow::solve(grid.setup, grid.problem, u0, {tol, max_sweeps});

        double err = 0.0;
        for (tow::PointId x = 0; x < grid.setup.n_points; ++x) {
            err = std::max(err, std::abs(u[x] - exact(grid.coords[x])));
        }
        std::cout << "pde1d eps=" << eps << " h=" << spec.h << ": sweeps " << trace.sweeps.size()
                  << ", sup error vs parabola " << err << "\n";
        decreasing = decreasing && err < prev_err;
        prev_err = err;
    }
    std::cout << (decreasing ? "error decreases along the eps sequence\n"
                             : "error does NOT decrease along the eps sequence\n");
    return decreasing ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solver and verification suite for tug-of-war dynamic programming principles"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Seed for any randomized subcommand");

    std::string setup_path;
    auto* validate_cmd = app.add_subcommand("validate", "Check a setup file for admissibility");
    validate_cmd->add_option("setup", setup_path, "Setup JSON file")->required();

    std::string problem_path, u0_spec = "zero", out_dir = ".";
    double tol = 1e-10;
    std::uint64_t max_sweeps = 1'000'000;
    auto* solve_cmd = app.add_subcommand("solve", "Iterate a problem file to its fixed point");
    solve_cmd->add_option("problem", problem_path, "Problem JSON file")->required();
    solve_cmd->add_option("--u0", u0_spec, "Start values: zero, const:<c>, or file:<path>");
    solve_cmd->add_option("--tol", tol, "Stopping tolerance")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--max-sweeps", max_sweeps, "Sweep budget");
    solve_cmd->add_option("--out", out_dir, "Output directory");

    int d = 1;
    double mu = 0.5, Lambda = 1.0;
    auto* bounds_cmd = app.add_subcommand("bounds", "Print the layered iteration constants");
    bounds_cmd->add_option("--d", d, "Number of layers")->required()->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--mu", mu, "Bias")->required();
    bounds_cmd->add_option("--Lambda", Lambda, "Data bound")->required();

    std::string tree_path;
    double tree_mu = 0.5, tree_C = 1.0, tree_delta = 0.5;
    auto* tree_cmd = app.add_subcommand("tree-check", "Mass profile and sparsity verdicts");
    tree_cmd->add_option("tree", tree_path, "Tree as nested JSON arrays")->required();
    tree_cmd->add_option("--mu", tree_mu, "Bias")->required();
    tree_cmd->add_option("--C", tree_C, "Sum-estimate constant");
    tree_cmd->add_option("--delta", tree_delta, "Top-layer mass bound");

    std::string values_path;
    tow::PointId root = 0;
    int depth = 1;
    auto* strat_cmd = app.add_subcommand("strategy", "Extract the greedy optimal strategy tree");
    strat_cmd->add_option("problem", problem_path, "Problem JSON file")->required();
    strat_cmd->add_option("--values", values_path, "Value function JSON file")->required();
    strat_cmd->add_option("--root", root, "Root point")->required();
    strat_cmd->add_option("--depth", depth, "Depth horizon")->required();

    std::string demo_name;
    std::vector<double> eps_list;
    auto* demo_cmd = app.add_subcommand("demo", "Run a built-in demonstration");
    demo_cmd->add_option("name", demo_name, "example11 or pde1d")->required();
    demo_cmd->add_option("--eps", eps_list, "Ball radii for pde1d");
    demo_cmd->add_option("--tol", tol, "Stopping tolerance")->check(CLI::PositiveNumber);
    demo_cmd->add_option("--max-sweeps", max_sweeps, "Sweep budget");

    try {
        app.parse(argc, argv);
        if (validate_cmd->parsed()) return cmd_validate(setup_path);
        if (solve_cmd->parsed()) return cmd_solve(problem_path, u0_spec, tol, max_sweeps, out_dir);
        if (bounds_cmd->parsed()) return cmd_bounds(d, mu, Lambda);
        if (tree_cmd->parsed()) return cmd_tree_check(tree_path, tree_mu, tree_C, tree_delta);
        if (strat_cmd->parsed()) return cmd_strategy(problem_path, values_path, root, depth);
        if (demo_cmd->parsed()) {
            if (demo_name == "example11") return demo_example11();
            if (demo_name == "pde1d") return demo_pde1d(eps_list, tol, max_sweeps);
            std::cerr << "unknown demo '" << demo_name << "'\n";
            return 2;
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const tow::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tow::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
