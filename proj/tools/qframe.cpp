#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qframe/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"finite frames on left quaternion modules H^n: analysis, duals,\n"
                 "reconstruction, projections, sparse coefficients, and a seeded\n"
                 "noise-transmission simulator"};
    app.require_subcommand(1);

    std::string frame_path, signal_path, out_path;
    bool json_mode = false;

    auto* analyze = app.add_subcommand("analyze", "frame report: bounds, tightness, spectrum");
    analyze->add_option("frame", frame_path, "frame JSON file")->required();
    analyze->add_flag("--json", json_mode, "machine-readable output");

    auto* dual = app.add_subcommand("dual", "write the canonical dual frame");
    dual->add_option("frame", frame_path, "frame JSON file")->required();
    dual->add_option("-o,--output", out_path, "output frame JSON file")->required();

    auto* reconstruct =
        app.add_subcommand("reconstruct", "frame coefficients and reconstruction of a signal");
    reconstruct->add_option("frame", frame_path, "frame JSON file")->required();
    reconstruct->add_option("signal", signal_path, "signal JSON file")->required();
    reconstruct->add_flag("--json", json_mode, "machine-readable output");

    auto* project =
        app.add_subcommand("project", "orthogonal projection onto the span of a vector list");
    project->add_option("vectors", frame_path, "vector list JSON file (frame schema)")->required();
    project->add_option("signal", signal_path, "signal JSON file")->required();
    project->add_flag("--json", json_mode, "machine-readable output");

    qframe::SolverParams params;
    auto* minl1 = app.add_subcommand("minl1", "minimum sum |d_k| coefficients for a signal");
    minl1->add_option("frame", frame_path, "frame JSON file")->required();
    minl1->add_option("signal", signal_path, "signal JSON file")->required();
    minl1->add_option("--rho", params.rho, "splitting step (default 1.0)");
    minl1->add_option("--max-iter", params.max_iter, "iteration cap (default 5000)");
    minl1->add_option("--tol", params.feas_tol, "feasibility tolerance (default 1e-8)");
    minl1->add_flag("--json", json_mode, "machine-readable output");

    qframe::NoiseSpec spec;
    unsigned threads = 1;
    auto* simulate = app.add_subcommand(
        "simulate", "transmit frame coefficients through a noisy channel and reconstruct");
    simulate->add_option("frame", frame_path, "frame JSON file")->required();
    simulate->add_option("signal", signal_path, "signal JSON file")->required();
    simulate
        ->add_option("--sigma", spec.sigma,
                     "Gaussian std-dev per real coefficient component (model choice;\n"
                     "each quaternion coefficient receives 4 independent samples)")
        ->required();
    simulate->add_option("--erase", spec.erasures, "coefficient indices zeroed at the receiver")
        ->delimiter(',');
    simulate->add_option("--seed", spec.seed, "64-bit seed of the counter-based generator")
        ->required();
    simulate->add_option("--trials", spec.trials, "number of trials")->required();
    simulate->add_option("--threads", threads, "worker threads (results independent of this)");
    simulate->add_flag("--json", json_mode, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            return qframe::cli::cmd_analyze(frame_path, json_mode, std::cout);
        }
        if (dual->parsed()) {
            return qframe::cli::cmd_dual(frame_path, out_path, std::cout);
        }
        if (reconstruct->parsed()) {
            return qframe::cli::cmd_reconstruct(frame_path, signal_path, json_mode, std::cout);
        }
        if (project->parsed()) {
            return qframe::cli::cmd_project(frame_path, signal_path, json_mode, std::cout);
        }
        if (minl1->parsed()) {
            return qframe::cli::cmd_minl1(frame_path, signal_path, params, json_mode, std::cout);
        }
        if (simulate->parsed()) {
            return qframe::cli::cmd_simulate(frame_path, signal_path, spec, threads, json_mode,
                                             std::cout);
        }
    } catch (const std::exception& e) {
        return qframe::cli::exit_code_for(e, std::cerr);
    }
    return qframe::cli::kUsage;
}
