#include "qframe/commands.hpp"

#include <cstdio>
#include <vector>

#include <json.hpp>

#include "qframe/errors.hpp"
#include "qframe/io.hpp"

namespace qframe::cli {

using nlohmann::json;

namespace {

/// Shortest representation that parses back to the same double.
std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt(const Quaternion& q) {
    return "[" + fmt(q.w) + ", " + fmt(q.x) + ", " + fmt(q.y) + ", " + fmt(q.z) + "]";
}

void print_coefficients(std::ostream& out, const CoefficientVector& c,
                        const char* label) {
    out << label << ":\n";
    for (std::size_t k = 0; k < c.size(); ++k) {
        out << "  [" << k << "] " << fmt(c[k]) << "\n";
    }
}

void print_vector(std::ostream& out, const QVector& v, const char* label) {
    out << label << ":";
    for (std::size_t i = 0; i < v.size(); ++i) out << " " << fmt(v[i]);
    out << "\n";
}

json spectrum_json(const Frame& frame) {
    json arr = json::array();
    for (double v : frame.spectrum()) arr.push_back(v);
    return arr;
}

} // namespace

int cmd_analyze(const std::string& frame_path, bool json_mode, std::ostream& out) {
    const Frame frame = load_frame(frame_path);
    const bool frame_ok = is_frame(frame);
    const double lower = frame.spectrum().front();
    const double upper = frame.spectrum().back();
    const auto tight = is_tight(frame);
    double schwartz = 0.0;
    for (const auto& v : frame.vectors()) schwartz += norm(v) * norm(v);

    if (json_mode) {
        json j{{"m", frame.size()},
               {"dim", frame.dim()},
               {"redundancy", double(frame.size()) / double(frame.dim())},
               {"is_frame", frame_ok},
               {"lower_bound", lower},
               {"upper_bound", upper},
               {"schwartz_upper", schwartz},
               {"tight", tight.has_value()},
               {"tight_constant", tight ? json(*tight) : json(nullptr)},
               {"spectrum", spectrum_json(frame)}};
        out << j.dump(2) << "\n";
    } else {
        out << "vectors (m):      " << frame.size() << "\n";
        out << "dimension (n):    " << frame.dim() << "\n";
        out << "redundancy (m/n): " << fmt(double(frame.size()) / double(frame.dim())) << "\n";
        out << "frame:            " << (frame_ok ? "yes" : "no") << "\n";
        out << "optimal bound A:  " << fmt(lower) << "\n";
        out << "optimal bound B:  " << fmt(upper) << "\n";
        out << "sum |f_k|^2:      " << fmt(schwartz) << "\n";
        out << "tight:            " << (tight ? ("yes, A = " + fmt(*tight)) : std::string("no"))
            << "\n";
        out << "spectrum:        ";
        for (double v : frame.spectrum()) out << " " << fmt(v);
        out << "\n";
    }
    return frame_ok ? kOk : kNotAFrame;
}

int cmd_dual(const std::string& frame_path, const std::string& out_path,
             std::ostream& out) {
    const Frame frame = load_frame(frame_path);
    const DualFrame dual = canonical_dual(frame);
    save_frame(out_path, frame.dim(), dual.vectors);
    out << "canonical dual (" << dual.vectors.size() << " vectors) written to "
        << out_path << "\n";
    return kOk;
}

int cmd_reconstruct(const std::string& frame_path, const std::string& signal_path,
                    bool json_mode, std::ostream& out) {
    const Frame frame = load_frame(frame_path);
    const QVector signal = load_signal(signal_path);
    const auto [coeffs, recon] = frame_decomposition(frame, signal);
    const double error = norm(recon - signal);

    if (json_mode) {
        json j{{"coefficients", coefficients_to_json(coeffs)},
               {"reconstruction", qvector_to_json(recon)},
               {"error", error}};
        out << j.dump(2) << "\n";
    } else {
        print_coefficients(out, coeffs, "frame coefficients <f|S^-1 f_k>");
        print_vector(out, recon, "reconstruction");
        out << "error: " << fmt(error) << "\n";
    }
    return kOk;
}

int cmd_project(const std::string& vectors_path, const std::string& signal_path,
                bool json_mode, std::ostream& out) {
    // the vector list reuses the frame file schema but need not span
    const Frame family = load_frame(vectors_path);
    const QVector signal = load_signal(signal_path);
    const QVector projection = project_onto_span(family.vectors(), signal);
    const double residual = norm(signal - projection);
    const std::size_t rank = gram_schmidt(family.vectors()).size();

    if (json_mode) {
        json j{{"projection", qvector_to_json(projection)},
               {"residual", residual},
               {"rank", rank}};
        out << j.dump(2) << "\n";
    } else {
        print_vector(out, projection, "projection");
        out << "residual |f - Pf|: " << fmt(residual) << "\n";
        out << "span rank: " << rank << "\n";
    }
    return kOk;
}

int cmd_minl1(const std::string& frame_path, const std::string& signal_path,
              const SolverParams& params, bool json_mode, std::ostream& out) {
    const Frame frame = load_frame(frame_path);
    const QVector signal = load_signal(signal_path);
    const L1SolveReport report = min_l1_coefficients(frame, signal, params);
    const double canonical_objective =
        lp_norm(canonical_coefficients(frame, signal), 1.0);

    if (json_mode) {
        json j{{"objective", report.objective},
               {"canonical_objective", canonical_objective},
               {"iterations", report.iterations},
               {"primal_residual", report.primal_residual},
               {"dual_residual", report.dual_residual},
               {"converged", report.converged},
               {"coefficients", coefficients_to_json(report.coefficients)}};
        out << j.dump(2) << "\n";
    } else {
        out << "objective sum |d_k|:  " << fmt(report.objective) << "\n";
        out << "canonical objective:  " << fmt(canonical_objective) << "\n";
        out << "iterations:           " << report.iterations << "\n";
        out << "primal residual:      " << fmt(report.primal_residual) << "\n";
        out << "dual residual:        " << fmt(report.dual_residual) << "\n";
        out << "converged:            " << (report.converged ? "yes" : "no") << "\n";
        print_coefficients(out, report.coefficients, "coefficients");
    }
    return report.converged ? kOk : kNoConvergence;
}

int cmd_simulate(const std::string& frame_path, const std::string& signal_path,
                 const NoiseSpec& spec, unsigned threads, bool json_mode,
                 std::ostream& out) {
    const Frame frame = load_frame(frame_path);
    const QVector signal = load_signal(signal_path);
    const SimReport report = run_simulation(frame, signal, spec, threads);

    if (json_mode) {
        json per_trial = json::array();
        for (const TrialResult& t : report.trials) {
            per_trial.push_back(json{{"error", t.error},
                                     {"onb_error", t.onb_error},
                                     {"noise_l1", t.noise_l1},
                                     {"noise_l2sq", t.noise_l2sq},
                                     {"onb_noise_l2sq", t.onb_noise_l2sq}});
        }
        json j{{"sigma", report.sigma},
               {"seed", report.seed},
               {"trials", report.trials.size()},
               {"erasures", report.erasures},
               {"per_trial", std::move(per_trial)},
               {"mean_error", report.mean_error},
               {"max_error", report.max_error},
               {"onb_mean_error", report.onb_mean_error},
               {"onb_max_error", report.onb_max_error},
               {"mean_noise_l1", report.mean_noise_l1},
               {"mean_noise_l2sq", report.mean_noise_l2sq}};
        out << j.dump(2) << "\n";
    } else {
        out << "trials: " << report.trials.size() << "  sigma: " << fmt(report.sigma)
            << "  seed: " << report.seed << "\n";
        if (!report.erasures.empty()) {
            out << "erasures:";
            for (std::size_t e : report.erasures) out << " " << e;
            out << "\n";
        }
        out << "trial  error  onb_error  noise_l1  noise_l2sq\n";
        for (std::size_t t = 0; t < report.trials.size(); ++t) {
            const TrialResult& r = report.trials[t];
            out << t << "  " << fmt(r.error) << "  " << fmt(r.onb_error) << "  "
                << fmt(r.noise_l1) << "  " << fmt(r.noise_l2sq) << "\n";
        }
        out << "mean error:        " << fmt(report.mean_error) << "\n";
        out << "max error:         " << fmt(report.max_error) << "\n";
        out << "onb mean error:    " << fmt(report.onb_mean_error) << "\n";
        out << "onb max error:     " << fmt(report.onb_max_error) << "\n";
        out << "mean noise l1:     " << fmt(report.mean_noise_l1) << "\n";
        out << "mean noise l2^2:   " << fmt(report.mean_noise_l2sq) << "\n";
    }
    return kOk;
}

int exit_code_for(const std::exception& e, std::ostream& err) {
    err << "error: " << e.what() << "\n";
    if (dynamic_cast<const NotAFrame*>(&e) || dynamic_cast<const NotABasis*>(&e)) {
        return kNotAFrame;
    }
    if (dynamic_cast<const NoConvergence*>(&e)) {
        return kNoConvergence;
    }
    return kUsage;
}

} // namespace qframe::cli
