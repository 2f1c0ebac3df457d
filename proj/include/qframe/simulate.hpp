#pragma once

#include <cstdint>
#include <vector>

#include "qframe/frame.hpp"
#include "qframe/qvector.hpp"

namespace qframe {

/// Noise model for the transmission simulator: independent Gaussian
/// perturbation of each real component of each transmitted coefficient,
/// plus optional erasures (whole coefficients zeroed at the receiver).
struct NoiseSpec {
    double sigma = 0.0;
    std::vector<std::size_t> erasures;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
};

/// One standard normal draw from the counter-based generator. The draw is
/// a pure function of the key, so results do not depend on evaluation
/// order or thread count.
double gaussian_sample(std::uint64_t seed, std::uint64_t trial,
                       std::uint64_t coefficient, std::uint64_t component);

/// Deterministic pairwise (recursive halving) sum.
double pairwise_sum(const std::vector<double>& xs);

struct TrialResult {
    double error = 0.0;            ///< |f_hat - f| after the frame round trip
    double onb_error = 0.0;        ///< same trial through the orthonormal baseline
    double noise_l1 = 0.0;         ///< sum |c_k| of the effective perturbation
    double noise_l2sq = 0.0;       ///< sum |c_k|^2 of the effective perturbation
    double onb_noise_l2sq = 0.0;   ///< perturbation energy seen by the baseline
};

struct SimReport {
    double sigma = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::size_t> erasures;
    std::vector<TrialResult> trials;
    double mean_error = 0.0;
    double max_error = 0.0;
    double onb_mean_error = 0.0;
    double onb_max_error = 0.0;
    double mean_noise_l1 = 0.0;
    double mean_noise_l2sq = 0.0;
};

/**
 * @brief Precomputed per-signal state shared by all trials: the frame
 * coefficients of the signal and the orthonormal baseline obtained by
 * Gram-Schmidt of the frame.
 */
class TransmissionSetup {
public:
    TransmissionSetup(const Frame& frame, const QVector& signal);

    const Frame& frame() const { return frame_; }
    const QVector& signal() const { return signal_; }
    const CoefficientVector& coefficients() const { return coefficients_; }
    std::size_t baseline_size() const { return onb_.size(); }

    /// Runs one trial with an explicit noise realization (one quaternion
    /// per coefficient). The first baseline_size() noise entries and any
    /// erasure indices below baseline_size() also drive the baseline.
    TrialResult run_trial(const std::vector<Quaternion>& noise,
                          const std::vector<std::size_t>& erasures) const;

private:
    const Frame& frame_;
    QVector signal_;
    CoefficientVector coefficients_;
    std::vector<QVector> onb_;
    CoefficientVector onb_coefficients_;
};

/// Runs the full simulation. Trials may fan out over threads; results are
/// stored per trial index and aggregated in a fixed order, so the report
/// is identical for every thread count.
SimReport run_simulation(const Frame& frame, const QVector& signal,
                         const NoiseSpec& spec, unsigned threads = 1);

} // namespace qframe
