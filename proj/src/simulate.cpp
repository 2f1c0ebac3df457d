#include "qframe/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <thread>

#include "qframe/errors.hpp"

namespace qframe {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2)));
}

/// Uniform in (0, 1]; never zero, so the log below is safe.
double uniform_from_bits(std::uint64_t bits) {
    return (double((bits >> 11) + 1)) * 0x1.0p-53;
}

void validate(const NoiseSpec& spec, std::size_t m) {
    if (!(spec.sigma >= 0.0) || !std::isfinite(spec.sigma)) {
        throw InvalidNoiseSpec("sigma must be finite and nonnegative");
    }
    if (spec.trials == 0) throw InvalidNoiseSpec("trials must be positive");
    std::set<std::size_t> seen;
    for (std::size_t e : spec.erasures) {
        if (e >= m) {
            throw InvalidNoiseSpec("erasure index " + std::to_string(e) +
                                   " out of range for " + std::to_string(m) +
                                   " coefficients");
        }
        if (!seen.insert(e).second) {
            throw InvalidNoiseSpec("duplicate erasure index " + std::to_string(e));
        }
    }
}

} // namespace

double gaussian_sample(std::uint64_t seed, std::uint64_t trial,
                       std::uint64_t coefficient, std::uint64_t component) {
    const std::uint64_t key = mix(mix(mix(seed, trial), coefficient), component);
    const double u1 = uniform_from_bits(splitmix64(key));
    const double u2 = uniform_from_bits(splitmix64(key + 0x632BE59BD9B4E019ULL));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double pairwise_sum(const std::vector<double>& xs) {
    struct Fold {
        static double run(const double* data, std::size_t count) {
            if (count <= 8) {
                double acc = 0.0;
                for (std::size_t i = 0; i < count; ++i) acc += data[i];
                return acc;
            }
            const std::size_t half = count / 2;
            return run(data, half) + run(data + half, count - half);
        }
    };
    return xs.empty() ? 0.0 : Fold::run(xs.data(), xs.size());
}

TransmissionSetup::TransmissionSetup(const Frame& frame, const QVector& signal)
    : frame_(frame), signal_(signal) {
    if (signal.size() != frame.dim()) {
        throw DimensionMismatch("simulation: signal length != frame dimension");
    }
    coefficients_ = frame_decomposition(frame, signal).first;
    onb_ = gram_schmidt(frame.vectors());
    if (onb_.size() != frame.dim()) {
        throw NotAFrame("simulation: family does not span the space");
    }
    onb_coefficients_ = CoefficientVector(onb_.size());
    for (std::size_t k = 0; k < onb_.size(); ++k) {
        onb_coefficients_[k] = inner(signal, onb_[k]);
    }
}

TrialResult TransmissionSetup::run_trial(const std::vector<Quaternion>& noise,
                                         const std::vector<std::size_t>& erasures) const {
    const std::size_t m = frame_.size();
    if (noise.size() != m) {
        throw DimensionMismatch("trial noise length != number of coefficients");
    }

    CoefficientVector received(m);
    for (std::size_t k = 0; k < m; ++k) received[k] = coefficients_[k] + noise[k];
    for (std::size_t e : erasures) received[e] = Quaternion::zero();

    TrialResult result;
    const QVector reconstructed = synthesis(frame_, received);
    result.error = norm(reconstructed - signal_);
    for (std::size_t k = 0; k < m; ++k) {
        const Quaternion effective = received[k] - coefficients_[k];
        result.noise_l1 += norm(effective);
        result.noise_l2sq += norm_sq(effective);
    }

    // identical realization through the orthonormal baseline, where the
    // reconstruction error is exactly the perturbation energy
    const std::size_t d = onb_.size();
    CoefficientVector baseline(d);
    for (std::size_t k = 0; k < d; ++k) baseline[k] = onb_coefficients_[k] + noise[k];
    for (std::size_t e : erasures) {
        if (e < d) baseline[e] = Quaternion::zero();
    }
    QVector baseline_recon(signal_.size());
    for (std::size_t k = 0; k < d; ++k) {
        baseline_recon = baseline_recon + baseline[k] * onb_[k];
    }
    result.onb_error = norm(baseline_recon - signal_);
    for (std::size_t k = 0; k < d; ++k) {
        result.onb_noise_l2sq += norm_sq(baseline[k] - onb_coefficients_[k]);
    }
    return result;
}

SimReport run_simulation(const Frame& frame, const QVector& signal,
                         const NoiseSpec& spec, unsigned threads) {
    validate(spec, frame.size());
    const TransmissionSetup setup(frame, signal);

    SimReport report;
    report.sigma = spec.sigma;
    report.seed = spec.seed;
    report.erasures = spec.erasures;
    report.trials.resize(spec.trials);

    auto run_range = [&](std::size_t begin, std::size_t end) {
        std::vector<Quaternion> noise(frame.size());
        for (std::size_t t = begin; t < end; ++t) {
            for (std::size_t k = 0; k < frame.size(); ++k) {
                noise[k] = Quaternion(
                    spec.sigma * gaussian_sample(spec.seed, t, k, 0),
                    spec.sigma * gaussian_sample(spec.seed, t, k, 1),
                    spec.sigma * gaussian_sample(spec.seed, t, k, 2),
                    spec.sigma * gaussian_sample(spec.seed, t, k, 3));
            }
            report.trials[t] = setup.run_trial(noise, spec.erasures);
        }
    };

    const unsigned workers = std::max(1u, threads);
    if (workers == 1 || spec.trials < 2) {
        run_range(0, spec.trials);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (spec.trials + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = std::min<std::size_t>(w * chunk, spec.trials);
            const std::size_t end = std::min<std::size_t>(begin + chunk, spec.trials);
            if (begin < end) pool.emplace_back(run_range, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    std::vector<double> errs, onb_errs, l1s, l2s;
    errs.reserve(spec.trials);
    onb_errs.reserve(spec.trials);
    l1s.reserve(spec.trials);
    l2s.reserve(spec.trials);
    for (const TrialResult& t : report.trials) {
        errs.push_back(t.error);
        onb_errs.push_back(t.onb_error);
        l1s.push_back(t.noise_l1);
        l2s.push_back(t.noise_l2sq);
        report.max_error = std::max(report.max_error, t.error);
        report.onb_max_error = std::max(report.onb_max_error, t.onb_error);
    }
    const double n = double(spec.trials);
    report.mean_error = pairwise_sum(errs) / n;
    report.onb_mean_error = pairwise_sum(onb_errs) / n;
    report.mean_noise_l1 = pairwise_sum(l1s) / n;
    report.mean_noise_l2sq = pairwise_sum(l2s) / n;
    return report;
}

} // namespace qframe
