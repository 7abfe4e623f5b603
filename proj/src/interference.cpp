#include "qcorr/interference.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "qcorr/model.hpp"

namespace qcorr::interference {

Config::Config(double k_, double alpha_, double x0_) : k(k_), alpha(alpha_), x0(x0_) {
    if (!std::isfinite(k) || k <= 0.0)
        throw std::invalid_argument("interference: wave number k must be positive");
    if (!std::isfinite(alpha))
        throw std::invalid_argument("interference: alpha must be finite");
    if (!std::isfinite(x0))
        throw std::invalid_argument("interference: x0 must be finite");
}

double fringe_period(const Config& config) {
    if (config.alpha == 0.0)
        throw std::invalid_argument("interference: alpha = 0 has no fringe");
    return 2.0 * std::numbers::pi / (config.k * std::abs(config.alpha));
}

double coincidence_probability(const Config& config, double x1, double x2) {
    // Position entanglement maps onto the spin-1/2 pair via theta_i = alpha k x_i
    // with the common reference phase alpha k x0, which cancels.
    const double scale = config.alpha * config.k;
    const double reference = scale * config.x0;
    const model::LocalAmplitude c1 =
        model::local_amplitude(scale * x1, reference, model::Spin::half(), Sign::plus);
    const model::LocalAmplitude c2 =
        model::local_amplitude(scale * x2, reference, model::Spin::half(), Sign::plus);
    const double u = 2.0 * std::real(c1 * std::conj(c2));
    return std::clamp(u * u, 0.0, 1.0);
}

namespace {

// Narrows a bracket around a grid extremum of the (smooth, locally unimodal)
// pattern. The grid step is at most an eighth of the period, so the bracket
// holds exactly one extremum.
double refine_extremum(const Config& config, double lo, double hi, bool maximize) {
    auto value = [&](double dx) {
        const double p = coincidence_probability(config, dx, 0.0);
        return maximize ? p : -p;
    };
    for (int iter = 0; iter < 200; ++iter) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (value(m1) < value(m2))
            lo = m1;
        else
            hi = m2;
    }
    const double best = value(0.5 * (lo + hi));
    return maximize ? best : -best;
}

}  // namespace

double visibility(const Config& config, int samples) {
    if (samples < 8)
        throw std::invalid_argument("interference: visibility needs samples >= 8");
    const double period = fringe_period(config);
    const double step = period / samples;

    double max_p = -1.0, min_p = 2.0;
    double max_at = 0.0, min_at = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double dx = i * step;
        const double p = coincidence_probability(config, dx, 0.0);
        if (p > max_p) {
            max_p = p;
            max_at = dx;
        }
        if (p < min_p) {
            min_p = p;
            min_at = dx;
        }
    }
    max_p = refine_extremum(config, max_at - step, max_at + step, true);
    min_p = refine_extremum(config, min_at - step, min_at + step, false);
    return (max_p - min_p) / (max_p + min_p);
}

}  // namespace qcorr::interference
