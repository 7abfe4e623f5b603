#include "qcorr/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qcorr::model {

namespace {

// Values this close to the unit interval are rounding noise from the
// transcendental calls and get clamped; anything further out is a caller error.
constexpr double kUnitSlack = 1e-12;

double require_unit_interval(double u, const char* what) {
    if (!(std::abs(u) <= 1.0 + kUnitSlack))
        throw std::domain_error(std::string(what) + " must lie in [-1, 1]");
    return std::clamp(u, -1.0, 1.0);
}

}  // namespace

LocalAmplitude local_amplitude(double theta, double phi, Spin s, Sign outcome) {
    double phase = s.value() * (theta - phi);
    if (outcome == Sign::minus)
        phase += std::numbers::pi / 2.0;
    return std::polar(1.0 / std::numbers::sqrt2, phase);
}

double amplitude_correlation(const PairConfig& config, double internal_phase) {
    // Particle 1 carries internal phase phi, particle 2 carries phi + phi0;
    // both drop out of the product.
    const double phi1 = internal_phase;
    const double phi2 = internal_phase + config.phi0;
    const LocalAmplitude c1 = local_amplitude(config.theta1, phi1, config.spin, Sign::plus);
    const LocalAmplitude c2 = local_amplitude(config.theta2, phi2, config.spin, Sign::plus);
    // N = 2, fixed by |U| = 1 at perfect correlation.
    const double u = 2.0 * std::real(c1 * std::conj(c2));
    return std::clamp(u, -1.0, 1.0);
}

double experimenter_correlation(double u) {
    u = require_unit_interval(u, "correlation u");
    return 2.0 * u * u - 1.0;
}

JointDistribution joint_probabilities(double u) {
    u = require_unit_interval(u, "correlation u");
    const double coincidence = u * u;
    JointDistribution dist{};
    dist.u = u;
    dist.p = 2.0 * coincidence - 1.0;
    dist.p_pp = 0.5 * coincidence;
    dist.p_mm = 0.5 * coincidence;
    dist.p_pm = 0.5 * (1.0 - coincidence);
    dist.p_mp = 0.5 * (1.0 - coincidence);
    return dist;
}

JointDistribution singlet_correlation(double theta1, double theta2) {
    const PairConfig config{Spin::half(), std::numbers::pi, theta1, theta2};
    return joint_probabilities(amplitude_correlation(config));
}

JointDistribution photon_correlation(double theta1, double theta2) {
    const PairConfig config{Spin::one(), std::numbers::pi / 2.0, theta1, theta2};
    return joint_probabilities(amplitude_correlation(config));
}

}  // namespace qcorr::model
