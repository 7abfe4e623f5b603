#pragma once

#include <stdexcept>

namespace qcorr::interference {

/// Two-photon position-correlation setup: wave number k, dimensionless
/// geometry scale alpha, and a reference coordinate x0 that every observable
/// must be independent of.
struct Config {
    Config(double k, double alpha, double x0 = 0.0);

    double k;
    double alpha;
    double x0;
};

/// One full fringe period in detector-coordinate difference: 2*pi / (k*|alpha|).
double fringe_period(const Config& config);

/// Coincidence probability for detectors at x1 and x2, computed through the
/// local amplitudes (1/sqrt2) exp{i alpha k (x_i - x0) / 2} and the coincidence
/// rule. Equals (1 + cos(k alpha (x1 - x2))) / 2; depends only on x1 - x2.
double coincidence_probability(const Config& config, double x1, double x2);

/// Fringe visibility (max - min) / (max + min) over one full period, located
/// from a `samples`-point scan refined to machine accuracy. Requires
/// samples >= 8 and alpha != 0; the pattern always yields 1.
double visibility(const Config& config, int samples);

}  // namespace qcorr::interference
