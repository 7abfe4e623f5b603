#pragma once

#include <complex>
#include <stdexcept>

#include "qcorr/sign.hpp"

namespace qcorr::model {

/// Spin quantum number of the particles in the pair. Only the two cases the
/// correlation formalism covers are representable: 1/2 (spinors) and 1 (photons).
class Spin {
  public:
    constexpr explicit Spin(double value) : value_(value) {
        if (value != 0.5 && value != 1.0)
            throw std::invalid_argument("Spin: value must be 1/2 or 1");
    }

    static constexpr Spin half() noexcept { return Spin(0.5, unchecked{}); }
    static constexpr Spin one() noexcept { return Spin(1.0, unchecked{}); }

    constexpr double value() const noexcept { return value_; }

    friend constexpr bool operator==(Spin lhs, Spin rhs) noexcept {
        return lhs.value_ == rhs.value_;
    }

  private:
    struct unchecked {};
    constexpr Spin(double value, unchecked) noexcept : value_(value) {}
    double value_;
};

/// Complex amplitude attached to one particle at one analyzer. Every amplitude
/// produced by this module has squared modulus 1/2 (maximally entangled pair).
using LocalAmplitude = std::complex<double>;

/// Everything that fixes one two-particle correlation point: the spin, the
/// source phase offset phi0 between the two internal phase variables, and the
/// two analyzer angles. Angles are radians, unrestricted.
struct PairConfig {
    Spin spin;
    double phi0;
    double theta1;
    double theta2;
};

/// Joint outcome distribution of one pair: the amplitude correlation u, the
/// experimenter's correlation p = 2u^2 - 1, and the four joint probabilities.
/// Marginals are 1/2 on both sides for every setting (no-signalling).
struct JointDistribution {
    double u;
    double p;
    double p_pp;
    double p_mm;
    double p_pm;
    double p_mp;
};

/// Amplitude for outcome `outcome` at an analyzer set to `theta`, for a particle
/// carrying internal phase `phi`: (1/sqrt2) exp{i s (theta - phi)}, rotated by
/// pi/2 in the complex plane for the minus outcome.
LocalAmplitude local_amplitude(double theta, double phi, Spin s, Sign outcome);

/// Amplitude correlation U = 2 Re(C1 C2*) = cos{s(theta1 - theta2) + s phi0},
/// evaluated through the complex amplitude product. `internal_phase` is the
/// (unobservable) phase of particle 1; particle 2 carries internal_phase + phi0.
/// U never depends on it -- that is the phase-offset independence property.
double amplitude_correlation(const PairConfig& config, double internal_phase = 0.0);

/// Experimenter's correlation P = 2u^2 - 1: coincidence minus anticoincidence
/// frequency. Throws std::domain_error when u is outside [-1, 1].
double experimenter_correlation(double u);

/// Splits coincidence mass u^2 evenly over (++) and (--) and anticoincidence
/// mass 1 - u^2 evenly over (+-) and (-+). Throws std::domain_error when u is
/// outside [-1, 1].
JointDistribution joint_probabilities(double u);

/// Spin-1/2 singlet: s = 1/2, phi0 = pi, giving P = -cos(theta1 - theta2).
JointDistribution singlet_correlation(double theta1, double theta2);

/// Polarization-entangled photons: s = 1, phi0 = pi/2, giving
/// P = -cos(2 (theta1 - theta2)).
JointDistribution photon_correlation(double theta1, double theta2);

}  // namespace qcorr::model
