#pragma once

#include <array>
#include <complex>

#include "qcorr/sign.hpp"

namespace qcorr::ghz {

/// Per-particle internal phase parameters of the x-basis amplitudes. A triple
/// is realizable when theta1 - theta2 - theta3 - pi/2 is an integer multiple
/// of pi (i.e. 0 or +-pi mod 2pi).
struct Phases {
    double theta1;
    double theta2;
    double theta3;
};

/// Tolerance on the phase-constraint residue.
inline constexpr double kPhaseTolerance = 1e-9;

bool satisfies_phase_constraint(const Phases& phases,
                                double tolerance = kPhaseTolerance) noexcept;

/// The fixed default triple (pi/2, 0, 0); satisfies the constraint exactly.
Phases default_phases() noexcept;

/// Outcome of x-basis measurements on the three particles.
struct Outcome {
    Sign s1;
    Sign s2;
    Sign s3;
};

/// The eight outcomes in a fixed order: s1 is the most significant sign,
/// + precedes -.
std::array<Outcome, 8> all_outcomes() noexcept;

/// Normalized amplitude product N C1 C2* C3* with Ci+ = (1/sqrt2) exp(i theta_i),
/// Ci- rotated by pi/2, and N = 2 sqrt2 so the modulus is 1. Flipping any single
/// sign rotates the result by pi/2 in the complex plane. Throws std::domain_error
/// when the phases violate the realizability constraint.
std::complex<double> product_amplitude(const Phases& phases, const Outcome& outcome);

/// [Re(product_amplitude)]^2: exactly 1 for an odd number of minus signs and 0
/// for an even number. These are conditional certainties, not a distribution.
double joint_probability(const Phases& phases, const Outcome& outcome);

/// joint_probability / 4: the Born probability of the outcome as one of the
/// eight x-basis results, comparable against a state-vector computation.
double born_probability(const Phases& phases, const Outcome& outcome);

}  // namespace qcorr::ghz
