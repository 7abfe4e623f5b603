#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qcorr/sign.hpp"

namespace qcorr::oracle {

// Standard state-vector quantum mechanics, used as the ground truth the
// amplitude formalism is checked against. Deliberately shares no computation
// with the model/ghz modules.

/// Normalized complex vector over the 2^n z-basis states of n two-level
/// particles. Basis ordering: particle 1 is the most significant bit of the
/// index, bit value 0 encodes outcome +, bit value 1 encodes outcome -.
class StateVector {
  public:
    /// Validates that the length is a power of two and the norm is 1 within 1e-12.
    explicit StateVector(std::vector<std::complex<double>> amplitudes);

    std::size_t particle_count() const noexcept { return particles_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }
    const std::vector<std::complex<double>>& amplitudes() const noexcept {
        return amplitudes_;
    }

  private:
    std::vector<std::complex<double>> amplitudes_;
    std::size_t particles_;
};

/// Measurement axis in the z-x plane. For spin-1/2 the projector points along
/// angle `angle`; photon polarization doubles the angle (half-wave symmetry).
enum class SettingKind { spin_half, photon_polarization };

struct MeasurementSetting {
    double angle = 0.0;
    SettingKind kind = SettingKind::spin_half;
};

/// The two-particle singlet (|+-> - |-+>) / sqrt2.
StateVector singlet_state();

/// The three-particle state (|+++> - |--->) / sqrt2.
StateVector ghz_state();

/// Born probability of a joint outcome: the outcome projectors are applied
/// factor by factor and the squared norm of the result is returned. Throws
/// std::invalid_argument when the settings/outcomes lengths do not match the
/// particle count.
double joint_probability(const StateVector& state,
                         std::span<const MeasurementSetting> settings,
                         std::span<const Sign> outcomes);

/// Two-particle correlation sum_{s1,s2} s1 s2 P(s1, s2). For the singlet this
/// is -cos(theta1 - theta2); with photon settings, -cos(2(theta1 - theta2)).
double correlation(const StateVector& state, const MeasurementSetting& first,
                   const MeasurementSetting& second);

}  // namespace qcorr::oracle
