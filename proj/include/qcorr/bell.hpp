#pragma once

#include <array>
#include <functional>
#include <vector>

#include "qcorr/sign.hpp"

namespace qcorr::bell {

/// The four analyzer angles of a CHSH run: two per side.
struct ChshSettings {
    double a;
    double a_prime;
    double b;
    double b_prime;
};

/// Correlation function E(angle1, angle2) in [-1, 1].
using CorrelationFn = std::function<double(double, double)>;

/// S = E(a,b) - E(a,b') + E(a',b) + E(a',b'). Throws std::domain_error when the
/// correlation function returns a value outside [-1, 1].
double chsh_value(const CorrelationFn& correlation, const ChshSettings& settings);

/// A deterministic instruction set: one pre-assigned outcome per setting on
/// each side. Exactly 16 distinct strategies exist.
struct DeterministicStrategy {
    Sign outcome_a;
    Sign outcome_a_prime;
    Sign outcome_b;
    Sign outcome_b_prime;
};

std::array<DeterministicStrategy, 16> all_deterministic_strategies() noexcept;

/// S of one strategy with E(x, y) = product of the assigned outcomes.
/// Integer arithmetic; the value is always 0 or +-2.
int deterministic_chsh_value(const DeterministicStrategy& strategy) noexcept;

/// max |S| over all 16 instruction sets: exactly 2, the local-realistic bound.
double max_deterministic_chsh() noexcept;

struct ScanPoint {
    ChshSettings settings;
    double s;
};

/// Evaluates S on the full lattice {2 pi i / grid_points}^4, in lexicographic
/// (a, a', b, b') order. Requires grid_points >= 2. A grid containing the
/// canonical angles (grid_points divisible by 8) reaches |S| = 2 sqrt2 for the
/// singlet correlation.
std::vector<ScanPoint> scan_chsh(const CorrelationFn& correlation, int grid_points);

}  // namespace qcorr::bell
