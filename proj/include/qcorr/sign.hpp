#pragma once

namespace qcorr {

/// Binary measurement outcome: transmission (+1) or the orthogonal result (-1).
enum class Sign : int { plus = 1, minus = -1 };

constexpr int sign_value(Sign s) noexcept { return static_cast<int>(s); }

constexpr Sign opposite(Sign s) noexcept {
    return s == Sign::plus ? Sign::minus : Sign::plus;
}

}  // namespace qcorr
