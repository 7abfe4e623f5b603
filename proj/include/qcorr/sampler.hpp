#pragma once

#include <cstdint>

#include "qcorr/model.hpp"

namespace qcorr::sampler {

/// Monte Carlo tallies of the four joint outcomes.
struct OutcomeCounts {
    std::uint64_t n_pp = 0;
    std::uint64_t n_mm = 0;
    std::uint64_t n_pm = 0;
    std::uint64_t n_mp = 0;

    std::uint64_t total() const noexcept { return n_pp + n_mm + n_pm + n_mp; }

    friend bool operator==(const OutcomeCounts&, const OutcomeCounts&) = default;
};

/// One sampling run: the pair configuration, the event count, and the seed.
struct SamplerRun {
    model::PairConfig config;
    std::uint64_t n_events = 1;
    std::uint64_t seed = 0;
};

/// Draws n_events independent joint outcomes from the configuration's joint
/// distribution. Events are partitioned into fixed 65536-event chunks, each
/// drawn from its own SplitMix64 stream keyed by (seed, chunk index), so the
/// counts are bit-identical for every thread count. thread_count = 0 means
/// one worker per hardware thread. Throws std::invalid_argument when
/// n_events is 0.
OutcomeCounts sample_events(const SamplerRun& run, unsigned thread_count = 0);

/// (n_pp + n_mm - n_pm - n_mp) / n_total. Throws std::invalid_argument on
/// empty counts.
double estimate_correlation(const OutcomeCounts& counts);

}  // namespace qcorr::sampler
