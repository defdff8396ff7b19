#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace sbl {

/// Counter-based random streams (Philox4x64-10).
///
/// A stream is fully determined by (seed, stream_id). Distinct stream ids give
/// statistically independent sequences, so per-sample streams can be derived
/// from (master seed, sample index) and consumed in any order or thread
/// without changing the numbers drawn.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double next_uniform();

    /// Standard normal via the polar method (no trig, exact determinism).
    double next_gaussian();

    /// Fills `out` with independent N(0, stddev^2) draws.
    void fill_gaussian(std::span<double> out, double stddev);

    /// One Philox block for the given counter/key; exposed for testing
    /// against reference implementations.
    static std::array<std::uint64_t, 4> block(const std::array<std::uint64_t, 4>& counter,
                                              std::uint64_t key0, std::uint64_t key1);

private:
    void refill();

    std::uint64_t key0_;
    std::uint64_t key1_;
    std::array<std::uint64_t, 4> counter_{};
    std::array<std::uint64_t, 4> buf_{};
    int pos_ = 4;                 // exhausted; first use triggers refill
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

/// Deterministic 64-bit key derivation (splitmix64 finalizer, applied twice).
/// Used to split a master seed into unrelated sub-seeds for nested estimators
/// and chain restarts.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

} // namespace sbl
