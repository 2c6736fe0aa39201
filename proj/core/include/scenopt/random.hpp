#pragma once

#include <cstdint>

namespace scenopt {

// Counter-based generation: every value is a pure function of its inputs, so
// scenario i of a stream can be produced without generating 1..i-1.

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// 64 random bits for (seed, index, stream).
std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t index,
                           std::uint64_t stream = 0) noexcept;

/// Uniform double in [0, 1) with 53 bits of resolution.
double counter_uniform(std::uint64_t seed, std::uint64_t index,
                       std::uint64_t stream = 0) noexcept;

/// Child seed for experiment k of a run started from `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) noexcept;

}  // namespace scenopt
