#pragma once

// Sampling discipline shared by the phase-ledger and statevector backends.
// Each GHZ channel q gets its own engine derived from (seed, q); every sender
// measurement consumes exactly one 64-bit draw, in sender-index order.

#include <cstdint>
#include <random>

namespace lnde {

using Rng = std::mt19937_64;

inline Rng channel_rng(std::uint64_t seed, unsigned channel) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), channel, 0x6768u};
    return Rng(seq);
}

/// Draw mapped to [0, 1) with 53-bit resolution.
inline double unit_from_draw(std::uint64_t draw) {
    return static_cast<double>(draw >> 11) * 0x1.0p-53;
}

/// A fair coin from one draw; equals (unit_from_draw(draw) >= 0.5).
inline std::uint8_t fair_bit_from_draw(std::uint64_t draw) {
    return static_cast<std::uint8_t>(draw >> 63);
}

}  // namespace lnde
