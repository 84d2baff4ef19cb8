#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "lnde/bits.hpp"
#include "lnde/sampling.hpp"
#include "lnde/transcript.hpp"

namespace lnde {

/// Sign convention of the senders' z-rotation. `Standard` makes the rotated
/// state |0..0> + e^{i pi sum(x)/2^q} |1..1>. `Flipped` negates it and only
/// exists as a negative control for the verification suite.
enum class RotationSign { Standard, Flipped };

struct OlgaOutcome {
    Bit measurement = 0;
    Bit output = 0;
    /// Phase numerator after the correction, in units of pi / 2^q.
    std::uint64_t residual = 0;
};

/// Exact phase bookkeeping for one (N+1)-qubit GHZ state used on channel q.
/// The state stays |s> (x) (|0> + e^{i pi k / 2^q} |1>) up to normalization,
/// so the single integer k modulo 2^{q+1} describes it completely.
class GhzPhaseLedger {
   public:
    /// Throws InvalidInput for channel 0, zero senders or channel >= 63.
    GhzPhaseLedger(unsigned channel, std::size_t senders, RotationSign sign = RotationSign::Standard);

    unsigned channel() const noexcept {
        return channel_;
    }
    std::size_t senders() const noexcept {
        return senders_;
    }
    /// k in [0, 2^{q+1}).
    std::uint64_t phase() const noexcept {
        return phase_;
    }
    std::size_t senders_measured() const noexcept {
        return measured_;
    }
    bool consumed() const noexcept {
        return consumed_;
    }

    /// Rotation by -pi x / 2^q on the calling sender's qubit.
    void sender_rotate(Bit x);

    /// Hadamard then computational-basis measurement of the next sender's
    /// qubit. Outcomes are fair; a 1 flips the sign of Olga's |1> branch.
    template <typename URBG>
    Bit sender_measure(URBG &rng) {
        return record_sender_outcome(fair_bit_from_draw(static_cast<std::uint64_t>(rng())));
    }
    Bit record_sender_outcome(Bit outcome);

    /// Olga applies alpha_q from her earlier outputs, a Hadamard, and measures.
    /// `received` must be the parity of this channel's sent bits.
    OlgaOutcome olga_correct_and_measure(std::span<const Bit> prior_outputs, Bit received);

   private:
    std::uint64_t modulus() const noexcept {
        return std::uint64_t{2} << channel_;
    }

    unsigned channel_;
    std::size_t senders_;
    RotationSign sign_;
    std::uint64_t phase_ = 0;
    std::size_t rotations_ = 0;
    std::size_t measured_ = 0;
    Bit outcome_parity_ = 0;
    bool consumed_ = false;
};

/// floor(log2 N) GHZ states for N >= 2.
std::size_t ghz_budget(std::size_t senders);

struct AdderOptions {
    RotationSign sign = RotationSign::Standard;
};

/// Full entanglement-assisted addition with N >= 2 senders.
AdderTranscript run_quantum_adder(std::span<const Bit> inputs, std::uint64_t seed, const AdderOptions &options = {});

}  // namespace lnde
