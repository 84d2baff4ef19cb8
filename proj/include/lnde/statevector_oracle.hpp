#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lnde/bits.hpp"
#include "lnde/transcript.hpp"

namespace lnde {

inline constexpr unsigned kMaxDenseQubits = 13;
inline constexpr std::size_t kMaxStatevectorSenders = kMaxDenseQubits - 1;

/// Dense amplitudes over n qubits; qubit i is bit i of the basis index.
class DenseState {
   public:
    /// (|0..0> + |1..1>) / sqrt(2). Needs 2 <= n <= kMaxDenseQubits.
    static DenseState ghz(unsigned qubits);
    static DenseState basis(unsigned qubits, std::size_t index);

    unsigned qubits() const noexcept {
        return qubits_;
    }
    std::span<const std::complex<double>> amplitudes() const noexcept {
        return amplitudes_;
    }
    std::complex<double> amplitude(std::size_t index) const {
        return amplitudes_.at(index);
    }

    /// Multiplies the |1> component of `qubit` by e^{-i angle}; a rotation
    /// by -theta therefore puts e^{i theta} on |1>.
    void apply_z_rotation(unsigned qubit, double angle);
    void apply_hadamard(unsigned qubit);

    double probability_one(unsigned qubit) const;
    double norm_squared() const;

    /// Samples from the marginal with one 64-bit draw (outcome 1 iff the
    /// draw, as a unit real, is >= P(0)), then projects and renormalizes.
    Bit measure_with_draw(unsigned qubit, std::uint64_t draw);
    template <typename URBG>
    Bit measure(unsigned qubit, URBG &rng) {
        return measure_with_draw(qubit, static_cast<std::uint64_t>(rng()));
    }

    /// One "index real imag" line per amplitude.
    std::string dump() const;

   private:
    DenseState(unsigned qubits, std::vector<std::complex<double>> amplitudes);
    void check_qubit(unsigned qubit) const;

    unsigned qubits_;
    std::vector<std::complex<double>> amplitudes_;
};

DenseState init_ghz(unsigned qubits);

/// Numerical side channels recorded while replaying the adder on dense states.
struct StatevectorDiagnostics {
    /// max |<psi|psi> - 1| after every gate and measurement.
    double max_norm_error = 0.0;
    /// Distance from |0..0> + e^{i pi sum(x)/2^q}|1..1> after the sender rotations.
    double max_rotation_error = 0.0;
    /// Distance of Olga's corrected qubit from |0> +- |1>.
    double max_olga_sign_error = 0.0;
    /// max |P(0) - 1/2| over sender measurements.
    double max_sender_marginal_error = 0.0;
    /// Smallest probability assigned to Olga's observed outcome.
    double min_olga_outcome_probability = 1.0;
};

struct StatevectorRun {
    AdderTranscript transcript;
    StatevectorDiagnostics diagnostics;
};

/// Same protocol script and sampling discipline as run_quantum_adder, on a
/// dense (N+1)-qubit state per channel. Throws ResourceLimit for N > 12.
AdderTranscript run_adder_statevector(std::span<const Bit> inputs, std::uint64_t seed);
StatevectorRun run_adder_statevector_checked(std::span<const Bit> inputs, std::uint64_t seed);

}  // namespace lnde
