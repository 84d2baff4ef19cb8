#include "lnde/statevector_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lnde/errors.hpp"
#include "lnde/lnde_bus.hpp"
#include "lnde/sampling.hpp"

namespace lnde {

namespace {

using cdouble = std::complex<double>;

void check_size(unsigned qubits) {
    if (qubits > kMaxDenseQubits) {
        throw ResourceLimit("dense state of " + std::to_string(qubits) + " qubits exceeds the cap of " +
                                std::to_string(kMaxDenseQubits),
                            qubits);
    }
}

}  // namespace

DenseState::DenseState(unsigned qubits, std::vector<cdouble> amplitudes)
    : qubits_(qubits), amplitudes_(std::move(amplitudes)) {
}

DenseState DenseState::ghz(unsigned qubits) {
    check_size(qubits);
    if (qubits < 2) {
        throw InvalidInput("a GHZ state needs at least two qubits");
    }
    std::vector<cdouble> amps(std::size_t{1} << qubits, 0.0);
    amps.front() = std::numbers::sqrt2 / 2;
    amps.back() = std::numbers::sqrt2 / 2;
    return DenseState(qubits, std::move(amps));
}

DenseState DenseState::basis(unsigned qubits, std::size_t index) {
    check_size(qubits);
    if (qubits < 1) {
        throw InvalidInput("a state needs at least one qubit");
    }
    std::vector<cdouble> amps(std::size_t{1} << qubits, 0.0);
    if (index >= amps.size()) {
        throw InvalidInput("basis index out of range");
    }
    amps[index] = 1.0;
    return DenseState(qubits, std::move(amps));
}

DenseState init_ghz(unsigned qubits) {
    return DenseState::ghz(qubits);
}

void DenseState::check_qubit(unsigned qubit) const {
    if (qubit >= qubits_) {
        throw InvalidInput("qubit " + std::to_string(qubit) + " out of range for " + std::to_string(qubits_) +
                           " qubits");
    }
}

void DenseState::apply_z_rotation(unsigned qubit, double angle) {
    check_qubit(qubit);
    cdouble phase = std::polar(1.0, -angle);
    std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t i = 0; i < amplitudes_.size(); i++) {
        if (i & bit) {
            amplitudes_[i] *= phase;
        }
    }
}

void DenseState::apply_hadamard(unsigned qubit) {
    check_qubit(qubit);
    const double s = std::numbers::sqrt2 / 2;
    std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t i = 0; i < amplitudes_.size(); i++) {
        if (i & bit) {
            continue;
        }
        cdouble a = amplitudes_[i];
        cdouble b = amplitudes_[i | bit];
        amplitudes_[i] = s * (a + b);
        amplitudes_[i | bit] = s * (a - b);
    }
}

double DenseState::probability_one(unsigned qubit) const {
    check_qubit(qubit);
    std::size_t bit = std::size_t{1} << qubit;
    double p = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); i++) {
        if (i & bit) {
            p += std::norm(amplitudes_[i]);
        }
    }
    return p;
}

double DenseState::norm_squared() const {
    double n = 0.0;
    for (const auto &a : amplitudes_) {
        n += std::norm(a);
    }
    return n;
}

Bit DenseState::measure_with_draw(unsigned qubit, std::uint64_t draw) {
    check_qubit(qubit);
    std::size_t bit = std::size_t{1} << qubit;
    double p0 = 0.0;
    double p1 = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); i++) {
        (i & bit ? p1 : p0) += std::norm(amplitudes_[i]);
    }
    if (p0 + p1 < 1e-300) {
        throw InternalConsistency("measurement on a state with zero norm");
    }
    double total = p0 + p1;
    Bit outcome = unit_from_draw(draw) >= p0 / total ? 1 : 0;
    double kept = outcome ? p1 : p0;
    if (kept <= 0.0) {
        throw InternalConsistency("sampled a measurement outcome of probability zero");
    }
    double scale = 1.0 / std::sqrt(kept);
    for (std::size_t i = 0; i < amplitudes_.size(); i++) {
        bool one = (i & bit) != 0;
        amplitudes_[i] = one == static_cast<bool>(outcome) ? amplitudes_[i] * scale : 0.0;
    }
    return outcome;
}

std::string DenseState::dump() const {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t i = 0; i < amplitudes_.size(); i++) {
        out << i << ' ' << amplitudes_[i].real() << ' ' << amplitudes_[i].imag() << '\n';
    }
    return out.str();
}

StatevectorRun run_adder_statevector_checked(std::span<const Bit> inputs, std::uint64_t seed) {
    std::size_t n = inputs.size();
    if (n < 2) {
        throw InvalidInput("the adder needs at least two senders, got " + std::to_string(n));
    }
    if (n > kMaxStatevectorSenders) {
        throw ResourceLimit("statevector backend supports at most " + std::to_string(kMaxStatevectorSenders) +
                                " senders",
                            static_cast<unsigned>(n + 1));
    }
    require_bits(inputs, "inputs");
    std::size_t m = adder_channel_count(n);
    const unsigned olga = static_cast<unsigned>(n);
    const std::size_t olga_bit = std::size_t{1} << olga;

    StatevectorRun run;
    StatevectorDiagnostics &diag = run.diagnostics;
    AdderTranscript &t = run.transcript;
    t.senders = n;
    t.channels = m;
    t.seed = seed;
    t.inputs.assign(inputs.begin(), inputs.end());
    t.sent.assign(m, Bits(n, 0));

    auto track_norm = [&diag](const DenseState &s) {
        diag.max_norm_error = std::max(diag.max_norm_error, std::abs(s.norm_squared() - 1.0));
    };

    unsigned sum = 0;
    for (Bit x : inputs) {
        sum += x;
    }

    ChannelBus bus(n, m);
    for (std::size_t i = 0; i < n; i++) {
        bus.upload(i, 0, inputs[i]);
        t.sent[0][i] = inputs[i];
    }

    std::vector<DenseState> states;
    std::vector<std::size_t> sender_strings;
    std::vector<Rng> rngs;
    states.reserve(m);
    for (unsigned q = 1; q < m; q++) {
        const double unit = std::numbers::pi / static_cast<double>(std::uint64_t{1} << q);
        DenseState &state = states.emplace_back(DenseState::ghz(static_cast<unsigned>(n + 1)));
        Rng rng = channel_rng(seed, q);

        for (std::size_t i = 0; i < n; i++) {
            state.apply_z_rotation(static_cast<unsigned>(i), -unit * inputs[i]);
            track_norm(state);
        }
        const double r = std::numbers::sqrt2 / 2;
        const cdouble want_ones = std::polar(r, unit * sum);
        const std::size_t ones = (std::size_t{1} << (n + 1)) - 1;
        for (std::size_t i = 0; i <= ones; i++) {
            cdouble want = i == 0 ? cdouble(r) : i == ones ? want_ones : cdouble(0.0);
            diag.max_rotation_error = std::max(diag.max_rotation_error, std::abs(state.amplitude(i) - want));
        }

        for (std::size_t i = 0; i < n; i++) {
            state.apply_hadamard(static_cast<unsigned>(i));
            track_norm(state);
        }
        std::size_t s = 0;
        for (std::size_t i = 0; i < n; i++) {
            diag.max_sender_marginal_error =
                std::max(diag.max_sender_marginal_error, std::abs(state.probability_one(static_cast<unsigned>(i)) - 0.5));
            Bit a = state.measure(static_cast<unsigned>(i), rng);
            track_norm(state);
            s |= static_cast<std::size_t>(a) << i;
            t.sent[q][i] = a;
            bus.upload(i, q, a);
        }
        sender_strings.push_back(s);
        rngs.push_back(std::move(rng));
    }

    t.received = bus.deliver();
    t.outputs.push_back(t.received[0]);
    for (unsigned q = 1; q < m; q++) {
        DenseState &state = states[q - 1];
        // Olga's draw follows the senders' draws on the channel's stream.
        Rng &rng = rngs[q - 1];
        std::uint64_t prior = 0;
        for (std::size_t p = 0; p < t.outputs.size(); p++) {
            prior |= static_cast<std::uint64_t>(t.outputs[p]) << p;
        }
        // alpha_q = -pi * prior / 2^q has to land on Olga's |1> as e^{i alpha_q},
        // which under this gate convention is a rotation by -alpha_q.
        const double alpha = -std::numbers::pi * static_cast<double>(prior) / static_cast<double>(std::uint64_t{1} << q);
        state.apply_z_rotation(olga, -alpha);
        track_norm(state);

        const std::size_t s = sender_strings[q - 1];
        cdouble a0 = state.amplitude(s);
        cdouble a1 = state.amplitude(s | olga_bit);
        double err = std::min(std::abs(a1 - a0), std::abs(a1 + a0)) / std::max(std::abs(a0), 1e-300);
        diag.max_olga_sign_error = std::max(diag.max_olga_sign_error, err);

        state.apply_hadamard(olga);
        track_norm(state);
        double p1 = state.probability_one(olga);
        Bit result = state.measure(olga, rng);
        track_norm(state);
        diag.min_olga_outcome_probability = std::min(diag.min_olga_outcome_probability, result ? p1 : 1.0 - p1);

        t.olga_results.push_back(result);
        t.outputs.push_back(result ^ t.received[q]);
        t.ghz_consumed++;
    }
    return run;
}

AdderTranscript run_adder_statevector(std::span<const Bit> inputs, std::uint64_t seed) {
    return run_adder_statevector_checked(inputs, seed).transcript;
}

}  // namespace lnde
