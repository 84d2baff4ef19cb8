#include "lnde/quantum_adder.hpp"

#include <vector>

#include "lnde/errors.hpp"
#include "lnde/lnde_bus.hpp"

namespace lnde {

GhzPhaseLedger::GhzPhaseLedger(unsigned channel, std::size_t senders, RotationSign sign)
    : channel_(channel), senders_(senders), sign_(sign) {
    if (channel == 0 || channel >= 63) {
        throw InvalidInput("GHZ channels are numbered 1..62");
    }
    if (senders == 0) {
        throw InvalidInput("a GHZ ledger needs at least one sender");
    }
}

void GhzPhaseLedger::sender_rotate(Bit x) {
    if (x > 1) {
        throw InvalidInput("input must be a bit");
    }
    if (consumed_) {
        throw ProtocolViolation("ledger already consumed");
    }
    if (measured_ > 0) {
        throw ProtocolViolation("sender rotation after a sender measurement");
    }
    if (rotations_ == senders_) {
        throw ProtocolViolation("more rotations than senders");
    }
    rotations_++;
    std::uint64_t step = sign_ == RotationSign::Standard ? x : modulus() - x;
    phase_ = (phase_ + step) % modulus();
}

Bit GhzPhaseLedger::record_sender_outcome(Bit outcome) {
    if (consumed_) {
        throw ProtocolViolation("ledger already consumed");
    }
    if (measured_ == senders_) {
        throw ProtocolViolation("more sender measurements than senders");
    }
    measured_++;
    if (outcome) {
        phase_ = (phase_ + (std::uint64_t{1} << channel_)) % modulus();
        outcome_parity_ ^= 1;
    }
    return outcome;
}

OlgaOutcome GhzPhaseLedger::olga_correct_and_measure(std::span<const Bit> prior_outputs, Bit received) {
    if (consumed_) {
        throw ProtocolViolation("ledger already consumed");
    }
    if (measured_ != senders_) {
        throw ProtocolViolation("Olga measured before all senders (" + std::to_string(measured_) + " of " +
                                std::to_string(senders_) + ")");
    }
    if (prior_outputs.size() != channel_) {
        throw InvalidInput("channel " + std::to_string(channel_) + " needs exactly " + std::to_string(channel_) +
                           " earlier output bits");
    }
    require_bits(prior_outputs, "prior outputs");
    if (received != outcome_parity_) {
        throw ProtocolViolation("received bit does not match the parity of the channel's sent bits");
    }

    std::uint64_t correction = 0;
    for (std::size_t p = 0; p < prior_outputs.size(); p++) {
        correction |= static_cast<std::uint64_t>(prior_outputs[p]) << p;
    }
    phase_ = (phase_ + modulus() - correction) % modulus();

    std::uint64_t half = std::uint64_t{1} << channel_;
    if (phase_ % half != 0) {
        throw InternalConsistency("residual phase " + std::to_string(phase_) + " pi/2^" + std::to_string(channel_) +
                                  " is not a multiple of pi on channel " + std::to_string(channel_));
    }
    consumed_ = true;

    // Olga holds |0> + (-1)^parity |1>; the Hadamard maps it to |parity>.
    OlgaOutcome out;
    out.residual = phase_;
    out.measurement = static_cast<Bit>(phase_ / half);
    out.output = out.measurement ^ received;
    return out;
}

std::size_t ghz_budget(std::size_t senders) {
    if (senders < 2) {
        throw InvalidInput("the adder needs at least two senders");
    }
    return floor_log2(senders);
}

AdderTranscript run_quantum_adder(std::span<const Bit> inputs, std::uint64_t seed, const AdderOptions &options) {
    std::size_t n = inputs.size();
    if (n < 2) {
        throw InvalidInput("the adder needs at least two senders, got " + std::to_string(n));
    }
    require_bits(inputs, "inputs");
    std::size_t m = adder_channel_count(n);

    AdderTranscript t;
    t.senders = n;
    t.channels = m;
    t.seed = seed;
    t.inputs.assign(inputs.begin(), inputs.end());
    t.sent.assign(m, Bits(n, 0));

    ChannelBus bus(n, m);
    for (std::size_t i = 0; i < n; i++) {
        bus.upload(i, 0, inputs[i]);
        t.sent[0][i] = inputs[i];
    }

    std::vector<GhzPhaseLedger> ledgers;
    ledgers.reserve(m - 1);
    for (unsigned q = 1; q < m; q++) {
        GhzPhaseLedger &ledger = ledgers.emplace_back(q, n, options.sign);
        Rng rng = channel_rng(seed, q);
        for (std::size_t i = 0; i < n; i++) {
            ledger.sender_rotate(inputs[i]);
        }
        for (std::size_t i = 0; i < n; i++) {
            Bit a = ledger.sender_measure(rng);
            t.sent[q][i] = a;
            bus.upload(i, q, a);
        }
    }

    t.received = bus.deliver();
    t.outputs.push_back(t.received[0]);
    for (unsigned q = 1; q < m; q++) {
        OlgaOutcome o = ledgers[q - 1].olga_correct_and_measure(t.outputs, t.received[q]);
        t.olga_results.push_back(o.measurement);
        t.outputs.push_back(o.output);
    }
    for (const auto &l : ledgers) {
        t.ghz_consumed += l.consumed() ? 1 : 0;
    }
    return t;
}

}  // namespace lnde
