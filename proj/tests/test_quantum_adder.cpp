#include "lnde/quantum_adder.hpp"

#include <gtest/gtest.h>

#include <array>

#include "lnde/boolean_anf.hpp"
#include "lnde/errors.hpp"
#include "oracles.hpp"

using namespace lnde;

namespace {

std::uint64_t digits_value(const Bits &digits) {
    std::uint64_t v = 0;
    for (std::size_t q = 0; q < digits.size(); q++) {
        v |= static_cast<std::uint64_t>(digits[q]) << q;
    }
    return v;
}

}  // namespace

TEST(GhzPhaseLedger, three_senders_all_ones) {
    GhzPhaseLedger ledger(1, 3);
    for (int i = 0; i < 3; i++) {
        ledger.sender_rotate(1);
    }
    EXPECT_EQ(ledger.phase(), 3u);
    for (int i = 0; i < 3; i++) {
        ledger.record_sender_outcome(0);
    }
    // Channel 0 already gave the low digit 1.
    Bits prior{1};
    OlgaOutcome o = ledger.olga_correct_and_measure(prior, 0);
    EXPECT_EQ(o.residual, 2u);
    EXPECT_EQ(o.measurement, 1);
    EXPECT_EQ(o.output, 1);
    EXPECT_TRUE(ledger.consumed());
}

TEST(GhzPhaseLedger, outcome_parity_flips_olga_result) {
    // Same inputs, one sender sees 1: Olga's measurement flips and so does
    // the received parity, leaving the output unchanged.
    GhzPhaseLedger ledger(1, 3);
    for (int i = 0; i < 3; i++) {
        ledger.sender_rotate(1);
    }
    ledger.record_sender_outcome(0);
    ledger.record_sender_outcome(1);
    ledger.record_sender_outcome(0);
    Bits prior{1};
    OlgaOutcome o = ledger.olga_correct_and_measure(prior, 1);
    EXPECT_EQ(o.measurement, 0);
    EXPECT_EQ(o.output, 1);
}

TEST(GhzPhaseLedger, phase_wraps_modulo) {
    GhzPhaseLedger ledger(1, 5);
    for (int i = 0; i < 5; i++) {
        ledger.sender_rotate(1);
    }
    EXPECT_EQ(ledger.phase(), 1u);

    GhzPhaseLedger flipped(2, 3, RotationSign::Flipped);
    flipped.sender_rotate(1);
    EXPECT_EQ(flipped.phase(), 7u);
}

TEST(GhzPhaseLedger, construction_errors) {
    EXPECT_THROW(GhzPhaseLedger(0, 3), InvalidInput);
    EXPECT_THROW(GhzPhaseLedger(63, 3), InvalidInput);
    EXPECT_THROW(GhzPhaseLedger(1, 0), InvalidInput);
}

TEST(GhzPhaseLedger, protocol_violations) {
    {
        GhzPhaseLedger l(1, 2);
        l.sender_rotate(1);
        l.record_sender_outcome(0);
        EXPECT_THROW(l.sender_rotate(0), ProtocolViolation);
    }
    {
        GhzPhaseLedger l(1, 2);
        l.sender_rotate(0);
        l.sender_rotate(0);
        EXPECT_THROW(l.sender_rotate(0), ProtocolViolation);
        EXPECT_THROW(l.sender_rotate(2), InvalidInput);
    }
    {
        GhzPhaseLedger l(1, 2);
        l.record_sender_outcome(0);
        l.record_sender_outcome(0);
        EXPECT_THROW(l.record_sender_outcome(0), ProtocolViolation);
    }
    {
        GhzPhaseLedger l(1, 2);
        l.record_sender_outcome(0);
        Bits prior{0};
        EXPECT_THROW(l.olga_correct_and_measure(prior, 0), ProtocolViolation);
    }
    {
        GhzPhaseLedger l(1, 2);
        l.record_sender_outcome(1);
        l.record_sender_outcome(0);
        Bits prior{0};
        EXPECT_THROW(l.olga_correct_and_measure(prior, 0), ProtocolViolation);
        Bits too_many{0, 0};
        EXPECT_THROW(l.olga_correct_and_measure(too_many, 1), InvalidInput);
        EXPECT_NO_THROW(l.olga_correct_and_measure(prior, 1));
        EXPECT_THROW(l.olga_correct_and_measure(prior, 1), ProtocolViolation);
        EXPECT_THROW(l.record_sender_outcome(0), ProtocolViolation);
    }
}

TEST(GhzPhaseLedger, wrong_prior_outputs_leave_residual) {
    // x = (1, 0, 0): the correct low digit is 1. Claiming 0 leaves pi/2.
    GhzPhaseLedger l(1, 3);
    l.sender_rotate(1);
    l.sender_rotate(0);
    l.sender_rotate(0);
    for (int i = 0; i < 3; i++) {
        l.record_sender_outcome(0);
    }
    Bits wrong{0};
    EXPECT_THROW(l.olga_correct_and_measure(wrong, 0), InternalConsistency);
}

TEST(GhzPhaseLedger, residual_is_always_a_multiple_of_pi) {
    std::mt19937_64 rng(99);
    for (unsigned n = 2; n <= 12; n++) {
        for (unsigned q = 1; q <= floor_log2(n); q++) {
            for (int trial = 0; trial < 50; trial++) {
                std::uint64_t x = rng() & ((std::uint64_t{1} << n) - 1);
                GhzPhaseLedger l(q, n);
                for (unsigned i = 0; i < n; i++) {
                    l.sender_rotate(static_cast<Bit>((x >> i) & 1));
                }
                Bit parity = 0;
                for (unsigned i = 0; i < n; i++) {
                    parity ^= l.sender_measure(rng);
                }
                Bits prior;
                unsigned s = oracle::sum_of_bits(x);
                for (unsigned p = 0; p < q; p++) {
                    prior.push_back(static_cast<Bit>((s >> p) & 1));
                }
                OlgaOutcome o = l.olga_correct_and_measure(prior, parity);
                ASSERT_EQ(o.residual % (std::uint64_t{1} << q), 0u);
                ASSERT_EQ(o.output, (s >> q) & 1);
            }
        }
    }
}

TEST(ghz_budget, values) {
    EXPECT_EQ(ghz_budget(2), 1u);
    EXPECT_EQ(ghz_budget(3), 1u);
    EXPECT_EQ(ghz_budget(4), 2u);
    EXPECT_EQ(ghz_budget(7), 2u);
    EXPECT_EQ(ghz_budget(16), 4u);
    EXPECT_THROW(ghz_budget(1), InvalidInput);
}

TEST(run_quantum_adder, three_ones) {
    Bits in{1, 1, 1};
    AdderTranscript t = run_quantum_adder(in, 2006);
    EXPECT_EQ(t.outputs, (Bits{1, 1}));
    EXPECT_EQ(t.output_value(), 3u);
    EXPECT_EQ(t.channels, 2u);
    EXPECT_EQ(t.ghz_consumed, 1u);
    EXPECT_EQ(t.sent[0], in);
}

TEST(run_quantum_adder, examples) {
    EXPECT_EQ(run_quantum_adder(Bits{1, 1, 0}, 1).outputs, (Bits{0, 1}));
    EXPECT_EQ(run_quantum_adder(Bits{1, 1, 1, 1}, 1).outputs, (Bits{0, 0, 1}));
    EXPECT_EQ(run_quantum_adder(Bits{0, 0}, 1).outputs, (Bits{0, 0}));
}

TEST(run_quantum_adder, errors) {
    EXPECT_THROW(run_quantum_adder(Bits{1}, 1), InvalidInput);
    EXPECT_THROW(run_quantum_adder(Bits{}, 1), InvalidInput);
    EXPECT_THROW(run_quantum_adder(Bits{1, 2}, 1), InvalidInput);
}

TEST(run_quantum_adder, exhaustive_up_to_twelve) {
    for (std::size_t n = 2; n <= 12; n++) {
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); x++) {
            AdderTranscript t = run_quantum_adder(unpack_bits(x, n), x * 31 + n);
            ASSERT_EQ(digits_value(t.outputs), oracle::sum_of_bits(x)) << "N=" << n << " x=" << x;
        }
    }
}

TEST(run_quantum_adder, all_inputs_at_sixteen) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << 16); x++) {
        AdderTranscript t = run_quantum_adder(unpack_bits(x, 16), x);
        ASSERT_EQ(t.outputs.size(), 5u);
        ASSERT_EQ(digits_value(t.outputs), oracle::sum_of_bits(x)) << "x=" << x;
    }
}

TEST(run_quantum_adder, outputs_do_not_depend_on_seed) {
    Bits in{1, 0, 1, 1, 0, 1, 1};
    AdderTranscript first = run_quantum_adder(in, 0);
    bool sent_varied = false;
    for (std::uint64_t seed = 1; seed <= 100; seed++) {
        AdderTranscript t = run_quantum_adder(in, seed);
        ASSERT_EQ(t.outputs, first.outputs);
        sent_varied |= t.sent != first.sent;
    }
    EXPECT_TRUE(sent_varied);
    EXPECT_EQ(run_quantum_adder(in, 42), run_quantum_adder(in, 42));
}

TEST(run_quantum_adder, sent_bits_look_fair_for_any_input) {
    constexpr int kRuns = 4000;
    for (std::uint64_t x : {0x00ull, 0xffull, 0x5aull}) {
        Bits in = unpack_bits(x, 8);
        std::array<std::array<int, 8>, 4> ones{};
        for (int r = 0; r < kRuns; r++) {
            AdderTranscript t = run_quantum_adder(in, 1000 + r);
            for (std::size_t q = 1; q < t.channels; q++) {
                for (std::size_t i = 0; i < 8; i++) {
                    ones[q][i] += t.sent[q][i];
                }
            }
        }
        for (std::size_t q = 1; q < 4; q++) {
            for (std::size_t i = 0; i < 8; i++) {
                double mean = static_cast<double>(ones[q][i]) / kRuns;
                EXPECT_GT(mean, 0.45) << "x=" << x << " q=" << q << " i=" << i;
                EXPECT_LT(mean, 0.55) << "x=" << x << " q=" << q << " i=" << i;
            }
        }
    }
}

TEST(run_quantum_adder, output_digits_have_full_degree) {
    for (unsigned n : {4u, 8u}) {
        unsigned top = floor_log2(n);
        for (unsigned q = 0; q <= top; q++) {
            BooleanFunction f = BooleanFunction::tabulate(
                n, [&](std::uint64_t x) { return run_quantum_adder(unpack_bits(x, n), 7).outputs[q] != 0; });
            EXPECT_EQ(algebraic_degree(f).value, 1u << q) << "N=" << n << " q=" << q;
        }
    }
}

TEST(run_quantum_adder, resource_accounting) {
    std::mt19937_64 rng(3);
    for (std::size_t n = 2; n <= 40; n++) {
        Bits in(n);
        for (auto &b : in) {
            b = rng() & 1;
        }
        AdderTranscript t = run_quantum_adder(in, n);
        EXPECT_EQ(t.channels, floor_log2(n) + 1);
        EXPECT_EQ(t.ghz_consumed, ghz_budget(n));
        EXPECT_EQ(t.sent.size(), t.channels);
        for (const auto &row : t.sent) {
            EXPECT_EQ(row.size(), n);
        }
        EXPECT_EQ(t.received.size(), t.channels);
        EXPECT_EQ(t.olga_results.size(), t.channels - 1);
        EXPECT_EQ(t.outputs.size(), t.channels);
    }
}

TEST(run_quantum_adder, flipped_sign_gives_wrong_sum) {
    AdderOptions flipped;
    flipped.sign = RotationSign::Flipped;
    // With the sign flipped the high digits follow -sum(x) instead.
    AdderTranscript t = run_quantum_adder(Bits{1, 0, 0, 0}, 5, flipped);
    EXPECT_NE(t.output_value(), 1u);
}
