#include "lnde/classical_lnde.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lnde/errors.hpp"
#include "lnde/lnde_bus.hpp"
#include "oracles.hpp"

using namespace lnde;

namespace {

BooleanFunction and2() {
    return BooleanFunction(BitTable::from_bits(Bits{0, 0, 0, 1}));
}

BooleanFunction identity1() {
    return BooleanFunction(BitTable::from_bits(Bits{0, 1}));
}

ClassicalStrategy parity_strategy(std::size_t n) {
    ClassicalStrategy s;
    s.senders = n;
    s.taps = {(std::uint64_t{1} << n) - 1};
    s.offsets = {0};
    s.receivers = {identity1()};
    return s;
}

// taps a^c and b^c, receiver = AND of the two received bits.
ClassicalStrategy product_strategy() {
    ClassicalStrategy s;
    s.senders = 3;
    s.taps = {0b101, 0b110};
    s.offsets = {0, 0};
    s.receivers = {and2()};
    return s;
}

ClassicalStrategy random_strategy(std::size_t n, std::size_t m, std::size_t outputs, std::mt19937_64 &rng) {
    ClassicalStrategy s;
    s.senders = n;
    for (std::size_t j = 0; j < m; j++) {
        s.taps.push_back(rng() & ((std::uint64_t{1} << n) - 1));
        s.offsets.push_back(static_cast<Bit>(rng() & 1));
    }
    for (std::size_t q = 0; q < outputs; q++) {
        BitTable h = BitTable::zeros(static_cast<unsigned>(m));
        for (std::size_t v = 0; v < h.size(); v++) {
            h.set(v, rng() & 1);
        }
        s.receivers.emplace_back(std::move(h));
    }
    return s;
}

}  // namespace

TEST(run_classical, parity_strategy) {
    ClassicalStrategy s = parity_strategy(5);
    for (std::uint64_t x = 0; x < 32; x++) {
        EXPECT_EQ(run_classical(s, unpack_bits(x, 5)), (Bits{static_cast<Bit>(std::popcount(x) & 1)}));
    }
}

TEST(run_classical, product_of_two_forms) {
    ClassicalStrategy s = product_strategy();
    // (a + c)(b + c) = ab + ac + bc + c over GF(2).
    auto expanded = oracle::multiply({0b001, 0b100}, {0b010, 0b100});
    EXPECT_EQ(expanded, (std::vector<std::uint64_t>{0b011, 0b100, 0b101, 0b110}));
    for (std::uint64_t x = 0; x < 8; x++) {
        EXPECT_EQ(run_classical(s, unpack_bits(x, 3))[0], oracle::eval_monomials(expanded, x) ? 1 : 0);
    }
    BitTable anf = induced_function(s, 0).anf();
    for (std::uint64_t m : expanded) {
        EXPECT_TRUE(anf.get(m));
    }
    EXPECT_EQ(anf.popcount(), expanded.size());
}

TEST(run_classical, degenerate_taps_give_constant) {
    ClassicalStrategy s;
    s.senders = 3;
    s.taps = {0, 0};
    s.offsets = {1, 0};
    // H_0 = received bit 0.
    s.receivers = {BooleanFunction::variable(2, 0)};
    for (std::uint64_t x = 0; x < 8; x++) {
        EXPECT_EQ(run_classical(s, unpack_bits(x, 3)), (Bits{1}));
    }
}

TEST(run_classical, dimension_errors) {
    ClassicalStrategy s = product_strategy();
    EXPECT_THROW(run_classical(s, Bits{1, 0}), InvalidInput);
    EXPECT_THROW(run_classical(s, Bits{1, 0, 2}), InvalidInput);
    ClassicalStrategy bad = s;
    bad.offsets = {0};
    EXPECT_THROW(run_classical(bad, Bits{1, 0, 1}), InvalidInput);
    bad = s;
    bad.receivers = {identity1()};
    EXPECT_THROW(run_classical(bad, Bits{1, 0, 1}), InvalidInput);
    bad = s;
    bad.taps = {0b1000, 0b1};
    EXPECT_THROW(run_classical(bad, Bits{1, 0, 1}), InvalidInput);
}

TEST(run_classical, bus_matches_direct_evaluation) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; trial++) {
        std::size_t n = 1 + rng() % 7;
        std::size_t m = 1 + rng() % 4;
        ClassicalStrategy s = random_strategy(n, m, 1 + rng() % 3, rng);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); x++) {
            Bits in = unpack_bits(x, n);
            ASSERT_EQ(run_classical(s, in), evaluate_direct(s, in));
        }
    }
}

TEST(run_classical, offset_collapse) {
    // Every sender gets its own offset b_{ji}; only their XOR may matter.
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; trial++) {
        std::size_t n = 2 + rng() % 5;
        std::size_t m = 1 + rng() % 3;
        ClassicalStrategy s = random_strategy(n, m, 1, rng);
        std::vector<Bits> b(m, Bits(n));
        for (std::size_t j = 0; j < m; j++) {
            Bit parity = 0;
            for (std::size_t i = 0; i < n; i++) {
                b[j][i] = static_cast<Bit>(rng() & 1);
                parity ^= b[j][i];
            }
            s.offsets[j] = parity;
        }
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); x++) {
            Bits in = unpack_bits(x, n);
            ChannelBus bus(n, m);
            for (std::size_t i = 0; i < n; i++) {
                for (std::size_t j = 0; j < m; j++) {
                    bus.upload(i, j, static_cast<Bit>((((s.taps[j] >> i) & 1) & in[i]) ^ b[j][i]));
                }
            }
            Bit full = s.receivers[0](pack_bits(bus.deliver())) ? 1 : 0;
            ASSERT_EQ(run_classical(s, in)[0], full);
        }
    }
}

TEST(output_degree, examples) {
    EXPECT_EQ(output_degree(parity_strategy(4), 0).value, 1u);
    EXPECT_EQ(output_degree(product_strategy(), 0).value, 2u);
}

TEST(output_degree, random_strategies_respect_bound) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; trial++) {
        ClassicalStrategy s = random_strategy(4, 3, 1, rng);
        unsigned d = output_degree(s, 0).value;
        ASSERT_LE(d, 3u);
        oracle::Fn f = [&](std::uint64_t x) { return run_classical(s, unpack_bits(x, 4))[0] != 0; };
        ASSERT_EQ(d, oracle::degree(f, 4));
    }
}

TEST(output_degree, too_many_senders) {
    ClassicalStrategy s = parity_strategy(21);
    EXPECT_THROW(output_degree(s, 0), ResourceLimit);
    EXPECT_THROW(output_degree(parity_strategy(3), 1), InvalidInput);
}

TEST(enumerate_strategies, counts) {
    StrategySpace space = enumerate_strategies(3, 2);
    EXPECT_EQ(space.size(), 4096u);
    EXPECT_EQ(space.size(), (std::uint64_t{1} << 6) * 4 * 16);
    std::set<std::tuple<std::vector<std::uint64_t>, Bits, std::uint64_t>> seen;
    std::uint64_t visited = 0;
    for (const StrategyTriple &t : space) {
        seen.emplace(t.taps, t.offsets, t.receiver_table);
        visited++;
    }
    EXPECT_EQ(visited, 4096u);
    EXPECT_EQ(seen.size(), 4096u);

    StrategySpace tiny = enumerate_strategies(1, 1);
    EXPECT_EQ(tiny.size(), 16u);
    EXPECT_EQ(std::distance(tiny.begin(), tiny.end()), 16);
}

TEST(enumerate_strategies, order_is_lexicographic) {
    StrategySpace space = enumerate_strategies(2, 1);
    EXPECT_EQ(space.at(0).taps, (std::vector<std::uint64_t>{0}));
    EXPECT_EQ(space.at(1).receiver_table, 1u);
    EXPECT_EQ(space.at(4).offsets, (Bits{1}));
    // c_{00} is the most significant tap bit.
    EXPECT_EQ(space.at(8).taps, (std::vector<std::uint64_t>{0b10}));
    EXPECT_EQ(space.at(16).taps, (std::vector<std::uint64_t>{0b01}));
    EXPECT_THROW(space.at(space.size()), InvalidInput);
}

TEST(enumerate_strategies, budget) {
    try {
        enumerate_strategies(10, 5);
        FAIL() << "expected ResourceLimit";
    } catch (const ResourceLimit &e) {
        EXPECT_EQ(e.log2_required(), 10u * 5 + 5 + 32);
    }
    EXPECT_THROW(enumerate_strategies(3, 2, EnumerationBudget{11}), ResourceLimit);
    EXPECT_NO_THROW(enumerate_strategies(3, 2, EnumerationBudget{12}));
    EXPECT_THROW(search_realizable(sum_digit_function(10, 1), 5), ResourceLimit);
}

TEST(search_realizable, parity_with_one_channel) {
    SearchResult r = search_realizable(sum_digit_function(3, 0), 1);
    ASSERT_TRUE(r.feasible);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->taps, (std::vector<std::uint64_t>{0b111}));
    EXPECT_EQ(r.witness->offsets, (Bits{0}));
    EXPECT_EQ(r.witness->receivers.front(), identity1());
    EXPECT_EQ(r.strategies_examined, 59u);
}

TEST(search_realizable, carry_of_three_is_infeasible_with_two_channels) {
    BooleanFunction s1 = sum_digit_function(3, 1);
    SearchResult r = search_realizable(s1, 2);
    EXPECT_FALSE(r.feasible);
    EXPECT_FALSE(r.witness);
    EXPECT_EQ(r.strategies_examined, 4096u);
    EXPECT_EQ(oracle::count_realizing_triples([&](std::uint64_t x) { return s1(x); }, 3, 2), 0u);
}

TEST(search_realizable, product_of_forms_is_found) {
    BooleanFunction target = induced_function(product_strategy(), 0);
    SearchResult r = search_realizable(target, 2);
    ASSERT_TRUE(r.feasible);
    EXPECT_GT(oracle::count_realizing_triples([&](std::uint64_t x) { return target(x); }, 3, 2), 0u);
    for (std::uint64_t x = 0; x < 8; x++) {
        EXPECT_EQ(run_classical(*r.witness, unpack_bits(x, 3))[0], target(x) ? 1 : 0);
    }
}

TEST(search_realizable, top_digit_of_four_is_infeasible_with_three_channels) {
    BooleanFunction s2 = sum_digit_function(4, 2);
    EXPECT_FALSE(search_realizable(s2, 3).feasible);
    EXPECT_EQ(oracle::count_realizing_triples([&](std::uint64_t x) { return s2(x); }, 4, 3), 0u);
}

TEST(search_realizable, matches_oracle_on_random_targets) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; trial++) {
        BooleanFunction f(BitTable::from_word(3, rng() & 0xff));
        bool expect = oracle::count_realizing_triples([&](std::uint64_t x) { return f(x); }, 3, 2) > 0;
        SearchResult r = search_realizable(f, 2);
        ASSERT_EQ(r.feasible, expect);
        if (r.feasible) {
            for (std::uint64_t x = 0; x < 8; x++) {
                ASSERT_EQ(run_classical(*r.witness, unpack_bits(x, 3))[0], f(x) ? 1 : 0);
            }
        }
    }
}

TEST(search_realizable, parallel_chunks_agree) {
    SearchOptions serial;
    SearchOptions parallel;
    parallel.jobs = 4;
    BooleanFunction target = induced_function(product_strategy(), 0);
    SearchResult a = search_realizable(target, 2, serial);
    SearchResult b = search_realizable(target, 2, parallel);
    EXPECT_EQ(a.strategies_examined, b.strategies_examined);
    EXPECT_EQ(a.witness->taps, b.witness->taps);
    EXPECT_FALSE(search_realizable(sum_digit_function(3, 1), 2, parallel).feasible);
}

TEST(search_realizable_joint, all_digits) {
    std::vector<BooleanFunction> digits{sum_digit_function(3, 0), sum_digit_function(3, 1)};
    EXPECT_FALSE(search_realizable_joint(digits, 2).feasible);
    SearchResult r = search_realizable_joint(digits, 3);
    ASSERT_TRUE(r.feasible);
    ASSERT_EQ(r.witness->receivers.size(), 2u);
    for (std::uint64_t x = 0; x < 8; x++) {
        Bits out = run_classical(*r.witness, unpack_bits(x, 3));
        EXPECT_EQ(out[0], digits[0](x) ? 1 : 0);
        EXPECT_EQ(out[1], digits[1](x) ? 1 : 0);
    }
}

TEST(verify_lemma_bound, small_cases) {
    LemmaReport r21 = verify_lemma_bound(2, 1);
    EXPECT_EQ(r21.max_degree, 1u);
    EXPECT_TRUE(r21.holds());

    LemmaReport r32 = verify_lemma_bound(3, 2);
    EXPECT_EQ(r32.max_degree, 2u);
    EXPECT_TRUE(r32.bound_attained());
    EXPECT_EQ(r32.strategies_examined, 4096u);
    EXPECT_EQ(oracle::max_classical_degree(3, 2), 2u);
    EXPECT_EQ(oracle::max_classical_degree(2, 1), 1u);
}

TEST(verify_lemma_bound, four_senders_three_channels) {
    SearchOptions o;
    o.jobs = 2;
    LemmaReport r = verify_lemma_bound(4, 3, o);
    EXPECT_TRUE(r.holds());
    EXPECT_LE(r.max_degree, 3u);
    EXPECT_EQ(r.strategies_examined, std::uint64_t{1} << 23);
    EXPECT_EQ(r.violations, 0u);
}

TEST(verify_lemma_bound, wide_inputs_use_table_path) {
    LemmaReport r = verify_lemma_bound(7, 2);
    EXPECT_TRUE(r.holds());
    EXPECT_EQ(r.max_degree, 2u);
}

TEST(search_report, text_layout) {
    SearchReport report;
    report.target = "s0";
    report.senders = 3;
    report.channels = 1;
    report.result = search_realizable(sum_digit_function(3, 0), 1);
    EXPECT_EQ(to_text(report),
              "target=s0\nN=3\nm=1\nfeasible=1\nwitness.C[0]=111\nwitness.B=0\nwitness.H[0]=2\nstrategies_examined=59\n");
}
