#include "lnde/classical_lnde.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "lnde/errors.hpp"
#include "lnde/lnde_bus.hpp"
#include "lnde/parallel.hpp"

namespace lnde {

namespace {

std::uint64_t sender_mask(std::size_t senders) {
    return senders >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << senders) - 1;
}

// received[x] = packed received bits for packed input x.
std::vector<std::uint32_t> received_table(std::size_t senders, std::span<const std::uint64_t> taps, std::uint64_t offset_code) {
    std::vector<std::uint32_t> out(std::size_t{1} << senders);
    for (std::uint64_t x = 0; x < out.size(); x++) {
        std::uint32_t r = 0;
        for (std::size_t j = 0; j < taps.size(); j++) {
            std::uint32_t bit = static_cast<std::uint32_t>(std::popcount(taps[j] & x) & 1) ^ ((offset_code >> j) & 1);
            r |= bit << j;
        }
        out[x] = r;
    }
    return out;
}

std::uint64_t pack_offsets(std::span<const Bit> offsets) {
    return pack_bits(offsets);
}

}  // namespace

void validate(const ClassicalStrategy &s) {
    if (s.senders == 0 || s.senders > 64) {
        throw InvalidInput("strategy sender count must be in [1, 64]");
    }
    std::size_t m = s.channels();
    if (m == 0 || m > kMaxArity) {
        throw InvalidInput("strategy needs between 1 and " + std::to_string(kMaxArity) + " channels");
    }
    if (s.offsets.size() != m) {
        throw InvalidInput("offset vector has " + std::to_string(s.offsets.size()) + " entries for " +
                           std::to_string(m) + " channels");
    }
    require_bits(s.offsets, "offsets");
    for (std::uint64_t row : s.taps) {
        if ((row & ~sender_mask(s.senders)) != 0) {
            throw InvalidInput("tap row references a sender beyond N");
        }
    }
    if (s.receivers.empty()) {
        throw InvalidInput("strategy has no receiver functions");
    }
    for (const auto &h : s.receivers) {
        if (h.arity() != m) {
            throw InvalidInput("receiver function arity " + std::to_string(h.arity()) + " does not match " +
                               std::to_string(m) + " channels");
        }
    }
}

Bits run_classical(const ClassicalStrategy &s, std::span<const Bit> inputs) {
    validate(s);
    if (inputs.size() != s.senders) {
        throw InvalidInput("expected " + std::to_string(s.senders) + " inputs, got " + std::to_string(inputs.size()));
    }
    require_bits(inputs, "inputs");

    ChannelBus bus(s.senders, s.channels());
    for (std::size_t i = 0; i < s.senders; i++) {
        for (std::size_t j = 0; j < s.channels(); j++) {
            Bit c = static_cast<Bit>((s.taps[j] >> i) & 1);
            Bit a = c & inputs[i];
            if (i == 0) {
                a ^= s.offsets[j];
            }
            bus.upload(i, j, a);
        }
    }
    Bits received = bus.deliver();
    std::uint64_t r = pack_bits(received);
    Bits out;
    out.reserve(s.receivers.size());
    for (const auto &h : s.receivers) {
        out.push_back(h(r) ? 1 : 0);
    }
    return out;
}

Bits received_bits_direct(const ClassicalStrategy &s, std::span<const Bit> inputs) {
    validate(s);
    if (inputs.size() != s.senders) {
        throw InvalidInput("expected " + std::to_string(s.senders) + " inputs, got " + std::to_string(inputs.size()));
    }
    require_bits(inputs, "inputs");
    std::uint64_t x = pack_bits(inputs);
    Bits r(s.channels());
    for (std::size_t j = 0; j < s.channels(); j++) {
        r[j] = static_cast<Bit>((std::popcount(s.taps[j] & x) & 1) ^ s.offsets[j]);
    }
    return r;
}

Bits evaluate_direct(const ClassicalStrategy &s, std::span<const Bit> inputs) {
    std::uint64_t r = pack_bits(received_bits_direct(s, inputs));
    Bits out;
    for (const auto &h : s.receivers) {
        out.push_back(h(r) ? 1 : 0);
    }
    return out;
}

BooleanFunction induced_function(const ClassicalStrategy &s, std::size_t output) {
    validate(s);
    if (output >= s.receivers.size()) {
        throw InvalidInput("output index out of range");
    }
    if (s.senders > kMaxTabulatedSenders) {
        throw ResourceLimit("tabulating " + std::to_string(s.senders) + " inputs exceeds the cap of " +
                                std::to_string(kMaxTabulatedSenders),
                            static_cast<unsigned>(s.senders));
    }
    unsigned n = static_cast<unsigned>(s.senders);
    return BooleanFunction::tabulate(n, [&](std::uint64_t x) {
        Bits in = unpack_bits(x, n);
        return run_classical(s, in)[output];
    });
}

NonlinearityOrder output_degree(const ClassicalStrategy &s, std::size_t output) {
    return algebraic_degree(induced_function(s, output));
}

ClassicalStrategy StrategyTriple::to_strategy(std::size_t senders) const {
    unsigned m = static_cast<unsigned>(taps.size());
    ClassicalStrategy s;
    s.senders = senders;
    s.taps = taps;
    s.offsets = offsets;
    s.receivers.push_back(BooleanFunction(BitTable::from_word(m, receiver_table)));
    return s;
}

StrategySpace::StrategySpace(std::size_t senders, std::size_t channels, EnumerationBudget budget)
    : senders_(senders), channels_(channels), log2_size_(0) {
    if (senders == 0 || channels == 0) {
        throw InvalidInput("strategy enumeration needs N >= 1 and m >= 1");
    }
    // 2^(m*N) tap matrices, 2^m offsets, 2^(2^m) receivers.
    std::uint64_t log2 = 0;
    if (channels >= 32) {
        log2 = ~std::uint64_t{0} >> 1;
    } else {
        log2 = static_cast<std::uint64_t>(channels) * senders + channels + (std::uint64_t{1} << channels);
    }
    unsigned reported = static_cast<unsigned>(std::min<std::uint64_t>(log2, 0xffffffffu));
    if (log2 > budget.log2_max_triples || log2 > 62) {
        throw ResourceLimit("strategy space for N=" + std::to_string(senders) + ", m=" + std::to_string(channels) +
                                " has 2^" + std::to_string(reported) + " triples, budget is 2^" +
                                std::to_string(budget.log2_max_triples),
                            reported);
    }
    log2_size_ = static_cast<unsigned>(log2);
}

StrategySpace enumerate_strategies(std::size_t senders, std::size_t channels, EnumerationBudget budget) {
    return StrategySpace(senders, channels, budget);
}

void StrategySpace::decode_pair(std::uint64_t pair, std::vector<std::uint64_t> &taps, Bits &offsets) const {
    std::size_t m = channels_;
    std::size_t n = senders_;
    std::uint64_t b_code = pair & ((std::uint64_t{1} << m) - 1);
    std::uint64_t c_code = pair >> m;
    taps.assign(m, 0);
    offsets.assign(m, 0);
    std::size_t total = m * n;
    for (std::size_t j = 0; j < m; j++) {
        for (std::size_t i = 0; i < n; i++) {
            std::size_t pos = total - 1 - (j * n + i);
            taps[j] |= ((c_code >> pos) & 1) << i;
        }
        offsets[j] = static_cast<Bit>((b_code >> (m - 1 - j)) & 1);
    }
}

StrategyTriple StrategySpace::at(std::uint64_t index) const {
    if (index >= size()) {
        throw InvalidInput("strategy index out of range");
    }
    unsigned table_bits = 1u << channels_;
    StrategyTriple t;
    decode_pair(index >> table_bits, t.taps, t.offsets);
    t.receiver_table = table_bits >= 64 ? index : index & ((std::uint64_t{1} << table_bits) - 1);
    return t;
}

SearchResult search_realizable(const BooleanFunction &target, std::size_t channels, const SearchOptions &options) {
    std::size_t n = target.arity();
    StrategySpace space(n, channels, options.budget);
    std::uint64_t per_pair = space.receivers_per_pair();
    const BitTable &want = target.truth_table();

    // Each chunk reports the first matching triple index in its pair range.
    auto firsts = parallel_chunks<std::optional<std::uint64_t>>(
        space.pair_count(), options.jobs, [&](std::uint64_t begin, std::uint64_t end) -> std::optional<std::uint64_t> {
            std::vector<std::uint64_t> taps;
            Bits offsets;
            for (std::uint64_t pair = begin; pair < end; pair++) {
                space.decode_pair(pair, taps, offsets);
                auto received = received_table(n, taps, pack_offsets(offsets));
                for (std::uint64_t h = 0; h < per_pair; h++) {
                    bool ok = true;
                    for (std::size_t x = 0; x < received.size(); x++) {
                        if (((h >> received[x]) & 1) != static_cast<std::uint64_t>(want.get(x))) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        return pair * per_pair + h;
                    }
                }
            }
            return std::nullopt;
        });

    SearchResult result;
    for (const auto &f : firsts) {
        if (f) {
            result.feasible = true;
            result.witness = space.at(*f).to_strategy(n);
            result.strategies_examined = *f + 1;
            return result;
        }
    }
    result.strategies_examined = space.size();
    return result;
}

SearchResult search_realizable_joint(std::span<const BooleanFunction> targets, std::size_t channels,
                                     const SearchOptions &options) {
    if (targets.empty()) {
        throw InvalidInput("joint search needs at least one target");
    }
    std::size_t n = targets[0].arity();
    for (const auto &t : targets) {
        if (t.arity() != n) {
            throw InvalidInput("joint search targets must share one arity");
        }
    }
    StrategySpace space(n, channels, options.budget);
    std::size_t images = std::size_t{1} << channels;

    auto firsts = parallel_chunks<std::optional<std::uint64_t>>(
        space.pair_count(), options.jobs, [&](std::uint64_t begin, std::uint64_t end) -> std::optional<std::uint64_t> {
            std::vector<std::uint64_t> taps;
            Bits offsets;
            std::vector<int> value(images);
            for (std::uint64_t pair = begin; pair < end; pair++) {
                space.decode_pair(pair, taps, offsets);
                auto received = received_table(n, taps, pack_offsets(offsets));
                bool all_ok = true;
                for (const auto &t : targets) {
                    std::fill(value.begin(), value.end(), -1);
                    for (std::size_t x = 0; x < received.size() && all_ok; x++) {
                        int want = t(x) ? 1 : 0;
                        int &slot = value[received[x]];
                        if (slot < 0) {
                            slot = want;
                        } else if (slot != want) {
                            all_ok = false;
                        }
                    }
                    if (!all_ok) {
                        break;
                    }
                }
                if (all_ok) {
                    return pair;
                }
            }
            return std::nullopt;
        });

    SearchResult result;
    for (const auto &f : firsts) {
        if (!f) {
            continue;
        }
        ClassicalStrategy s;
        s.senders = n;
        space.decode_pair(*f, s.taps, s.offsets);
        auto received = received_table(n, s.taps, pack_offsets(s.offsets));
        unsigned m = static_cast<unsigned>(channels);
        for (const auto &t : targets) {
            // Unreached receiver inputs map to 0.
            BitTable h = BitTable::zeros(m);
            for (std::size_t x = 0; x < received.size(); x++) {
                if (t(x)) {
                    h.set(received[x], true);
                }
            }
            s.receivers.emplace_back(std::move(h));
        }
        result.feasible = true;
        result.witness = std::move(s);
        result.strategies_examined = *f + 1;
        return result;
    }
    result.strategies_examined = space.pair_count();
    return result;
}

LemmaReport verify_lemma_bound(std::size_t senders, std::size_t channels, const SearchOptions &options) {
    StrategySpace space(senders, channels, options.budget);
    std::size_t images = std::size_t{1} << channels;
    std::uint64_t per_pair = space.receivers_per_pair();
    unsigned n = static_cast<unsigned>(senders);

    struct Partial {
        unsigned max_degree = 0;
        std::uint64_t violations = 0;
        std::uint64_t examined = 0;
    };

    // The induced table of H is the XOR of the fiber indicators of the
    // received values v with H(v) = 1, and the Moebius transform is linear,
    // so walking H in Gray-code order costs one XOR per receiver.
    auto partials = parallel_chunks<Partial>(space.pair_count(), options.jobs, [&](std::uint64_t begin, std::uint64_t end) {
        Partial p;
        std::vector<std::uint64_t> taps;
        Bits offsets;
        std::vector<BitTable> fiber_anf;
        for (std::uint64_t pair = begin; pair < end; pair++) {
            space.decode_pair(pair, taps, offsets);
            auto received = received_table(senders, taps, pack_offsets(offsets));
            fiber_anf.assign(images, BitTable::zeros(n));
            for (std::size_t x = 0; x < received.size(); x++) {
                fiber_anf[received[x]].set(x, true);
            }
            for (auto &f : fiber_anf) {
                f = moebius_transform(std::move(f));
            }
            BitTable anf = BitTable::zeros(n);
            auto acc = anf.words();
            for (std::uint64_t h = 0; h < per_pair; h++) {
                if (h != 0) {
                    auto flip = fiber_anf[static_cast<std::size_t>(std::countr_zero(h))].words();
                    for (std::size_t w = 0; w < acc.size(); w++) {
                        acc[w] ^= flip[w];
                    }
                }
                unsigned d = acc.size() == 1 ? anf_degree_word(acc[0]).value : anf_degree(anf).value;
                p.max_degree = std::max(p.max_degree, d);
                if (d > channels) {
                    p.violations++;
                }
                p.examined++;
            }
        }
        return p;
    });

    LemmaReport report;
    report.senders = senders;
    report.channels = channels;
    for (const auto &p : partials) {
        report.max_degree = std::max(report.max_degree, p.max_degree);
        report.violations += p.violations;
        report.strategies_examined += p.examined;
    }
    return report;
}

std::string to_text(const SearchReport &report) {
    std::ostringstream out;
    out << "target=" << report.target << "\n";
    out << "N=" << report.senders << "\n";
    out << "m=" << report.channels << "\n";
    out << "feasible=" << (report.result.feasible ? 1 : 0) << "\n";
    if (report.result.witness) {
        const ClassicalStrategy &w = *report.result.witness;
        for (std::size_t j = 0; j < w.channels(); j++) {
            out << "witness.C[" << j << "]=" << bits_to_string(unpack_bits(w.taps[j], w.senders)) << "\n";
        }
        out << "witness.B=" << bits_to_string(w.offsets) << "\n";
        for (std::size_t q = 0; q < w.receivers.size(); q++) {
            out << "witness.H[" << q << "]=" << to_hex(w.receivers[q].truth_table()) << "\n";
        }
    }
    out << "strategies_examined=" << report.result.strategies_examined << "\n";
    if (report.wall_ms) {
        out << "wall_ms=" << *report.wall_ms << "\n";
    }
    return out.str();
}

std::string to_text(const LemmaReport &report) {
    std::ostringstream out;
    out << "N=" << report.senders << "\n";
    out << "m=" << report.channels << "\n";
    out << "max_degree=" << report.max_degree << "\n";
    out << "bound_attained=" << (report.bound_attained() ? 1 : 0) << "\n";
    out << "violations=" << report.violations << "\n";
    out << "strategies_examined=" << report.strategies_examined << "\n";
    return out.str();
}

}  // namespace lnde
