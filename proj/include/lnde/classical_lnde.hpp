#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lnde/bits.hpp"
#include "lnde/boolean_anf.hpp"

namespace lnde {

/// One deterministic classical protocol: sender i uploads c_{ji} x_i to
/// channel j, the per-sender offsets are collapsed into one bit B_j per
/// channel (only their XOR reaches the receiver), and the receiver applies
/// an arbitrary function of the m received bits for each output.
struct ClassicalStrategy {
    std::size_t senders = 0;
    /// Row j of the tap matrix; bit i is c_{ji}. channels() == taps.size().
    std::vector<std::uint64_t> taps;
    Bits offsets;
    /// Receiver functions, each of arity channels().
    std::vector<BooleanFunction> receivers;

    std::size_t channels() const noexcept {
        return taps.size();
    }
};

/// Throws InvalidInput on any dimension mismatch.
void validate(const ClassicalStrategy &s);

/// Runs the strategy through a ChannelBus. Sender 0 carries the collapsed
/// offset bit of every channel.
Bits run_classical(const ClassicalStrategy &s, std::span<const Bit> inputs);

/// r_j = (C_j . x) xor B_j, evaluated algebraically without a bus.
Bits received_bits_direct(const ClassicalStrategy &s, std::span<const Bit> inputs);
Bits evaluate_direct(const ClassicalStrategy &s, std::span<const Bit> inputs);

inline constexpr std::size_t kMaxTabulatedSenders = 20;

/// Tabulates output `output` over all 2^N inputs via run_classical.
/// Throws ResourceLimit when N > kMaxTabulatedSenders.
BooleanFunction induced_function(const ClassicalStrategy &s, std::size_t output);
NonlinearityOrder output_degree(const ClassicalStrategy &s, std::size_t output);

struct EnumerationBudget {
    /// Largest admissible strategy-space size, as a power of two.
    unsigned log2_max_triples = 26;
};

/// A single (C, B, H) point of the per-output search space. Codes follow the
/// enumeration order: C rows concatenated with c_{00} most significant, then
/// B with B_0 most significant, then H as its truth-table integer.
struct StrategyTriple {
    std::vector<std::uint64_t> taps;
    Bits offsets;
    std::uint64_t receiver_table = 0;

    ClassicalStrategy to_strategy(std::size_t senders) const;
    bool operator==(const StrategyTriple &) const = default;
};

/// Every (C, B, H) for N senders and m channels, exactly once, in a fixed
/// order. Size is 2^(mN) * 2^m * 2^(2^m).
class StrategySpace {
   public:
    /// Throws ResourceLimit (carrying log2 of the size) if over budget.
    StrategySpace(std::size_t senders, std::size_t channels, EnumerationBudget budget = {});

    std::size_t senders() const noexcept {
        return senders_;
    }
    std::size_t channels() const noexcept {
        return channels_;
    }
    unsigned log2_size() const noexcept {
        return log2_size_;
    }
    std::uint64_t size() const noexcept {
        return std::uint64_t{1} << log2_size_;
    }
    /// Number of distinct (C, B) pairs.
    std::uint64_t pair_count() const noexcept {
        return std::uint64_t{1} << (log2_size_ - (1u << channels_));
    }
    std::uint64_t receivers_per_pair() const noexcept {
        return std::uint64_t{1} << (1u << channels_);
    }

    StrategyTriple at(std::uint64_t index) const;
    /// Tap rows and offsets of pair index p (p = index >> 2^m).
    void decode_pair(std::uint64_t pair, std::vector<std::uint64_t> &taps, Bits &offsets) const;

    class iterator {
       public:
        using iterator_category = std::input_iterator_tag;
        using value_type = StrategyTriple;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const StrategySpace *space, std::uint64_t index) : space_(space), index_(index) {
        }
        StrategyTriple operator*() const {
            return space_->at(index_);
        }
        iterator &operator++() {
            ++index_;
            return *this;
        }
        iterator operator++(int) {
            iterator tmp = *this;
            ++index_;
            return tmp;
        }
        bool operator==(const iterator &other) const {
            return index_ == other.index_;
        }

       private:
        const StrategySpace *space_ = nullptr;
        std::uint64_t index_ = 0;
    };

    iterator begin() const {
        return {this, 0};
    }
    iterator end() const {
        return {this, size()};
    }

   private:
    std::size_t senders_;
    std::size_t channels_;
    unsigned log2_size_;
};

StrategySpace enumerate_strategies(std::size_t senders, std::size_t channels, EnumerationBudget budget = {});

struct SearchOptions {
    EnumerationBudget budget;
    unsigned jobs = 1;
};

struct SearchResult {
    bool feasible = false;
    std::optional<ClassicalStrategy> witness;
    /// Triples visited under the enumeration order (index of the witness + 1
    /// when feasible). For joint searches this counts (C, B) pairs.
    std::uint64_t strategies_examined = 0;
};

/// Searches for a triple whose single receiver reproduces `target` on every
/// input. Returns the first witness in enumeration order.
SearchResult search_realizable(const BooleanFunction &target, std::size_t channels, const SearchOptions &options = {});

/// Shared (C, B) for all targets, one receiver per target.
SearchResult search_realizable_joint(std::span<const BooleanFunction> targets, std::size_t channels,
                                     const SearchOptions &options = {});

struct LemmaReport {
    std::size_t senders = 0;
    std::size_t channels = 0;
    unsigned max_degree = 0;
    std::uint64_t strategies_examined = 0;
    /// Strategies whose induced output exceeded the channel count.
    std::uint64_t violations = 0;

    bool holds() const noexcept {
        return violations == 0 && max_degree <= channels;
    }
    bool bound_attained() const noexcept {
        return max_degree == channels;
    }
};

/// Exhaustive max of the induced output degree over every triple.
LemmaReport verify_lemma_bound(std::size_t senders, std::size_t channels, const SearchOptions &options = {});

struct SearchReport {
    std::string target;
    std::size_t senders = 0;
    std::size_t channels = 0;
    SearchResult result;
    std::optional<double> wall_ms;
};

std::string to_text(const SearchReport &report);
std::string to_text(const LemmaReport &report);

}  // namespace lnde
