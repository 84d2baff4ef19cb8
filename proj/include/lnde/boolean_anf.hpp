#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lnde/bits.hpp"

namespace lnde {

inline constexpr unsigned kMaxArity = 24;

/// Packed table of 2^arity bits. Index convention: input (x_0,...,x_{k-1})
/// lives at index sum x_i 2^i; as an ANF table, index m is the monomial
/// that multiplies every x_i with bit i of m set.
class BitTable {
   public:
    static BitTable zeros(unsigned arity);
    /// Throws InvalidInput if the length is not a power of two or exceeds 2^kMaxArity.
    static BitTable from_bits(std::span<const Bit> bits);
    /// Low 2^arity bits of a single word. Requires arity <= 6.
    static BitTable from_word(unsigned arity, std::uint64_t word);

    unsigned arity() const noexcept {
        return arity_;
    }
    std::size_t size() const noexcept {
        return std::size_t{1} << arity_;
    }

    bool get(std::size_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    void set(std::size_t index, bool value) {
        std::uint64_t mask = std::uint64_t{1} << (index & 63);
        if (value) {
            words_[index >> 6] |= mask;
        } else {
            words_[index >> 6] &= ~mask;
        }
    }

    std::span<const std::uint64_t> words() const noexcept {
        return words_;
    }
    std::span<std::uint64_t> words() noexcept {
        return words_;
    }

    std::size_t popcount() const;
    Bits to_bits() const;

    bool operator==(const BitTable &other) const = default;

   private:
    explicit BitTable(unsigned arity);

    unsigned arity_;
    std::vector<std::uint64_t> words_;
};

/// Algebraic degree of a Boolean function; 0 for constants.
struct NonlinearityOrder {
    unsigned value = 0;

    auto operator<=>(const NonlinearityOrder &) const = default;
};

/// Immutable Boolean function of up to kMaxArity inputs, stored as a truth table.
class BooleanFunction {
   public:
    explicit BooleanFunction(BitTable truth_table);

    static BooleanFunction from_anf(const BitTable &anf);
    static BooleanFunction constant(unsigned arity, bool value);
    static BooleanFunction parity(unsigned arity);
    static BooleanFunction variable(unsigned arity, unsigned index);

    /// Tabulates `f(x)` for every packed input x in [0, 2^arity).
    template <typename F>
    static BooleanFunction tabulate(unsigned arity, F &&f) {
        BitTable t = BitTable::zeros(arity);
        for (std::size_t x = 0; x < t.size(); x++) {
            t.set(x, static_cast<bool>(f(static_cast<std::uint64_t>(x))));
        }
        return BooleanFunction(std::move(t));
    }

    unsigned arity() const noexcept {
        return truth_table_.arity();
    }
    const BitTable &truth_table() const noexcept {
        return truth_table_;
    }
    /// Zhegalkin coefficients, recomputed on each call.
    BitTable anf() const;

    bool operator()(std::uint64_t packed_input) const {
        return truth_table_.get(static_cast<std::size_t>(packed_input));
    }
    bool evaluate(std::span<const Bit> inputs) const;

    bool operator==(const BooleanFunction &other) const = default;

   private:
    BitTable truth_table_;
};

/// In-place GF(2) Moebius butterfly. The transform is its own inverse, so the
/// same routine maps truth tables to ANF coefficients and back.
BitTable moebius_transform(BitTable table);
BitTable anf_to_truth_table(BitTable anf);

/// Word-sized transform for tables with arity <= 6 (bits above 2^arity must be zero).
std::uint64_t moebius_word(std::uint64_t table, unsigned arity);

/// Max Hamming weight over monomial indices with a nonzero coefficient.
NonlinearityOrder anf_degree(const BitTable &anf);
NonlinearityOrder anf_degree_word(std::uint64_t anf);

NonlinearityOrder algebraic_degree(const BooleanFunction &f);
bool is_linear(const BooleanFunction &f);

/// Digit q of S = x_0 + ... + x_{N-1} as a function of the N inputs.
/// Requires 1 <= N <= kMaxArity and q <= floor(log2 N).
BooleanFunction sum_digit_function(unsigned n_senders, unsigned digit);

/// Monomials as sorted variable lists, e.g. "x0*x2 + x1 + 1"; "0" when empty.
std::string format_anf(const BitTable &anf);

/// Hex truth table, most significant index first, ceil(2^k / 4) digits.
std::string to_hex(const BitTable &table);
BitTable parse_hex(unsigned arity, std::string_view hex);

/// Two-line record: "k=<arity>\n<hex>\n".
std::string to_text(const BooleanFunction &f);
/// Accepts the two-line record or the compact "k=<arity>:<hex>" form.
BooleanFunction parse_boolean_function(std::string_view text);

}  // namespace lnde
