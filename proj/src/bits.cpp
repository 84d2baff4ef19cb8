#include "lnde/bits.hpp"

#include <bit>

#include "lnde/errors.hpp"

namespace lnde {

std::string bits_to_string(std::span<const Bit> bits) {
    std::string out;
    out.reserve(bits.size());
    for (Bit b : bits) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

Bits parse_bits(std::string_view text) {
    Bits out;
    out.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw InvalidInput("expected a 0/1 string, got '" + std::string(text) + "'");
        }
        out.push_back(static_cast<Bit>(c - '0'));
    }
    return out;
}

void require_bits(std::span<const Bit> bits, std::string_view what) {
    for (Bit b : bits) {
        if (b > 1) {
            throw InvalidInput(std::string(what) + " must contain only 0/1 values");
        }
    }
}

std::uint64_t pack_bits(std::span<const Bit> bits) {
    if (bits.size() > 64) {
        throw InvalidInput("cannot pack more than 64 bits into a word");
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < bits.size(); i++) {
        v |= static_cast<std::uint64_t>(bits[i] & 1) << i;
    }
    return v;
}

Bits unpack_bits(std::uint64_t value, std::size_t count) {
    Bits out(count);
    for (std::size_t i = 0; i < count; i++) {
        out[i] = static_cast<Bit>((value >> i) & 1);
    }
    return out;
}

unsigned floor_log2(std::uint64_t n) {
    if (n == 0) {
        throw InvalidInput("floor_log2 of zero");
    }
    return static_cast<unsigned>(std::bit_width(n) - 1);
}

}  // namespace lnde
