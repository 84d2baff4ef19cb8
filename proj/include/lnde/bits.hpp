#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lnde {

using Bit = std::uint8_t;
using Bits = std::vector<Bit>;

/// "0110" style string, index 0 first.
std::string bits_to_string(std::span<const Bit> bits);

/// Inverse of bits_to_string. Throws InvalidInput on any character other than 0/1.
Bits parse_bits(std::string_view text);

/// Throws InvalidInput unless every entry is 0 or 1.
void require_bits(std::span<const Bit> bits, std::string_view what);

/// Packs bits into an integer, bit i of the result = bits[i]. Requires size <= 64.
std::uint64_t pack_bits(std::span<const Bit> bits);

Bits unpack_bits(std::uint64_t value, std::size_t count);

/// floor(log2(n)) for n >= 1.
unsigned floor_log2(std::uint64_t n);

}  // namespace lnde
