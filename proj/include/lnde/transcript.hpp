#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lnde/bits.hpp"

namespace lnde {

/// Everything observable about one run of the distributed adder. Bit arrays
/// are indexed from 0. `sent[0]` is the raw inputs; `sent[q]` for q >= 1 holds
/// the senders' measurement results on GHZ channel q.
struct AdderTranscript {
    std::size_t senders = 0;
    std::size_t channels = 0;
    std::uint64_t seed = 0;
    Bits inputs;
    std::vector<Bits> sent;
    Bits received;
    Bits olga_results;
    Bits outputs;
    std::size_t ghz_consumed = 0;

    /// Integer whose binary digits are `outputs`.
    std::uint64_t output_value() const;

    bool operator==(const AdderTranscript &) const = default;
};

/// m = floor(log2 N) + 1.
std::size_t adder_channel_count(std::size_t senders);

std::string to_text(const AdderTranscript &t);
AdderTranscript parse_transcript(std::string_view text);

/// Flat comma-separated variant, one row per transcript.
std::string transcript_csv_header();
std::string to_csv_row(const AdderTranscript &t);

}  // namespace lnde
