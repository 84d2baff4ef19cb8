#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lnde/bits.hpp"

namespace lnde {

struct Upload {
    std::size_t sender;
    std::size_t channel;
    Bit bit;

    bool operator==(const Upload &) const = default;
};

/// Ordered record of everything that crossed a bus.
struct BusTranscript {
    std::size_t senders = 0;
    std::size_t channels = 0;
    std::vector<Upload> uploads;
    Bits delivered;

    bool operator==(const BusTranscript &) const = default;
};

/// Linear one-bit channels that senders can only XOR into and a single
/// receiver reads once. Senders get nothing back from an upload; there is
/// no read accessor for channel values before delivery.
///
/// A sender that never touches a channel contributes 0. Not thread-safe;
/// uploads commute so any external serialization delivers the same bits.
class ChannelBus {
   public:
    /// Throws InvalidInput if either count is zero.
    ChannelBus(std::size_t senders, std::size_t channels);

    std::size_t senders() const noexcept {
        return senders_;
    }
    std::size_t channels() const noexcept {
        return channels_;
    }
    bool sealed() const noexcept {
        return sealed_;
    }

    /// XORs `bit` into `channel`. Each (sender, channel) pair may upload once.
    void upload(std::size_t sender, std::size_t channel, Bit bit);

    /// Hands the channel values to the receiver and seals the bus.
    Bits deliver();

    bool has_uploaded(std::size_t sender, std::size_t channel) const;
    const std::vector<Upload> &upload_log() const noexcept {
        return log_;
    }

    /// Requires a sealed bus.
    BusTranscript transcript() const;

   private:
    std::size_t senders_;
    std::size_t channels_;
    Bits values_;
    std::vector<bool> used_;  // senders_ x channels_, row-major by sender
    std::vector<Upload> log_;
    bool sealed_ = false;
};

ChannelBus create_bus(std::size_t senders, std::size_t channels);

/// key=value lines: N, m, uploads as sender:channel:bit triples, delivered.
std::string to_text(const BusTranscript &t);
BusTranscript parse_bus_transcript(std::string_view text);

}  // namespace lnde
