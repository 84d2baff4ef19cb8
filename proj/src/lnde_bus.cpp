#include "lnde/lnde_bus.hpp"

#include <sstream>

#include "lnde/errors.hpp"
#include "lnde/record.hpp"

namespace lnde {

ChannelBus::ChannelBus(std::size_t senders, std::size_t channels)
    : senders_(senders), channels_(channels), values_(channels, 0), used_(senders * channels, false) {
    if (senders == 0 || channels == 0) {
        throw InvalidInput("a bus needs at least one sender and one channel");
    }
}

ChannelBus create_bus(std::size_t senders, std::size_t channels) {
    return ChannelBus(senders, channels);
}

void ChannelBus::upload(std::size_t sender, std::size_t channel, Bit bit) {
    if (sender >= senders_ || channel >= channels_) {
        throw InvalidInput("upload to sender " + std::to_string(sender) + ", channel " + std::to_string(channel) +
                           " is out of range");
    }
    if (bit > 1) {
        throw InvalidInput("uploaded value must be a bit");
    }
    if (sealed_) {
        throw ProtocolViolation("bus already delivered; no further uploads");
    }
    std::size_t slot = sender * channels_ + channel;
    if (used_[slot]) {
        throw ProtocolViolation("sender " + std::to_string(sender) + " already uploaded to channel " +
                                std::to_string(channel));
    }
    used_[slot] = true;
    values_[channel] ^= bit;
    log_.push_back({sender, channel, bit});
}

Bits ChannelBus::deliver() {
    if (sealed_) {
        throw ProtocolViolation("bus already delivered");
    }
    sealed_ = true;
    return values_;
}

bool ChannelBus::has_uploaded(std::size_t sender, std::size_t channel) const {
    if (sender >= senders_ || channel >= channels_) {
        throw InvalidInput("sender or channel out of range");
    }
    return used_[sender * channels_ + channel];
}

BusTranscript ChannelBus::transcript() const {
    if (!sealed_) {
        throw ProtocolViolation("transcript requires a delivered bus");
    }
    return {senders_, channels_, log_, values_};
}

std::string to_text(const BusTranscript &t) {
    std::ostringstream out;
    out << "N=" << t.senders << "\n";
    out << "m=" << t.channels << "\n";
    out << "uploads=";
    for (std::size_t i = 0; i < t.uploads.size(); i++) {
        const Upload &u = t.uploads[i];
        out << (i ? " " : "") << u.sender << ':' << u.channel << ':' << int(u.bit);
    }
    out << "\n";
    out << "delivered=" << bits_to_string(t.delivered) << "\n";
    return out.str();
}

BusTranscript parse_bus_transcript(std::string_view text) {
    Record rec = parse_record(text);
    BusTranscript t;
    t.senders = rec.get_size("N");
    t.channels = rec.get_size("m");
    for (std::string_view item : split_words(rec.get("uploads"))) {
        auto fields = split(item, ':');
        if (fields.size() != 3) {
            throw InvalidInput("bad upload triple '" + std::string(item) + "'");
        }
        Bits b = parse_bits(fields[2]);
        if (b.size() != 1) {
            throw InvalidInput("bad upload bit in '" + std::string(item) + "'");
        }
        t.uploads.push_back({parse_size(fields[0]), parse_size(fields[1]), b[0]});
    }
    t.delivered = parse_bits(rec.get("delivered"));
    return t;
}

}  // namespace lnde
