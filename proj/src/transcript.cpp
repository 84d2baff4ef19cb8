#include "lnde/transcript.hpp"

#include <sstream>

#include "lnde/errors.hpp"
#include "lnde/record.hpp"

namespace lnde {

std::uint64_t AdderTranscript::output_value() const {
    std::uint64_t v = 0;
    for (std::size_t q = 0; q < outputs.size(); q++) {
        v |= static_cast<std::uint64_t>(outputs[q]) << q;
    }
    return v;
}

std::size_t adder_channel_count(std::size_t senders) {
    return floor_log2(senders) + 1;
}

std::string to_text(const AdderTranscript &t) {
    std::ostringstream out;
    out << "N=" << t.senders << "\n";
    out << "m=" << t.channels << "\n";
    out << "seed=" << t.seed << "\n";
    out << "inputs=" << bits_to_string(t.inputs) << "\n";
    for (std::size_t q = 0; q < t.sent.size(); q++) {
        out << "sent[" << q << "]=" << bits_to_string(t.sent[q]) << "\n";
    }
    out << "received=" << bits_to_string(t.received) << "\n";
    out << "olga_results=" << bits_to_string(t.olga_results) << "\n";
    out << "outputs=" << bits_to_string(t.outputs) << "\n";
    out << "S=" << t.output_value() << "\n";
    out << "ghz_consumed=" << t.ghz_consumed << "\n";
    return out.str();
}

AdderTranscript parse_transcript(std::string_view text) {
    Record rec = parse_record(text);
    AdderTranscript t;
    t.senders = rec.get_size("N");
    t.channels = rec.get_size("m");
    t.seed = rec.get_u64("seed");
    t.inputs = parse_bits(rec.get("inputs"));
    for (std::size_t q = 0; q < t.channels; q++) {
        t.sent.push_back(parse_bits(rec.get("sent[" + std::to_string(q) + "]")));
    }
    t.received = parse_bits(rec.get("received"));
    t.olga_results = parse_bits(rec.get("olga_results"));
    t.outputs = parse_bits(rec.get("outputs"));
    t.ghz_consumed = rec.get_size("ghz_consumed");
    if (rec.get_u64("S") != t.output_value()) {
        throw InvalidInput("transcript S field disagrees with its output bits");
    }
    return t;
}

std::string transcript_csv_header() {
    return "N,m,seed,inputs,sent,received,olga_results,outputs,S,ghz_consumed";
}

std::string to_csv_row(const AdderTranscript &t) {
    std::ostringstream out;
    out << t.senders << ',' << t.channels << ',' << t.seed << ',' << bits_to_string(t.inputs) << ',';
    for (std::size_t q = 0; q < t.sent.size(); q++) {
        out << (q ? "|" : "") << bits_to_string(t.sent[q]);
    }
    out << ',' << bits_to_string(t.received) << ',' << bits_to_string(t.olga_results) << ','
        << bits_to_string(t.outputs) << ',' << t.output_value() << ',' << t.ghz_consumed;
    return out.str();
}

}  // namespace lnde
