#include "lnde/transcript.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "lnde/errors.hpp"
#include "lnde/quantum_adder.hpp"

using namespace lnde;

TEST(transcript, text_layout) {
    AdderTranscript t = run_quantum_adder(Bits{1, 1, 1}, 2006);
    std::string text = to_text(t);
    EXPECT_NE(text.find("N=3\nm=2\nseed=2006\ninputs=111\nsent[0]=111\n"), std::string::npos);
    EXPECT_NE(text.find("outputs=11\nS=3\nghz_consumed=1\n"), std::string::npos);
}

TEST(transcript, round_trip) {
    for (std::size_t n = 2; n <= 20; n++) {
        Bits in(n);
        for (std::size_t i = 0; i < n; i++) {
            in[i] = static_cast<Bit>((i * 7 + n) % 3 == 0);
        }
        AdderTranscript t = run_quantum_adder(in, n * 13);
        ASSERT_EQ(parse_transcript(to_text(t)), t);
    }
}

TEST(transcript, inconsistent_sum_is_rejected) {
    std::string text = to_text(run_quantum_adder(Bits{1, 1, 1}, 1));
    text.replace(text.find("S=3"), 3, "S=2");
    EXPECT_THROW(parse_transcript(text), InvalidInput);
    EXPECT_THROW(parse_transcript("N=3\n"), InvalidInput);
}

TEST(transcript, csv_row) {
    AdderTranscript t = run_quantum_adder(Bits{1, 0, 1, 1}, 5);
    std::string row = to_csv_row(t);
    std::string header = transcript_csv_header();
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), std::count(header.begin(), header.end(), ','));
    EXPECT_EQ(row.rfind("4,3,5,1011,", 0), 0u);
    EXPECT_NE(row.find(",3,2"), std::string::npos);
}

TEST(transcript, channel_count) {
    EXPECT_EQ(adder_channel_count(2), 2u);
    EXPECT_EQ(adder_channel_count(3), 2u);
    EXPECT_EQ(adder_channel_count(4), 3u);
    EXPECT_EQ(adder_channel_count(16), 5u);
}
