#pragma once

// Minimal key=value line records shared by every text report.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lnde {

class Record {
   public:
    void add(std::string key, std::string value);

    bool has(std::string_view key) const;
    /// Throws InvalidInput when the key is absent.
    const std::string &get(std::string_view key) const;
    std::size_t get_size(std::string_view key) const;
    std::uint64_t get_u64(std::string_view key) const;

    const std::vector<std::pair<std::string, std::string>> &entries() const noexcept {
        return entries_;
    }

    std::string to_text() const;

   private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

/// Parses "key=value" lines; blank lines are skipped.
Record parse_record(std::string_view text);

/// Splits a multi-record document on blank lines.
std::vector<std::string_view> split_records(std::string_view text);

std::vector<std::string_view> split(std::string_view s, char sep);
std::vector<std::string_view> split_words(std::string_view s);
std::size_t parse_size(std::string_view s);
std::uint64_t parse_u64(std::string_view s);

}  // namespace lnde
