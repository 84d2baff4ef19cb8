#include "lnde/record.hpp"

#include <charconv>

#include "lnde/errors.hpp"

namespace lnde {

void Record::add(std::string key, std::string value) {
    entries_.emplace_back(std::move(key), std::move(value));
}

bool Record::has(std::string_view key) const {
    for (const auto &[k, v] : entries_) {
        if (k == key) {
            return true;
        }
    }
    return false;
}

const std::string &Record::get(std::string_view key) const {
    for (const auto &[k, v] : entries_) {
        if (k == key) {
            return v;
        }
    }
    throw InvalidInput("record is missing field '" + std::string(key) + "'");
}

std::size_t Record::get_size(std::string_view key) const {
    return parse_size(get(key));
}

std::uint64_t Record::get_u64(std::string_view key) const {
    return parse_u64(get(key));
}

std::string Record::to_text() const {
    std::string out;
    for (const auto &[k, v] : entries_) {
        out += k;
        out += '=';
        out += v;
        out += '\n';
    }
    return out;
}

Record parse_record(std::string_view text) {
    Record rec;
    for (std::string_view line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw InvalidInput("record line without '=': '" + std::string(line) + "'");
        }
        rec.add(std::string(line.substr(0, eq)), std::string(line.substr(eq + 1)));
    }
    return rec;
}

std::vector<std::string_view> split_records(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t gap = text.find("\n\n", start);
        std::size_t end = gap == std::string_view::npos ? text.size() : gap + 1;
        std::string_view chunk = text.substr(start, end - start);
        if (chunk.find_first_not_of("\n\r ") != std::string_view::npos) {
            out.push_back(chunk);
        }
        start = gap == std::string_view::npos ? text.size() : gap + 2;
    }
    return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::string_view> split_words(std::string_view s) {
    std::vector<std::string_view> out;
    for (std::string_view w : split(s, ' ')) {
        if (!w.empty()) {
            out.push_back(w);
        }
    }
    return out;
}

std::uint64_t parse_u64(std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw InvalidInput("expected a non-negative integer, got '" + std::string(s) + "'");
    }
    return v;
}

std::size_t parse_size(std::string_view s) {
    return static_cast<std::size_t>(parse_u64(s));
}

}  // namespace lnde
