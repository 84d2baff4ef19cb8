#include "lnde/boolean_anf.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "lnde/errors.hpp"

namespace lnde {

namespace {

// Bits of a 64-bit word whose index has variable i set.
constexpr std::uint64_t kVarMaskPos[6] = {
    0xaaaaaaaaaaaaaaaaULL,
    0xccccccccccccccccULL,
    0xf0f0f0f0f0f0f0f0ULL,
    0xff00ff00ff00ff00ULL,
    0xffff0000ffff0000ULL,
    0xffffffff00000000ULL,
};

std::uint64_t low_mask(unsigned arity) {
    return arity >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::size_t{1} << arity)) - 1;
}

void check_arity(unsigned arity) {
    if (arity > kMaxArity) {
        throw InvalidInput("arity " + std::to_string(arity) + " exceeds the cap of " + std::to_string(kMaxArity));
    }
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
    }
    if (c >= 'A' && c <= 'F') {
        return c - 'A' + 10;
    }
    return -1;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

BitTable::BitTable(unsigned arity) : arity_(arity), words_(arity >= 6 ? (std::size_t{1} << (arity - 6)) : 1, 0) {
}

BitTable BitTable::zeros(unsigned arity) {
    check_arity(arity);
    return BitTable(arity);
}

BitTable BitTable::from_bits(std::span<const Bit> bits) {
    if (bits.empty() || !std::has_single_bit(bits.size())) {
        throw InvalidInput("table length " + std::to_string(bits.size()) + " is not a power of two");
    }
    require_bits(bits, "table");
    BitTable t = zeros(static_cast<unsigned>(std::countr_zero(bits.size())));
    for (std::size_t i = 0; i < bits.size(); i++) {
        t.set(i, bits[i] != 0);
    }
    return t;
}

BitTable BitTable::from_word(unsigned arity, std::uint64_t word) {
    if (arity > 6) {
        throw InvalidInput("from_word requires arity <= 6");
    }
    if ((word & ~low_mask(arity)) != 0) {
        throw InvalidInput("word has bits beyond 2^arity");
    }
    BitTable t(arity);
    t.words_[0] = word;
    return t;
}

std::size_t BitTable::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

Bits BitTable::to_bits() const {
    Bits out(size());
    for (std::size_t i = 0; i < out.size(); i++) {
        out[i] = get(i) ? 1 : 0;
    }
    return out;
}

BooleanFunction::BooleanFunction(BitTable truth_table) : truth_table_(std::move(truth_table)) {
}

BooleanFunction BooleanFunction::from_anf(const BitTable &anf) {
    return BooleanFunction(anf_to_truth_table(anf));
}

BooleanFunction BooleanFunction::constant(unsigned arity, bool value) {
    return tabulate(arity, [value](std::uint64_t) { return value; });
}

BooleanFunction BooleanFunction::parity(unsigned arity) {
    return tabulate(arity, [](std::uint64_t x) { return std::popcount(x) & 1; });
}

BooleanFunction BooleanFunction::variable(unsigned arity, unsigned index) {
    if (index >= arity) {
        throw InvalidInput("variable index out of range");
    }
    return tabulate(arity, [index](std::uint64_t x) { return (x >> index) & 1; });
}

BitTable BooleanFunction::anf() const {
    return moebius_transform(truth_table_);
}

bool BooleanFunction::evaluate(std::span<const Bit> inputs) const {
    if (inputs.size() != arity()) {
        throw InvalidInput("expected " + std::to_string(arity()) + " inputs, got " + std::to_string(inputs.size()));
    }
    require_bits(inputs, "inputs");
    return (*this)(pack_bits(inputs));
}

std::uint64_t moebius_word(std::uint64_t table, unsigned arity) {
    unsigned stages = std::min(arity, 6u);
    for (unsigned i = 0; i < stages; i++) {
        table ^= (table << (1u << i)) & kVarMaskPos[i];
    }
    return table;
}

BitTable moebius_transform(BitTable table) {
    auto words = table.words();
    unsigned arity = table.arity();
    for (std::uint64_t &w : words) {
        w = moebius_word(w, arity);
    }
    for (unsigned i = 6; i < arity; i++) {
        std::size_t stride = std::size_t{1} << (i - 6);
        for (std::size_t base = 0; base < words.size(); base += 2 * stride) {
            for (std::size_t j = 0; j < stride; j++) {
                words[base + stride + j] ^= words[base + j];
            }
        }
    }
    return table;
}

BitTable anf_to_truth_table(BitTable anf) {
    return moebius_transform(std::move(anf));
}

NonlinearityOrder anf_degree_word(std::uint64_t anf) {
    unsigned best = 0;
    while (anf != 0) {
        unsigned m = static_cast<unsigned>(std::countr_zero(anf));
        best = std::max(best, static_cast<unsigned>(std::popcount(m)));
        anf &= anf - 1;
    }
    return {best};
}

NonlinearityOrder anf_degree(const BitTable &anf) {
    unsigned best = 0;
    auto words = anf.words();
    for (std::size_t wi = 0; wi < words.size(); wi++) {
        std::uint64_t w = words[wi];
        unsigned high = static_cast<unsigned>(std::popcount(wi));
        while (w != 0) {
            unsigned low = static_cast<unsigned>(std::countr_zero(w));
            best = std::max(best, high + static_cast<unsigned>(std::popcount(low)));
            w &= w - 1;
        }
    }
    return {best};
}

NonlinearityOrder algebraic_degree(const BooleanFunction &f) {
    return anf_degree(f.anf());
}

bool is_linear(const BooleanFunction &f) {
    return algebraic_degree(f).value <= 1;
}

BooleanFunction sum_digit_function(unsigned n_senders, unsigned digit) {
    if (n_senders < 1 || n_senders > kMaxArity) {
        throw InvalidInput("sender count must be in [1, " + std::to_string(kMaxArity) + "]");
    }
    if (digit > floor_log2(n_senders)) {
        throw InvalidInput("digit " + std::to_string(digit) + " out of range for N=" + std::to_string(n_senders));
    }
    return BooleanFunction::tabulate(n_senders, [digit](std::uint64_t x) {
        auto sum = static_cast<unsigned>(std::popcount(x));
        return (sum >> digit) & 1;
    });
}

std::string format_anf(const BitTable &anf) {
    std::vector<std::vector<unsigned>> monomials;
    bool constant = false;
    for (std::size_t m = 0; m < anf.size(); m++) {
        if (!anf.get(m)) {
            continue;
        }
        if (m == 0) {
            constant = true;
            continue;
        }
        std::vector<unsigned> vars;
        for (unsigned i = 0; i < anf.arity(); i++) {
            if ((m >> i) & 1) {
                vars.push_back(i);
            }
        }
        monomials.push_back(std::move(vars));
    }
    std::sort(monomials.begin(), monomials.end());

    std::string out;
    for (const auto &vars : monomials) {
        if (!out.empty()) {
            out += " + ";
        }
        for (std::size_t j = 0; j < vars.size(); j++) {
            if (j) {
                out += '*';
            }
            out += 'x' + std::to_string(vars[j]);
        }
    }
    if (constant) {
        out += out.empty() ? "1" : " + 1";
    }
    return out.empty() ? "0" : out;
}

std::string to_hex(const BitTable &table) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::size_t n_digits = std::max<std::size_t>(1, table.size() / 4);
    std::string out(n_digits, '0');
    for (std::size_t p = 0; p < n_digits; p++) {
        unsigned nibble = 0;
        for (unsigned b = 0; b < 4; b++) {
            std::size_t idx = 4 * p + b;
            if (idx < table.size() && table.get(idx)) {
                nibble |= 1u << b;
            }
        }
        out[n_digits - 1 - p] = kDigits[nibble];
    }
    return out;
}

BitTable parse_hex(unsigned arity, std::string_view hex) {
    BitTable t = BitTable::zeros(arity);
    hex = trim(hex);
    if (hex.starts_with("0x") || hex.starts_with("0X")) {
        hex.remove_prefix(2);
    }
    std::size_t n_digits = std::max<std::size_t>(1, t.size() / 4);
    if (hex.size() != n_digits) {
        throw InvalidInput("arity " + std::to_string(arity) + " needs " + std::to_string(n_digits) +
                           " hex digits, got " + std::to_string(hex.size()));
    }
    for (std::size_t p = 0; p < n_digits; p++) {
        int v = hex_value(hex[n_digits - 1 - p]);
        if (v < 0) {
            throw InvalidInput("bad hex digit in truth table '" + std::string(hex) + "'");
        }
        for (unsigned b = 0; b < 4; b++) {
            if (!((v >> b) & 1)) {
                continue;
            }
            std::size_t idx = 4 * p + b;
            if (idx >= t.size()) {
                throw InvalidInput("hex truth table has bits beyond 2^arity");
            }
            t.set(idx, true);
        }
    }
    return t;
}

std::string to_text(const BooleanFunction &f) {
    return "k=" + std::to_string(f.arity()) + "\n" + to_hex(f.truth_table()) + "\n";
}

BooleanFunction parse_boolean_function(std::string_view text) {
    text = trim(text);
    if (!text.starts_with("k=")) {
        throw InvalidInput("boolean function record must start with 'k='");
    }
    text.remove_prefix(2);
    std::size_t sep = text.find_first_of(":\n");
    if (sep == std::string_view::npos) {
        throw InvalidInput("boolean function record is missing its truth table");
    }
    std::string_view arity_text = trim(text.substr(0, sep));
    unsigned arity = 0;
    auto [ptr, ec] = std::from_chars(arity_text.data(), arity_text.data() + arity_text.size(), arity);
    if (ec != std::errc{} || ptr != arity_text.data() + arity_text.size()) {
        throw InvalidInput("bad arity '" + std::string(arity_text) + "'");
    }
    return BooleanFunction(parse_hex(arity, text.substr(sep + 1)));
}

}  // namespace lnde
