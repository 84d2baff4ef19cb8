#include "lnde/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "lnde/boolean_anf.hpp"
#include "lnde/classical_lnde.hpp"
#include "lnde/errors.hpp"
#include "lnde/statevector_oracle.hpp"

namespace lnde {

namespace {

bool digits_match(const AdderTranscript &t) {
    std::uint64_t sum = 0;
    for (Bit x : t.inputs) {
        sum += x;
    }
    return t.outputs.size() == adder_channel_count(t.senders) && t.output_value() == sum;
}

std::vector<std::uint64_t> sweep_seeds(const VerifyOptions &o) {
    return {o.seed, o.seed + 1, o.seed + 2};
}

CheckResult guarded(const std::string &name, const std::function<CheckResult()> &body) {
    try {
        CheckResult r = body();
        r.name = name;
        return r;
    } catch (const Error &e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

// Runs the ledger adder on every input of every N in [2, max_n].
template <typename F>
void for_each_exhaustive(std::size_t max_n, F &&f) {
    for (std::size_t n = 2; n <= max_n; n++) {
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); x++) {
            f(unpack_bits(x, n));
        }
    }
}

CheckResult check_residual_phase(const VerifyOptions &o) {
    std::size_t max_n = o.full ? 12 : 6;
    std::uint64_t ledgers = 0;
    for (std::size_t n = 2; n <= max_n; n++) {
        std::size_t m = adder_channel_count(n);
        for (std::uint64_t packed = 0; packed < (std::uint64_t{1} << n); packed++) {
            Bits x = unpack_bits(packed, n);
            Rng rng = channel_rng(o.seed, 0);
            Bits outputs{static_cast<Bit>(std::popcount(packed) & 1)};
            for (unsigned q = 1; q < m; q++) {
                GhzPhaseLedger ledger(q, n, o.sign);
                Bit parity = 0;
                for (Bit xi : x) {
                    ledger.sender_rotate(xi);
                }
                for (std::size_t i = 0; i < n; i++) {
                    parity ^= ledger.sender_measure(rng);
                }
                // Throws InternalConsistency when the residual is not a multiple of pi.
                OlgaOutcome out = ledger.olga_correct_and_measure(outputs, parity);
                outputs.push_back(out.output);
                ledgers++;
            }
        }
    }
    return {"", true, "ledgers=" + std::to_string(ledgers) + " max_n=" + std::to_string(max_n)};
}

CheckResult check_adder_correctness(const VerifyOptions &o) {
    AdderOptions ao{o.sign};
    std::size_t max_n = o.full ? 12 : 6;
    std::uint64_t runs = 0;
    std::uint64_t wrong = 0;
    for (std::uint64_t seed : sweep_seeds(o)) {
        for_each_exhaustive(max_n, [&](const Bits &x) {
            wrong += digits_match(run_quantum_adder(x, seed, ao)) ? 0 : 1;
            runs++;
        });
    }
    if (o.full) {
        Rng gen(o.seed);
        for (std::uint64_t seed : sweep_seeds(o)) {
            for (int r = 0; r < 10000; r++) {
                Bits x = unpack_bits(gen(), 16);
                wrong += digits_match(run_quantum_adder(x, seed, ao)) ? 0 : 1;
                runs++;
            }
        }
    }
    return {"", wrong == 0, "runs=" + std::to_string(runs) + " wrong=" + std::to_string(wrong)};
}

CheckResult check_resources(const VerifyOptions &o) {
    AdderOptions ao{o.sign};
    std::uint64_t bad = 0;
    std::uint64_t runs = 0;
    std::size_t max_n = o.full ? 16 : 8;
    for (std::size_t n = 2; n <= max_n; n++) {
        Bits x(n, 1);
        AdderTranscript t = run_quantum_adder(x, o.seed, ao);
        bool ok = t.ghz_consumed == ghz_budget(n) && t.channels == floor_log2(n) + 1 &&
                  t.received.size() == t.channels && t.sent.size() == t.channels;
        bad += ok ? 0 : 1;
        runs++;
    }
    return {"", bad == 0, "runs=" + std::to_string(runs) + " bad=" + std::to_string(bad)};
}

CheckResult check_backend_equivalence(const VerifyOptions &o) {
    AdderOptions ao{o.sign};
    std::uint64_t runs = 0;
    std::uint64_t mismatches = 0;
    double worst_norm = 0.0;
    for (std::uint64_t seed : sweep_seeds(o)) {
        for_each_exhaustive(6, [&](const Bits &x) {
            StatevectorRun sv = run_adder_statevector_checked(x, seed);
            worst_norm = std::max(worst_norm, sv.diagnostics.max_norm_error);
            mismatches += sv.transcript == run_quantum_adder(x, seed, ao) ? 0 : 1;
            runs++;
        });
    }
    std::ostringstream d;
    d << "runs=" << runs << " mismatches=" << mismatches << " norm_ok=" << (worst_norm <= 1e-12 ? 1 : 0);
    return {"", mismatches == 0 && worst_norm <= 1e-12, d.str()};
}

CheckResult check_degree_law(const VerifyOptions &) {
    std::uint64_t checked = 0;
    std::uint64_t bad = 0;
    for (unsigned n = 1; n <= 16; n++) {
        for (unsigned q = 0; q <= floor_log2(n); q++) {
            bad += algebraic_degree(sum_digit_function(n, q)).value == (1u << q) ? 0 : 1;
            checked++;
        }
    }
    return {"", bad == 0, "digits=" + std::to_string(checked) + " bad=" + std::to_string(bad)};
}

CheckResult check_lemma(const VerifyOptions &o) {
    std::vector<std::pair<std::size_t, std::size_t>> cases{{3, 1}, {3, 2}};
    if (o.full) {
        cases.emplace_back(4, 3);
    }
    SearchOptions so;
    so.jobs = o.jobs;
    bool ok = true;
    std::ostringstream d;
    for (auto [n, m] : cases) {
        LemmaReport r = verify_lemma_bound(n, m, so);
        ok = ok && r.holds();
        d << "(" << n << "," << m << "):max=" << r.max_degree << " ";
    }
    std::string s = d.str();
    s.pop_back();
    return {"", ok, s};
}

CheckResult check_impossibility(const VerifyOptions &o) {
    SearchOptions so;
    so.jobs = o.jobs;
    bool s0 = search_realizable(sum_digit_function(3, 0), 1, so).feasible;
    bool s1 = search_realizable(sum_digit_function(3, 1), 2, so).feasible;
    bool ok = s0 && !s1;
    std::ostringstream d;
    d << "s0(3,1)=" << s0 << " s1(3,2)=" << s1;
    if (o.full) {
        bool s2 = search_realizable(sum_digit_function(4, 2), 3, so).feasible;
        ok = ok && !s2;
        d << " s2(4,3)=" << s2;
    }
    return {"", ok, d.str()};
}

CheckResult check_dichotomy(const VerifyOptions &o) {
    AdderOptions ao{o.sign};
    std::vector<unsigned> sizes{4};
    if (o.full) {
        sizes.push_back(8);
    }
    bool ok = true;
    std::ostringstream d;
    for (unsigned n : sizes) {
        std::size_t top = adder_channel_count(n) - 1;
        BooleanFunction f = BooleanFunction::tabulate(n, [&](std::uint64_t x) {
            return run_quantum_adder(unpack_bits(x, n), o.seed + x, ao).outputs[top];
        });
        unsigned deg = algebraic_degree(f).value;
        ok = ok && deg == (1u << top) && deg > top + 1;
        d << "N=" << n << ":degree=" << deg << " ";
    }
    std::string s = d.str();
    s.pop_back();
    return {"", ok, s};
}

CheckResult check_privacy(const VerifyOptions &o) {
    AdderOptions ao{o.sign};
    const std::size_t n = 8;
    const int runs = o.full ? 10000 : 2000;
    std::vector<Bits> cases{Bits(n, 0), Bits(n, 1), Bits{1, 0, 1, 0, 1, 0, 1, 0}, Bits{1, 0, 0, 0, 0, 0, 0, 0}};
    double lo = 1.0;
    double hi = 0.0;
    for (const Bits &x : cases) {
        std::vector<int> ones(adder_channel_count(n), 0);
        for (int r = 0; r < runs; r++) {
            AdderTranscript t = run_quantum_adder(x, o.seed + static_cast<std::uint64_t>(r), ao);
            for (std::size_t q = 1; q < t.channels; q++) {
                ones[q] += t.received[q];
            }
        }
        for (std::size_t q = 1; q < ones.size(); q++) {
            double mean = static_cast<double>(ones[q]) / runs;
            lo = std::min(lo, mean);
            hi = std::max(hi, mean);
        }
    }
    std::ostringstream d;
    d.precision(4);
    d << "runs=" << runs << " mean_range=[" << lo << "," << hi << "]";
    return {"", lo >= 0.45 && hi <= 0.55, d.str()};
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

std::string VerifyReport::to_text() const {
    std::ostringstream out;
    for (const auto &c : checks) {
        out << "check." << c.name << "=" << (c.passed ? "pass" : "fail") << " " << c.detail << "\n";
    }
    out << "result=" << (passed() ? "pass" : "fail") << "\n";
    return out.str();
}

std::string VerifyReport::to_csv() const {
    std::ostringstream out;
    out << "check,passed,detail\n";
    for (const auto &c : checks) {
        out << c.name << ',' << (c.passed ? 1 : 0) << ',' << c.detail << "\n";
    }
    return out.str();
}

VerifyReport run_verification(const VerifyOptions &options) {
    VerifyReport report;
    const std::vector<std::pair<std::string, std::function<CheckResult(const VerifyOptions &)>>> checks{
        {"residual_phase", check_residual_phase},
        {"adder_correctness", check_adder_correctness},
        {"resource_accounting", check_resources},
        {"backend_equivalence", check_backend_equivalence},
        {"degree_law", check_degree_law},
        {"lemma_bound", check_lemma},
        {"impossibility", check_impossibility},
        {"dichotomy", check_dichotomy},
        {"privacy", check_privacy},
    };
    for (const auto &[name, fn] : checks) {
        report.checks.push_back(guarded(name, [&, &fn = fn] { return fn(options); }));
    }
    return report;
}

}  // namespace lnde
