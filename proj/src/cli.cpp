#include "lnde/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lnde/bits.hpp"
#include "lnde/boolean_anf.hpp"
#include "lnde/classical_lnde.hpp"
#include "lnde/quantum_adder.hpp"
#include "lnde/record.hpp"
#include "lnde/statevector_oracle.hpp"
#include "lnde/verify.hpp"

namespace lnde::cli {

namespace {

struct NamedFunction {
    std::string name;
    BooleanFunction function;
};

void write_report(const RunConfig &config, const std::string &stem, const std::string &body) {
    if (config.out_dir.empty()) {
        return;
    }
    std::filesystem::path dir(config.out_dir);
    std::filesystem::create_directories(dir);
    std::string ext = config.format == Format::Table ? ".csv" : ".txt";
    std::ofstream file(dir / (stem + ext), std::ios::binary | std::ios::trunc);
    if (!file) {
        throw UsageError("cannot write to output directory '" + config.out_dir + "'");
    }
    file << body;
}

std::size_t require_senders(const RunConfig &config) {
    if (!config.senders) {
        throw UsageError("--n is required");
    }
    return *config.senders;
}

// "s<q>" (N from --n), "s<N>:<q>", or "k=<arity>:<hex>".
NamedFunction parse_target(const std::string &text, std::optional<std::size_t> senders) {
    if (text.starts_with("k=")) {
        BooleanFunction f = parse_boolean_function(text);
        if (senders && f.arity() != *senders) {
            throw UsageError("truth table arity does not match --n");
        }
        return {text, std::move(f)};
    }
    if (text.size() < 2 || text[0] != 's') {
        throw UsageError("target must look like s1, s4:2 or k=3:e8, got '" + text + "'");
    }
    std::string_view body(text);
    body.remove_prefix(1);
    std::size_t n = 0;
    std::size_t q = 0;
    try {
        std::size_t colon = body.find(':');
        if (colon == std::string_view::npos) {
            if (!senders) {
                throw UsageError("target '" + text + "' needs --n");
            }
            n = *senders;
            q = parse_size(body);
        } else {
            n = parse_size(body.substr(0, colon));
            q = parse_size(body.substr(colon + 1));
            if (senders && *senders != n) {
                throw UsageError("target '" + text + "' disagrees with --n");
            }
        }
        return {text, sum_digit_function(static_cast<unsigned>(n), static_cast<unsigned>(q))};
    } catch (const InvalidInput &e) {
        throw UsageError(std::string("bad target '") + text + "': " + e.what());
    }
}

Bits parse_input_bits(const std::string &text) {
    try {
        return parse_bits(text);
    } catch (const InvalidInput &e) {
        throw UsageError(e.what());
    }
}

std::string summary_line(const AdderTranscript &t, const char *backend) {
    std::ostringstream s;
    s << "inputs=" << bits_to_string(t.inputs) << " S=" << t.output_value() << " outputs=" << bits_to_string(t.outputs)
      << " ghz_consumed=" << t.ghz_consumed << " channels=" << t.channels << " backend=" << backend;
    return s.str();
}

const char *backend_name(Backend b) {
    switch (b) {
        case Backend::Ledger:
            return "ledger";
        case Backend::Statevector:
            return "statevector";
        case Backend::Both:
            return "both";
    }
    return "?";
}

}  // namespace

std::uint64_t default_seed() {
    const char *env = std::getenv(kSeedEnv);
    if (env == nullptr || *env == '\0') {
        return kDefaultSeed;
    }
    try {
        return parse_u64(env);
    } catch (const InvalidInput &) {
        return kDefaultSeed;
    }
}

int cmd_add(const RunConfig &config, std::ostream &out) {
    std::vector<std::pair<Bits, std::uint64_t>> jobs;
    if (!config.inputs.empty()) {
        if (config.random_count > 0) {
            throw UsageError("--inputs and --random are mutually exclusive");
        }
        Bits x = parse_input_bits(config.inputs);
        if (config.senders && *config.senders != x.size()) {
            throw UsageError("--inputs has " + std::to_string(x.size()) + " bits but --n is " +
                             std::to_string(*config.senders));
        }
        jobs.emplace_back(std::move(x), config.seed);
    } else if (config.random_count > 0) {
        std::size_t n = require_senders(config);
        if (n > 64) {
            throw UsageError("--random supports at most 64 senders");
        }
        Rng gen(config.seed);
        for (std::size_t r = 0; r < config.random_count; r++) {
            Bits x = unpack_bits(gen(), n);
            std::uint64_t run_seed = gen();
            jobs.emplace_back(std::move(x), run_seed);
        }
    } else {
        throw UsageError("add needs --inputs or --random");
    }
    if (jobs.front().first.size() < 2) {
        throw UsageError("the adder needs at least two senders");
    }

    std::string body = config.format == Format::Table ? transcript_csv_header() + "\n" : "";
    std::size_t wrong = 0;
    std::size_t disagreements = 0;
    for (std::size_t r = 0; r < jobs.size(); r++) {
        const auto &[x, seed] = jobs[r];
        AdderTranscript t;
        if (config.backend == Backend::Statevector) {
            t = run_adder_statevector(x, seed);
        } else {
            t = run_quantum_adder(x, seed);
            if (config.backend == Backend::Both && !(run_adder_statevector(x, seed) == t)) {
                disagreements++;
            }
        }
        std::uint64_t sum = 0;
        for (Bit b : x) {
            sum += b;
        }
        if (t.output_value() != sum) {
            wrong++;
        }
        out << summary_line(t, backend_name(config.backend)) << "\n";
        if (config.format == Format::Table) {
            body += to_csv_row(t) + "\n";
        } else {
            body += (r ? "\n" : "") + to_text(t);
        }
    }
    if (jobs.size() > 1) {
        out << "runs=" << jobs.size() << " verified=" << jobs.size() - wrong << "\n";
    }
    if (disagreements) {
        out << "backend_disagreements=" << disagreements << "\n";
    }
    write_report(config, "add", body);
    return wrong == 0 && disagreements == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_search(const RunConfig &config, std::ostream &out) {
    std::size_t n = 0;
    std::vector<NamedFunction> targets;
    if (config.target.empty()) {
        throw UsageError("search needs --target");
    }
    std::stringstream list(config.target);
    for (std::string item; std::getline(list, item, ',');) {
        targets.push_back(parse_target(item, config.senders));
    }
    if (targets.size() > 1 && !config.joint) {
        throw UsageError("several targets need --joint");
    }
    n = targets.front().function.arity();
    for (const auto &t : targets) {
        if (t.function.arity() != n) {
            throw UsageError("all targets must share one sender count");
        }
    }
    if (n > kMaxArity || n < 1) {
        throw UsageError("sender count out of range");
    }
    std::size_t m = config.channels ? *config.channels : floor_log2(n) + 1;

    SearchOptions options;
    options.budget.log2_max_triples = config.log2_budget;
    options.jobs = config.jobs;

    SearchReport report;
    report.senders = n;
    report.channels = m;
    auto start = std::chrono::steady_clock::now();
    if (config.joint) {
        std::vector<BooleanFunction> fs;
        for (const auto &t : targets) {
            fs.push_back(t.function);
            report.target += (report.target.empty() ? "" : ",") + t.name;
        }
        report.result = search_realizable_joint(fs, m, options);
    } else {
        report.target = targets.front().name;
        report.result = search_realizable(targets.front().function, m, options);
    }
    if (config.timing) {
        report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }

    std::string text = to_text(report);
    out << text;
    if (config.format == Format::Table) {
        Record rec = parse_record(text);
        std::string header;
        std::string row;
        for (const auto &[k, v] : rec.entries()) {
            header += (header.empty() ? "" : ",") + k;
            row += (row.empty() ? "" : ",") + v;
        }
        write_report(config, "search", header + "\n" + row + "\n");
    } else {
        write_report(config, "search", text);
    }
    return kExitOk;
}

int cmd_anf(const RunConfig &config, std::ostream &out) {
    NamedFunction f = [&]() -> NamedFunction {
        if (!config.digit.empty() && !config.truth_table.empty()) {
            throw UsageError("--digit and --tt are mutually exclusive");
        }
        if (!config.digit.empty()) {
            return parse_target("s" + config.digit, std::nullopt);
        }
        if (!config.truth_table.empty()) {
            try {
                return {config.truth_table, parse_boolean_function(config.truth_table)};
            } catch (const InvalidInput &e) {
                throw UsageError(std::string("bad truth table: ") + e.what());
            }
        }
        throw UsageError("anf needs --digit N:q or --tt k=<arity>:<hex>");
    }();

    BitTable anf = f.function.anf();
    Record rec;
    rec.add("function", f.name);
    rec.add("k", std::to_string(f.function.arity()));
    rec.add("truth_table", to_hex(f.function.truth_table()));
    rec.add("anf", format_anf(anf));
    rec.add("degree", std::to_string(anf_degree(anf).value));
    rec.add("linear", is_linear(f.function) ? "1" : "0");
    std::string text = rec.to_text();
    out << text;
    if (config.format == Format::Table) {
        std::string header;
        std::string row;
        for (const auto &[k, v] : rec.entries()) {
            header += (header.empty() ? "" : ",") + k;
            row += (row.empty() ? "" : ",") + v;
        }
        write_report(config, "anf", header + "\n" + row + "\n");
    } else {
        write_report(config, "anf", text);
    }
    return kExitOk;
}

int cmd_verify(const RunConfig &config, std::ostream &out) {
    VerifyOptions options;
    options.full = config.full;
    options.seed = config.seed;
    options.jobs = config.jobs;
    options.sign = config.flip_rotation_sign ? RotationSign::Flipped : RotationSign::Standard;
    VerifyReport report = run_verification(options);
    std::string text = report.to_text();
    out << text;
    write_report(config, "verify", config.format == Format::Table ? report.to_csv() : text);
    for (const auto &c : report.checks) {
        if (!c.passed) {
            out << "first_failure=" << c.name << "\n";
            break;
        }
    }
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig config;
    config.seed = default_seed();

    CLI::App app{"Locally nonlinear distributed evaluation: quantum adder, classical strategy search, ANF tools", "lnde"};
    app.require_subcommand(1);
    std::map<std::string, Backend> backends{
        {"ledger", Backend::Ledger}, {"statevector", Backend::Statevector}, {"both", Backend::Both}};
    std::map<std::string, Format> formats{{"text", Format::Text}, {"table", Format::Table}};

    auto common = [&](CLI::App *sub) {
        sub->add_option("--seed", config.seed, "PRNG seed (default $LNDE_SEED or 2006)");
        sub->add_option("--out", config.out_dir, "Directory for report files");
        sub->add_option("--format", config.format, "Report format")
            ->transform(CLI::CheckedTransformer(formats).description(""))
            ->option_text("text|table");
        sub->add_option("--jobs", config.jobs, "Worker threads (0 = all cores)");
    };

    CLI::App *add = app.add_subcommand("add", "Run the entanglement-assisted adder");
    add->add_option("--inputs", config.inputs, "Input bits, x0 first (e.g. 101)");
    add->add_option("--n", config.senders, "Sender count");
    add->add_option("--random", config.random_count, "Number of random input vectors");
    add->add_option("--backend", config.backend, "Simulation backend")
        ->transform(CLI::CheckedTransformer(backends).description(""))
        ->option_text("ledger|statevector|both");
    common(add);

    CLI::App *search = app.add_subcommand("search", "Exhaustive classical strategy search");
    search->add_option("--n", config.senders, "Sender count");
    search->add_option("--m", config.channels, "Channel count (default floor(log2 N) + 1)");
    search->add_option("--target", config.target, "s<q>, s<N>:<q> or k=<arity>:<hex>; comma list with --joint");
    search->add_option("--budget", config.log2_budget, "log2 of the largest strategy space to enumerate");
    search->add_flag("--joint", config.joint, "Share taps and offsets across all targets");
    search->add_flag("--timing", config.timing, "Include wall time in the report");
    common(search);

    CLI::App *anf = app.add_subcommand("anf", "Algebraic normal form and degree");
    anf->add_option("--digit", config.digit, "Sum digit as N:q");
    anf->add_option("--tt", config.truth_table, "Truth table as k=<arity>:<hex>");
    common(anf);

    CLI::App *verify = app.add_subcommand("verify", "Run the invariant suite");
    auto *quick = verify->add_flag("--quick", "Small sweeps (default)");
    auto *full = verify->add_flag("--full", config.full, "Exhaustive sweeps up to N = 12 and the (4,3) searches");
    quick->excludes(full);
    verify->add_flag("--flip-rotation-sign", config.flip_rotation_sign)->group("");
    common(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name());
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (add->parsed()) {
            return cmd_add(config, out);
        }
        if (search->parsed()) {
            return cmd_search(config, out);
        }
        if (anf->parsed()) {
            return cmd_anf(config, out);
        }
        return cmd_verify(config, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceLimit &e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const InvalidInput &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        err << "failure: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
}

}  // namespace lnde::cli
