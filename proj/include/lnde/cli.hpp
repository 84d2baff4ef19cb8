#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lnde/errors.hpp"

namespace lnde::cli {

inline constexpr std::uint64_t kDefaultSeed = 2006;
inline constexpr const char *kSeedEnv = "LNDE_SEED";

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitUsage = 2,
    kExitResource = 3,
};

class UsageError : public Error {
   public:
    using Error::Error;
};

enum class Backend { Ledger, Statevector, Both };
enum class Format { Text, Table };

struct RunConfig {
    std::string subcommand;
    std::optional<std::size_t> senders;
    /// Channel count for `search`; derived as floor(log2 N) + 1 when unset.
    std::optional<std::size_t> channels;
    std::string inputs;
    std::size_t random_count = 0;
    std::string target;
    std::string digit;
    std::string truth_table;
    std::uint64_t seed = kDefaultSeed;
    Backend backend = Backend::Ledger;
    unsigned log2_budget = 26;
    unsigned jobs = 1;
    std::string out_dir;
    Format format = Format::Text;
    bool full = false;
    bool joint = false;
    bool timing = false;
    bool flip_rotation_sign = false;
};

/// Seed from $LNDE_SEED when set and numeric, else kDefaultSeed.
std::uint64_t default_seed();

int cmd_add(const RunConfig &config, std::ostream &out);
int cmd_search(const RunConfig &config, std::ostream &out);
int cmd_anf(const RunConfig &config, std::ostream &out);
int cmd_verify(const RunConfig &config, std::ostream &out);

/// Parses `args` (without the program name) and dispatches. Library errors
/// map onto the documented exit codes.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace lnde::cli
