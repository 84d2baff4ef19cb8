#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lnde/quantum_adder.hpp"

namespace lnde {

struct VerifyOptions {
    /// Quick: adder sweeps up to N = 6 and the small exhaustive searches.
    /// Full: sweeps up to N = 12, N = 16 sampled, and the (4, 3) searches.
    bool full = false;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    /// Negative-control hook; anything but Standard must fail.
    RotationSign sign = RotationSign::Standard;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    /// Deterministic for fixed options (no timings).
    std::string to_text() const;
    std::string to_csv() const;
};

VerifyReport run_verification(const VerifyOptions &options);

}  // namespace lnde
