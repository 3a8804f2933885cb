#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stratos {

// One checked law: pass/fail counts plus the first counterexample, rendered
// through the format module.
struct LawResult {
    std::string name;
    unsigned checked = 0;
    unsigned failed = 0;
    std::string first_failure;
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    unsigned n = 0;
    std::vector<LawResult> laws;
    bool ok() const;
};

// Randomized and enumerative law suites shared by the CLI and the acceptance
// tests: sigma, welldef, duality, constants, interp, ta, sequent, theories,
// numerals. n scales the per-law instance counts where a law is randomized;
// enumerative laws ignore it. Deterministic in (suite, n, seed). Unknown
// suite names throw Error.
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& suite, unsigned n, std::uint64_t seed);

// Header line plus one OK/FAIL line per law.
std::string format_suite(const SuiteResult& r);

}  // namespace stratos
