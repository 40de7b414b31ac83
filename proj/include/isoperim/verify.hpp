#pragma once

#include <string>
#include <vector>

namespace isoperim::verify {

/// Knobs shared by every property suite.  The default seed is fixed so runs
/// are reproducible; callers override it to explore other draws.  grid = 0
/// keeps each property's built-in resolution.
struct Options {
    unsigned long long seed = 20260814ull;
    int grid = 0;
};

/// One named property check: passed iff margin >= 0, where margin measures
/// how far inside the allowed region the observation landed (tolerance
/// minus error for equality-style checks, observed slack for inequalities).
struct PropertyResult {
    std::string name;
    bool passed = false;
    double margin = 0.0;
};

struct SuiteResult {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool all_passed() const;
};

/// The runnable suites, one per library module with randomized contracts:
/// {geometry, rearrange, spectral, functional, counterex, orthant}.
const std::vector<std::string>& suite_names();

/// Runs one suite; throws domain_error for an unknown name.
SuiteResult run_suite(const std::string& suite, const Options& options = {});

/// Expands "all" to every suite, otherwise runs the single named one.
std::vector<SuiteResult> run_suites(const std::string& suite_or_all,
                                    const Options& options = {});

}  // namespace isoperim::verify
