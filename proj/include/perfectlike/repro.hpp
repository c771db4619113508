#ifndef PERFECTLIKE_REPRO_HPP
#define PERFECTLIKE_REPRO_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace perfectlike {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail; // deterministic one-line summary of what was checked
};

struct AcceptanceRun {
    std::vector<CriterionResult> results; // criteria 1..12
    std::string report;                   // the full pass/fail table
    bool all_pass = false;
};

// Runs the twelve reproduction checks. Criterion 12 re-runs 1..11 and
// byte-compares the two reports, so the whole run is executed twice.
AcceptanceRun run_acceptance(std::uint64_t seed);

// One run of criteria 1..11 (the deterministic payload of `run_acceptance`).
std::vector<CriterionResult> run_criteria(std::uint64_t seed);

std::string format_results(const std::vector<CriterionResult>& rs, bool tsv = false);

} // namespace perfectlike

#endif
