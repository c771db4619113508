// Acceptance runner: executes the twelve reproduction criteria and prints
// one pass/fail line per criterion. Exit status 0 iff all criteria pass.
#include <cstdio>

#include "perfectlike/repro.hpp"

int main() {
    perfectlike::AcceptanceRun run = perfectlike::run_acceptance(7);
    std::fputs(run.report.c_str(), stdout);
    return run.all_pass ? 0 : 1;
}
