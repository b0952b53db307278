#pragma once

// Verification suites. Each suite recomputes a family of identities by two
// independent routes (closed form vs. symbolic expansion, fan table vs. cone
// description, ...) and reports one pass/fail line per check. Every suite is
// deterministic: fixed RNG seeds, ordered containers only.

#include <string>
#include <utility>
#include <vector>

namespace cyclecone {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;  // failure reason, or a notable value on pass
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    // Extra summary facts in a stable order, rendered into the JSON output.
    std::vector<std::pair<std::string, std::string>> facts;

    bool all_pass() const;
    int passed() const;
};

// Suite names in the order `verify all` runs them.
const std::vector<std::string>& verify_suite_names();

// Runs one suite; max_n <= 0 selects the suite's default scope. Throws
// error for an unknown name.
SuiteResult run_verify_suite(const std::string& name, int max_n = 0);

std::vector<SuiteResult> run_all_suites(int max_n = 0);

}  // namespace cyclecone
