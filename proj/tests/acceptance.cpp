// Acceptance gate: one line per release criterion, PASS or FAIL, and a
// nonzero exit if anything fails.
//
// Usage: acceptance <cyclecone-binary> <golden-dir>
//
// Criteria 1-11 run the corresponding verification suite at its default
// scope (the defaults are the documented scopes: pairing n<=4 r<=3,
// boundary n<=5, base loci n<=6, ...) and, where a criterion pins a
// specific value, cross-check the suite's reported facts against the
// pinned number here. Criterion 12 re-runs every pinned CLI invocation
// twice and compares the bytes against the committed golden files.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_cases.hpp"
#include "cyclecone/verify.hpp"

namespace {

int failures = 0;

void line(int criterion, const std::string& what, bool ok, const std::string& why) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << criterion << ". " << what;
    if (!ok) {
        std::cout << " -- " << why;
        ++failures;
    }
    std::cout << "\n";
}

std::string first_failure(const cyclecone::SuiteResult& sr) {
    for (const auto& c : sr.checks)
        if (!c.pass) return c.name + ": " + c.detail;
    return "";
}

std::string fact(const cyclecone::SuiteResult& sr, const std::string& key) {
    for (const auto& [k, v] : sr.facts)
        if (k == key) return v;
    return "";
}

// Runs the named suite at its default scope and reports it as one criterion
// line; expected facts are (key, value) pairs the suite must have reported.
void criterion_suite(
    int criterion, const std::string& what, const std::string& suite,
    const std::vector<std::pair<std::string, std::string>>& expected_facts = {}) {
    try {
        cyclecone::SuiteResult sr = cyclecone::run_verify_suite(suite, 0);
        if (!sr.all_pass()) {
            line(criterion, what, false, first_failure(sr));
            return;
        }
        for (const auto& [key, want] : expected_facts) {
            std::string got = fact(sr, key);
            if (got != want) {
                line(criterion, what, false,
                     key + " = \"" + got + "\", expected \"" + want + "\"");
                return;
            }
        }
        std::ostringstream note;
        note << sr.passed() << " checks";
        line(criterion, what + " [" + note.str() + "]", true, "");
    } catch (const std::exception& e) {
        line(criterion, what, false, std::string("exception: ") + e.what());
    }
}

void criterion_golden(int criterion, const std::string& bin,
                      const std::filesystem::path& dir) {
    const std::string what =
        "CLI determinism: golden files for every command, repeated runs byte-identical";
    int cases = 0;
    for (const auto& c : cli_cases::manifest()) {
        ++cases;
        cli_cases::RunResult r1 = cli_cases::run_cli(bin, c.args);
        cli_cases::RunResult r2 = cli_cases::run_cli(bin, c.args);
        const std::string& got = c.pin_stderr ? r1.err : r1.out;
        const std::string& again = c.pin_stderr ? r2.err : r2.out;
        if (r1.exit_code != c.exit_code) {
            line(criterion, what, false,
                 c.file + ": exit " + std::to_string(r1.exit_code) + ", expected " +
                     std::to_string(c.exit_code));
            return;
        }
        if (got != again) {
            line(criterion, what, false, c.file + ": two runs disagree");
            return;
        }
        const std::filesystem::path golden = dir / c.file;
        if (!std::filesystem::exists(golden)) {
            line(criterion, what, false, "missing golden file " + golden.string());
            return;
        }
        if (got != cli_cases::slurp(golden)) {
            line(criterion, what, false, c.file + ": bytes differ from the golden file");
            return;
        }
    }
    line(criterion, what + " [" + std::to_string(cases) + " invocations]", true, "");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <cyclecone-binary> <golden-dir>\n";
        return 2;
    }

    criterion_suite(1,
                    "pairing matrix is diag(I_N, -I_r) by both routes "
                    "(n<=4, all k, r<=3)",
                    "pairing");
    criterion_suite(2,
                    "degree of the balanced divisor power is n!-r with the sign "
                    "flip at r=n!+1 (n=2..5, r<=n!+2)",
                    "thm-linear", {{"boundary_confirmed", "true"}});
    criterion_suite(3,
                    "dual-cone extremal rays match the closed form with count "
                    "C(n,k)+2^r-1 on all five pinned (n,k,r)",
                    "lemma-fg");
    criterion_suite(4,
                    "1000 random valid vectors decompose non-negatively and "
                    "reconstruct; malformed vectors are rejected",
                    "lemma-num",
                    {{"valid_cases", "1000"}, {"rejected_cases", "100"}});
    criterion_suite(5,
                    "two-point blowup invariant-cycle tables equal the fiber-cone "
                    "generators; product-fan face counts are 2^(n-k) C(n,k) (n<=5)",
                    "prop-tor");
    criterion_suite(6,
                    "base loci of |W_s| match the closed form and a brute-force "
                    "oracle; multiplicity s; restriction recursion (n<=6)",
                    "lemma-bs");
    criterion_suite(7,
                    "restriction to the exceptional divisor is the squarefree "
                    "degree-s system with multiplicity s-1; quotient fan and ray "
                    "images match the expected list (n<=6)",
                    "lemma-tor");
    criterion_suite(8,
                    "W_1...W_k . Y = k! (sum_{1 in I} a_I - b_1) on every basis "
                    "class and 200 random classes (n<=5)",
                    "lemma-con", {{"random_cases", "200"}});
    criterion_suite(9,
                    "deg(D1.D2.Y) = 2(sum a - sum b) on all 14 basis classes of "
                    "N_2(X^4_4); the self-intersection class gives 8 with gap 4",
                    "prop-4-4",
                    {{"self_intersection_degree", "8"}, {"sum_gap", "4"}});
    criterion_suite(10,
                    "divisor basis change is unimodular (n<=6, r<=4) and "
                    "transports the pinned divisor class",
                    "phi", {{"transport_image", "H{1} + H{2} - E1 - E2 - E3"}});
    criterion_suite(11,
                    "generation status matches the independent bounds table "
                    "(n<=6, k<=n-1, r<=10), open cells exactly where left open",
                    "status");
    criterion_golden(12, argv[1], argv[2]);

    if (failures == 0) {
        std::cout << "all 12 acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria FAILED\n";
    return 1;
}
