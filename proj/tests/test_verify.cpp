#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cyclecone/numeric.hpp"
#include "cyclecone/verify.hpp"

using namespace cyclecone;

namespace {

std::string fact(const SuiteResult& sr, const std::string& key) {
    for (const auto& [k, v] : sr.facts)
        if (k == key) return v;
    return "";
}

}  // namespace

TEST_CASE("suite registry") {
    std::vector<std::string> names = verify_suite_names();
    REQUIRE(names.size() == 12);
    // The documented command set comes first, in its documented order.
    std::vector<std::string> documented = {
        "pairing",  "lemma-num", "lemma-bs", "lemma-tor", "prop-tor",
        "lemma-con", "thm-linear", "prop-not", "prop-4-4", "phi",
    };
    for (std::size_t i = 0; i < documented.size(); ++i) CHECK(names[i] == documented[i]);
    CHECK(std::find(names.begin(), names.end(), "lemma-fg") != names.end());
    CHECK(std::find(names.begin(), names.end(), "status") != names.end());

    CHECK_THROWS_AS(run_verify_suite("nope", 0), error);
}

TEST_CASE("every suite passes at reduced scope") {
    for (const auto& name : verify_suite_names()) {
        SuiteResult sr = run_verify_suite(name, 3);
        CAPTURE(sr.suite);
        for (const auto& c : sr.checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.pass);
        }
        CHECK(sr.all_pass());
        CHECK(sr.passed() == sr.checks.size());
        CHECK(sr.checks.size() > 0);
    }
}

TEST_CASE("run_all_suites covers the registry in order") {
    std::vector<SuiteResult> all = run_all_suites(3);
    std::vector<std::string> names = verify_suite_names();
    REQUIRE(all.size() == names.size());
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].suite == names[i]);
}

TEST_CASE("facts surface the headline values") {
    SuiteResult boundary = run_verify_suite("thm-linear", 3);
    CHECK(fact(boundary, "boundary_confirmed") == "true");

    SuiteResult num = run_verify_suite("lemma-num", 0);
    CHECK(fact(num, "valid_cases") == "1000");
    CHECK(fact(num, "rejected_cases") == "100");

    SuiteResult d1d2 = run_verify_suite("prop-4-4", 0);
    CHECK(fact(d1d2, "self_intersection_degree") == "8");
    CHECK(fact(d1d2, "sum_gap") == "4");

    SuiteResult phi = run_verify_suite("phi", 4);
    CHECK(fact(phi, "transport_image") == "H{1} + H{2} - E1 - E2 - E3");
}

TEST_CASE("check names are unique within a suite") {
    for (const auto& name : verify_suite_names()) {
        SuiteResult sr = run_verify_suite(name, 3);
        std::vector<std::string> seen;
        for (const auto& c : sr.checks) seen.push_back(c.name);
        std::sort(seen.begin(), seen.end());
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }
}

TEST_CASE("results are deterministic") {
    SuiteResult a = run_verify_suite("lemma-num", 0);
    SuiteResult b = run_verify_suite("lemma-num", 0);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].pass == b.checks[i].pass);
        CHECK(a.checks[i].detail == b.checks[i].detail);
    }
    CHECK(a.facts == b.facts);
}
