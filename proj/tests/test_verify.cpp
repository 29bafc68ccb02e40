#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "trilat/verify.hpp"
#include "trilat/error.hpp"

using namespace trilat;
using namespace trilat::verify;

namespace {

// small grids so every suite stays fast
Options small() {
    Options o;
    o.Lmax = 2;
    o.nmax = 6;
    o.Hmax = 2;
    o.order = 8;
    o.uvmax = 2;
    o.umax = 1;
    o.summax = 2;
    return o;
}

} // namespace

TEST_CASE("suite catalogue") {
    const auto& names = suite_names();
    CHECK(names == std::vector<std::string>{"theorem4", "prop1", "cor2", "cor5", "prop5",
                                            "prop6", "cf", "kernel", "funceq", "all"});
}

TEST_CASE("every suite passes on a reduced grid") {
    for (const auto& name : suite_names()) {
        if (name == "all") continue;
        auto reports = run_suite(name, small());
        CHECK(!reports.empty());
        CHECK(all_pass(reports));
        for (const auto& r : reports) {
            CHECK(r.first_discrepancy.empty());
            CHECK(!r.check.empty());
        }
    }
}

TEST_CASE("combined run covers each sub-suite") {
    auto combined = run_suite("all", small());
    size_t total = 0;
    std::set<std::string> seen;
    for (const auto& name : suite_names()) {
        if (name == "all") continue;
        auto part = run_suite(name, small());
        total += part.size();
        for (const auto& r : part) seen.insert(r.check);
    }
    CHECK(combined.size() == total);
    std::set<std::string> combined_checks;
    for (const auto& r : combined) combined_checks.insert(r.check);
    CHECK(combined_checks == seen);
}

TEST_CASE("expected check kinds appear") {
    std::set<std::string> checks;
    for (const auto& r : run_suite("all", small())) checks.insert(r.check);
    for (const char* want :
         {"triangle-total-closed-form", "side-sum-linear-combination",
          "line-endpoint-closed-form", "line-total-closed-form", "line-boundary-closed-form",
          "corner-colour-split", "corner-single-colour-subcase", "centre-side-closed-form",
          "side-rotation-symmetry", "ballot-bijection-roundtrip",
          "continued-fraction-vs-corner", "corner-nesting-step", "continued-fraction-base-case",
          "convergent-stability", "convergent-single-colour-strip", "kernel-symmetry",
          "step-append-recursion"})
        CHECK(checks.count(want) == 1);
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_suite("bogus", small()), Error);
    try {
        run_suite("bogus", small());
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);
        CHECK(std::string(e.what()).find("unknown suite") != std::string::npos);
    }
}

TEST_CASE("defaults fill in unset options") {
    Options o; // everything -1: every suite picks its own grid
    auto reports = run_suite("kernel", o);
    CHECK(!reports.empty());
    CHECK(all_pass(reports));

    auto cf = run_suite("cf", Options{.Lmax = 3, .order = 6});
    CHECK(all_pass(cf));
    CHECK(!cf.empty());
}

TEST_CASE("report parameters name their grid point") {
    for (const auto& r : run_suite("prop5", small())) {
        bool has_key = false;
        for (const auto& [k, v] : r.params)
            if (k == "u") has_key = true;
        CHECK(has_key);
    }
}
