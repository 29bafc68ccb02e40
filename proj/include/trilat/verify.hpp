#pragma once

#include <string>
#include <vector>

#include "trilat/report.hpp"

namespace trilat::verify {

/// Grid bounds for the verification suites. -1 selects the suite default;
/// every suite reads only the fields it needs.
struct Options {
    int Lmax = -1;
    int nmax = -1;
    int Hmax = -1;
    int order = -1;
    int uvmax = -1;
    int umax = -1;
    int summax = -1;
    long long guard_limit = -1;
};

/// Names accepted by run_suite, in canonical order; "all" runs the rest in
/// that order.
const std::vector<std::string>& suite_names();

/// Runs the named suite at its (possibly overridden) grid and returns one
/// report per check. Throws an invalid-argument error for unknown names.
std::vector<Report> run_suite(const std::string& name, const Options& options = {});

bool all_pass(const std::vector<Report>& reports);

} // namespace trilat::verify
