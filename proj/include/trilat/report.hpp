#pragma once

#include <string>
#include <utility>
#include <vector>

namespace trilat {

/// Outcome of one identity / equinumeracy / bijection check. `params`
/// identifies the grid point; `first_discrepancy` is empty on pass and
/// otherwise pinpoints the first failing coefficient or object.
struct Report {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> first_discrepancy;

    static Report passed(std::string check, std::vector<std::pair<std::string, std::string>> params) {
        return Report{std::move(check), std::move(params), true, {}};
    }
    static Report failed(std::string check, std::vector<std::pair<std::string, std::string>> params,
                         std::vector<std::pair<std::string, std::string>> discrepancy) {
        return Report{std::move(check), std::move(params), false, std::move(discrepancy)};
    }
};

} // namespace trilat
