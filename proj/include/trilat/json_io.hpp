#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "trilat/lattice.hpp"
#include "trilat/rational_fn.hpp"
#include "trilat/report.hpp"
#include "trilat/series.hpp"

namespace trilat::io {

using ordered_json = nlohmann::ordered_json;

// Key order and element order are fixed so that equal inputs produce
// byte-identical output.

ordered_json count_table_json(const lattice::CountTable& table);
std::string count_table_csv(const lattice::CountTable& table);

ordered_json series_json(const series::TruncSeries<series::Int>& s);
ordered_json series_json(const series::TruncSeries<series::Rat>& s);
ordered_json series_json(const series::TruncSeries<series::BivarPoly>& s);

std::string coeff_string(const series::Int& c);
std::string coeff_string(const series::Rat& c);
std::string coeff_string(const series::BivarPoly& c);

template <class S>
std::string series_csv(const S& s) {
    std::string out = "n,coefficient\n";
    for (int n = 0; n <= s.order(); ++n)
        out += std::to_string(n) + "," + coeff_string(s[n]) + "\n";
    return out;
}

ordered_json report_json(const Report& r);
ordered_json reports_json(const std::vector<Report>& rs);

ordered_json rational_fn_json(const series::RationalFn& fn);

} // namespace trilat::io
