#include "trilat/json_io.hpp"

#include <algorithm>
#include <cctype>

namespace trilat::io {

namespace {

bool integer_like(const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

ordered_json kv_object(const std::vector<std::pair<std::string, std::string>>& kvs) {
    ordered_json obj = ordered_json::object();
    for (const auto& [k, v] : kvs) {
        if (integer_like(v))
            obj[k] = std::stoll(v);
        else
            obj[k] = v;
    }
    return obj;
}

} // namespace

ordered_json count_table_json(const lattice::CountTable& table) {
    ordered_json j;
    j["d"] = table.domain().d;
    j["L"] = table.domain().L;
    j["start"] = table.start().coords();
    j["n_max"] = table.n_max();
    ordered_json entries = ordered_json::array();
    for (const auto& [key, count] : table.entries()) {
        const auto& [n, end, p] = key;
        ordered_json e;
        e["n"] = n;
        e["end"] = end;
        e["p"] = p;
        e["count"] = count.get_str();
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

std::string count_table_csv(const lattice::CountTable& table) {
    std::string out = "n,p,q,count\n";
    for (int n = 0; n <= table.n_max(); ++n)
        for (int p = 0; p <= n; ++p) {
            series::Int c = table.total_by_tag(n, p);
            if (c == 0) continue;
            out += std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(n - p) + "," +
                   c.get_str() + "\n";
        }
    return out;
}

std::string coeff_string(const series::Int& c) { return c.get_str(); }
std::string coeff_string(const series::Rat& c) { return c.get_str(); }
std::string coeff_string(const series::BivarPoly& c) { return c.to_string(); }

namespace {

template <class R>
ordered_json series_json_scalar(const series::TruncSeries<R>& s) {
    ordered_json j;
    j["order"] = s.order();
    j["ring"] = series::ring_traits<R>::name();
    ordered_json coeffs = ordered_json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(coeff_string(s[n]));
    j["coeffs"] = std::move(coeffs);
    return j;
}

} // namespace

ordered_json series_json(const series::TruncSeries<series::Int>& s) { return series_json_scalar(s); }
ordered_json series_json(const series::TruncSeries<series::Rat>& s) { return series_json_scalar(s); }

ordered_json series_json(const series::TruncSeries<series::BivarPoly>& s) {
    ordered_json j;
    j["order"] = s.order();
    j["ring"] = "bivar";
    ordered_json coeffs = ordered_json::array();
    for (int n = 0; n <= s.order(); ++n) {
        ordered_json terms = ordered_json::array();
        for (const auto& [e, c] : s[n].terms())
            terms.push_back(ordered_json::array({e.first, e.second, c.get_str()}));
        coeffs.push_back(std::move(terms));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

ordered_json report_json(const Report& r) {
    ordered_json j;
    j["check"] = r.check;
    j["params"] = kv_object(r.params);
    j["status"] = r.pass ? "pass" : "fail";
    j["first_discrepancy"] = r.pass ? ordered_json(nullptr) : kv_object(r.first_discrepancy);
    return j;
}

ordered_json reports_json(const std::vector<Report>& rs) {
    ordered_json arr = ordered_json::array();
    for (const Report& r : rs) arr.push_back(report_json(r));
    return arr;
}

ordered_json rational_fn_json(const series::RationalFn& fn) {
    ordered_json j;
    ordered_json num = ordered_json::array(), den = ordered_json::array();
    for (const auto& c : fn.num) num.push_back(c.get_str());
    for (const auto& c : fn.den) den.push_back(c.get_str());
    j["numerator"] = std::move(num);
    j["denominator"] = std::move(den);
    j["deg_num"] = fn.num_degree();
    j["deg_den"] = fn.den_degree();
    return j;
}

} // namespace trilat::io
