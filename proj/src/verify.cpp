#include "trilat/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "trilat/contfrac.hpp"
#include "trilat/formulas.hpp"
#include "trilat/lattice.hpp"
#include "trilat/paths.hpp"
#include "trilat/series.hpp"

namespace trilat::verify {

using lattice::CountTable;
using lattice::DomainSpec;
using lattice::SimplexPoint;
using lattice::SublatticeFilter;
using series::BivarPoly;
using series::Int;
using series::Rat;
using series::TruncSeries;

namespace {

int pick(int value, int fallback) { return value >= 0 ? value : fallback; }

long long pick_guard(long long value) { return value >= 0 ? value : 10'000'000LL; }

using Params = std::vector<std::pair<std::string, std::string>>;

// All coordinate tuples of the simplex sum L in d+1 parts, descending lex to
// match the step ordering used elsewhere.
std::vector<std::vector<int>> simplex_points(int d, int L) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(d) + 1);
    std::function<void(int, int)> rec = [&](int idx, int remaining) {
        if (idx == d) {
            cur[static_cast<size_t>(idx)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int c = remaining; c >= 0; --c) {
            cur[static_cast<size_t>(idx)] = c;
            rec(idx + 1, remaining - c);
        }
    };
    rec(0, L);
    return out;
}

std::vector<Report> suite_theorem4(const Options& o) {
    const int summax = pick(o.summax, 5);
    const int nmax = pick(o.nmax, 14);
    auto root = series::motzkin_kernel_root<BivarPoly>(nmax, series::symbolic_weight_sum());
    std::vector<Report> out;
    for (int u = 0; u <= summax; ++u)
        for (int v = 0; u + v <= summax; ++v)
            for (int w = 0; u + v + w <= summax; ++w) {
                const int L = u + v + w;
                auto table = lattice::count_walks(DomainSpec(2, L), SimplexPoint({u, v, w}), nmax);
                Params params = {{"u", std::to_string(u)},
                                 {"v", std::to_string(v)},
                                 {"w", std::to_string(w)},
                                 {"order", std::to_string(nmax)}};
                out.push_back(formulas::compare_series(
                    "triangle-total-closed-form", std::move(params),
                    formulas::triangle_total_gf_from_root(u, v, w, root),
                    formulas::total_series(table, nmax)));
                out.push_back(formulas::check_linear_combination(u, v, w, nmax));
            }
    return out;
}

std::vector<Report> suite_prop1(const Options& o) {
    const int uvmax = pick(o.uvmax, 6);
    const int order = pick(o.order, 20);
    std::vector<Report> out;
    for (int u = 0; u <= uvmax; ++u)
        for (int v = 0; u + v <= uvmax; ++v)
            out.push_back(formulas::line_full_gf_check(u, v, order));
    return out;
}

std::vector<Report> suite_cor2(const Options& o) {
    const int uvmax = pick(o.uvmax, 6);
    const int order = pick(o.order, 20);
    std::vector<Report> out;
    for (int u = 0; u <= uvmax; ++u)
        for (int v = 0; u + v <= uvmax; ++v) {
            const int L = u + v;
            auto table = lattice::count_walks(DomainSpec(1, L), SimplexPoint({u, v}), order);
            Params params = {{"u", std::to_string(u)},
                             {"v", std::to_string(v)},
                             {"order", std::to_string(order)}};
            out.push_back(formulas::compare_series("line-total-closed-form", params,
                                                   formulas::line_total_gf(u, v, order),
                                                   formulas::total_series_plain(table, order)));

            // endpoint-pinned forms; the line model has tag-A steps only, so
            // the table's p index equals n
            auto boundary = formulas::line_boundary_gfs(u, v, order);
            auto dp_end = [&](const std::vector<int>& end) {
                auto s = TruncSeries<Rat>::constant(order, Rat(0));
                for (int n = 0; n <= order; ++n) s.set(n, Rat(table.at(n, end, n)));
                return s;
            };
            Params p10 = params;
            p10.emplace_back("end", std::to_string(L) + ",0");
            out.push_back(formulas::compare_series("line-boundary-closed-form", std::move(p10),
                                                   boundary.g10, dp_end({L, 0})));
            Params p01 = params;
            p01.emplace_back("end", "0," + std::to_string(L));
            out.push_back(formulas::compare_series("line-boundary-closed-form", std::move(p01),
                                                   boundary.g01, dp_end({0, L})));
        }
    return out;
}

std::vector<Report> suite_cor5(const Options& o) {
    const int Hmax = pick(o.Hmax, 4);
    const int nmax = pick(o.nmax, 14);
    std::vector<Report> out;
    for (int H = 0; H <= Hmax; ++H) {
        for (bool odd : {true, false}) {
            const int L = odd ? 2 * H + 1 : 2 * H;
            const bool forbid = !odd;
            std::vector<int> corner(3, 0);
            corner[0] = L;
            auto table = lattice::count_walks(DomainSpec(2, L), SimplexPoint(corner), nmax);
            paths::MotzkinStripSpec strip(H, forbid, paths::Colouring::TwoColoured);
            Params params = {{"H", std::to_string(H)},
                             {"L", std::to_string(L)},
                             {"nmax", std::to_string(nmax)}};

            Report split = Report::passed("corner-colour-split", params);
            for (int n = 0; n <= nmax && split.pass; ++n) {
                auto by_colour = paths::motzkin_strip_count_by_colour(strip, n);
                for (int p = 0; p <= n; ++p) {
                    Int lhs = table.total_by_tag(n, p);
                    if (lhs != by_colour[static_cast<size_t>(p)]) {
                        split = Report::failed(
                            "corner-colour-split", params,
                            {{"n", std::to_string(n)},
                             {"p", std::to_string(p)},
                             {"lhs", lhs.get_str()},
                             {"rhs", by_colour[static_cast<size_t>(p)].get_str()}});
                        break;
                    }
                }
            }
            out.push_back(std::move(split));

            paths::MotzkinStripSpec plain(H, forbid, paths::Colouring::Uncoloured);
            Report sub = Report::passed("corner-single-colour-subcase", params);
            for (int n = 0; n <= nmax; ++n) {
                Int lhs = table.total_by_tag(n, n);
                Int rhs = paths::motzkin_strip_count_plain(plain, n);
                if (lhs != rhs) {
                    sub = Report::failed("corner-single-colour-subcase", params,
                                         {{"n", std::to_string(n)},
                                          {"lhs", lhs.get_str()},
                                          {"rhs", rhs.get_str()}});
                    break;
                }
            }
            out.push_back(std::move(sub));
        }
    }
    return out;
}

std::vector<Report> suite_prop5(const Options& o) {
    const int umax = pick(o.umax, 3);
    const int nmax = pick(o.nmax, 12);
    auto root = series::motzkin_kernel_root<BivarPoly>(nmax, series::symbolic_weight_sum());
    std::vector<Report> out;
    for (int u = 0; u <= umax; ++u) {
        auto table = lattice::count_walks(DomainSpec(2, 3 * u), SimplexPoint({u, u, u}), nmax);
        Params params = {{"u", std::to_string(u)}, {"order", std::to_string(nmax)}};
        out.push_back(formulas::compare_series("centre-side-closed-form", params,
                                               formulas::centre_side_gf_from_root(u, root),
                                               formulas::side_series(table, 2, nmax)));
        // the centre start sees the three sides identically
        auto side2 = formulas::side_series(table, 2, nmax);
        out.push_back(formulas::compare_series("side-rotation-symmetry", params,
                                               formulas::side_series(table, 0, nmax), side2));
        out.push_back(formulas::compare_series("side-rotation-symmetry", params,
                                               formulas::side_series(table, 1, nmax), side2));
    }
    return out;
}

std::vector<Report> suite_prop6(const Options& o) {
    const int Lmax = pick(o.Lmax, 4);
    const int nmax = pick(o.nmax, 12);
    const long long guard = pick_guard(o.guard_limit);
    std::vector<Report> out;
    for (int L = 0; L <= Lmax; ++L) {
        std::vector<int> corner(3, 0);
        corner[0] = L;
        DomainSpec dom(2, L);
        Params params = {{"L", std::to_string(L)}, {"nmax", std::to_string(nmax)}};
        long long checked = 0;
        std::optional<Report> failure;
        for (int n = 0; n <= nmax && !failure; ++n) {
            auto walks = lattice::enumerate_walks(dom, SimplexPoint(corner), n,
                                                  SublatticeFilter::AOnly, guard);
            auto ballots = paths::enumerate_ballot3(L, n);
            Int dp = paths::ballot3_count(L, n);
            if (Int(static_cast<long>(walks.size())) != dp ||
                walks.size() != ballots.size()) {
                failure = Report::failed("ballot-bijection-roundtrip", params,
                                         {{"n", std::to_string(n)},
                                          {"walks", std::to_string(walks.size())},
                                          {"paths", std::to_string(ballots.size())},
                                          {"count", dp.get_str()}});
                break;
            }
            std::vector<paths::BallotPath> images;
            images.reserve(walks.size());
            for (const auto& w : walks) {
                auto b = paths::walk_to_ballot(w);
                if (!(paths::ballot_to_walk(b, L) == w)) {
                    failure = Report::failed("ballot-bijection-roundtrip", params,
                                             {{"n", std::to_string(n)},
                                              {"reason", "roundtrip mismatch"}});
                    break;
                }
                images.push_back(std::move(b));
            }
            if (failure) break;
            std::sort(images.begin(), images.end());
            std::sort(ballots.begin(), ballots.end());
            if (images != ballots) {
                failure = Report::failed("ballot-bijection-roundtrip", params,
                                         {{"n", std::to_string(n)},
                                          {"reason", "image set mismatch"}});
                break;
            }
            checked += static_cast<long long>(walks.size());
        }
        if (failure) {
            out.push_back(std::move(*failure));
        } else {
            params.emplace_back("paths_checked", std::to_string(checked));
            out.push_back(Report::passed("ballot-bijection-roundtrip", std::move(params)));
        }
    }
    return out;
}

std::vector<Report> suite_cf(const Options& o) {
    const int Lmax = pick(o.Lmax, 10);
    const int order = pick(o.order, 30);
    const BivarPoly ab = series::symbolic_weight_sum();
    auto root = series::motzkin_kernel_root<BivarPoly>(order, ab);
    std::vector<Report> out;

    for (int L = 0; L <= Lmax; ++L) out.push_back(contfrac::verify_cf_identity(L, order, root));
    for (int L = 0; L <= Lmax - 2; ++L)
        out.push_back(contfrac::verify_induction_step(L, order, root));

    // base cases: depth-0 convergents in closed form
    {
        auto one = TruncSeries<BivarPoly>::one(order);
        auto s = TruncSeries<BivarPoly>::monomial(order, 1, ab);
        out.push_back(formulas::compare_series(
            "continued-fraction-base-case", Params{{"L", "0"}},
            contfrac::convergent_series<BivarPoly>(contfrac::CFSpec(0), order, ab), one));
        out.push_back(formulas::compare_series(
            "continued-fraction-base-case", Params{{"L", "1"}},
            contfrac::convergent_series<BivarPoly>(contfrac::CFSpec(1), order, ab),
            (one - s).inverse()));
    }

    // deepening the fraction by one level leaves orders <= L untouched
    for (int L = 0; L <= std::min(Lmax, 8); ++L) {
        auto a = contfrac::convergent_series<BivarPoly>(contfrac::CFSpec(L), L, ab);
        auto b = contfrac::convergent_series<BivarPoly>(contfrac::CFSpec(L + 2), L, ab);
        out.push_back(formulas::compare_series("convergent-stability",
                                               Params{{"L", std::to_string(L)},
                                                      {"order", std::to_string(L)}},
                                               a, b));
    }

    // single-colour weights turn the convergent into a plain strip count
    for (int L = 0; L <= Lmax; ++L) {
        auto conv = contfrac::convergent_series<Int>(contfrac::CFSpec(L), order, Int(1));
        paths::MotzkinStripSpec strip(L / 2, L % 2 == 0, paths::Colouring::Uncoloured);
        auto want = TruncSeries<Int>::constant(order, Int(0));
        for (int n = 0; n <= order; ++n) want.set(n, paths::motzkin_strip_count_plain(strip, n));
        out.push_back(formulas::compare_series("convergent-single-colour-strip",
                                               Params{{"L", std::to_string(L)},
                                                      {"order", std::to_string(order)}},
                                               conv, want));
    }
    return out;
}

std::vector<Report> suite_kernel(const Options&) {
    std::vector<formulas::EvalPoint> line_pts;
    line_pts.emplace_back(std::vector<Rat>{Rat(2), Rat(3)});
    line_pts.emplace_back(std::vector<Rat>{Rat(5), Rat(7)});
    line_pts.emplace_back(std::vector<Rat>{Rat(1, 2), Rat(3)});
    std::vector<formulas::EvalPoint> tri_pts;
    tri_pts.emplace_back(std::vector<Rat>{Rat(2), Rat(3), Rat(5)});
    tri_pts.emplace_back(std::vector<Rat>{Rat(1, 2), Rat(3), Rat(7)});
    tri_pts.emplace_back(std::vector<Rat>{Rat(2), Rat(2, 3), Rat(5)});
    return {formulas::check_kernel_invariance(formulas::KernelModel::Line, line_pts),
            formulas::check_kernel_invariance(formulas::KernelModel::Triangle, tri_pts)};
}

std::vector<Report> suite_funceq(const Options& o) {
    const int Lmax = pick(o.Lmax, 4);
    const int order = pick(o.order, 8);
    std::vector<Report> out;
    for (int d : {1, 2})
        for (int L = 0; L <= Lmax; ++L)
            for (const auto& coords : simplex_points(d, L))
                out.push_back(formulas::check_functional_equation(DomainSpec(d, L),
                                                                  SimplexPoint(coords), order));
    return out;
}

using SuiteFn = std::vector<Report> (*)(const Options&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"theorem4", suite_theorem4}, {"prop1", suite_prop1}, {"cor2", suite_cor2},
        {"cor5", suite_cor5},         {"prop5", suite_prop5}, {"prop6", suite_prop6},
        {"cf", suite_cf},             {"kernel", suite_kernel}, {"funceq", suite_funceq}};
    return table;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table()) out.push_back(name);
        out.push_back("all");
        return out;
    }();
    return names;
}

std::vector<Report> run_suite(const std::string& name, const Options& options) {
    if (name == "all") {
        std::vector<Report> out;
        for (const auto& [suite, fn] : suite_table()) {
            auto part = fn(options);
            out.insert(out.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return out;
    }
    for (const auto& [suite, fn] : suite_table())
        if (suite == name) return fn(options);
    fail(ErrorCode::InvalidArgument, "unknown suite: " + name);
}

bool all_pass(const std::vector<Report>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass; });
}

} // namespace trilat::verify
