#include "trilat/formulas.hpp"

#include <optional>

#include "trilat/laurent.hpp"

namespace trilat::formulas {

using lattice::StepSet;
using lattice::Tag;
using series::BivarPolyRat;
using series::LaurentPoly;

namespace {

Rat rat_pow(const Rat& x, int e) {
    Rat acc = 1;
    for (int i = 0; i < e; ++i) acc = Rat(acc * x);
    return acc;
}

std::string coords_string(const std::vector<int>& c) {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s;
}

} // namespace

TruncSeries<Int> line_total_gf(int u, int v, int order) {
    require(u >= 0 && v >= 0, ErrorCode::InvalidArgument, "start coordinates must be >= 0");
    auto p = series::dyck_kernel_root<Int>(order);
    auto one = TruncSeries<Int>::one(order);
    auto num = (one + p * p) * series::one_minus_pow(p, u + 1) * series::one_minus_pow(p, v + 1);
    auto den = series::one_minus_pow(p, 1).pow(2) * (one + p.pow(u + v + 2));
    return num * den.inverse();
}

BoundaryGFs line_boundary_gfs(int u, int v, int order) {
    require(u >= 0 && v >= 0, ErrorCode::InvalidArgument, "start coordinates must be >= 0");
    require(order >= 0, ErrorCode::InvalidArgument, "order must be >= 0");
    // one extra order so dividing by t lands back on the requested one
    auto p = series::dyck_kernel_root<Rat>(order + 1);
    auto one = TruncSeries<Rat>::one(order + 1);
    auto inv_common = (p.pow(2 * u + 2 * v + 4) - one).inverse();
    auto g10 = (p.pow(v + 1) * (p.pow(2 * u + 2) - one) * inv_common).shift_down(1);
    auto g01 = (p.pow(u + 1) * (p.pow(2 * v + 2) - one) * inv_common).shift_down(1);
    return BoundaryGFs{std::move(g10), std::move(g01)};
}

Report line_full_gf_check(int u, int v, int order) {
    require(u >= 0 && v >= 0, ErrorCode::InvalidArgument, "start coordinates must be >= 0");
    const int L = u + v;
    std::vector<std::pair<std::string, std::string>> params = {
        {"u", std::to_string(u)}, {"v", std::to_string(v)}, {"order", std::to_string(order)}};

    auto table = lattice::count_walks(lattice::DomainSpec(1, L), SimplexPoint({u, v}), order);
    auto p = series::dyck_kernel_root<Rat>(order);
    auto one = TruncSeries<Rat>::one(order);
    auto inv_common = series::one_minus_pow(p, 2 * u + 2 * v + 4).inverse();

    // L+1 samples of the first endpoint mark (second fixed to 1) pin down the
    // degree-L homogeneous coefficients.
    static const int prime_pool[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    int used = 0;
    for (int candidate : prime_pool) {
        if (used == L + 1) break;
        Rat xi(candidate);
        Rat c = xi + Rat(1) / xi;

        TruncSeries<Rat> closed(order);
        try {
            auto prefactor = (one + p * p) * (one - c * p + p * p).inverse();
            auto bracket = TruncSeries<Rat>::constant(order, rat_pow(xi, u)) -
                           rat_pow(xi, u + v + 1) *
                               (p.pow(v + 1) * series::one_minus_pow(p, 2 * u + 2) * inv_common) -
                           Rat(Rat(1) / xi) *
                               (p.pow(u + 1) * series::one_minus_pow(p, 2 * v + 2) * inv_common);
            closed = prefactor * bracket;
        } catch (const Error&) {
            continue; // sample degenerate for this start; fall through to the next prime
        }
        ++used;

        TruncSeries<Rat> dp(order);
        for (const auto& [key, count] : table.entries()) {
            const auto& [n, e, pa] = key;
            if (n > order) continue;
            dp.set(n, Rat(dp[n] + Rat(count) * rat_pow(xi, e[0])));
        }
        for (int n = 0; n <= order; ++n)
            if (!(closed[n] == dp[n]))
                return Report::failed("line-endpoint-closed-form", params,
                                      {{"sample", xi.get_str()},
                                       {"n", std::to_string(n)},
                                       {"closed_form", closed[n].get_str()},
                                       {"dp", dp[n].get_str()}});
    }
    if (used < L + 1)
        return Report::failed("line-endpoint-closed-form", params,
                              {{"reason", "not enough usable sample values"}});
    return Report::passed("line-endpoint-closed-form", params);
}

TruncSeries<BivarPoly> total_series(const CountTable& table, int order) {
    require(order <= table.n_max(), ErrorCode::InvalidArgument, "order exceeds table depth");
    TruncSeries<BivarPoly> s(order);
    for (const auto& [key, count] : table.entries()) {
        const auto& [n, e, p] = key;
        if (n > order) continue;
        s.set(n, s[n] + BivarPoly::monomial(p, n - p, count));
    }
    return s;
}

TruncSeries<BivarPoly> side_series(const CountTable& table, int coord_index, int order) {
    require(order <= table.n_max(), ErrorCode::InvalidArgument, "order exceeds table depth");
    require(coord_index >= 0 && coord_index <= table.domain().d, ErrorCode::InvalidArgument,
            "coordinate index out of range");
    TruncSeries<BivarPoly> s(order);
    for (const auto& [key, count] : table.entries()) {
        const auto& [n, e, p] = key;
        if (n > order || e[static_cast<size_t>(coord_index)] != 0) continue;
        s.set(n, s[n] + BivarPoly::monomial(p, n - p, count));
    }
    return s;
}

TruncSeries<Int> total_series_plain(const CountTable& table, int order) {
    require(order <= table.n_max(), ErrorCode::InvalidArgument, "order exceeds table depth");
    TruncSeries<Int> s(order);
    for (const auto& [key, count] : table.entries()) {
        const auto& [n, e, p] = key;
        if (n > order) continue;
        s.set(n, Int(s[n] + count));
    }
    return s;
}

EvalPoint::EvalPoint(std::vector<Rat> values) : values_(std::move(values)) {
    require(values_.size() >= 2, ErrorCode::InvalidArgument, "sample point needs at least 2 values");
    for (const Rat& v : values_)
        require(v != 0, ErrorCode::InvalidArgument, "sample values must be nonzero");
}

namespace {

// Replays the append-a-step recursion in the Laurent algebra. make_term turns
// a table entry into a coefficient; step_weight assigns each step its weight.
template <class C, class MakeTerm, class StepWeight>
Report funceq_impl(const DomainSpec& domain, const SimplexPoint& start, int order,
                   MakeTerm make_term, StepWeight step_weight,
                   const std::vector<std::string>& names) {
    using LP = LaurentPoly<C>;
    const int arity = domain.d + 1;
    const StepSet stepset = StepSet::standard(domain.d);
    const CountTable table = lattice::count_walks(domain, start, order);

    std::vector<std::pair<std::string, std::string>> params = {
        {"d", std::to_string(domain.d)},
        {"L", std::to_string(domain.L)},
        {"start", coords_string(start.coords())},
        {"order", std::to_string(order)}};

    std::vector<LP> endpoint_poly(static_cast<size_t>(order) + 1, LP(arity));
    for (const auto& [key, count] : table.entries()) {
        const auto& [n, e, p] = key;
        if (n > order) continue;
        endpoint_poly[static_cast<size_t>(n)] += LP::monomial(arity, e, make_term(p, n, count));
    }

    LP all_steps(arity);
    std::vector<LP> boundary(static_cast<size_t>(arity), LP(arity));
    for (const auto& s : stepset.steps()) {
        LP mono = LP::monomial(arity, s.delta, step_weight(s.tag));
        all_steps += mono;
        for (int i = 0; i < arity; ++i)
            if (s.delta[i] == -1) boundary[static_cast<size_t>(i)] += mono;
    }
    auto section = [&](const LP& poly, int i) {
        LP out(arity);
        for (const auto& [e, c] : poly.terms())
            if (e[static_cast<size_t>(i)] == 0) out += LP::monomial(arity, e, c);
        return out;
    };

    for (int n = 0; n <= order; ++n) {
        LP rhs(arity);
        if (n == 0) {
            rhs += LP::monomial(arity, start.coords(), make_term(0, 0, Int(1)));
        } else {
            const LP& prev = endpoint_poly[static_cast<size_t>(n - 1)];
            rhs += prev * all_steps;
            for (int i = 0; i < arity; ++i) rhs -= section(prev, i) * boundary[static_cast<size_t>(i)];
        }
        LP residual = endpoint_poly[static_cast<size_t>(n)] - rhs;
        if (!residual.is_zero())
            return Report::failed("step-append-recursion", params,
                                  {{"n", std::to_string(n)}, {"residual", residual.to_string(names)}});
    }
    return Report::passed("step-append-recursion", params);
}

} // namespace

Report check_functional_equation(const DomainSpec& domain, const SimplexPoint& start, int order) {
    require(domain.d == 1 || domain.d == 2, ErrorCode::InvalidArgument,
            "recursion check supports d=1 and d=2 only");
    require(domain.contains(start.coords()), ErrorCode::DomainMismatch, "start point not in domain");
    require(order >= 0, ErrorCode::InvalidArgument, "order must be >= 0");
    if (domain.d == 1)
        return funceq_impl<Int>(
            domain, start, order, [](int, int, const Int& c) { return c; },
            [](Tag) { return Int(1); }, {"x", "y"});
    return funceq_impl<BivarPoly>(
        domain, start, order,
        [](int p, int n, const Int& c) { return BivarPoly::monomial(p, n - p, c); },
        [](Tag t) { return t == Tag::A ? BivarPoly::alpha() : BivarPoly::beta(); }, {"x", "y", "z"});
}

namespace {

// Weight-tagged kernel coefficient at a rational sample point: the symbolic
// alpha/beta parts of t's coefficient in the kernel.
BivarPolyRat triangle_kernel_weight(const Rat& x, const Rat& y, const Rat& z) {
    Rat a_part = y / x + x / z + z / y;
    Rat b_part = x / y + z / x + y / z;
    return BivarPolyRat::monomial(1, 0, a_part) + BivarPolyRat::monomial(0, 1, b_part);
}

// Coordinate inversion exchanges each ratio with its reciprocal, so the two
// weight marks trade places.
BivarPolyRat swap_weight_marks(const BivarPolyRat& p) {
    BivarPolyRat out;
    for (const auto& [e, c] : p.terms()) out += BivarPolyRat::monomial(e.second, e.first, c);
    return out;
}

// One-parameter substitution of the triangle kernel coefficient: coordinates
// are powers of the root mark (exponents 0 or 1 here), result is a Laurent
// polynomial in that mark.
LaurentPoly<BivarPoly> triangle_kernel_substitution(int ex, int ey, int ez) {
    using LP = LaurentPoly<BivarPoly>;
    LP out(1);
    auto add = [&](const BivarPoly& w, int num, int den) {
        out += LP::monomial(1, {num - den}, w);
    };
    const BivarPoly a = BivarPoly::alpha(), b = BivarPoly::beta();
    add(b, ex, ey); // x/y
    add(a, ey, ex); // y/x
    add(a, ex, ez); // x/z
    add(b, ez, ex); // z/x
    add(b, ey, ez); // y/z
    add(a, ez, ey); // z/y
    return out;
}

} // namespace

Report check_kernel_invariance(KernelModel model, const std::vector<EvalPoint>& samples) {
    std::vector<std::pair<std::string, std::string>> params = {
        {"model", model == KernelModel::Line ? "line" : "triangle"},
        {"samples", std::to_string(samples.size())}};

    const int arity = model == KernelModel::Line ? 2 : 3;
    for (const EvalPoint& e : samples) {
        require(e.arity() == arity, ErrorCode::InvalidArgument, "sample arity does not match model");
        for (int i = 0; i < arity; ++i)
            for (int j = i + 1; j < arity; ++j)
                require(e.values()[static_cast<size_t>(i)] != e.values()[static_cast<size_t>(j)],
                        ErrorCode::InvalidArgument, "sample values must be pairwise distinct");
    }

    if (model == KernelModel::Line) {
        for (const EvalPoint& e : samples) {
            const Rat x = e.values()[0], y = e.values()[1];
            Rat k = x / y + y / x;
            Rat swapped = y / x + x / y;
            if (!(k == swapped))
                return Report::failed("kernel-symmetry", params,
                                      {{"sample", x.get_str() + "," + y.get_str()},
                                       {"transform", "swap"}});
        }
        using LP = LaurentPoly<Int>;
        LP target = LP::monomial(1, {1}, 1) + LP::monomial(1, {-1}, 1);
        LP sub_p1 = LP::monomial(1, {1}, 1) + LP::monomial(1, {-1}, 1); // (p,1)
        LP sub_1p = LP::monomial(1, {-1}, 1) + LP::monomial(1, {1}, 1); // (1,p)
        if (!(sub_p1 == target) || !(sub_1p == target))
            return Report::failed("kernel-symmetry", params,
                                  {{"transform", "one-parameter substitution"}});
        return Report::passed("kernel-symmetry", params);
    }

    // full symmetry group of order 6: rotations composed with inversion
    auto rotate = [](std::vector<Rat> v) { return std::vector<Rat>{v[1], v[2], v[0]}; };
    auto invert = [](std::vector<Rat> v) {
        return std::vector<Rat>{Rat(1 / v[0]), Rat(1 / v[1]), Rat(1 / v[2])};
    };
    for (const EvalPoint& e : samples) {
        const auto& v = e.values();
        BivarPolyRat base = triangle_kernel_weight(v[0], v[1], v[2]);
        BivarPolyRat swapped = swap_weight_marks(base);
        // rotations preserve the marks; inversions exchange them
        std::vector<std::tuple<std::string, std::vector<Rat>, bool>> images;
        images.emplace_back("rotate", rotate(v), false);
        images.emplace_back("rotate2", rotate(rotate(v)), false);
        images.emplace_back("invert", invert(v), true);
        images.emplace_back("rotate-invert", rotate(invert(v)), true);
        images.emplace_back("rotate2-invert", rotate(rotate(invert(v))), true);
        for (const auto& [name, w, inverted] : images) {
            if (!(triangle_kernel_weight(w[0], w[1], w[2]) == (inverted ? swapped : base)))
                return Report::failed(
                    "kernel-symmetry", params,
                    {{"sample", v[0].get_str() + "," + v[1].get_str() + "," + v[2].get_str()},
                     {"transform", name}});
        }
    }

    // six substitutions collapse to the same univariate kernel coefficient
    using LP = LaurentPoly<BivarPoly>;
    const BivarPoly ab = BivarPoly::alpha() + BivarPoly::beta();
    LP target = LP::monomial(1, {1}, ab) + LP::monomial(1, {0}, ab) + LP::monomial(1, {-1}, ab);
    const int subs[6][3] = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    for (const auto& s : subs) {
        if (!(triangle_kernel_substitution(s[0], s[1], s[2]) == target))
            return Report::failed("kernel-symmetry", params,
                                  {{"transform", "substitution p-exponents " +
                                                     std::to_string(s[0]) + std::to_string(s[1]) +
                                                     std::to_string(s[2])}});
    }
    return Report::passed("kernel-symmetry", params);
}

Report check_linear_combination(int u, int v, int w, int order) {
    require(u >= 0 && v >= 0 && w >= 0, ErrorCode::InvalidArgument, "start coordinates must be >= 0");
    const int L = u + v + w;
    std::vector<std::pair<std::string, std::string>> params = {
        {"u", std::to_string(u)}, {"v", std::to_string(v)}, {"w", std::to_string(w)},
        {"order", std::to_string(order)}};

    auto table = lattice::count_walks(lattice::DomainSpec(2, L), SimplexPoint({u, v, w}), order);
    auto sides = side_series(table, 0, order) + side_series(table, 1, order) +
                 side_series(table, 2, order);
    auto lhs = (BivarPoly::alpha() + BivarPoly::beta()) * sides.shift_up(1);

    auto p = series::motzkin_kernel_root<BivarPoly>(order, series::symbolic_weight_sum());
    auto num = p.pow(u + 1) + p.pow(v + 1) + p.pow(w + 1) - p.pow(v + w + 2) - p.pow(u + w + 2) -
               p.pow(u + v + 2);
    auto rhs = num * series::one_minus_pow(p, 3 + L).inverse();
    return compare_series("side-sum-linear-combination", std::move(params), lhs, rhs);
}

} // namespace trilat::formulas
