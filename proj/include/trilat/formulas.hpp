#pragma once

#include <string>
#include <vector>

#include "trilat/lattice.hpp"
#include "trilat/report.hpp"
#include "trilat/series.hpp"

namespace trilat::formulas {

using lattice::CountTable;
using lattice::DomainSpec;
using lattice::SimplexPoint;
using series::BivarPoly;
using series::CoeffRing;
using series::Int;
using series::Rat;
using series::TruncSeries;

/// Walks on the two-site-per-step line domain from (u,v), any endpoint:
/// (1+p^2)(1-p^{u+1})(1-p^{v+1}) / ((1-p)^2 (1+p^{u+v+2})) with p the root of
/// p = t(1+p^2).
TruncSeries<Int> line_total_gf(int u, int v, int order);

/// Endpoint-pinned line series. g10 counts walks ending at (L,0), g01 those
/// ending at (0,L); both arise by dividing by t, hence the rational carrier.
struct BoundaryGFs {
    TruncSeries<Rat> g10;
    TruncSeries<Rat> g01;
};

/// g10 = p^{v+1}(p^{2u+2}-1) / (t (p^{2u+2v+4}-1)), g01 the (u,v)-swap.
BoundaryGFs line_boundary_gfs(int u, int v, int order);

/// Endpoint-resolved closed form for the line model, checked against the DP
/// at u+v+1 rational sample values of the endpoint mark (second mark fixed
/// to 1). Each t-coefficient is homogeneous of degree u+v in the marks, so
/// that many samples pin it down.
Report line_full_gf_check(int u, int v, int order);

/// Triangle walks from (u,v,w), any endpoint:
/// (1-p^3)(1-p^{u+1})(1-p^{v+1})(1-p^{w+1}) / ((1-p)^3 (1-p^{u+v+w+3}))
/// with p the root of p = s(1+p+p^2), s = weight_sum * t. The _from_root
/// variants reuse an already expanded root, which dominates the cost.
template <CoeffRing R>
TruncSeries<R> triangle_total_gf_from_root(int u, int v, int w, const TruncSeries<R>& p) {
    require(u >= 0 && v >= 0 && w >= 0, ErrorCode::InvalidArgument, "start coordinates must be >= 0");
    auto num = series::one_minus_pow(p, 3) * series::one_minus_pow(p, u + 1) *
               series::one_minus_pow(p, v + 1) * series::one_minus_pow(p, w + 1);
    auto den = series::one_minus_pow(p, 1).pow(3) * series::one_minus_pow(p, u + v + w + 3);
    return num * den.inverse();
}

template <CoeffRing R>
TruncSeries<R> triangle_total_gf(int u, int v, int w, int order, const R& weight_sum) {
    return triangle_total_gf_from_root(u, v, w, series::motzkin_kernel_root<R>(order, weight_sum));
}

/// Corner start (L,0,0): (1-p^3)(1-p^{1+L}) / ((1-p)(1-p^{3+L})).
template <CoeffRing R>
TruncSeries<R> corner_gf_from_root(int L, const TruncSeries<R>& p) {
    require(L >= 0, ErrorCode::InvalidArgument, "side length must be >= 0");
    auto num = series::one_minus_pow(p, 3) * series::one_minus_pow(p, 1 + L);
    auto den = series::one_minus_pow(p, 1) * series::one_minus_pow(p, 3 + L);
    return num * den.inverse();
}

template <CoeffRing R>
TruncSeries<R> corner_gf(int L, int order, const R& weight_sum) {
    return corner_gf_from_root(L, series::motzkin_kernel_root<R>(order, weight_sum));
}

/// Centre start (u,u,u), endpoints on the side with third coordinate 0:
/// p^u (1-p^3)(1-p^{u+1}) / ((1-p)(1-p^{3u+3})).
template <CoeffRing R>
TruncSeries<R> centre_side_gf_from_root(int u, const TruncSeries<R>& p) {
    require(u >= 0, ErrorCode::InvalidArgument, "centre coordinate must be >= 0");
    auto num = p.pow(u) * series::one_minus_pow(p, 3) * series::one_minus_pow(p, u + 1);
    auto den = series::one_minus_pow(p, 1) * series::one_minus_pow(p, 3 * u + 3);
    return num * den.inverse();
}

template <CoeffRing R>
TruncSeries<R> centre_side_gf(int u, int order, const R& weight_sum) {
    return centre_side_gf_from_root(u, series::motzkin_kernel_root<R>(order, weight_sum));
}

/// Endpoint-marked counting polynomials from a count table, with the tag
/// split carried as weight monomials alpha^p beta^{n-p}.
TruncSeries<BivarPoly> total_series(const CountTable& table, int order);
TruncSeries<BivarPoly> side_series(const CountTable& table, int coord_index, int order);
/// Tag counts ignored: plain integer totals per length.
TruncSeries<Int> total_series_plain(const CountTable& table, int order);

/// Sample values for the endpoint marks; all nonzero so terms like y/x are
/// evaluable.
class EvalPoint {
public:
    explicit EvalPoint(std::vector<Rat> values);
    const std::vector<Rat>& values() const { return values_; }
    int arity() const { return static_cast<int>(values_.size()); }

private:
    std::vector<Rat> values_;
};

/// Replays the step-append recursion in the Laurent algebra over the endpoint
/// marks and asserts the residual vanishes identically through the order,
/// with symbolic weights in the triangle case.
Report check_functional_equation(const DomainSpec& domain, const SimplexPoint& start, int order);

enum class KernelModel { Line, Triangle };

/// Invariance of the kernel under its symmetry group: coordinate samples for
/// the group action, plus the one-parameter substitutions checked symbolically
/// as Laurent polynomials in the root mark.
Report check_kernel_invariance(KernelModel model, const std::vector<EvalPoint>& samples);

/// Side-sum identity for the triangle model: weight_sum * t * (sum of the
/// three boundary sections from the DP) equals
/// (p^{u+1}+p^{v+1}+p^{w+1}-p^{v+w+2}-p^{u+w+2}-p^{u+v+2}) / (1-p^{3+L}).
Report check_linear_combination(int u, int v, int w, int order);

/// First coefficient mismatch between two series, as a report.
template <CoeffRing R>
Report compare_series(const std::string& check,
                      std::vector<std::pair<std::string, std::string>> params,
                      const TruncSeries<R>& got, const TruncSeries<R>& want) {
    int order = std::min(got.order(), want.order());
    for (int n = 0; n <= order; ++n)
        if (!(got[n] == want[n]))
            return Report::failed(check, std::move(params),
                                  {{"n", std::to_string(n)},
                                   {"lhs", series::ring_traits<R>::to_string(got[n])},
                                   {"rhs", series::ring_traits<R>::to_string(want[n])}});
    return Report::passed(check, std::move(params));
}

} // namespace trilat::formulas
