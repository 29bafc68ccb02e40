#pragma once

#include "trilat/formulas.hpp"
#include "trilat/report.hpp"
#include "trilat/series.hpp"

namespace trilat::contfrac {

using series::CoeffRing;
using series::TruncSeries;

/// Finite continued fraction attached to a side length. The recurrence
/// F_k = 1/(1 - s - s^2 F_{k-1}) is applied H = floor(L/2) times; the base is
/// F_0 = 1 for even L and F_0 = 1/(1-s) for odd L. Reported depth counts the
/// displayed nesting: H levels (even) or H+1 (odd, the base being a level).
struct CFSpec {
    int L;
    int H;
    bool odd;
    int depth;

    explicit CFSpec(int L_) : L(L_), H(L_ / 2), odd(L_ % 2 != 0), depth(L_ / 2 + (L_ % 2)) {
        require(L >= 0, ErrorCode::InvalidArgument, "side length must be >= 0");
    }
};

/// Exact series of the convergent, s = weight_sum * t. Every denominator has
/// constant term 1.
template <CoeffRing R>
TruncSeries<R> convergent_series(const CFSpec& spec, int order, const R& weight_sum) {
    auto one = TruncSeries<R>::one(order);
    auto s = TruncSeries<R>::monomial(order, 1, weight_sum);
    auto f = spec.odd ? (one - s).inverse() : one;
    for (int k = 0; k < spec.H; ++k) f = (one - s - s * s * f).inverse();
    return f;
}

/// Convergent equals the corner closed form, coefficientwise with symbolic
/// weights. The root-taking overloads avoid re-expanding the kernel root.
Report verify_cf_identity(int L, int order);
Report verify_cf_identity(int L, int order, const TruncSeries<series::BivarPoly>& root);

/// Corner closed form for side L+2 equals 1/(1 - s - s^2 * (corner form for
/// side L)), as series with symbolic weights.
Report verify_induction_step(int L, int order);
Report verify_induction_step(int L, int order, const TruncSeries<series::BivarPoly>& root);

} // namespace trilat::contfrac
