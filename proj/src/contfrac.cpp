#include "trilat/contfrac.hpp"

namespace trilat::contfrac {

using formulas::compare_series;
using series::BivarPoly;

Report verify_cf_identity(int L, int order) {
    require(order >= 0, ErrorCode::InvalidArgument, "order must be >= 0");
    return verify_cf_identity(L, order,
                              series::motzkin_kernel_root<BivarPoly>(order, series::symbolic_weight_sum()));
}

Report verify_cf_identity(int L, int order, const TruncSeries<BivarPoly>& root) {
    require(order >= 0, ErrorCode::InvalidArgument, "order must be >= 0");
    CFSpec spec(L);
    std::vector<std::pair<std::string, std::string>> params = {
        {"L", std::to_string(L)},
        {"depth", std::to_string(spec.depth)},
        {"order", std::to_string(order)}};
    auto lhs = convergent_series<BivarPoly>(spec, order, series::symbolic_weight_sum());
    auto rhs = formulas::corner_gf_from_root(L, root.retrunc(order));
    return compare_series("continued-fraction-vs-corner", std::move(params), lhs, rhs);
}

Report verify_induction_step(int L, int order) {
    require(order >= 0, ErrorCode::InvalidArgument, "order must be >= 0");
    return verify_induction_step(
        L, order, series::motzkin_kernel_root<BivarPoly>(order, series::symbolic_weight_sum()));
}

Report verify_induction_step(int L, int order, const TruncSeries<BivarPoly>& root) {
    require(order >= 0, ErrorCode::InvalidArgument, "order must be >= 0");
    std::vector<std::pair<std::string, std::string>> params = {
        {"L", std::to_string(L)}, {"order", std::to_string(order)}};
    const BivarPoly ab = series::symbolic_weight_sum();
    auto p = root.retrunc(order);
    auto one = series::TruncSeries<BivarPoly>::one(order);
    auto s = series::TruncSeries<BivarPoly>::monomial(order, 1, ab);
    auto lhs = formulas::corner_gf_from_root(L + 2, p);
    auto rhs = (one - s - s * s * formulas::corner_gf_from_root(L, p)).inverse();
    return compare_series("corner-nesting-step", std::move(params), lhs, rhs);
}

} // namespace trilat::contfrac
