#pragma once

#include <string>
#include <vector>

#include "trilat/series.hpp"

namespace trilat::series {

/// Exact rational function in t. Normal form: denominator constant term 1,
/// numerator and denominator coprime, no trailing zero coefficients.
/// Coefficient vectors are low-to-high; the zero polynomial is empty.
struct RationalFn {
    std::vector<Rat> num;
    std::vector<Rat> den;

    int num_degree() const { return static_cast<int>(num.size()) - 1; }
    int den_degree() const { return static_cast<int>(den.size()) - 1; }

    TruncSeries<Rat> expand(int order) const;
    std::string to_string() const;

    bool operator==(const RationalFn&) const = default;
};

/// Smallest rational function (minimal denominator degree, then minimal
/// numerator degree) whose expansion reproduces every coefficient of `a`,
/// searched within the degree bounds by exact Gaussian elimination. Throws a
/// no-match error when nothing within the bounds fits; never approximates.
RationalFn pade_reconstruct(const TruncSeries<Rat>& a, int deg_num, int deg_den);

std::string poly_to_string(const std::vector<Rat>& poly);

} // namespace trilat::series
