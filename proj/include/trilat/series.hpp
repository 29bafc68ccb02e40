#pragma once

#include <algorithm>
#include <vector>

#include "trilat/rings.hpp"

namespace trilat::series {

/// Truncated formal power series in t: exactly order+1 coefficients, t^0..t^order.
/// Binary operations truncate to the smaller operand order; precision is never
/// extended silently.
template <CoeffRing R>
class TruncSeries {
public:
    explicit TruncSeries(int order) : coeffs_(static_cast<size_t>(check_order(order)) + 1) {}

    static TruncSeries constant(int order, R c0) {
        TruncSeries s(order);
        s.coeffs_[0] = std::move(c0);
        return s;
    }
    static TruncSeries one(int order) { return constant(order, ring_traits<R>::one()); }

    /// c * t^k (zero series if k exceeds the order).
    static TruncSeries monomial(int order, int k, R c) {
        require(k >= 0, ErrorCode::InvalidArgument, "negative monomial degree");
        TruncSeries s(order);
        if (k <= order) s.coeffs_[static_cast<size_t>(k)] = std::move(c);
        return s;
    }
    static TruncSeries t(int order) { return monomial(order, 1, ring_traits<R>::one()); }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const R& operator[](int n) const {
        require(n >= 0 && n <= order(), ErrorCode::InvalidArgument, "coefficient index out of range");
        return coeffs_[static_cast<size_t>(n)];
    }
    void set(int n, R c) {
        require(n >= 0 && n <= order(), ErrorCode::InvalidArgument, "coefficient index out of range");
        coeffs_[static_cast<size_t>(n)] = std::move(c);
    }
    const std::vector<R>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const R& c) { return c == ring_traits<R>::zero(); });
    }

    /// Copy truncated (or zero-padded) to a new order.
    TruncSeries retrunc(int order) const {
        TruncSeries s(order);
        for (int n = 0; n <= std::min(order, this->order()); ++n) s.coeffs_[n] = coeffs_[n];
        return s;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries s(std::min(a.order(), b.order()));
        for (int n = 0; n <= s.order(); ++n) s.coeffs_[n] = R(a.coeffs_[n] + b.coeffs_[n]);
        return s;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries s(std::min(a.order(), b.order()));
        for (int n = 0; n <= s.order(); ++n) s.coeffs_[n] = R(a.coeffs_[n] - b.coeffs_[n]);
        return s;
    }
    friend TruncSeries operator-(const TruncSeries& a) {
        TruncSeries s(a.order());
        for (int n = 0; n <= s.order(); ++n) s.coeffs_[n] = R(-a.coeffs_[n]);
        return s;
    }

    /// Cauchy product truncated to the smaller operand order.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries s(std::min(a.order(), b.order()));
        for (int i = 0; i <= s.order(); ++i) {
            if (a.coeffs_[i] == ring_traits<R>::zero()) continue;
            for (int j = 0; i + j <= s.order(); ++j)
                s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return s;
    }

    friend TruncSeries operator*(const R& c, const TruncSeries& a) {
        TruncSeries s(a.order());
        for (int n = 0; n <= s.order(); ++n) s.coeffs_[n] = R(c * a.coeffs_[n]);
        return s;
    }

    /// Multiplicative inverse to the truncation order. The constant term must be
    /// a unit of the coefficient ring (+-1 over Z and weight polynomials).
    TruncSeries inverse() const {
        require(ring_traits<R>::is_unit(coeffs_[0]), ErrorCode::InvalidArgument,
                "series constant term is not a unit; cannot invert");
        R c0inv = ring_traits<R>::invert_unit(coeffs_[0]);
        TruncSeries s(order());
        s.coeffs_[0] = c0inv;
        for (int n = 1; n <= order(); ++n) {
            R acc = ring_traits<R>::zero();
            for (int k = 1; k <= n; ++k) acc += coeffs_[k] * s.coeffs_[n - k];
            s.coeffs_[n] = R(-(c0inv * acc));
        }
        return s;
    }

    /// Substitution t -> c*t: the t^n coefficient picks up a factor c^n.
    TruncSeries scale_t(const R& c) const {
        TruncSeries s(order());
        R cn = ring_traits<R>::one();
        s.coeffs_[0] = coeffs_[0];
        for (int n = 1; n <= order(); ++n) {
            cn = R(cn * c);
            s.coeffs_[n] = R(cn * coeffs_[n]);
        }
        return s;
    }

    /// Multiply by t^k, truncating at the same order.
    TruncSeries shift_up(int k) const {
        require(k >= 0, ErrorCode::InvalidArgument, "negative shift");
        TruncSeries s(order());
        for (int n = k; n <= order(); ++n) s.coeffs_[n] = coeffs_[n - k];
        return s;
    }

    /// Divide by t^k. The k lowest coefficients must vanish; the order drops by k.
    TruncSeries shift_down(int k) const {
        require(k >= 0 && k <= order(), ErrorCode::InvalidArgument, "bad shift");
        for (int n = 0; n < k; ++n)
            require(coeffs_[n] == ring_traits<R>::zero(), ErrorCode::InvalidArgument,
                    "series is not divisible by t^k");
        TruncSeries s(order() - k);
        for (int n = 0; n <= s.order(); ++n) s.coeffs_[n] = coeffs_[n + k];
        return s;
    }

    TruncSeries pow(int e) const {
        require(e >= 0, ErrorCode::InvalidArgument, "negative series power");
        TruncSeries acc = one(order());
        for (int i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    bool operator==(const TruncSeries&) const = default;

private:
    static int check_order(int order) {
        require(order >= 0, ErrorCode::InvalidArgument, "series order must be >= 0");
        return order;
    }

    std::vector<R> coeffs_;
};

template <CoeffRing R>
TruncSeries<R> trunc_mul(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    return a * b;
}

template <CoeffRing R>
TruncSeries<R> trunc_inv(const TruncSeries<R>& a) {
    return a.inverse();
}

template <CoeffRing R>
TruncSeries<R> scale_substitute(const TruncSeries<R>& a, const R& c) {
    return a.scale_t(c);
}

/// 1 - p^e, a recurring factor of the closed forms.
template <CoeffRing R>
TruncSeries<R> one_minus_pow(const TruncSeries<R>& p, int e) {
    return TruncSeries<R>::one(p.order()) - p.pow(e);
}

/// Root of the line-model kernel: the unique series p with p(0)=0 and
/// p = t(1+p^2), expanded by fixed-point iteration (one order gained per pass,
/// so `order` passes suffice). No square roots are involved.
template <CoeffRing R>
TruncSeries<R> dyck_kernel_root(int order) {
    TruncSeries<R> p(order);
    const TruncSeries<R> t = TruncSeries<R>::t(order);
    for (int i = 0; i < order; ++i) p = t * (TruncSeries<R>::one(order) + p * p);
    return p;
}

/// Root of the triangle-model kernel: the unique series p with p(0)=0 and
/// p = s(1+p+p^2) where s = weight_sum * t (weight_sum = alpha+beta in the
/// coefficient ring). Same fixed-point scheme as the line case.
template <CoeffRing R>
TruncSeries<R> motzkin_kernel_root(int order, const R& weight_sum) {
    TruncSeries<R> p(order);
    const TruncSeries<R> s = TruncSeries<R>::monomial(order, 1, weight_sum);
    for (int i = 0; i < order; ++i) p = s * (TruncSeries<R>::one(order) + p + p * p);
    return p;
}

/// alpha + beta as a symbolic weight polynomial.
inline BivarPoly symbolic_weight_sum() { return BivarPoly::alpha() + BivarPoly::beta(); }

} // namespace trilat::series
