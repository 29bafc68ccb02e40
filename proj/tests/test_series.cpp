#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trilat/series.hpp"

using namespace trilat;
using namespace trilat::series;

namespace {

TruncSeries<Rat> random_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    TruncSeries<Rat> s(order);
    for (int n = 0; n <= order; ++n) {
        Rat c(num(rng), den(rng));
        c.canonicalize(); // comparisons assume canonical form
        s.set(n, std::move(c));
    }
    return s;
}

} // namespace

TEST_CASE("series construction and coefficient access") {
    auto s = TruncSeries<Int>::monomial(4, 2, Int(7));
    CHECK(s.order() == 4);
    CHECK(s[0] == Int(0));
    CHECK(s[2] == Int(7));
    CHECK(s[4] == Int(0));
    CHECK_THROWS_AS(s[5], Error);
    CHECK_THROWS_AS(s[-1], Error);
    CHECK_THROWS_AS(TruncSeries<Int>(-1), Error);

    // monomial beyond the order is the zero series, not an error
    CHECK(TruncSeries<Int>::monomial(3, 5, Int(1)).is_zero());
    CHECK(TruncSeries<Int>::one(0)[0] == Int(1));
}

TEST_CASE("arithmetic truncates to the smaller operand order") {
    auto a = TruncSeries<Int>::one(5);
    auto b = TruncSeries<Int>::t(3);
    CHECK((a + b).order() == 3);
    CHECK((a - b).order() == 3);
    CHECK((a * b).order() == 3);
}

TEST_CASE("series ring identities on random elements") {
    std::mt19937 rng(777);
    for (int i = 0; i < 50; ++i) {
        auto a = random_series(rng, 8);
        auto b = random_series(rng, 8);
        auto c = random_series(rng, 8);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == TruncSeries<Rat>(8));
    }
}

TEST_CASE("inverse is two-sided on random unit series") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> sign(0, 1);
    const auto one_rat = TruncSeries<Rat>::one(8);
    for (int i = 0; i < 200; ++i) {
        auto a = random_series(rng, 8);
        if (a[0] == Rat(0)) a.set(0, Rat(3, 2));
        auto inv = a.inverse();
        CHECK(a * inv == one_rat);
        CHECK(inv * a == one_rat);
    }
    // integer and weight-polynomial rings: constant term must be +-1
    std::uniform_int_distribution<int> ic(-5, 5);
    const auto one_int = TruncSeries<Int>::one(8);
    for (int i = 0; i < 100; ++i) {
        TruncSeries<Int> a(8);
        a.set(0, Int(sign(rng) ? 1 : -1));
        for (int n = 1; n <= 8; ++n) a.set(n, Int(ic(rng)));
        CHECK(a * a.inverse() == one_int);
        CHECK(a.inverse() * a == one_int);
    }
    TruncSeries<Int> bad = TruncSeries<Int>::constant(4, Int(2));
    CHECK_THROWS_AS(bad.inverse(), Error);

    auto ab = symbolic_weight_sum();
    auto s = TruncSeries<BivarPoly>::one(6) - TruncSeries<BivarPoly>::monomial(6, 1, ab);
    CHECK(s * s.inverse() == TruncSeries<BivarPoly>::one(6));
    for (int n = 0; n <= 6; ++n) {
        // geometric series in (alpha+beta) t
        BivarPoly want;
        for (int p = 0; p <= n; ++p) {
            Int c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n),
                         static_cast<unsigned long>(p));
            want += BivarPoly::monomial(p, n - p, c);
        }
        CHECK(s.inverse()[n] == want);
    }
}

TEST_CASE("shift and scale operations") {
    auto a = TruncSeries<Int>::one(5) + TruncSeries<Int>::t(5);
    auto up = a.shift_up(2);
    CHECK(up[0] == Int(0));
    CHECK(up[2] == Int(1));
    CHECK(up[3] == Int(1));
    auto down = up.shift_down(2);
    CHECK(down.order() == 3);
    CHECK(down[0] == Int(1));
    CHECK(down[1] == Int(1));
    CHECK_THROWS_AS(a.shift_down(1), Error); // constant term is nonzero

    auto scaled = a.scale_t(Int(3));
    CHECK(scaled[0] == Int(1));
    CHECK(scaled[1] == Int(3));
    CHECK(scale_substitute(a, Int(3)) == scaled);

    auto p = TruncSeries<Int>::t(6);
    CHECK(p.pow(3) == TruncSeries<Int>::monomial(6, 3, Int(1)));
    CHECK(p.pow(0) == TruncSeries<Int>::one(6));
    CHECK(one_minus_pow(p, 2) == TruncSeries<Int>::one(6) - TruncSeries<Int>::monomial(6, 2, Int(1)));

    CHECK(a.retrunc(2).order() == 2);
    CHECK(a.retrunc(9).order() == 9);
    CHECK(a.retrunc(9)[9] == Int(0));
    CHECK(trunc_mul(a, a) == a * a);
    CHECK(trunc_inv(a) == a.inverse());
}

TEST_CASE("line-model kernel root starts t + t^3 + 2t^5 + 5t^7") {
    auto p = dyck_kernel_root<Int>(7);
    Int expect[] = {0, 1, 0, 1, 0, 2, 0, 5};
    for (int n = 0; n <= 7; ++n) CHECK(p[n] == expect[n]);
}

TEST_CASE("line-model kernel root satisfies its defining equation") {
    const int order = 20;
    auto p = dyck_kernel_root<Int>(order);
    auto residual = p - TruncSeries<Int>::t(order) * (TruncSeries<Int>::one(order) + p * p);
    CHECK(residual.is_zero());
    // odd support only
    for (int n = 0; n <= order; n += 2) CHECK(p[n] == Int(0));
}

TEST_CASE("triangle kernel root with unit weight gives Motzkin numbers") {
    auto p = motzkin_kernel_root<Int>(5, Int(1));
    Int expect[] = {0, 1, 1, 2, 4, 9};
    for (int n = 0; n <= 5; ++n) CHECK(p[n] == expect[n]);

    auto p2 = motzkin_kernel_root<Int>(4, Int(2));
    Int expect2[] = {0, 2, 4, 16, 64};
    for (int n = 0; n <= 4; ++n) CHECK(p2[n] == expect2[n]);
}

TEST_CASE("triangle kernel root satisfies its defining equation symbolically") {
    const int order = 12;
    const BivarPoly ab = symbolic_weight_sum();
    auto p = motzkin_kernel_root<BivarPoly>(order, ab);
    auto s = TruncSeries<BivarPoly>::monomial(order, 1, ab);
    auto residual = p - s * (TruncSeries<BivarPoly>::one(order) + p + p * p);
    CHECK(residual.is_zero());
}

TEST_CASE("symbolic kernel root coefficients are homogeneous of degree n") {
    const int order = 12;
    auto p = motzkin_kernel_root<BivarPoly>(order, symbolic_weight_sum());
    for (int n = 0; n <= order; ++n)
        for (const auto& [e, c] : p[n].terms())
            CHECK(e.first + e.second == n);
    // t^3 coefficient is 2(alpha+beta)^3
    BivarPoly ab = symbolic_weight_sum();
    CHECK(p[3] == ab * ab * ab + ab * ab * ab);
}

TEST_CASE("symbolic root specializes to the numeric roots") {
    const int order = 10;
    auto p = motzkin_kernel_root<BivarPoly>(order, symbolic_weight_sum());
    auto at11 = motzkin_kernel_root<Int>(order, Int(2));
    auto at10 = motzkin_kernel_root<Int>(order, Int(1));
    for (int n = 0; n <= order; ++n) {
        CHECK(p[n].evaluate(Int(1), Int(1)) == at11[n]);
        CHECK(p[n].evaluate(Int(1), Int(0)) == at10[n]);
    }
}
