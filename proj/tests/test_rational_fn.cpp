#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trilat/rational_fn.hpp"

using namespace trilat;
using namespace trilat::series;

namespace {

TruncSeries<Rat> geometric(const Rat& r, int order) {
    TruncSeries<Rat> s(order);
    Rat c = 1;
    for (int n = 0; n <= order; ++n, c *= r) s.set(n, c);
    return s;
}

} // namespace

TEST_CASE("geometric series reconstructs to a degree-(0,1) function") {
    RationalFn f = pade_reconstruct(geometric(Rat(2), 10), 3, 3);
    CHECK(f.num_degree() == 0);
    CHECK(f.den_degree() == 1);
    CHECK(f.num == std::vector<Rat>{Rat(1)});
    CHECK(f.den == std::vector<Rat>{Rat(1), Rat(-2)});
    CHECK(f.to_string() == "(1) / (1 - 2*t)");
}

TEST_CASE("known rational functions round-trip through expansion") {
    RationalFn g{{Rat(1), Rat(-2)}, {Rat(1), Rat(-4)}};
    auto series = g.expand(12);
    RationalFn back = pade_reconstruct(series, 4, 4);
    CHECK(back == g);

    RationalFn h{{Rat(3), Rat(0), Rat("1/2")}, {Rat(1), Rat(1), Rat(1)}};
    CHECK(pade_reconstruct(h.expand(14), 5, 5) == h);
}

TEST_CASE("constants and the zero series") {
    TruncSeries<Rat> c(6);
    c.set(0, Rat(7));
    RationalFn f = pade_reconstruct(c, 2, 2);
    CHECK(f.num_degree() == 0);
    CHECK(f.den_degree() == 0);
    CHECK(f.num == std::vector<Rat>{Rat(7)});
    CHECK(f.den == std::vector<Rat>{Rat(1)});

    TruncSeries<Rat> z(6);
    RationalFn zero = pade_reconstruct(z, 2, 2);
    CHECK(zero.num.empty());
    CHECK(zero.num_degree() == -1);
    CHECK(zero.den == std::vector<Rat>{Rat(1)});
    CHECK(zero.expand(4).is_zero());
}

TEST_CASE("minimal denominator wins over smaller numerator") {
    // t/(1-t) expands to 0,1,1,1,...; within bounds (1,1) nothing of
    // denominator degree 0 fits, so the reported shape is (1,1)
    TruncSeries<Rat> s(8);
    for (int n = 1; n <= 8; ++n) s.set(n, Rat(1));
    RationalFn f = pade_reconstruct(s, 3, 3);
    CHECK(f.num_degree() == 1);
    CHECK(f.den_degree() == 1);
    CHECK(f.num == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(f.den == std::vector<Rat>{Rat(1), Rat(-1)});

    // a pure polynomial reconstructs with denominator 1 even when deeper
    // denominators are allowed
    TruncSeries<Rat> poly(9);
    poly.set(0, Rat(1));
    poly.set(3, Rat(-5));
    RationalFn p = pade_reconstruct(poly, 4, 4);
    CHECK(p.den == std::vector<Rat>{Rat(1)});
    CHECK(p.num_degree() == 3);
}

TEST_CASE("non-rational data is refused rather than approximated") {
    // odd Catalan counting series: no rational function fits
    auto root = dyck_kernel_root<Int>(16);
    TruncSeries<Rat> as_rat(16);
    for (int n = 0; n <= 16; ++n) as_rat.set(n, Rat(root[n]));
    CHECK_THROWS_AS(pade_reconstruct(as_rat, 5, 5), Error);
    try {
        pade_reconstruct(as_rat, 5, 5);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoMatch);
    }
}

TEST_CASE("degree bounds are validated against the order") {
    auto s = geometric(Rat(2), 5);
    CHECK_THROWS_AS(pade_reconstruct(s, 3, 3), Error); // needs order >= 7
    CHECK_THROWS_AS(pade_reconstruct(s, -1, 2), Error);
    CHECK_THROWS_AS(pade_reconstruct(s, 2, -1), Error);
    try {
        pade_reconstruct(s, 3, 3);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);
    }
}

TEST_CASE("random rational functions are recovered exactly") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 3);
    for (int trial = 0; trial < 40; ++trial) {
        int dn = deg(rng), dd = deg(rng);
        std::vector<Rat> num(static_cast<size_t>(dn) + 1), den(static_cast<size_t>(dd) + 1);
        for (auto& c : num) c = coeff(rng);
        den[0] = 1;
        for (size_t i = 1; i < den.size(); ++i) den[i] = coeff(rng);
        RationalFn f{num, den};
        auto expanded = f.expand(dn + dd + 2);
        RationalFn back = pade_reconstruct(expanded, dn, dd);
        // minimality can shrink the degrees, but the functions must agree
        CHECK(back.num_degree() <= dn);
        CHECK(back.den_degree() <= dd);
        auto re = back.expand(dn + dd + 6);
        auto ref = f.expand(dn + dd + 6);
        for (int n = 0; n <= dn + dd + 6; ++n) CHECK(re[n] == ref[n]);
    }
}

TEST_CASE("printing") {
    CHECK(poly_to_string({Rat(1), Rat(-2)}) == "1 - 2*t");
    CHECK(poly_to_string({Rat(0), Rat(1)}) == "t");
    CHECK(poly_to_string({Rat(3), Rat(0), Rat("1/2")}) == "3 + 1/2*t^2");
    CHECK(poly_to_string({}) == "0");
    RationalFn g{{Rat(1), Rat(-2)}, {Rat(1), Rat(-4)}};
    CHECK(g.to_string() == "(1 - 2*t) / (1 - 4*t)");
}
