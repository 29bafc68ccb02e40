#pragma once

#include <concepts>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "trilat/error.hpp"

namespace trilat::series {

// Exact scalar coefficient types. All arithmetic in the library is exact;
// there is no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

template <class R>
struct ring_traits; // specialised per coefficient ring

/// A commutative ring usable as the coefficient ring of a truncated series.
template <class R>
concept CoeffRing = std::regular<R> && requires(R a, R b) {
    { R(a + b) } -> std::same_as<R>;
    { R(a - b) } -> std::same_as<R>;
    { R(a * b) } -> std::same_as<R>;
    { R(-a) } -> std::same_as<R>;
    { ring_traits<R>::zero() } -> std::same_as<R>;
    { ring_traits<R>::one() } -> std::same_as<R>;
    { ring_traits<R>::is_unit(a) } -> std::same_as<bool>;
    { ring_traits<R>::invert_unit(a) } -> std::same_as<R>;
    { ring_traits<R>::name() } -> std::convertible_to<std::string>;
};

template <>
struct ring_traits<Int> {
    static Int zero() { return Int(0); }
    static Int one() { return Int(1); }
    // Units of Z: only +-1, both self-inverse.
    static bool is_unit(const Int& x) { return x == 1 || x == -1; }
    static Int invert_unit(const Int& x) {
        require(is_unit(x), ErrorCode::InvalidArgument, "integer (constant term) is not a unit");
        return x;
    }
    static std::string name() { return "int"; }
    static std::string to_string(const Int& x) { return x.get_str(); }
};

template <>
struct ring_traits<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_unit(const Rat& x) { return x != 0; }
    static Rat invert_unit(const Rat& x) {
        require(x != 0, ErrorCode::InvalidArgument, "division by zero rational");
        return Rat(1 / x);
    }
    static std::string name() { return "rat"; }
    static std::string to_string(const Rat& x) { return x.get_str(); }
};

/// Parse "n" or "n/d" in base 10; anything else (notably decimal points) is rejected.
inline Rat parse_rational(const std::string& text) {
    Rat q;
    if (text.empty() || q.set_str(text, 10) != 0)
        fail(ErrorCode::InvalidArgument, "not an exact rational: '" + text + "'");
    require(q.get_den() != 0, ErrorCode::InvalidArgument, "zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

/// Polynomial in the two formal step weights, exponent pair -> coefficient.
/// Zero coefficients are never stored.
template <class C>
class BivarPolyT {
public:
    using Exponents = std::pair<int, int>; // (exponent of alpha, exponent of beta)
    using TermMap = std::map<Exponents, C>;

    BivarPolyT() = default;

    static BivarPolyT constant(C c) { return monomial(0, 0, std::move(c)); }
    static BivarPolyT alpha() { return monomial(1, 0, ring_traits<C>::one()); }
    static BivarPolyT beta() { return monomial(0, 1, ring_traits<C>::one()); }

    static BivarPolyT monomial(int ea, int eb, C c) {
        require(ea >= 0 && eb >= 0, ErrorCode::InvalidArgument, "negative weight exponent");
        BivarPolyT p;
        if (!(c == ring_traits<C>::zero())) p.terms_.emplace(Exponents{ea, eb}, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
    }
    C constant_term() const { return coeff(0, 0); }
    C coeff(int ea, int eb) const {
        auto it = terms_.find(Exponents{ea, eb});
        return it == terms_.end() ? ring_traits<C>::zero() : it->second;
    }
    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
        return d;
    }
    const TermMap& terms() const { return terms_; }

    C evaluate(const C& a, const C& b) const {
        C acc = ring_traits<C>::zero();
        for (const auto& [e, c] : terms_) acc += c * power(a, e.first) * power(b, e.second);
        return acc;
    }

    BivarPolyT& operator+=(const BivarPolyT& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    BivarPolyT& operator-=(const BivarPolyT& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
        return *this;
    }
    friend BivarPolyT operator+(BivarPolyT a, const BivarPolyT& b) { return a += b; }
    friend BivarPolyT operator-(BivarPolyT a, const BivarPolyT& b) { return a -= b; }
    friend BivarPolyT operator-(const BivarPolyT& a) {
        BivarPolyT r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, C(-c));
        return r;
    }
    friend BivarPolyT operator*(const BivarPolyT& a, const BivarPolyT& b) {
        BivarPolyT r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term({ea.first + eb.first, ea.second + eb.second}, C(ca * cb));
        return r;
    }
    bool operator==(const BivarPolyT&) const = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) out << " + ";
            first = false;
            out << ring_traits<C>::to_string(c);
            if (e.first > 0) out << "*a^" << e.first;
            if (e.second > 0) out << "*b^" << e.second;
        }
        return out.str();
    }

private:
    static C power(const C& base, int e) {
        C acc = ring_traits<C>::one();
        for (int i = 0; i < e; ++i) acc = C(acc * base);
        return acc;
    }

    void add_term(const Exponents& e, const C& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!(c == ring_traits<C>::zero())) terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second == ring_traits<C>::zero()) terms_.erase(it);
    }

    TermMap terms_;
};

using BivarPoly = BivarPolyT<Int>;
using BivarPolyRat = BivarPolyT<Rat>;

template <class C>
struct ring_traits<BivarPolyT<C>> {
    static BivarPolyT<C> zero() { return {}; }
    static BivarPolyT<C> one() { return BivarPolyT<C>::constant(ring_traits<C>::one()); }
    static bool is_unit(const BivarPolyT<C>& p) {
        return p.is_constant() && ring_traits<C>::is_unit(p.constant_term());
    }
    static BivarPolyT<C> invert_unit(const BivarPolyT<C>& p) {
        require(p.is_constant(), ErrorCode::InvalidArgument,
                "non-constant weight polynomial is not invertible");
        return BivarPolyT<C>::constant(ring_traits<C>::invert_unit(p.constant_term()));
    }
    static std::string name() { return std::same_as<C, Int> ? "bivar" : "bivar_rat"; }
    static std::string to_string(const BivarPolyT<C>& p) { return p.to_string(); }
};

} // namespace trilat::series
