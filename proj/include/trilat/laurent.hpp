#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "trilat/rings.hpp"

namespace trilat::series {

/// Laurent polynomial in `arity` variables: exponent vectors may have negative
/// entries. Used for endpoint-marked counting polynomials and kernel checks,
/// where terms like y/x appear. Zero coefficients are never stored.
template <CoeffRing C>
class LaurentPoly {
public:
    explicit LaurentPoly(int arity) : arity_(check_arity(arity)) {}

    static LaurentPoly monomial(int arity, std::vector<int> exps, C coeff) {
        LaurentPoly p(arity);
        require(static_cast<int>(exps.size()) == arity, ErrorCode::InvalidArgument,
                "exponent vector length does not match arity");
        if (!(coeff == ring_traits<C>::zero())) p.terms_.emplace(std::move(exps), std::move(coeff));
        return p;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, C>& terms() const { return terms_; }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_same(b);
        LaurentPoly r(a.arity_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e(a.arity_);
                for (int i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, C(ca * cb));
            }
        return r;
    }

    friend LaurentPoly operator*(const C& c, const LaurentPoly& a) {
        LaurentPoly r(a.arity_);
        for (const auto& [e, t] : a.terms_) r.add_term(e, C(c * t));
        return r;
    }

    bool operator==(const LaurentPoly&) const = default;

    std::string to_string(const std::vector<std::string>& names) const {
        require(static_cast<int>(names.size()) == arity_, ErrorCode::InvalidArgument,
                "variable name list does not match arity");
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) out << " + ";
            first = false;
            out << "(" << ring_traits<C>::to_string(c) << ")";
            for (int i = 0; i < arity_; ++i)
                if (e[i] != 0) out << "*" << names[i] << "^" << e[i];
        }
        return out.str();
    }

private:
    static int check_arity(int arity) {
        require(arity >= 1, ErrorCode::InvalidArgument, "laurent arity must be >= 1");
        return arity;
    }
    void check_same(const LaurentPoly& o) const {
        require(arity_ == o.arity_, ErrorCode::InvalidArgument, "laurent arity mismatch");
    }
    void add_term(const std::vector<int>& e, C c) {
        if (c == ring_traits<C>::zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second == ring_traits<C>::zero()) terms_.erase(it);
        }
    }

    int arity_;
    std::map<std::vector<int>, C> terms_;
};

} // namespace trilat::series
