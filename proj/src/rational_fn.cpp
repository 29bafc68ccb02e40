#include "trilat/rational_fn.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace trilat::series {

namespace {

void trim(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const std::vector<Rat>& p) { return static_cast<int>(p.size()) - 1; }

std::vector<Rat> poly_scale(std::vector<Rat> p, const Rat& c) {
    for (Rat& x : p) x = Rat(x * c);
    return p;
}

// remainder of a by b (field coefficients, b nonzero)
std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
    while (degree(a) >= degree(b)) {
        Rat factor = a.back() / b.back();
        int shift = degree(a) - degree(b);
        for (int k = 0; k <= degree(b); ++k)
            a[static_cast<size_t>(k + shift)] -= factor * b[static_cast<size_t>(k)];
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

// exact quotient; remainder must vanish
std::vector<Rat> poly_div_exact(std::vector<Rat> a, const std::vector<Rat>& b) {
    std::vector<Rat> q(a.size(), Rat(0));
    while (degree(a) >= degree(b)) {
        Rat factor = a.back() / b.back();
        int shift = degree(a) - degree(b);
        q[static_cast<size_t>(shift)] = factor;
        for (int k = 0; k <= degree(b); ++k)
            a[static_cast<size_t>(k + shift)] -= factor * b[static_cast<size_t>(k)];
        trim(a);
        if (a.empty()) break;
    }
    require(a.empty(), ErrorCode::Internal, "polynomial division left a remainder");
    trim(q);
    return q;
}

// monic gcd; gcd with the zero polynomial is the other argument
std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        std::vector<Rat> r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = poly_scale(std::move(a), Rat(1 / a.back()));
    return a;
}

// Solves M x = rhs exactly; free variables are set to 0. Empty optional when
// the system is inconsistent.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
    const size_t rows = m.size();
    const size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<int> pivot_row_of_col(cols, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        std::swap(rhs[pivot], rhs[r]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat factor = m[i][c] / m[r][c];
            for (size_t k = c; k < cols; ++k) m[i][k] -= factor * m[r][k];
            rhs[i] -= factor * rhs[r];
        }
        pivot_row_of_col[c] = static_cast<int>(r);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (!(rhs[i] == 0)) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (size_t c = 0; c < cols; ++c)
        if (pivot_row_of_col[c] >= 0) {
            size_t pr = static_cast<size_t>(pivot_row_of_col[c]);
            x[c] = Rat(rhs[pr] / m[pr][c]);
        }
    return x;
}

} // namespace

TruncSeries<Rat> RationalFn::expand(int order) const {
    TruncSeries<Rat> n(order), d(order);
    for (int k = 0; k <= std::min(order, num_degree()); ++k) n.set(k, num[static_cast<size_t>(k)]);
    for (int k = 0; k <= std::min(order, den_degree()); ++k) d.set(k, den[static_cast<size_t>(k)]);
    return n * d.inverse();
}

std::string RationalFn::to_string() const {
    return "(" + poly_to_string(num) + ") / (" + poly_to_string(den) + ")";
}

std::string poly_to_string(const std::vector<Rat>& poly) {
    if (poly.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < poly.size(); ++k) {
        if (poly[k] == 0 && !(poly.size() == 1)) continue;
        Rat c = poly[k];
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        Rat mag = abs(c);
        if (k == 0 || mag != 1) out << mag.get_str();
        if (k >= 1) {
            if (mag != 1) out << "*";
            out << "t";
            if (k >= 2) out << "^" << k;
        }
    }
    return out.str();
}

RationalFn pade_reconstruct(const TruncSeries<Rat>& a, int deg_num, int deg_den) {
    require(deg_num >= 0 && deg_den >= 0, ErrorCode::InvalidArgument, "degree bounds must be >= 0");
    require(a.order() >= deg_num + deg_den + 1, ErrorCode::InvalidArgument,
            "series order too small for the requested degree bounds");
    const int order = a.order();

    for (int j = 0; j <= deg_den; ++j) {
        for (int i = 0; i <= deg_num; ++i) {
            // unknowns D_1..D_j with D_0 = 1; rows demand (D * a)_n = 0 for n > i
            std::vector<std::vector<Rat>> m;
            std::vector<Rat> rhs;
            for (int n = i + 1; n <= order; ++n) {
                std::vector<Rat> row(static_cast<size_t>(j), Rat(0));
                for (int k = 1; k <= std::min(j, n); ++k) row[static_cast<size_t>(k - 1)] = a[n - k];
                m.push_back(std::move(row));
                rhs.push_back(Rat(-a[n]));
            }
            auto sol = solve_linear(std::move(m), std::move(rhs));
            if (!sol) continue;

            std::vector<Rat> den(static_cast<size_t>(j) + 1, Rat(0));
            den[0] = 1;
            for (int k = 1; k <= j; ++k) den[static_cast<size_t>(k)] = (*sol)[static_cast<size_t>(k - 1)];
            std::vector<Rat> num(static_cast<size_t>(i) + 1, Rat(0));
            for (int n = 0; n <= i; ++n) {
                Rat acc = 0;
                for (int k = 0; k <= std::min(j, n); ++k) acc += den[static_cast<size_t>(k)] * a[n - k];
                num[static_cast<size_t>(n)] = acc;
            }
            trim(num);
            trim(den);

            std::vector<Rat> g = poly_gcd(num, den);
            if (degree(g) > 0) {
                if (!num.empty()) num = poly_div_exact(std::move(num), g);
                den = poly_div_exact(std::move(den), g);
            }
            require(!den.empty() && den[0] != 0, ErrorCode::Internal,
                    "reconstructed denominator lost its unit constant term");
            Rat scale = Rat(1 / den[0]);
            num = poly_scale(std::move(num), scale);
            den = poly_scale(std::move(den), scale);

            RationalFn fn{std::move(num), std::move(den)};
            // the solver already enforced the tail; re-expansion is the final word
            if (fn.expand(order) == a) return fn;
        }
    }
    fail(ErrorCode::NoMatch, "no exact rational function within the degree bounds");
}

} // namespace trilat::series
