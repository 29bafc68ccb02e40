#include "trilat/trilat.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <variant>

#include "trilat/contfrac.hpp"
#include "trilat/error.hpp"
#include "trilat/formulas.hpp"
#include "trilat/json_io.hpp"
#include "trilat/lattice.hpp"
#include "trilat/rational_fn.hpp"
#include "trilat/series.hpp"
#include "trilat/verify.hpp"

using trilat::ErrorCode;
using trilat::series::BivarPoly;
using trilat::series::Int;
using trilat::series::Rat;
using trilat::series::TruncSeries;

using AnySeries = std::variant<TruncSeries<Int>, TruncSeries<Rat>, TruncSeries<BivarPoly>>;

struct trilat_count_table {
    trilat::lattice::CountTable impl;
};
struct trilat_series {
    AnySeries impl;
};
struct trilat_rational_fn {
    trilat::series::RationalFn impl;
};
struct trilat_reports {
    std::vector<trilat::Report> impl;
};

namespace {

thread_local std::string g_last_error;

trilat_status map_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return TRILAT_INVALID_ARGUMENT;
        case ErrorCode::DomainMismatch: return TRILAT_DOMAIN_MISMATCH;
        case ErrorCode::ResourceLimit: return TRILAT_RESOURCE_LIMIT;
        case ErrorCode::Precondition: return TRILAT_PRECONDITION;
        case ErrorCode::NoMatch: return TRILAT_NO_MATCH;
        case ErrorCode::Internal: return TRILAT_INTERNAL;
    }
    return TRILAT_INTERNAL;
}

template <class F>
trilat_status guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return TRILAT_OK;
    } catch (const trilat::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TRILAT_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return TRILAT_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require_arg(bool ok, const std::string& what) {
    trilat::require(ok, ErrorCode::InvalidArgument, what);
}

/// Both NULL -> symbolic; both set -> exact rationals; anything else rejected.
struct Weights {
    bool symbolic;
    Rat alpha;
    Rat beta;
};

Weights parse_weights(const char* alpha, const char* beta) {
    if (!alpha && !beta) return {true, Rat(0), Rat(0)};
    require_arg(alpha && beta, "weights must be given either both or not at all");
    return {false, trilat::series::parse_rational(alpha), trilat::series::parse_rational(beta)};
}

/// Runs `make(weight_sum)` in the ring selected by the weights.
template <class MakeSymbolic, class MakeRational>
AnySeries weighted_series(const Weights& w, MakeSymbolic&& make_symbolic,
                          MakeRational&& make_rational) {
    if (w.symbolic) return AnySeries(make_symbolic(trilat::series::symbolic_weight_sum()));
    return AnySeries(make_rational(Rat(w.alpha + w.beta)));
}

trilat::verify::Options convert_options(const trilat_verify_options* options) {
    trilat::verify::Options out;
    if (!options) return out;
    out.Lmax = options->Lmax;
    out.nmax = options->nmax;
    out.Hmax = options->Hmax;
    out.order = options->order;
    out.uvmax = options->uvmax;
    out.umax = options->umax;
    out.summax = options->summax;
    out.guard_limit = options->guard_limit;
    return out;
}

std::string report_line(const trilat::Report& r) {
    std::string line = r.pass ? "PASS " : "FAIL ";
    line += r.check;
    if (!r.params.empty()) {
        line += " (";
        for (size_t i = 0; i < r.params.size(); ++i) {
            if (i) line += ", ";
            line += r.params[i].first + "=" + r.params[i].second;
        }
        line += ")";
    }
    if (!r.pass && !r.first_discrepancy.empty()) {
        line += " at ";
        for (size_t i = 0; i < r.first_discrepancy.size(); ++i) {
            if (i) line += ", ";
            line += r.first_discrepancy[i].first + "=" + r.first_discrepancy[i].second;
        }
    }
    return line;
}

} // namespace

extern "C" {

const char* trilat_version(void) { return "1.0.0"; }

const char* trilat_last_error(void) { return g_last_error.c_str(); }

void trilat_string_free(char* s) { std::free(s); }

/* --- counting ---------------------------------------------------------- */

trilat_status trilat_count_walks(int d, int L, const int* start, int start_len, int n_max,
                                 trilat_count_table** out) {
    return guarded([&] {
        require_arg(out != nullptr, "out must not be NULL");
        require_arg(start != nullptr && start_len > 0, "start must hold d+1 coordinates");
        require_arg(start_len == d + 1, "start must hold exactly d+1 coordinates");
        trilat::lattice::DomainSpec domain(d, L);
        trilat::lattice::SimplexPoint point(std::vector<int>(start, start + start_len));
        trilat::require(domain.contains(point.coords()), ErrorCode::DomainMismatch,
                        "start point not in domain");
        auto table = trilat::lattice::count_walks(domain, point, n_max);
        *out = new trilat_count_table{std::move(table)};
    });
}

trilat_status trilat_count_table_n_max(const trilat_count_table* t, int* out) {
    return guarded([&] {
        require_arg(t && out, "arguments must not be NULL");
        *out = t->impl.n_max();
    });
}

trilat_status trilat_count_table_total(const trilat_count_table* t, int n, char** out) {
    return guarded([&] {
        require_arg(t && out, "arguments must not be NULL");
        require_arg(0 <= n && n <= t->impl.n_max(), "n out of range");
        *out = dup_string(t->impl.total(n).get_str());
    });
}

trilat_status trilat_count_table_total_by_tag(const trilat_count_table* t, int n, int p,
                                              char** out) {
    return guarded([&] {
        require_arg(t && out, "arguments must not be NULL");
        require_arg(0 <= n && n <= t->impl.n_max(), "n out of range");
        require_arg(0 <= p && p <= n, "p out of range");
        *out = dup_string(t->impl.total_by_tag(n, p).get_str());
    });
}

trilat_status trilat_count_table_to_json(const trilat_count_table* t, char** out) {
    return guarded([&] {
        require_arg(t && out, "arguments must not be NULL");
        *out = dup_string(trilat::io::count_table_json(t->impl).dump());
    });
}

trilat_status trilat_count_table_to_csv(const trilat_count_table* t, char** out) {
    return guarded([&] {
        require_arg(t && out, "arguments must not be NULL");
        *out = dup_string(trilat::io::count_table_csv(t->impl));
    });
}

void trilat_count_table_free(trilat_count_table* t) { delete t; }

/* --- series ------------------------------------------------------------ */

trilat_status trilat_series_line_total(int u, int v, int order, trilat_series** out) {
    return guarded([&] {
        require_arg(out != nullptr, "out must not be NULL");
        *out = new trilat_series{AnySeries(trilat::formulas::line_total_gf(u, v, order))};
    });
}

trilat_status trilat_series_line_boundary(int u, int v, int order, const char* which,
                                          trilat_series** out) {
    return guarded([&] {
        require_arg(out != nullptr && which != nullptr, "arguments must not be NULL");
        std::string w(which);
        require_arg(w == "10" || w == "01", "which must be \"10\" or \"01\"");
        auto both = trilat::formulas::line_boundary_gfs(u, v, order);
        *out = new trilat_series{AnySeries(w == "10" ? std::move(both.g10) : std::move(both.g01))};
    });
}

trilat_status trilat_series_triangle_total(int u, int v, int w, int order, const char* alpha,
                                           const char* beta, trilat_series** out) {
    return guarded([&] {
        require_arg(out != nullptr, "out must not be NULL");
        Weights weights = parse_weights(alpha, beta);
        *out = new trilat_series{weighted_series(
            weights,
            [&](const BivarPoly& ws) {
                return trilat::formulas::triangle_total_gf<BivarPoly>(u, v, w, order, ws);
            },
            [&](const Rat& ws) {
                return trilat::formulas::triangle_total_gf<Rat>(u, v, w, order, ws);
            })};
    });
}

trilat_status trilat_series_corner(int L, int order, const char* alpha, const char* beta,
                                   trilat_series** out) {
    return guarded([&] {
        require_arg(out != nullptr, "out must not be NULL");
        Weights weights = parse_weights(alpha, beta);
        *out = new trilat_series{weighted_series(
            weights,
            [&](const BivarPoly& ws) { return trilat::formulas::corner_gf<BivarPoly>(L, order, ws); },
            [&](const Rat& ws) { return trilat::formulas::corner_gf<Rat>(L, order, ws); })};
    });
}

trilat_status trilat_series_centre_side(int u, int order, const char* alpha, const char* beta,
                                        trilat_series** out) {
    return guarded([&] {
        require_arg(out != nullptr, "out must not be NULL");
        Weights weights = parse_weights(alpha, beta);
        *out = new trilat_series{weighted_series(
            weights,
            [&](const BivarPoly& ws) {
                return trilat::formulas::centre_side_gf<BivarPoly>(u, order, ws);
            },
            [&](const Rat& ws) { return trilat::formulas::centre_side_gf<Rat>(u, order, ws); })};
    });
}

trilat_status trilat_series_cf_convergent(int L, int order, const char* alpha, const char* beta,
                                          trilat_series** out) {
    return guarded([&] {
        require_arg(out != nullptr, "out must not be NULL");
        Weights weights = parse_weights(alpha, beta);
        trilat::contfrac::CFSpec spec(L);
        *out = new trilat_series{weighted_series(
            weights,
            [&](const BivarPoly& ws) {
                return trilat::contfrac::convergent_series<BivarPoly>(spec, order, ws);
            },
            [&](const Rat& ws) {
                return trilat::contfrac::convergent_series<Rat>(spec, order, ws);
            })};
    });
}

trilat_status trilat_series_kernel_root(const char* model, int order, const char* alpha,
                                        const char* beta, trilat_series** out) {
    return guarded([&] {
        require_arg(out != nullptr && model != nullptr, "arguments must not be NULL");
        std::string m(model);
        require_arg(m == "line" || m == "triangle", "model must be \"line\" or \"triangle\"");
        trilat::require(order >= 0, ErrorCode::InvalidArgument, "order must be >= 0");
        if (m == "line") {
            require_arg(!alpha && !beta, "the line-model root takes no weights");
            *out = new trilat_series{AnySeries(trilat::series::dyck_kernel_root<Int>(order))};
            return;
        }
        Weights weights = parse_weights(alpha, beta);
        *out = new trilat_series{weighted_series(
            weights,
            [&](const BivarPoly& ws) {
                return trilat::series::motzkin_kernel_root<BivarPoly>(order, ws);
            },
            [&](const Rat& ws) { return trilat::series::motzkin_kernel_root<Rat>(order, ws); })};
    });
}

trilat_status trilat_series_order(const trilat_series* s, int* out) {
    return guarded([&] {
        require_arg(s && out, "arguments must not be NULL");
        *out = std::visit([](const auto& v) { return v.order(); }, s->impl);
    });
}

trilat_status trilat_series_ring(const trilat_series* s, const char** out) {
    return guarded([&] {
        require_arg(s && out, "arguments must not be NULL");
        *out = std::visit(
            [](const auto& v) -> const char* {
                using R = std::decay_t<decltype(v[0])>;
                if constexpr (std::same_as<R, Int>) return "int";
                else if constexpr (std::same_as<R, Rat>) return "rat";
                else return "bivar";
            },
            s->impl);
    });
}

trilat_status trilat_series_coeff(const trilat_series* s, int n, char** out) {
    return guarded([&] {
        require_arg(s && out, "arguments must not be NULL");
        *out = std::visit(
            [&](const auto& v) {
                require_arg(0 <= n && n <= v.order(), "n out of range");
                return dup_string(trilat::io::coeff_string(v[n]));
            },
            s->impl);
    });
}

trilat_status trilat_series_to_json(const trilat_series* s, char** out) {
    return guarded([&] {
        require_arg(s && out, "arguments must not be NULL");
        *out = std::visit([](const auto& v) { return dup_string(trilat::io::series_json(v).dump()); },
                          s->impl);
    });
}

trilat_status trilat_series_to_csv(const trilat_series* s, char** out) {
    return guarded([&] {
        require_arg(s && out, "arguments must not be NULL");
        *out = std::visit([](const auto& v) { return dup_string(trilat::io::series_csv(v)); },
                          s->impl);
    });
}

void trilat_series_free(trilat_series* s) { delete s; }

/* --- reconstruction ----------------------------------------------------- */

trilat_status trilat_pade_reconstruct(const trilat_series* s, int deg_num, int deg_den,
                                      trilat_rational_fn** out) {
    return guarded([&] {
        require_arg(s && out, "arguments must not be NULL");
        const TruncSeries<Rat>* rat = std::get_if<TruncSeries<Rat>>(&s->impl);
        TruncSeries<Rat> converted = TruncSeries<Rat>::one(0);
        if (!rat) {
            const TruncSeries<Int>* ints = std::get_if<TruncSeries<Int>>(&s->impl);
            require_arg(ints != nullptr, "reconstruction needs numeric coefficients");
            converted = TruncSeries<Rat>::constant(ints->order(), Rat(0));
            for (int n = 0; n <= ints->order(); ++n) converted.set(n, Rat((*ints)[n]));
            rat = &converted;
        }
        auto fn = trilat::series::pade_reconstruct(*rat, deg_num, deg_den);
        *out = new trilat_rational_fn{std::move(fn)};
    });
}

trilat_status trilat_rational_fn_degrees(const trilat_rational_fn* f, int* deg_num, int* deg_den) {
    return guarded([&] {
        require_arg(f && deg_num && deg_den, "arguments must not be NULL");
        *deg_num = f->impl.num_degree();
        *deg_den = f->impl.den_degree();
    });
}

trilat_status trilat_rational_fn_to_string(const trilat_rational_fn* f, char** out) {
    return guarded([&] {
        require_arg(f && out, "arguments must not be NULL");
        *out = dup_string(f->impl.to_string());
    });
}

trilat_status trilat_rational_fn_to_json(const trilat_rational_fn* f, char** out) {
    return guarded([&] {
        require_arg(f && out, "arguments must not be NULL");
        *out = dup_string(trilat::io::rational_fn_json(f->impl).dump());
    });
}

void trilat_rational_fn_free(trilat_rational_fn* f) { delete f; }

/* --- verification -------------------------------------------------------*/

trilat_status trilat_verify(const char* suite, const trilat_verify_options* options,
                            trilat_reports** out) {
    return guarded([&] {
        require_arg(suite && out, "arguments must not be NULL");
        auto reports = trilat::verify::run_suite(suite, convert_options(options));
        *out = new trilat_reports{std::move(reports)};
    });
}

trilat_status trilat_reports_count(const trilat_reports* r, int* out) {
    return guarded([&] {
        require_arg(r && out, "arguments must not be NULL");
        *out = static_cast<int>(r->impl.size());
    });
}

trilat_status trilat_reports_passed(const trilat_reports* r, int index, int* out) {
    return guarded([&] {
        require_arg(r && out, "arguments must not be NULL");
        require_arg(0 <= index && index < static_cast<int>(r->impl.size()), "index out of range");
        *out = r->impl[static_cast<size_t>(index)].pass ? 1 : 0;
    });
}

trilat_status trilat_reports_all_pass(const trilat_reports* r, int* out) {
    return guarded([&] {
        require_arg(r && out, "arguments must not be NULL");
        *out = trilat::verify::all_pass(r->impl) ? 1 : 0;
    });
}

trilat_status trilat_reports_line(const trilat_reports* r, int index, char** out) {
    return guarded([&] {
        require_arg(r && out, "arguments must not be NULL");
        require_arg(0 <= index && index < static_cast<int>(r->impl.size()), "index out of range");
        *out = dup_string(report_line(r->impl[static_cast<size_t>(index)]));
    });
}

trilat_status trilat_reports_to_json(const trilat_reports* r, char** out) {
    return guarded([&] {
        require_arg(r && out, "arguments must not be NULL");
        *out = dup_string(trilat::io::reports_json(r->impl).dump());
    });
}

void trilat_reports_free(trilat_reports* r) { delete r; }

} // extern "C"
