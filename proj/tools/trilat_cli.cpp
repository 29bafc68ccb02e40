#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trilat/trilat.h"

namespace {

// Exit codes: 0 success, 1 failed check or no rational match, 2 invalid
// arguments, 3 enumeration guard trip.
int exit_for(trilat_status st) {
    switch (st) {
        case TRILAT_OK: return 0;
        case TRILAT_NO_MATCH: return 1;
        case TRILAT_RESOURCE_LIMIT: return 3;
        default: return 2;
    }
}

int report_error(trilat_status st) {
    std::cerr << "error: " << trilat_last_error() << "\n";
    return exit_for(st);
}

int invalid(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

// RAII for strings handed over by the library.
struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { trilat_string_free(s); }
    std::string str() const { return s ? std::string(s) : std::string(); }
};

int write_output(const std::string& path, const std::string& content) {
    std::string body = content;
    if (body.empty() || body.back() != '\n') body += '\n';
    if (path.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return invalid("cannot open output file: " + path);
    out << body;
    return out.good() ? 0 : invalid("cannot write output file: " + path);
}

std::optional<std::vector<int>> parse_coords(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(0);
            try {
                out.back() = std::stoi(cur);
            } catch (...) {
                return std::nullopt;
            }
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (cur.empty()) return std::nullopt;
    try {
        out.push_back(std::stoi(cur));
    } catch (...) {
        return std::nullopt;
    }
    return out;
}

struct SeriesSpec {
    std::string source;
    int u = 0, v = 0, w = 0, L = 0;
    std::string which = "10";
    std::string model;
    int order = 0;
    std::string alpha, beta;
    bool has_alpha = false, has_beta = false;
};

// Sources taking the optional weight pair; the line model has none to weight.
bool source_takes_weights(const SeriesSpec& spec) {
    if (spec.source == "line-total" || spec.source == "line-boundary") return false;
    if (spec.source == "kernel-root") return spec.model == "triangle";
    return true;
}

int make_series(const SeriesSpec& spec, trilat_series** out) {
    if (spec.has_alpha != spec.has_beta)
        return invalid("give both --alpha and --beta or neither");
    if (spec.has_alpha && !source_takes_weights(spec))
        return invalid("source " + spec.source + " takes no weights");
    const char* a = spec.has_alpha ? spec.alpha.c_str() : nullptr;
    const char* b = spec.has_beta ? spec.beta.c_str() : nullptr;

    trilat_status st = TRILAT_INVALID_ARGUMENT;
    if (spec.source == "line-total") {
        st = trilat_series_line_total(spec.u, spec.v, spec.order, out);
    } else if (spec.source == "line-boundary") {
        st = trilat_series_line_boundary(spec.u, spec.v, spec.order, spec.which.c_str(), out);
    } else if (spec.source == "triangle-total") {
        st = trilat_series_triangle_total(spec.u, spec.v, spec.w, spec.order, a, b, out);
    } else if (spec.source == "corner") {
        st = trilat_series_corner(spec.L, spec.order, a, b, out);
    } else if (spec.source == "centre-side") {
        st = trilat_series_centre_side(spec.u, spec.order, a, b, out);
    } else if (spec.source == "cf-convergent") {
        st = trilat_series_cf_convergent(spec.L, spec.order, a, b, out);
    } else if (spec.source == "kernel-root") {
        st = trilat_series_kernel_root(spec.model.c_str(), spec.order, a, b, out);
    } else {
        return invalid("unknown series source: " + spec.source);
    }
    if (st != TRILAT_OK) return report_error(st);
    return 0;
}

// Registers the seven series sources as subcommands of `parent`, wiring their
// coordinate flags into `spec`. Shared flags (--order, weights, output) live
// on `parent` and are reached via fallthrough.
void add_source_subcommands(CLI::App* parent, SeriesSpec& spec) {
    auto on_parse = [&spec](CLI::App* cmd) {
        cmd->parse_complete_callback([&spec, cmd] { spec.source = cmd->get_name(); });
        cmd->fallthrough();
    };
    auto* line_total = parent->add_subcommand("line-total", "All-endpoint series, line domain");
    line_total->add_option("--u", spec.u, "First start coordinate")->required();
    line_total->add_option("--v", spec.v, "Second start coordinate")->required();
    on_parse(line_total);

    auto* line_boundary =
        parent->add_subcommand("line-boundary", "Endpoint-pinned series, line domain");
    line_boundary->add_option("--u", spec.u, "First start coordinate")->required();
    line_boundary->add_option("--v", spec.v, "Second start coordinate")->required();
    line_boundary
        ->add_option("--which", spec.which, "10 for endpoint (L,0), 01 for endpoint (0,L)")
        ->check(CLI::IsMember({"10", "01"}))
        ->required();
    on_parse(line_boundary);

    auto* triangle_total =
        parent->add_subcommand("triangle-total", "All-endpoint series, triangle domain");
    triangle_total->add_option("--u", spec.u, "First start coordinate")->required();
    triangle_total->add_option("--v", spec.v, "Second start coordinate")->required();
    triangle_total->add_option("--w", spec.w, "Third start coordinate")->required();
    on_parse(triangle_total);

    auto* corner = parent->add_subcommand("corner", "All-endpoint series from a triangle corner");
    corner->add_option("--L", spec.L, "Side length")->required();
    on_parse(corner);

    auto* centre_side =
        parent->add_subcommand("centre-side", "Centre start (u,u,u), endpoints on one side");
    centre_side->add_option("--u", spec.u, "Centre coordinate")->required();
    on_parse(centre_side);

    auto* cf = parent->add_subcommand("cf-convergent", "Finite continued-fraction convergent");
    cf->add_option("--L", spec.L, "Side length")->required();
    on_parse(cf);

    auto* kernel_root = parent->add_subcommand("kernel-root", "Power-series kernel root");
    kernel_root->add_option("--model", spec.model, "line or triangle")
        ->check(CLI::IsMember({"line", "triangle"}))
        ->required();
    on_parse(kernel_root);

    parent->require_subcommand(1);
}

int emit_series_plain(const trilat_series* s, const std::string& output_path) {
    int order = 0;
    trilat_status st = trilat_series_order(s, &order);
    if (st != TRILAT_OK) return report_error(st);
    const char* ring = nullptr;
    st = trilat_series_ring(s, &ring);
    if (st != TRILAT_OK) return report_error(st);

    const bool scalar = std::string(ring) != "bivar";
    std::string body;
    for (int n = 0; n <= order; ++n) {
        OwnedString c;
        st = trilat_series_coeff(s, n, &c.s);
        if (st != TRILAT_OK) return report_error(st);
        if (scalar) {
            if (n) body += ",";
            body += c.str();
        } else {
            body += std::to_string(n) + ": " + c.str() + "\n";
        }
    }
    return write_output(output_path, body);
}

int emit_series(const trilat_series* s, const std::string& format,
                const std::string& output_path) {
    if (format == "plain") return emit_series_plain(s, output_path);
    OwnedString text;
    trilat_status st =
        format == "json" ? trilat_series_to_json(s, &text.s) : trilat_series_to_csv(s, &text.s);
    if (st != TRILAT_OK) return report_error(st);
    return write_output(output_path, text.str());
}

long long guard_from_env(bool& bad) {
    const char* env = std::getenv("TRILAT_GUARD_LIMIT");
    if (!env || !*env) return -1;
    char* end = nullptr;
    long long value = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || value < 0) {
        bad = true;
        return -1;
    }
    return value;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact walk counting, series expansion and identity verification "
                 "on bounded simplex domains"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(trilat_version()));

    // ---- count ----
    auto* count_cmd = app.add_subcommand("count", "Count walks by dynamic programming");
    int count_d = 0, count_L = 0, count_n = 0;
    std::string count_start, count_format = "json", count_output;
    count_cmd->add_option("--d", count_d, "Domain dimension parameter")->required();
    count_cmd->add_option("--L", count_L, "Coordinate sum")->required();
    count_cmd->add_option("--start", count_start, "Start coordinates, comma separated")->required();
    count_cmd->add_option("--n", count_n, "Maximum walk length")->required();
    count_cmd->add_option("--format", count_format, "json, csv or plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    count_cmd->add_option("--output", count_output, "Write to file instead of stdout");

    // ---- series ----
    auto* series_cmd = app.add_subcommand("series", "Expand a closed-form series");
    SeriesSpec series_spec;
    std::string series_format = "json", series_output;
    auto* series_order =
        series_cmd->add_option("--order", series_spec.order, "Truncation order");
    auto* series_alpha = series_cmd->add_option("--alpha", series_spec.alpha, "Weight of one "
                                                "step family, exact rational");
    auto* series_beta = series_cmd->add_option("--beta", series_spec.beta, "Weight of the other "
                                               "step family, exact rational");
    series_cmd->add_option("--format", series_format, "json, csv or plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    series_cmd->add_option("--output", series_output, "Write to file instead of stdout");
    add_source_subcommands(series_cmd, series_spec);

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::string verify_suite, verify_format = "plain", verify_output;
    trilat_verify_options vopts{-1, -1, -1, -1, -1, -1, -1, -1};
    verify_cmd
        ->add_option("suite", verify_suite,
                     "theorem4, prop1, cor2, cor5, prop5, prop6, cf, kernel, funceq or all")
        ->required();
    verify_cmd->add_option("--Lmax", vopts.Lmax, "Largest side length");
    verify_cmd->add_option("--nmax", vopts.nmax, "Largest walk length");
    verify_cmd->add_option("--Hmax", vopts.Hmax, "Largest strip height");
    verify_cmd->add_option("--order", vopts.order, "Series truncation order");
    verify_cmd->add_option("--uvmax", vopts.uvmax, "Largest u+v for line grids");
    verify_cmd->add_option("--umax", vopts.umax, "Largest centre coordinate");
    verify_cmd->add_option("--summax", vopts.summax, "Largest u+v+w for triangle grids");
    auto* verify_guard =
        verify_cmd->add_option("--guard", vopts.guard_limit, "Enumeration guard limit");
    verify_cmd->add_option("--format", verify_format, "json or plain")
        ->check(CLI::IsMember({"json", "plain"}));
    verify_cmd->add_option("--output", verify_output, "Write to file instead of stdout");

    // ---- reconstruct ----
    auto* rec_cmd =
        app.add_subcommand("reconstruct", "Recover an exact rational function from a series");
    SeriesSpec rec_spec;
    std::string rec_format = "json", rec_output;
    int rec_deg_num = 0, rec_deg_den = 0;
    auto* rec_order = rec_cmd->add_option("--order", rec_spec.order, "Truncation order");
    rec_cmd->add_option("--deg-num", rec_deg_num, "Numerator degree bound")->required();
    rec_cmd->add_option("--deg-den", rec_deg_den, "Denominator degree bound")->required();
    auto* rec_alpha = rec_cmd->add_option("--alpha", rec_spec.alpha, "Weight of one step "
                                          "family, exact rational");
    auto* rec_beta = rec_cmd->add_option("--beta", rec_spec.beta, "Weight of the other step "
                                         "family, exact rational");
    rec_cmd->add_option("--format", rec_format, "json or plain")
        ->check(CLI::IsMember({"json", "plain"}));
    rec_cmd->add_option("--output", rec_output, "Write to file instead of stdout");
    add_source_subcommands(rec_cmd, rec_spec);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (count_cmd->parsed()) {
        auto coords = parse_coords(count_start);
        if (!coords) return invalid("cannot parse --start: " + count_start);
        trilat_count_table* table = nullptr;
        trilat_status st = trilat_count_walks(count_d, count_L, coords->data(),
                                              static_cast<int>(coords->size()), count_n, &table);
        if (st != TRILAT_OK) return report_error(st);
        int rc = 0;
        if (count_format == "plain") {
            std::string body;
            for (int n = 0; n <= count_n; ++n) {
                OwnedString total;
                st = trilat_count_table_total(table, n, &total.s);
                if (st != TRILAT_OK) {
                    rc = report_error(st);
                    break;
                }
                if (n) body += ",";
                body += total.str();
            }
            if (rc == 0) rc = write_output(count_output, body);
        } else {
            OwnedString text;
            st = count_format == "json" ? trilat_count_table_to_json(table, &text.s)
                                        : trilat_count_table_to_csv(table, &text.s);
            rc = st == TRILAT_OK ? write_output(count_output, text.str()) : report_error(st);
        }
        trilat_count_table_free(table);
        return rc;
    }

    if (series_cmd->parsed()) {
        if (series_order->count() == 0) return invalid("--order is required");
        series_spec.has_alpha = series_alpha->count() > 0;
        series_spec.has_beta = series_beta->count() > 0;
        trilat_series* s = nullptr;
        int rc = make_series(series_spec, &s);
        if (rc != 0) return rc;
        rc = emit_series(s, series_format, series_output);
        trilat_series_free(s);
        return rc;
    }

    if (verify_cmd->parsed()) {
        if (verify_guard->count() == 0) {
            bool bad = false;
            long long env_guard = guard_from_env(bad);
            if (bad) return invalid("TRILAT_GUARD_LIMIT must be a non-negative integer");
            vopts.guard_limit = env_guard;
        }
        trilat_reports* reports = nullptr;
        trilat_status st = trilat_verify(verify_suite.c_str(), &vopts, &reports);
        if (st != TRILAT_OK) return report_error(st);
        int rc = 0;
        if (verify_format == "json") {
            OwnedString text;
            st = trilat_reports_to_json(reports, &text.s);
            rc = st == TRILAT_OK ? write_output(verify_output, text.str()) : report_error(st);
        } else {
            int count = 0;
            st = trilat_reports_count(reports, &count);
            if (st != TRILAT_OK) {
                rc = report_error(st);
            } else {
                std::string body;
                for (int i = 0; i < count && rc == 0; ++i) {
                    OwnedString line;
                    st = trilat_reports_line(reports, i, &line.s);
                    if (st != TRILAT_OK) rc = report_error(st);
                    else body += line.str() + "\n";
                }
                if (rc == 0) rc = write_output(verify_output, body);
            }
        }
        if (rc == 0) {
            int ok = 0;
            st = trilat_reports_all_pass(reports, &ok);
            if (st != TRILAT_OK) rc = report_error(st);
            else if (!ok) rc = 1;
        }
        trilat_reports_free(reports);
        return rc;
    }

    if (rec_cmd->parsed()) {
        if (rec_order->count() == 0) return invalid("--order is required");
        rec_spec.has_alpha = rec_alpha->count() > 0;
        rec_spec.has_beta = rec_beta->count() > 0;
        trilat_series* s = nullptr;
        int rc = make_series(rec_spec, &s);
        if (rc != 0) return rc;
        trilat_rational_fn* fn = nullptr;
        trilat_status st = trilat_pade_reconstruct(s, rec_deg_num, rec_deg_den, &fn);
        trilat_series_free(s);
        if (st != TRILAT_OK) return report_error(st);
        if (rec_format == "json") {
            OwnedString text;
            st = trilat_rational_fn_to_json(fn, &text.s);
            rc = st == TRILAT_OK ? write_output(rec_output, text.str()) : report_error(st);
        } else {
            OwnedString text;
            st = trilat_rational_fn_to_string(fn, &text.s);
            int dn = 0, dd = 0;
            if (st == TRILAT_OK) st = trilat_rational_fn_degrees(fn, &dn, &dd);
            rc = st == TRILAT_OK
                     ? write_output(rec_output, text.str() + "\ndegrees: (" + std::to_string(dn) +
                                                    ", " + std::to_string(dd) + ")")
                     : report_error(st);
        }
        trilat_rational_fn_free(fn);
        return rc;
    }

    return invalid("no command given");
}
