#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "trilat/trilat.h"

namespace {

// wraps a char** out-parameter and frees on scope exit
struct Str {
    char* p = nullptr;
    ~Str() { trilat_string_free(p); }
    std::string get() const { return p ? std::string(p) : std::string(); }
};

std::string last_error() {
    const char* e = trilat_last_error();
    return e ? std::string(e) : std::string();
}

} // namespace

TEST_CASE("version string is present") {
    const char* v = trilat_version();
    REQUIRE(v != nullptr);
    CHECK(std::strlen(v) > 0);
}

TEST_CASE("walk counting through the C boundary") {
    trilat_count_table* t = nullptr;
    int start[] = {2, 0, 0};
    REQUIRE(trilat_count_walks(2, 2, start, 3, 6, &t) == TRILAT_OK);
    REQUIRE(t != nullptr);

    int n_max = -1;
    CHECK(trilat_count_table_n_max(t, &n_max) == TRILAT_OK);
    CHECK(n_max == 6);

    const char* totals[] = {"1", "2", "8", "24", "80", "256", "832"};
    for (int n = 0; n <= 6; ++n) {
        Str s;
        REQUIRE(trilat_count_table_total(t, n, &s.p) == TRILAT_OK);
        CHECK(s.get() == totals[n]);
    }

    Str by_tag;
    REQUIRE(trilat_count_table_total_by_tag(t, 3, 3, &by_tag.p) == TRILAT_OK);
    CHECK(by_tag.get() == "3"); // binomial(3,3) * single-tag count 3

    Str json;
    REQUIRE(trilat_count_table_to_json(t, &json.p) == TRILAT_OK);
    CHECK(json.get().find("\"d\":2") != std::string::npos);
    CHECK(json.get().find(R"({"n":0,"end":[2,0,0],"p":0,"count":"1"})") != std::string::npos);
    Str csv;
    REQUIRE(trilat_count_table_to_csv(t, &csv.p) == TRILAT_OK);
    CHECK(csv.get().rfind("n,p,q,count\n", 0) == 0);

    // out-of-range queries fail without touching the output
    Str bad;
    CHECK(trilat_count_table_total(t, 7, &bad.p) == TRILAT_INVALID_ARGUMENT);
    CHECK(bad.p == nullptr);

    trilat_count_table_free(t);
}

TEST_CASE("count argument validation") {
    trilat_count_table* t = nullptr;
    int start[] = {1, 1, 1};
    CHECK(trilat_count_walks(2, 2, start, 3, 3, &t) == TRILAT_DOMAIN_MISMATCH);
    CHECK(t == nullptr);
    CHECK(!last_error().empty());

    int line_start[] = {1, 0};
    CHECK(trilat_count_walks(1, 1, line_start, 2, -1, &t) == TRILAT_INVALID_ARGUMENT);
    CHECK(trilat_count_walks(0, 1, line_start, 2, 3, &t) == TRILAT_INVALID_ARGUMENT);
    CHECK(trilat_count_walks(2, 2, nullptr, 0, 3, &t) == TRILAT_INVALID_ARGUMENT);
    CHECK(trilat_count_walks(2, 2, start, 3, 3, nullptr) == TRILAT_INVALID_ARGUMENT);
}

TEST_CASE("series constructors and accessors") {
    trilat_series* s = nullptr;
    REQUIRE(trilat_series_line_total(1, 1, 4, &s) == TRILAT_OK);
    int order = -1;
    CHECK(trilat_series_order(s, &order) == TRILAT_OK);
    CHECK(order == 4);
    const char* ring = nullptr;
    CHECK(trilat_series_ring(s, &ring) == TRILAT_OK);
    CHECK(std::string(ring) == "int");
    const char* coeffs[] = {"1", "2", "2", "4", "4"};
    for (int n = 0; n <= 4; ++n) {
        Str c;
        REQUIRE(trilat_series_coeff(s, n, &c.p) == TRILAT_OK);
        CHECK(c.get() == coeffs[n]);
    }
    Str json;
    REQUIRE(trilat_series_to_json(s, &json.p) == TRILAT_OK);
    CHECK(json.get() == R"({"order":4,"ring":"int","coeffs":["1","2","2","4","4"]})");
    trilat_series_free(s);

    // boundary series live in the rational ring
    trilat_series* b = nullptr;
    REQUIRE(trilat_series_line_boundary(1, 1, 4, "10", &b) == TRILAT_OK);
    CHECK(trilat_series_ring(b, &ring) == TRILAT_OK);
    CHECK(std::string(ring) == "rat");
    Str c1;
    REQUIRE(trilat_series_coeff(b, 1, &c1.p) == TRILAT_OK);
    CHECK(c1.get() == "1");
    trilat_series_free(b);

    trilat_series* bad = nullptr;
    CHECK(trilat_series_line_boundary(1, 1, 4, "11", &bad) == TRILAT_INVALID_ARGUMENT);
    CHECK(trilat_series_line_boundary(1, 1, 4, nullptr, &bad) == TRILAT_INVALID_ARGUMENT);
    CHECK(bad == nullptr);
}

TEST_CASE("weight policy on the series constructors") {
    // both NULL: symbolic
    trilat_series* sym = nullptr;
    REQUIRE(trilat_series_corner(1, 3, nullptr, nullptr, &sym) == TRILAT_OK);
    const char* ring = nullptr;
    CHECK(trilat_series_ring(sym, &ring) == TRILAT_OK);
    CHECK(std::string(ring) == "bivar");
    Str c;
    REQUIRE(trilat_series_coeff(sym, 1, &c.p) == TRILAT_OK);
    CHECK(c.get() == "1*b^1 + 1*a^1");
    trilat_series_free(sym);

    // both rational strings: numeric
    trilat_series* num = nullptr;
    REQUIRE(trilat_series_corner(1, 4, "1", "1", &num) == TRILAT_OK);
    CHECK(trilat_series_ring(num, &ring) == TRILAT_OK);
    CHECK(std::string(ring) == "rat");
    const char* want[] = {"1", "2", "4", "8", "16"};
    for (int n = 0; n <= 4; ++n) {
        Str cc;
        REQUIRE(trilat_series_coeff(num, n, &cc.p) == TRILAT_OK);
        CHECK(cc.get() == want[n]);
    }
    trilat_series_free(num);

    // single-sublattice and fractional weights
    trilat_series* half = nullptr;
    REQUIRE(trilat_series_centre_side(1, 3, "1", "0", &half) == TRILAT_OK);
    Str h1, h3;
    REQUIRE(trilat_series_coeff(half, 1, &h1.p) == TRILAT_OK);
    CHECK(h1.get() == "1");
    REQUIRE(trilat_series_coeff(half, 3, &h3.p) == TRILAT_OK);
    CHECK(h3.get() == "4");
    trilat_series_free(half);

    // mixing NULL and a value is rejected
    trilat_series* bad = nullptr;
    CHECK(trilat_series_corner(1, 3, "1", nullptr, &bad) == TRILAT_INVALID_ARGUMENT);
    CHECK(trilat_series_corner(1, 3, nullptr, "1", &bad) == TRILAT_INVALID_ARGUMENT);
    CHECK(trilat_series_triangle_total(1, 0, 0, 3, "0.5", "1", &bad) == TRILAT_INVALID_ARGUMENT);
    CHECK(bad == nullptr);
    CHECK(!last_error().empty());
}

TEST_CASE("kernel roots through the C boundary") {
    trilat_series* line = nullptr;
    REQUIRE(trilat_series_kernel_root("line", 7, nullptr, nullptr, &line) == TRILAT_OK);
    const char* ring = nullptr;
    CHECK(trilat_series_ring(line, &ring) == TRILAT_OK);
    CHECK(std::string(ring) == "int");
    const char* dyck[] = {"0", "1", "0", "1", "0", "2", "0", "5"};
    for (int n = 0; n <= 7; ++n) {
        Str c;
        REQUIRE(trilat_series_coeff(line, n, &c.p) == TRILAT_OK);
        CHECK(c.get() == dyck[n]);
    }
    trilat_series_free(line);

    // the line root has no weights to set
    trilat_series* bad = nullptr;
    CHECK(trilat_series_kernel_root("line", 5, "1", "1", &bad) == TRILAT_INVALID_ARGUMENT);
    CHECK(trilat_series_kernel_root("circle", 5, nullptr, nullptr, &bad) ==
          TRILAT_INVALID_ARGUMENT);

    trilat_series* tri = nullptr;
    REQUIRE(trilat_series_kernel_root("triangle", 5, "1", "1", &tri) == TRILAT_OK);
    const char* motzkin[] = {"0", "2", "4", "16", "64", "288"};
    for (int n = 0; n <= 5; ++n) {
        Str c;
        REQUIRE(trilat_series_coeff(tri, n, &c.p) == TRILAT_OK);
        CHECK(c.get() == motzkin[n]);
    }
    trilat_series_free(tri);
}

TEST_CASE("rational reconstruction through the C boundary") {
    trilat_series* s = nullptr;
    REQUIRE(trilat_series_corner(0, 6, "1", "1", &s) == TRILAT_OK);
    trilat_rational_fn* f = nullptr;
    REQUIRE(trilat_pade_reconstruct(s, 2, 2, &f) == TRILAT_OK);
    int dn = -1, dd = -1;
    CHECK(trilat_rational_fn_degrees(f, &dn, &dd) == TRILAT_OK);
    CHECK(dn == 0);
    CHECK(dd == 0);
    Str txt;
    REQUIRE(trilat_rational_fn_to_string(f, &txt.p) == TRILAT_OK);
    CHECK(txt.get() == "(1) / (1)");
    Str json;
    REQUIRE(trilat_rational_fn_to_json(f, &json.p) == TRILAT_OK);
    CHECK(json.get() ==
          R"({"numerator":["1"],"denominator":["1"],"deg_num":0,"deg_den":0})");
    trilat_rational_fn_free(f);
    trilat_series_free(s);

    // integer-ring series convert to rationals internally
    trilat_series* geo = nullptr;
    REQUIRE(trilat_series_line_total(0, 0, 6, &geo) == TRILAT_OK); // constant series 1
    trilat_rational_fn* g = nullptr;
    REQUIRE(trilat_pade_reconstruct(geo, 1, 1, &g) == TRILAT_OK);
    CHECK(trilat_rational_fn_degrees(g, &dn, &dd) == TRILAT_OK);
    CHECK(dn == 0);
    CHECK(dd == 0); // the length-0 line has the constant series 1
    trilat_rational_fn_free(g);
    trilat_series_free(geo);

    // symbolic series cannot be reconstructed
    trilat_series* sym = nullptr;
    REQUIRE(trilat_series_corner(1, 6, nullptr, nullptr, &sym) == TRILAT_OK);
    trilat_rational_fn* none = nullptr;
    CHECK(trilat_pade_reconstruct(sym, 2, 2, &none) == TRILAT_INVALID_ARGUMENT);
    CHECK(none == nullptr);
    trilat_series_free(sym);

    // a genuinely non-rational series reports no match
    trilat_series* root = nullptr;
    REQUIRE(trilat_series_kernel_root("line", 12, nullptr, nullptr, &root) == TRILAT_OK);
    CHECK(trilat_pade_reconstruct(root, 4, 4, &none) == TRILAT_NO_MATCH);
    CHECK(!last_error().empty());
    trilat_series_free(root);
}

TEST_CASE("verification suites through the C boundary") {
    trilat_verify_options o = {2, 6, 2, 8, 2, 1, 2, -1};
    trilat_reports* r = nullptr;
    REQUIRE(trilat_verify("kernel", &o, &r) == TRILAT_OK);
    int count = -1;
    CHECK(trilat_reports_count(r, &count) == TRILAT_OK);
    CHECK(count > 0);
    int ok = 0;
    CHECK(trilat_reports_all_pass(r, &ok) == TRILAT_OK);
    CHECK(ok == 1);
    for (int i = 0; i < count; ++i) {
        int passed = 0;
        CHECK(trilat_reports_passed(r, i, &passed) == TRILAT_OK);
        CHECK(passed == 1);
        Str line;
        REQUIRE(trilat_reports_line(r, i, &line.p) == TRILAT_OK);
        CHECK(line.get().rfind("PASS ", 0) == 0);
    }
    Str json;
    REQUIRE(trilat_reports_to_json(r, &json.p) == TRILAT_OK);
    CHECK(json.get().find("\"status\":\"pass\"") != std::string::npos);
    CHECK(json.get().find("\"first_discrepancy\":null") != std::string::npos);

    int passed = 0;
    CHECK(trilat_reports_passed(r, count, &passed) == TRILAT_INVALID_ARGUMENT);
    CHECK(trilat_reports_passed(r, -1, &passed) == TRILAT_INVALID_ARGUMENT);
    trilat_reports_free(r);

    // NULL options select the defaults; unknown suites are rejected
    trilat_reports* r2 = nullptr;
    CHECK(trilat_verify("bogus", nullptr, &r2) == TRILAT_INVALID_ARGUMENT);
    CHECK(r2 == nullptr);
    CHECK(last_error().find("unknown suite") != std::string::npos);
}

TEST_CASE("guard limit surfaces as a resource error") {
    trilat_verify_options o = {2, 6, -1, -1, -1, -1, -1, 1};
    trilat_reports* r = nullptr;
    CHECK(trilat_verify("prop6", &o, &r) == TRILAT_RESOURCE_LIMIT);
    CHECK(r == nullptr);
    CHECK(last_error().find("guard limit") != std::string::npos);
}

TEST_CASE("null handles are rejected") {
    int n = 0;
    CHECK(trilat_count_table_n_max(nullptr, &n) == TRILAT_INVALID_ARGUMENT);
    const char* ring = nullptr;
    CHECK(trilat_series_ring(nullptr, &ring) == TRILAT_INVALID_ARGUMENT);
    char* out = nullptr;
    CHECK(trilat_series_coeff(nullptr, 0, &out) == TRILAT_INVALID_ARGUMENT);
    CHECK(trilat_rational_fn_to_string(nullptr, &out) == TRILAT_INVALID_ARGUMENT);
    CHECK(trilat_reports_count(nullptr, &n) == TRILAT_INVALID_ARGUMENT);
    CHECK(trilat_verify(nullptr, nullptr, nullptr) == TRILAT_INVALID_ARGUMENT);
    // frees tolerate NULL
    trilat_count_table_free(nullptr);
    trilat_series_free(nullptr);
    trilat_rational_fn_free(nullptr);
    trilat_reports_free(nullptr);
    trilat_string_free(nullptr);
}
