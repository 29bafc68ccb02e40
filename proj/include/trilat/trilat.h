#ifndef TRILAT_H
#define TRILAT_H

/* C interface to the walk-enumeration library. All functions return a status
 * code; results come back through out-parameters. Returned strings are
 * malloc'd and must be released with trilat_string_free. Handles are opaque
 * and must be released with the matching *_free function. On failure the
 * out-parameters are untouched and trilat_last_error() (thread-local)
 * describes the problem. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum trilat_status {
    TRILAT_OK = 0,
    TRILAT_INVALID_ARGUMENT = 1,
    TRILAT_DOMAIN_MISMATCH = 2,
    TRILAT_RESOURCE_LIMIT = 3,
    TRILAT_PRECONDITION = 4,
    TRILAT_NO_MATCH = 5,
    TRILAT_INTERNAL = 6
} trilat_status;

typedef struct trilat_count_table trilat_count_table;
typedef struct trilat_series trilat_series;
typedef struct trilat_rational_fn trilat_rational_fn;
typedef struct trilat_reports trilat_reports;

const char* trilat_version(void);
const char* trilat_last_error(void);
void trilat_string_free(char* s);

/* --- exact walk counting --------------------------------------------- */

/* start holds start_len = d+1 coordinates summing to L. */
trilat_status trilat_count_walks(int d, int L, const int* start, int start_len, int n_max,
                                 trilat_count_table** out);
trilat_status trilat_count_table_n_max(const trilat_count_table* t, int* out);
/* decimal strings; total is over all endpoints and tag splits */
trilat_status trilat_count_table_total(const trilat_count_table* t, int n, char** out);
trilat_status trilat_count_table_total_by_tag(const trilat_count_table* t, int n, int p,
                                              char** out);
trilat_status trilat_count_table_to_json(const trilat_count_table* t, char** out);
trilat_status trilat_count_table_to_csv(const trilat_count_table* t, char** out);
void trilat_count_table_free(trilat_count_table* t);

/* --- truncated series ------------------------------------------------- */

/* Weight arguments: pass NULL for both alpha and beta to keep the weights
 * symbolic (coefficients become polynomials in the two weight marks), or
 * pass both as exact rational strings like "2" or "1/3". Mixing is an error.
 * The line-model constructors take no weights. */

trilat_status trilat_series_line_total(int u, int v, int order, trilat_series** out);
/* which is "10" for the series of walks ending at (L,0), "01" for (0,L) */
trilat_status trilat_series_line_boundary(int u, int v, int order, const char* which,
                                          trilat_series** out);
trilat_status trilat_series_triangle_total(int u, int v, int w, int order, const char* alpha,
                                           const char* beta, trilat_series** out);
trilat_status trilat_series_corner(int L, int order, const char* alpha, const char* beta,
                                   trilat_series** out);
trilat_status trilat_series_centre_side(int u, int order, const char* alpha, const char* beta,
                                        trilat_series** out);
trilat_status trilat_series_cf_convergent(int L, int order, const char* alpha, const char* beta,
                                          trilat_series** out);
/* model is "line" or "triangle"; the line root takes no weights */
trilat_status trilat_series_kernel_root(const char* model, int order, const char* alpha,
                                        const char* beta, trilat_series** out);

trilat_status trilat_series_order(const trilat_series* s, int* out);
/* "int", "rat" or "bivar"; static storage, do not free */
trilat_status trilat_series_ring(const trilat_series* s, const char** out);
trilat_status trilat_series_coeff(const trilat_series* s, int n, char** out);
trilat_status trilat_series_to_json(const trilat_series* s, char** out);
trilat_status trilat_series_to_csv(const trilat_series* s, char** out);
void trilat_series_free(trilat_series* s);

/* --- exact rational reconstruction ------------------------------------ */

/* Finds the smallest rational function reproducing every coefficient of s
 * within the degree bounds; TRILAT_NO_MATCH when none exists. The series
 * must have numeric coefficients. */
trilat_status trilat_pade_reconstruct(const trilat_series* s, int deg_num, int deg_den,
                                      trilat_rational_fn** out);
trilat_status trilat_rational_fn_degrees(const trilat_rational_fn* f, int* deg_num, int* deg_den);
trilat_status trilat_rational_fn_to_string(const trilat_rational_fn* f, char** out);
trilat_status trilat_rational_fn_to_json(const trilat_rational_fn* f, char** out);
void trilat_rational_fn_free(trilat_rational_fn* f);

/* --- verification suites ----------------------------------------------*/

/* Grid bounds; -1 selects each suite's default. */
typedef struct trilat_verify_options {
    int Lmax;
    int nmax;
    int Hmax;
    int order;
    int uvmax;
    int umax;
    int summax;
    long long guard_limit;
} trilat_verify_options;

/* suite is one of: theorem4, prop1, cor2, cor5, prop5, prop6, cf, kernel,
 * funceq, all. options may be NULL (all defaults). */
trilat_status trilat_verify(const char* suite, const trilat_verify_options* options,
                            trilat_reports** out);
trilat_status trilat_reports_count(const trilat_reports* r, int* out);
trilat_status trilat_reports_passed(const trilat_reports* r, int index, int* out);
trilat_status trilat_reports_all_pass(const trilat_reports* r, int* out);
/* one human-readable "PASS/FAIL check-name (params...)" line */
trilat_status trilat_reports_line(const trilat_reports* r, int index, char** out);
trilat_status trilat_reports_to_json(const trilat_reports* r, char** out);
void trilat_reports_free(trilat_reports* r);

#ifdef __cplusplus
}
#endif

#endif /* TRILAT_H */
