/*
 * fgcalc C API: exact formal-group-law calculus behind a flat, ABI-stable
 * surface. All computations are exact rational arithmetic.
 *
 * Conventions:
 *   - Every compute function fills an opaque fgc_value handle on FGC_OK and
 *     leaves *out untouched otherwise; free it with fgc_value_free.
 *   - fgc_value_ok reports whether a value that embodies a verification
 *     (a verify suite, the hurewicz cp oracle comparison) passed.
 *   - Rendered strings are heap-allocated; free with fgc_string_free.
 *   - On FGC_INVALID_ARGUMENT / FGC_INTERNAL_ERROR, fgc_last_error returns
 *     a one-line diagnostic (thread-local storage).
 */
#ifndef FGCALC_H
#define FGCALC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fgc_status {
    FGC_OK = 0,
    FGC_INVALID_ARGUMENT = 1,
    FGC_INTERNAL_ERROR = 2
} fgc_status;

typedef enum fgc_format { FGC_TEXT = 0, FGC_JSON = 1 } fgc_format;

typedef struct fgc_value fgc_value;

const char* fgc_version(void);
const char* fgc_last_error(void);

/* Series of the formal group law; hurewicz_image != 0 replaces every CP
 * generator by its characteristic-number class in the h generators. */
fgc_status fgc_logmu(int order, int hurewicz_image, fgc_value** out);
fgc_status fgc_expmu(int order, int hurewicz_image, fgc_value** out);
fgc_status fgc_bmu(int order, int hurewicz_image, fgc_value** out);
/* Bivariate formal group sum z0 +MU z1, truncated by total degree. */
fgc_status fgc_fgl_sum(int order, int hurewicz_image, fgc_value** out);

/* Partition expansion of the Hurewicz image of the n-th grouplike class. */
fgc_status fgc_hurewicz_bmu(int n, fgc_value** out);
/* Characteristic-number class of CP_n together with the independent Chern
 * oracle and an agreement flag (fgc_value_ok). */
fgc_status fgc_hurewicz_cp(int n, fgc_value** out);

/* Twisted-class expansion at rational t > 0 ("p/q" or "p"). */
fgc_status fgc_twist(int n, const char* t, fgc_value** out);

/* Moments m_0..m_max_n from cumulants given as comma-separated rationals;
 * cumulants beyond the list are treated as zero. */
fgc_status fgc_cumulants(const char* kappa_csv, int max_n, fgc_value** out);

/* Symmetric-function basis conversion; from/to in {"h","p","e"}: the
 * degree-n generator of `from` written in the `to` basis. */
fgc_status fgc_symfunc_convert(const char* from, const char* to, int degree, fgc_value** out);

/* Verification suites: "hopf", "additive", "integrality", "divisibility",
 * "symfunc", "roundtrip". param <= 0 selects the suite default (8, 8, 10,
 * 12, 12, 12 respectively). The returned value renders the report;
 * fgc_value_ok tells whether the suite passed. */
fgc_status fgc_verify(const char* suite, int param, fgc_value** out);

fgc_status fgc_value_render(const fgc_value* v, fgc_format format, char** out);
int fgc_value_ok(const fgc_value* v);
void fgc_value_free(fgc_value* v);
void fgc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FGCALC_H */
