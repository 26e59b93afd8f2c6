/* greenform -- exact bilinear forms on Grothendieck groups of triangulated
 * categories given as finite data.
 *
 * C interface over opaque handles. Every function returns a gf_status;
 * results come back through out-parameters. Returned strings are heap
 * allocated and must be released with gf_string_free. On failure the
 * out-parameters are left untouched and gf_last_error() describes the
 * problem (thread-local).
 */

#ifndef GREENFORM_H
#define GREENFORM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gf_status {
  GF_OK = 0,
  GF_ERR_PARSE = 1,           /* malformed textual input */
  GF_ERR_UNKNOWN_OBJECT = 2,  /* object reference does not resolve */
  GF_ERR_INFINITE_ORBIT = 3,  /* enumeration over an infinite orbit */
  GF_ERR_HYP42_REQUIRED = 4,  /* t-form on a presentation without the flag */
  GF_ERR_NOT_POLYNOMIAL = 5,  /* rational function is not Laurent */
  GF_ERR_DIVISION_BY_ZERO = 6,
  GF_ERR_MISSING_CROSS_FORM = 7,
  GF_ERR_INVALID_RIM = 8,     /* rim data violates its invariants */
  GF_ERR_WINDOW_TOO_SMALL = 9,/* hom support reaches the shift window */
  GF_ERR_INVALID_ARGUMENT = 10,
  GF_ERR_IO = 11,
  GF_ERR_INTERNAL = 12
} gf_status;

typedef struct gf_laurent gf_laurent;           /* element of Z[t,t^-1] */
typedef struct gf_ratfun gf_ratfun;             /* element of Q(t) */
typedef struct gf_presentation gf_presentation; /* category presentation */
typedef struct gf_report gf_report;             /* list of finding lines */
typedef struct gf_kernel gf_kernel;             /* kernel analysis result */

/* ------------------------------------------------------------------ */
/* diagnostics and memory                                             */

const char* gf_last_error(void);
void gf_string_free(char* s);
void gf_laurent_free(gf_laurent* p);
void gf_ratfun_free(gf_ratfun* f);
void gf_presentation_free(gf_presentation* p);
void gf_report_free(gf_report* r);
void gf_kernel_free(gf_kernel* k);

/* ------------------------------------------------------------------ */
/* Laurent polynomials                                                */

gf_status gf_laurent_parse(const char* text, gf_laurent** out);
gf_status gf_laurent_str(const gf_laurent* p, char** out);
gf_status gf_laurent_add(const gf_laurent* a, const gf_laurent* b,
                         gf_laurent** out);
gf_status gf_laurent_sub(const gf_laurent* a, const gf_laurent* b,
                         gf_laurent** out);
gf_status gf_laurent_mul(const gf_laurent* a, const gf_laurent* b,
                         gf_laurent** out);
gf_status gf_laurent_bar(const gf_laurent* p, gf_laurent** out);
gf_status gf_laurent_sigma(long r, gf_laurent** out);
/* decimal value of the evaluation at t = -1 */
gf_status gf_laurent_eval_minus_one(const gf_laurent* p, char** out);
/* "(c0, c1, ..., c(n-1))": coefficients summed over exponents mod n */
gf_status gf_laurent_cyclic_reduce(const gf_laurent* p, long n, char** out);
int gf_laurent_equal(const gf_laurent* a, const gf_laurent* b);

/* ------------------------------------------------------------------ */
/* rational functions                                                 */

gf_status gf_ratfun_make(const gf_laurent* num, const gf_laurent* den,
                         gf_ratfun** out);
gf_status gf_ratfun_str(const gf_ratfun* f, char** out);
gf_status gf_ratfun_add(const gf_ratfun* a, const gf_ratfun* b,
                        gf_ratfun** out);
gf_status gf_ratfun_sub(const gf_ratfun* a, const gf_ratfun* b,
                        gf_ratfun** out);
gf_status gf_ratfun_mul(const gf_ratfun* a, const gf_ratfun* b,
                        gf_ratfun** out);
gf_status gf_ratfun_div(const gf_ratfun* a, const gf_ratfun* b,
                        gf_ratfun** out);
gf_status gf_ratfun_bar(const gf_ratfun* f, gf_ratfun** out);
gf_status gf_ratfun_to_laurent(const gf_ratfun* f, gf_laurent** out);
int gf_ratfun_equal(const gf_ratfun* a, const gf_ratfun* b);

/* ------------------------------------------------------------------ */
/* reports                                                            */

int gf_report_ok(const gf_report* r);
int gf_report_count(const gf_report* r);
gf_status gf_report_line(const gf_report* r, int i, char** out);

/* ------------------------------------------------------------------ */
/* category presentations                                             */

gf_status gf_presentation_parse(const char* text, gf_presentation** out);
gf_status gf_presentation_parse_file(const char* path, gf_presentation** out);
gf_status gf_presentation_name(const gf_presentation* p, char** out);
/* canonical category file text */
gf_status gf_presentation_emit(const gf_presentation* p, char** out);
gf_status gf_presentation_validate(const gf_presentation* p, gf_report** out);
/* number of enumerated objects; fails on infinite orbits */
gf_status gf_presentation_object_count(const gf_presentation* p, int* out);
gf_status gf_presentation_object_name(const gf_presentation* p, int i,
                                      char** out);
/* decimal hom dimension between two object references ("V1V4[1]" syntax) */
gf_status gf_presentation_hom_dim(const gf_presentation* p, const char* a,
                                  const char* b, char** out);
gf_status gf_presentation_gram_entry(const gf_presentation* p, int i, int j,
                                     char** out);
gf_status gf_presentation_triangle_count(const gf_presentation* p, int* out);
/* per-orbit module structure plus the Q(t) dimension */
gf_status gf_presentation_orbit_structure(const gf_presentation* p,
                                          gf_report** lines,
                                          int* qt_dimension);

/* landmark computations */
gf_status gf_presentation_prop31(const gf_presentation* p, gf_report** out);
gf_status gf_presentation_kernel(const gf_presentation* p, gf_kernel** out);
gf_status gf_presentation_tform(const gf_presentation* p, const char* a,
                                const char* b, gf_ratfun** out);
/* dual element of a listed triangle plus the companion duality check */
gf_status gf_presentation_dual(const gf_presentation* p, int triangle_index,
                               char** element, gf_report** check);
gf_status gf_presentation_hermitian(const gf_presentation* p, gf_report** out);
/* decimal value of the t = -1 specialization of the form */
gf_status gf_presentation_euler(const gf_presentation* p, const char* a,
                                const char* b, char** out);

/* kernel analysis accessors */
int gf_kernel_closed_count(const gf_kernel* k);
gf_status gf_kernel_closed_element(const gf_kernel* k, int i, char** out);
int gf_kernel_left_count(const gf_kernel* k);
gf_status gf_kernel_left_vector(const gf_kernel* k, int i, char** out);
int gf_kernel_right_count(const gf_kernel* k);
gf_status gf_kernel_right_vector(const gf_kernel* k, int i, char** out);
/* 1 when closed-form, left and right lattices coincide */
int gf_kernel_lattices_equal(const gf_kernel* k);

/* ------------------------------------------------------------------ */
/* ZA-infinity component engine                                       */

/* closed form and recurrence for the same-component pairing at distances
 * m, n from the rim; self is the rim self pairing */
gf_status gf_za_same_form(const gf_laurent* self, long m, long n,
                          gf_laurent** out);
gf_status gf_za_same_recurrence(const gf_laurent* self, long m, long n,
                                gf_laurent** out);
/* cross-component pairing; cross is the pairing of the two rim objects */
gf_status gf_za_cross_form(const gf_laurent* self, const gf_laurent* cross,
                           long m, long n, gf_laurent** out);
gf_status gf_za_cross_recurrence(const gf_laurent* self,
                                 const gf_laurent* cross, long m, long n,
                                 gf_laurent** out);
/* AR triangles of the component down to the given depth, one per line in
 * category-file syntax */
gf_status gf_za_triangles(int depth, char** out);
/* decimal constant term of the self pairing at distance m */
gf_status gf_za_endo_constant(const gf_laurent* self, long m, char** out);
/* per-distance brick classification, one line per m */
gf_status gf_za_brick_scan(const gf_laurent* self, long max_m,
                           gf_report** out);

/* ------------------------------------------------------------------ */
/* first-principles generators                                        */

gf_status gf_oracle_uniserial(int n, gf_presentation** out);
/* shift_window <= 0 selects the default 2*depth + 4 */
gf_status gf_oracle_dual_numbers(int depth, long shift_window,
                                 gf_presentation** out);

#ifdef __cplusplus
}
#endif

#endif /* GREENFORM_H */
