/* mixmeas: first- and second-order mixed measures of planar convex bodies
 * under log-concave densities exp(-phi(||x||_L)), with rate-function sweeps
 * and definitional finite-difference oracles.
 *
 * C API over the C++ core. All objects are opaque handles created and freed
 * through these functions; every function returns an mm_status and writes its
 * results through out-parameters. On any status other than MM_OK a
 * human-readable detail is available from mm_last_error() (thread-local).
 */

#ifndef MIXMEAS_H
#define MIXMEAS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mm_status {
    MM_OK = 0,
    MM_ERR_INVALID_ARGUMENT = 1, /* malformed parameters */
    MM_ERR_VALIDATION = 2,       /* constructor invariant failed */
    MM_ERR_UNSUPPORTED = 3,      /* operation needs smoothness the body lacks */
    MM_ERR_AMBIGUOUS = 4,        /* gauge maximizer not unique */
    MM_ERR_NUMERICAL = 5,        /* quadrature/refinement failure */
    MM_ERR_PRECONDITION = 6,     /* operation precondition violated */
    MM_ERR_RANGE = 7,            /* outside the representable regime */
    MM_ERR_ASSERTION = 8,        /* verify/compare consistency failure */
    MM_ERR_BUFFER_TOO_SMALL = 9
} mm_status;

const char* mm_status_name(mm_status status);
/* Detail message of the most recent failure on this thread. */
const char* mm_last_error(void);

/* ---- opaque handles ---------------------------------------------------- */

typedef struct mm_body mm_body;
typedef struct mm_phi mm_phi;
typedef struct mm_measure mm_measure;

/* ---- plain result structs ---------------------------------------------- */

/* Signed log-domain scalar: value = sign * exp(log_abs); sign 0 means an
 * exact zero (log_abs = -inf). */
typedef struct mm_logvalue {
    int sign;
    double log_abs;
} mm_logvalue;

typedef struct mm_quad_info {
    long nodes;            /* quadrature nodes/evaluations used */
    double error_estimate; /* relative change between the last refinement levels */
    /* Second-order values only: set when B or C is merely piecewise smooth,
     * i.e. the planar representation was used beyond the literal C^2
     * hypotheses of the theorem it comes from. */
    int beyond_smooth_hypotheses;
} mm_quad_info;

typedef struct mm_boundary_point {
    double x[2];
    double theta;
    double h;
    double h_prime;
    double curvature_f; /* f = h'' + h */
} mm_boundary_point;

typedef struct mm_validation_report {
    double min_support;
    double min_curvature_f; /* NaN for piecewise bodies */
    int c2plus;
} mm_validation_report;

typedef struct mm_sweep_entry {
    double t;
    int sign;
    double log_abs;
    double ratio;  /* ln|value| / phi(r t); NaN when defined == 0 */
    double phi_rt;
    long nodes;
    int defined;
} mm_sweep_entry;

typedef enum mm_comparison_verdict {
    MM_COMPARISON_HOLDS = 0,
    MM_COMPARISON_VIOLATED = 1,
    MM_COMPARISON_INCONCLUSIVE = 2
} mm_comparison_verdict;

typedef struct mm_comparison_report {
    double R;
    double inradius;        /* r(K, L) */
    int holds_on_grid;      /* mu(tRL;M) >= mu(tK;M) at every grid t */
    int inclusion_holds;    /* direct support-function check of R L inside K */
    mm_comparison_verdict verdict;
    int has_violation;
    double first_violation_t; /* meaningful iff has_violation */
    double max_t_tested;
} mm_comparison_report;

/* ---- bodies ------------------------------------------------------------ */

mm_status mm_body_disk(double radius, mm_body** out);
mm_status mm_body_ellipse(double a, double b, mm_body** out);
/* h(theta) = a0 + sum_k cos_coeffs[k-1] cos(k theta) + sin_coeffs[k-1] sin(k theta);
 * at most 64 harmonics; convexity and origin interiority are certified on a
 * 4096-node grid at construction. Either coefficient array may be NULL when
 * its count is 0. */
mm_status mm_body_fourier(double a0, const double* cos_coeffs, int n_cos,
                          const double* sin_coeffs, int n_sin, mm_body** out);
/* xy = x0,y0,x1,y1,...; counterclockwise, strictly convex, origin interior. */
mm_status mm_body_polygon(const double* xy, int n_vertices, mm_body** out);
/* Minkowski combination with coefficients >= 0, at least one positive. */
mm_status mm_body_combine(const mm_body* const* bodies, const double* coefficients, int n_terms,
                          mm_body** out);
void mm_body_free(mm_body* body);

/* h_second may be NULL; requesting it for a piecewise body is an error. */
mm_status mm_body_support(const mm_body* body, double theta, double* h, double* h_prime,
                          double* h_second);
mm_status mm_body_boundary_point(const mm_body* body, double theta, mm_boundary_point* out);
mm_status mm_body_gauge(const mm_body* body, double x, double y, double* out);
mm_status mm_body_gauge_gradient(const mm_body* body, double x, double y, double grad[2]);
mm_status mm_body_radial(const mm_body* body, double theta, double* out);
mm_status mm_body_validate(const mm_body* body, mm_validation_report* out);
mm_status mm_body_area(const mm_body* body, double* out);

/* r(K,L) = max{R : R L inside K}; tangency angles are written into the
 * caller's buffer (capacity entries); *n_tangency receives the total count
 * and MM_ERR_BUFFER_TOO_SMALL is returned if it exceeds capacity. */
mm_status mm_inradius(const mm_body* K, const mm_body* L, double* r, double* tangency_angles,
                      int capacity, int* n_tangency);
mm_status mm_inradius_bruteforce(const mm_body* K, const mm_body* L, long n_grid, double* r);

/* ---- density profiles and measures ------------------------------------- */

mm_status mm_phi_power(double c, double p, mm_phi** out);  /* c r^p, p >= 1 */
mm_status mm_phi_linear(double c, mm_phi** out);           /* c r */
mm_status mm_phi_expm1(double a, mm_phi** out);            /* e^{a r} - 1 */
void mm_phi_free(mm_phi* phi);

mm_status mm_phi_eval(const mm_phi* phi, double r, double* out);
mm_status mm_phi_prime(const mm_phi* phi, double r, double* out);
/* ratios[i] = ln phi'(t_i) / phi(t_i); trend_to_zero set when non-increasing. */
mm_status mm_phi_growth_report(const mm_phi* phi, const double* t_grid, int n, double* ratios,
                               int* trend_to_zero);
/* Psi(x) = int_0^x s e^{-phi(s)} ds; x may be INFINITY. */
mm_status mm_phi_partial_radial_mass(const mm_phi* phi, double x, double* out);

/* Density c0 exp(-phi(||x||_L)). normalized != 0 asserts c0 * Z = 1 (1e-8). */
mm_status mm_measure_create(const mm_phi* phi, const mm_body* gauge_body, double c0,
                            int normalized, mm_measure** out);
/* Computes Z and uses c0 = 1/Z. */
mm_status mm_measure_create_normalized(const mm_phi* phi, const mm_body* gauge_body,
                                       mm_measure** out);
/* The planar Gaussian: phi = r^2/2, L the unit disk, c0 = 1/(2 pi). */
mm_status mm_measure_gaussian(mm_measure** out);
/* Debug Lebesgue measure (phi == 0); only for classical-mixed-volume checks. */
mm_status mm_measure_lebesgue_debug(const mm_body* gauge_body, mm_measure** out);
void mm_measure_free(mm_measure* measure);

mm_status mm_measure_normalization(const mm_measure* measure, double* Z);
mm_status mm_measure_c0(const mm_measure* measure, double* c0);

/* ---- mixed measures ----------------------------------------------------- */

/* rel_tol 0 selects the per-path default; info may be NULL. */
mm_status mm_mixed_first(const mm_body* K, const mm_body* M, const mm_measure* measure, double t,
                         double rel_tol, mm_logvalue* out, mm_quad_info* info);
mm_status mm_surface_content(const mm_body* K, const mm_measure* measure, double t,
                             double rel_tol, mm_logvalue* out, mm_quad_info* info);
mm_status mm_mixed_second(const mm_body* A, const mm_body* B, const mm_body* C,
                          const mm_measure* measure, double t, double rel_tol, mm_logvalue* out,
                          mm_quad_info* info);
mm_status mm_gaussian_second(const mm_body* A, const mm_body* B, const mm_body* C, double t,
                             double rel_tol, mm_logvalue* out, mm_quad_info* info);
/* Bisection for the t where mixed_second changes sign. */
mm_status mm_second_sign_change(const mm_body* A, const mm_body* B, const mm_body* C,
                                const mm_measure* measure, double t_lo, double t_hi,
                                double* t_star);
mm_status mm_lebesgue_mixed_area(const mm_body* K, const mm_body* M, double* out);
mm_status mm_steiner_check(const mm_body* K, const mm_body* M, const double* t_grid, int n,
                           double* max_deviation);

/* ---- definitional oracles ----------------------------------------------- */

mm_status mm_body_mass(const mm_body* C, const mm_measure* measure, double scale,
                       mm_logvalue* out);
mm_status mm_complement_mass(const mm_body* C, const mm_measure* measure, double scale,
                             mm_logvalue* out);
/* steps NULL selects the default schedule {1e-2, 5e-3, 2.5e-3}. */
mm_status mm_fd_first(const mm_body* K, const mm_body* M, const mm_measure* measure, double t,
                      const double* steps, int n_steps, int extrapolate, mm_logvalue* out);
mm_status mm_fd_second(const mm_body* A, const mm_body* B, const mm_body* C,
                       const mm_measure* measure, double t, const double* steps, int n_steps,
                       int extrapolate, mm_logvalue* out);
mm_status mm_gauge_gradient_fd(const mm_body* L, double x, double y, double step, double grad[2]);

/* ---- rate sweeps and applications ---------------------------------------- */

/* entries must hold n slots. rate_r/trend_ok may be NULL. */
mm_status mm_rate_sweep_first(const mm_body* K, const mm_body* M, const mm_measure* measure,
                              const double* t_grid, int n, mm_sweep_entry* entries,
                              double* rate_r, int* trend_ok);
mm_status mm_rate_sweep_second(const mm_body* A, const mm_body* B, const mm_body* C,
                               const mm_measure* measure, const double* t_grid, int n,
                               mm_sweep_entry* entries, double* rate_r, int* trend_ok);
mm_status mm_rate_sweep_gaussian_second(const mm_body* A, const mm_body* B, const mm_body* C,
                                        const double* t_grid, int n, mm_sweep_entry* entries,
                                        double* rate_r, int* trend_ok);
mm_status mm_tail_rate(const mm_body* K, const mm_measure* measure, const double* t_grid, int n,
                       mm_sweep_entry* entries, double* rate_r, int* trend_ok);

/* min over theta of h_A^2 + h_A'^2 = r(A, unit disk)^2. */
mm_status mm_min_energy(const mm_body* A, double* min_value, double* angles, int capacity,
                        int* n_angles);

mm_status mm_comparison_check(const mm_body* K, const mm_body* L, double R, const mm_body* M,
                              const mm_measure* measure, const double* t_grid, int n,
                              mm_comparison_report* out);

/* Default sweep grid for the profile: 16 log-spaced points, [2.5, 14] for
 * power/expm1 and [2.5, 40] for linear. grid must hold 16 slots. */
mm_status mm_default_t_grid(const mm_phi* phi, double* grid, int* n);

/* ---- built-in verification ----------------------------------------------- */

/* Runs the oracle cross-check suite; writes one line per check into report
 * (truncating if needed). Returns MM_OK when every check passes and
 * MM_ERR_ASSERTION otherwise. report may be NULL. */
mm_status mm_verify(char* report, size_t capacity);

#ifdef __cplusplus
}
#endif

#endif /* MIXMEAS_H */
