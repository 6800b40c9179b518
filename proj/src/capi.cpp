#include "mixmeas.h"

#include "asymptotics.hpp"
#include "oracles.hpp"
#include "verify.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <sstream>
#include <string>

using namespace mixmeas;

struct mm_body {
    SupportBody2D value;
};
struct mm_phi {
    PhiFunction value;
};
struct mm_measure {
    MeasureSpec value;
};

namespace {

thread_local std::string g_last_error;

mm_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return MM_ERR_INVALID_ARGUMENT;
        case ErrorKind::Validation: return MM_ERR_VALIDATION;
        case ErrorKind::Unsupported: return MM_ERR_UNSUPPORTED;
        case ErrorKind::Ambiguous: return MM_ERR_AMBIGUOUS;
        case ErrorKind::Numerical: return MM_ERR_NUMERICAL;
        case ErrorKind::Precondition: return MM_ERR_PRECONDITION;
        case ErrorKind::Range: return MM_ERR_RANGE;
        case ErrorKind::Assertion: return MM_ERR_ASSERTION;
    }
    return MM_ERR_INVALID_ARGUMENT;
}

template <typename Fn>
mm_status guarded(Fn&& fn) {
    try {
        fn();
        return MM_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MM_ERR_NUMERICAL;
    }
}

mm_status invalid(const char* msg) {
    g_last_error = msg;
    return MM_ERR_INVALID_ARGUMENT;
}

mm_logvalue to_c(const LogValue& v) { return {v.sign, v.log_abs}; }

void fill_entries(const asymptotics::RateSweep& sweep, mm_sweep_entry* entries, double* rate_r,
                  int* trend_ok) {
    for (size_t i = 0; i < sweep.entries.size(); ++i) {
        const asymptotics::SweepEntry& e = sweep.entries[i];
        entries[i].t = e.t;
        entries[i].sign = e.value.sign;
        entries[i].log_abs = e.value.log_abs;
        entries[i].ratio = e.defined ? e.ratio : std::numeric_limits<double>::quiet_NaN();
        entries[i].phi_rt = e.phi_rt;
        entries[i].nodes = e.nodes;
        entries[i].defined = e.defined ? 1 : 0;
    }
    if (rate_r) *rate_r = sweep.rate_r;
    if (trend_ok) *trend_ok = sweep.trend_toward_limit ? 1 : 0;
}

std::vector<double> grid_of(const double* t_grid, int n) {
    if (!t_grid || n <= 0) fail(ErrorKind::InvalidArgument, "t_grid must be non-empty");
    return std::vector<double>(t_grid, t_grid + n);
}

oracles::StepSchedule schedule_of(const double* steps, int n_steps, int extrapolate) {
    oracles::StepSchedule schedule;
    if (steps && n_steps > 0) schedule.steps.assign(steps, steps + n_steps);
    schedule.extrapolate = extrapolate != 0;
    return schedule;
}

void write_mixed(const MixedValue& v, mm_logvalue* out, mm_quad_info* info) {
    if (out) *out = to_c(v.value);
    if (info) {
        info->nodes = v.nodes_used;
        info->error_estimate = v.error_estimate;
        info->beyond_smooth_hypotheses = v.beyond_smooth_hypotheses ? 1 : 0;
    }
}

}  // namespace

extern "C" {

const char* mm_status_name(mm_status status) {
    switch (status) {
        case MM_OK: return "ok";
        case MM_ERR_INVALID_ARGUMENT: return "invalid argument";
        case MM_ERR_VALIDATION: return "validation failed";
        case MM_ERR_UNSUPPORTED: return "unsupported smoothness";
        case MM_ERR_AMBIGUOUS: return "ambiguous maximizer";
        case MM_ERR_NUMERICAL: return "numerical failure";
        case MM_ERR_PRECONDITION: return "precondition violated";
        case MM_ERR_RANGE: return "out of range";
        case MM_ERR_ASSERTION: return "assertion failed";
        case MM_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    }
    return "unknown";
}

const char* mm_last_error(void) { return g_last_error.c_str(); }

/* ---- bodies -------------------------------------------------------------- */

mm_status mm_body_disk(double radius, mm_body** out) {
    if (!out) return invalid("out must not be null");
    return guarded([&] { *out = new mm_body{SupportBody2D::disk(radius)}; });
}

mm_status mm_body_ellipse(double a, double b, mm_body** out) {
    if (!out) return invalid("out must not be null");
    return guarded([&] { *out = new mm_body{SupportBody2D::ellipse(a, b)}; });
}

mm_status mm_body_fourier(double a0, const double* cos_coeffs, int n_cos,
                          const double* sin_coeffs, int n_sin, mm_body** out) {
    if (!out) return invalid("out must not be null");
    if ((n_cos > 0 && !cos_coeffs) || (n_sin > 0 && !sin_coeffs) || n_cos < 0 || n_sin < 0)
        return invalid("coefficient arrays inconsistent with counts");
    return guarded([&] {
        std::vector<double> cs(cos_coeffs, cos_coeffs + n_cos);
        std::vector<double> ss(sin_coeffs, sin_coeffs + n_sin);
        *out = new mm_body{SupportBody2D::fourier(a0, std::move(cs), std::move(ss))};
    });
}

mm_status mm_body_polygon(const double* xy, int n_vertices, mm_body** out) {
    if (!out) return invalid("out must not be null");
    if (!xy || n_vertices < 3) return invalid("polygon needs xy pairs for >= 3 vertices");
    return guarded([&] {
        std::vector<Vec2> verts;
        verts.reserve(static_cast<size_t>(n_vertices));
        for (int i = 0; i < n_vertices; ++i) verts.push_back({xy[2 * i], xy[2 * i + 1]});
        *out = new mm_body{SupportBody2D::polygon(std::move(verts))};
    });
}

mm_status mm_body_combine(const mm_body* const* bodies, const double* coefficients, int n_terms,
                          mm_body** out) {
    if (!out) return invalid("out must not be null");
    if (!bodies || !coefficients || n_terms <= 0) return invalid("combine needs terms");
    return guarded([&] {
        std::vector<std::pair<double, SupportBody2D>> terms;
        terms.reserve(static_cast<size_t>(n_terms));
        for (int i = 0; i < n_terms; ++i) {
            if (!bodies[i]) fail(ErrorKind::InvalidArgument, "combine: null body");
            terms.emplace_back(coefficients[i], bodies[i]->value);
        }
        *out = new mm_body{SupportBody2D::combine(terms)};
    });
}

void mm_body_free(mm_body* body) { delete body; }

mm_status mm_body_support(const mm_body* body, double theta, double* h, double* h_prime,
                          double* h_second) {
    if (!body) return invalid("body must not be null");
    return guarded([&] {
        const SupportDerivs d = body->value.support_eval(theta);
        if (h) *h = d.h;
        if (h_prime) *h_prime = d.dh;
        if (h_second) {
            if (!d.has_d2h)
                fail(ErrorKind::Unsupported, "support h'': body is not C2 at switch angles");
            *h_second = d.d2h;
        }
    });
}

mm_status mm_body_boundary_point(const mm_body* body, double theta, mm_boundary_point* out) {
    if (!body || !out) return invalid("body and out must not be null");
    return guarded([&] {
        const BoundaryPoint bp = body->value.boundary_point(theta);
        out->x[0] = bp.x.x;
        out->x[1] = bp.x.y;
        out->theta = bp.theta;
        out->h = bp.h;
        out->h_prime = bp.dh;
        out->curvature_f = bp.curvature_f;
    });
}

mm_status mm_body_gauge(const mm_body* body, double x, double y, double* out) {
    if (!body || !out) return invalid("body and out must not be null");
    return guarded([&] { *out = body->value.gauge({x, y}); });
}

mm_status mm_body_gauge_gradient(const mm_body* body, double x, double y, double grad[2]) {
    if (!body || !grad) return invalid("body and grad must not be null");
    return guarded([&] {
        const Vec2 g = body->value.gauge_gradient({x, y});
        grad[0] = g.x;
        grad[1] = g.y;
    });
}

mm_status mm_body_radial(const mm_body* body, double theta, double* out) {
    if (!body || !out) return invalid("body and out must not be null");
    return guarded([&] { *out = body->value.radial(theta); });
}

mm_status mm_body_validate(const mm_body* body, mm_validation_report* out) {
    if (!body || !out) return invalid("body and out must not be null");
    return guarded([&] {
        const ValidationReport rep = body->value.validate();
        out->min_support = rep.min_support;
        out->min_curvature_f = rep.min_curvature_f;
        out->c2plus = rep.c2plus ? 1 : 0;
    });
}

mm_status mm_body_area(const mm_body* body, double* out) {
    if (!body || !out) return invalid("body and out must not be null");
    return guarded([&] { *out = body_area(body->value); });
}

mm_status mm_inradius(const mm_body* K, const mm_body* L, double* r, double* tangency_angles,
                      int capacity, int* n_tangency) {
    if (!K || !L || !r) return invalid("K, L and r must not be null");
    mm_status overflow = MM_OK;
    const mm_status st = guarded([&] {
        const InradiusResult res = inradius(K->value, L->value);
        *r = res.r;
        const int total = static_cast<int>(res.tangency_angles.size());
        if (n_tangency) *n_tangency = total;
        if (tangency_angles) {
            const int count = total < capacity ? total : capacity;
            for (int i = 0; i < count; ++i) tangency_angles[i] = res.tangency_angles[i];
            if (total > capacity) {
                g_last_error = "tangency set larger than the provided buffer";
                overflow = MM_ERR_BUFFER_TOO_SMALL;
            }
        }
    });
    return st != MM_OK ? st : overflow;
}

mm_status mm_inradius_bruteforce(const mm_body* K, const mm_body* L, long n_grid, double* r) {
    if (!K || !L || !r) return invalid("K, L and r must not be null");
    return guarded([&] { *r = oracles::inradius_bruteforce(K->value, L->value, n_grid); });
}

/* ---- phi / measure -------------------------------------------------------- */

mm_status mm_phi_power(double c, double p, mm_phi** out) {
    if (!out) return invalid("out must not be null");
    return guarded([&] { *out = new mm_phi{PhiFunction::power(c, p)}; });
}

mm_status mm_phi_linear(double c, mm_phi** out) {
    if (!out) return invalid("out must not be null");
    return guarded([&] { *out = new mm_phi{PhiFunction::linear(c)}; });
}

mm_status mm_phi_expm1(double a, mm_phi** out) {
    if (!out) return invalid("out must not be null");
    return guarded([&] { *out = new mm_phi{PhiFunction::expm1(a)}; });
}

void mm_phi_free(mm_phi* phi) { delete phi; }

mm_status mm_phi_eval(const mm_phi* phi, double r, double* out) {
    if (!phi || !out) return invalid("phi and out must not be null");
    return guarded([&] { *out = phi->value(r); });
}

mm_status mm_phi_prime(const mm_phi* phi, double r, double* out) {
    if (!phi || !out) return invalid("phi and out must not be null");
    return guarded([&] { *out = phi->value.prime(r); });
}

mm_status mm_phi_growth_report(const mm_phi* phi, const double* t_grid, int n, double* ratios,
                               int* trend_to_zero) {
    if (!phi || !ratios) return invalid("phi and ratios must not be null");
    return guarded([&] {
        const auto report = phi->value.growth_condition_report(grid_of(t_grid, n));
        for (int i = 0; i < n; ++i) ratios[i] = report.ratios[static_cast<size_t>(i)];
        if (trend_to_zero) *trend_to_zero = report.trending_to_zero ? 1 : 0;
    });
}

mm_status mm_phi_partial_radial_mass(const mm_phi* phi, double x, double* out) {
    if (!phi || !out) return invalid("phi and out must not be null");
    return guarded([&] { *out = partial_radial_mass(phi->value, x); });
}

mm_status mm_measure_create(const mm_phi* phi, const mm_body* gauge_body, double c0,
                            int normalized, mm_measure** out) {
    if (!phi || !gauge_body || !out) return invalid("phi, gauge_body and out must not be null");
    return guarded([&] {
        *out = new mm_measure{MeasureSpec(phi->value, gauge_body->value, c0, normalized != 0)};
    });
}

mm_status mm_measure_create_normalized(const mm_phi* phi, const mm_body* gauge_body,
                                       mm_measure** out) {
    if (!phi || !gauge_body || !out) return invalid("phi, gauge_body and out must not be null");
    return guarded([&] {
        *out = new mm_measure{MeasureSpec::make_normalized(phi->value, gauge_body->value)};
    });
}

mm_status mm_measure_gaussian(mm_measure** out) {
    if (!out) return invalid("out must not be null");
    return guarded([&] { *out = new mm_measure{MeasureSpec::gaussian()}; });
}

mm_status mm_measure_lebesgue_debug(const mm_body* gauge_body, mm_measure** out) {
    if (!gauge_body || !out) return invalid("gauge_body and out must not be null");
    return guarded([&] { *out = new mm_measure{MeasureSpec::lebesgue_debug(gauge_body->value)}; });
}

void mm_measure_free(mm_measure* measure) { delete measure; }

mm_status mm_measure_normalization(const mm_measure* measure, double* Z) {
    if (!measure || !Z) return invalid("measure and Z must not be null");
    return guarded([&] { *Z = normalization_constant(measure->value); });
}

mm_status mm_measure_c0(const mm_measure* measure, double* c0) {
    if (!measure || !c0) return invalid("measure and c0 must not be null");
    *c0 = measure->value.c0();
    return MM_OK;
}

/* ---- mixed measures -------------------------------------------------------- */

mm_status mm_mixed_first(const mm_body* K, const mm_body* M, const mm_measure* measure, double t,
                         double rel_tol, mm_logvalue* out, mm_quad_info* info) {
    if (!K || !M || !measure || !out) return invalid("K, M, measure and out must not be null");
    return guarded([&] {
        write_mixed(mixed_first(K->value, M->value, measure->value, t, {rel_tol}), out, info);
    });
}

mm_status mm_surface_content(const mm_body* K, const mm_measure* measure, double t,
                             double rel_tol, mm_logvalue* out, mm_quad_info* info) {
    if (!K || !measure || !out) return invalid("K, measure and out must not be null");
    return guarded([&] {
        write_mixed(surface_content(K->value, measure->value, t, {rel_tol}), out, info);
    });
}

mm_status mm_mixed_second(const mm_body* A, const mm_body* B, const mm_body* C,
                          const mm_measure* measure, double t, double rel_tol, mm_logvalue* out,
                          mm_quad_info* info) {
    if (!A || !B || !C || !measure || !out)
        return invalid("A, B, C, measure and out must not be null");
    return guarded([&] {
        write_mixed(mixed_second(A->value, B->value, C->value, measure->value, t, {rel_tol}), out,
                    info);
    });
}

mm_status mm_gaussian_second(const mm_body* A, const mm_body* B, const mm_body* C, double t,
                             double rel_tol, mm_logvalue* out, mm_quad_info* info) {
    if (!A || !B || !C || !out) return invalid("A, B, C and out must not be null");
    return guarded([&] {
        write_mixed(gaussian_second(A->value, B->value, C->value, t, {rel_tol}), out, info);
    });
}

mm_status mm_second_sign_change(const mm_body* A, const mm_body* B, const mm_body* C,
                                const mm_measure* measure, double t_lo, double t_hi,
                                double* t_star) {
    if (!A || !B || !C || !measure || !t_star)
        return invalid("A, B, C, measure and t_star must not be null");
    return guarded([&] {
        *t_star = second_sign_change(A->value, B->value, C->value, measure->value, t_lo, t_hi);
    });
}

mm_status mm_lebesgue_mixed_area(const mm_body* K, const mm_body* M, double* out) {
    if (!K || !M || !out) return invalid("K, M and out must not be null");
    return guarded([&] { *out = lebesgue_mixed_area(K->value, M->value); });
}

mm_status mm_steiner_check(const mm_body* K, const mm_body* M, const double* t_grid, int n,
                           double* max_deviation) {
    if (!K || !M || !max_deviation) return invalid("K, M and max_deviation must not be null");
    return guarded([&] {
        *max_deviation = steiner_max_deviation(K->value, M->value, grid_of(t_grid, n));
    });
}

/* ---- oracles ---------------------------------------------------------------- */

mm_status mm_body_mass(const mm_body* C, const mm_measure* measure, double scale,
                       mm_logvalue* out) {
    if (!C || !measure || !out) return invalid("C, measure and out must not be null");
    return guarded([&] { *out = to_c(oracles::body_mass(C->value, measure->value, scale)); });
}

mm_status mm_complement_mass(const mm_body* C, const mm_measure* measure, double scale,
                             mm_logvalue* out) {
    if (!C || !measure || !out) return invalid("C, measure and out must not be null");
    return guarded([&] { *out = to_c(oracles::complement_mass(C->value, measure->value, scale)); });
}

mm_status mm_fd_first(const mm_body* K, const mm_body* M, const mm_measure* measure, double t,
                      const double* steps, int n_steps, int extrapolate, mm_logvalue* out) {
    if (!K || !M || !measure || !out) return invalid("K, M, measure and out must not be null");
    return guarded([&] {
        *out = to_c(oracles::fd_first(K->value, M->value, measure->value, t,
                                      schedule_of(steps, n_steps, extrapolate)));
    });
}

mm_status mm_fd_second(const mm_body* A, const mm_body* B, const mm_body* C,
                       const mm_measure* measure, double t, const double* steps, int n_steps,
                       int extrapolate, mm_logvalue* out) {
    if (!A || !B || !C || !measure || !out)
        return invalid("A, B, C, measure and out must not be null");
    return guarded([&] {
        *out = to_c(oracles::fd_second(A->value, B->value, C->value, measure->value, t,
                                       schedule_of(steps, n_steps, extrapolate)));
    });
}

mm_status mm_gauge_gradient_fd(const mm_body* L, double x, double y, double step, double grad[2]) {
    if (!L || !grad) return invalid("L and grad must not be null");
    return guarded([&] {
        const Vec2 g = oracles::gauge_gradient_fd(L->value, {x, y}, step > 0.0 ? step : 1e-5);
        grad[0] = g.x;
        grad[1] = g.y;
    });
}

/* ---- asymptotics -------------------------------------------------------------- */

mm_status mm_rate_sweep_first(const mm_body* K, const mm_body* M, const mm_measure* measure,
                              const double* t_grid, int n, mm_sweep_entry* entries,
                              double* rate_r, int* trend_ok) {
    if (!K || !M || !measure || !entries)
        return invalid("K, M, measure and entries must not be null");
    return guarded([&] {
        fill_entries(asymptotics::rate_sweep_first(K->value, M->value, measure->value,
                                                   grid_of(t_grid, n)),
                     entries, rate_r, trend_ok);
    });
}

mm_status mm_rate_sweep_second(const mm_body* A, const mm_body* B, const mm_body* C,
                               const mm_measure* measure, const double* t_grid, int n,
                               mm_sweep_entry* entries, double* rate_r, int* trend_ok) {
    if (!A || !B || !C || !measure || !entries)
        return invalid("A, B, C, measure and entries must not be null");
    return guarded([&] {
        fill_entries(asymptotics::rate_sweep_second(A->value, B->value, C->value, measure->value,
                                                    grid_of(t_grid, n)),
                     entries, rate_r, trend_ok);
    });
}

mm_status mm_rate_sweep_gaussian_second(const mm_body* A, const mm_body* B, const mm_body* C,
                                        const double* t_grid, int n, mm_sweep_entry* entries,
                                        double* rate_r, int* trend_ok) {
    if (!A || !B || !C || !entries) return invalid("A, B, C and entries must not be null");
    return guarded([&] {
        fill_entries(asymptotics::rate_sweep_gaussian_second(A->value, B->value, C->value,
                                                             grid_of(t_grid, n)),
                     entries, rate_r, trend_ok);
    });
}

mm_status mm_tail_rate(const mm_body* K, const mm_measure* measure, const double* t_grid, int n,
                       mm_sweep_entry* entries, double* rate_r, int* trend_ok) {
    if (!K || !measure || !entries) return invalid("K, measure and entries must not be null");
    return guarded([&] {
        fill_entries(asymptotics::tail_rate(K->value, measure->value, grid_of(t_grid, n)),
                     entries, rate_r, trend_ok);
    });
}

mm_status mm_min_energy(const mm_body* A, double* min_value, double* angles, int capacity,
                        int* n_angles) {
    if (!A || !min_value) return invalid("A and min_value must not be null");
    mm_status overflow = MM_OK;
    const mm_status st = guarded([&] {
        const asymptotics::MinEnergyResult res = asymptotics::min_energy(A->value);
        *min_value = res.value;
        const int total = static_cast<int>(res.argmin_angles.size());
        if (n_angles) *n_angles = total;
        if (angles) {
            const int count = total < capacity ? total : capacity;
            for (int i = 0; i < count; ++i) angles[i] = res.argmin_angles[i];
            if (total > capacity) {
                g_last_error = "argmin set larger than the provided buffer";
                overflow = MM_ERR_BUFFER_TOO_SMALL;
            }
        }
    });
    return st != MM_OK ? st : overflow;
}

mm_status mm_comparison_check(const mm_body* K, const mm_body* L, double R, const mm_body* M,
                              const mm_measure* measure, const double* t_grid, int n,
                              mm_comparison_report* out) {
    if (!K || !L || !M || !measure || !out)
        return invalid("K, L, M, measure and out must not be null");
    return guarded([&] {
        const asymptotics::ComparisonReport rep = asymptotics::comparison_check(
            K->value, L->value, R, M->value, measure->value, grid_of(t_grid, n));
        out->R = rep.R;
        out->inradius = rep.inradius_KL;
        out->holds_on_grid = rep.holds_on_grid ? 1 : 0;
        out->inclusion_holds = rep.inclusion_holds ? 1 : 0;
        switch (rep.verdict) {
            case asymptotics::ComparisonVerdict::Holds: out->verdict = MM_COMPARISON_HOLDS; break;
            case asymptotics::ComparisonVerdict::Violated:
                out->verdict = MM_COMPARISON_VIOLATED;
                break;
            case asymptotics::ComparisonVerdict::Inconclusive:
                out->verdict = MM_COMPARISON_INCONCLUSIVE;
                break;
        }
        out->has_violation = rep.first_violation_t.has_value() ? 1 : 0;
        out->first_violation_t = rep.first_violation_t.value_or(0.0);
        out->max_t_tested = rep.max_t_tested;
    });
}

mm_status mm_default_t_grid(const mm_phi* phi, double* grid, int* n) {
    if (!phi || !grid || !n) return invalid("phi, grid and n must not be null");
    return guarded([&] {
        const std::vector<double> g = asymptotics::default_t_grid(phi->value);
        for (size_t i = 0; i < g.size(); ++i) grid[i] = g[i];
        *n = static_cast<int>(g.size());
    });
}

/* ---- verify -------------------------------------------------------------------- */

mm_status mm_verify(char* report, size_t capacity) {
    return guarded([&] {
        const auto results = verify::run_all();
        if (report && capacity > 0) {
            std::ostringstream text;
            for (const auto& r : results) {
                text << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  worst=" << r.worst
                     << " bound=" << r.bound << "\n";
            }
            const std::string s = text.str();
            const size_t count = s.size() < capacity - 1 ? s.size() : capacity - 1;
            std::memcpy(report, s.data(), count);
            report[count] = '\0';
        }
        if (!verify::all_pass(results))
            fail(ErrorKind::Assertion, "built-in verification suite failed");
    });
}

}  // extern "C"
