#include "mixed.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace mixmeas {

namespace {

bool piecewise(const SupportBody2D& b) { return b.smoothness() == Smoothness::Piecewise; }

void require_origin_interior(const SupportBody2D& body, const char* who) {
    // Constructors already guarantee this; the check documents the contract.
    if (!(body.support(0.0) > 0.0)) fail(ErrorKind::Precondition, std::string(who) + ": invalid body");
}

}  // namespace

long peak_min_nodes(double t) { return std::max<long>(1024, 64 * static_cast<long>(std::ceil(t))); }

MixedValue mixed_first(const SupportBody2D& K, const SupportBody2D& M, const MeasureSpec& measure,
                       double t, const MixedOptions& opts) {
    if (!(t > 0.0)) fail(ErrorKind::Precondition, "mixed_first: t must be > 0");
    require_origin_interior(K, "mixed_first");
    require_origin_interior(M, "mixed_first");
    const SupportBody2D& L = measure.gauge_body();

    MixedValue out;
    out.t = t;
    out.beyond_smooth_hypotheses = false;

    if (K.smoothness() == Smoothness::C2Plus) {
        auto integrand = [&](double theta) {
            const BoundaryPoint bp = K.boundary_point(theta);
            const double h_m = M.support(theta);
            const double gnorm = measure.gauge_norm(bp.x);
            const double weight = h_m * t * bp.curvature_f;
            return LogValue::from_log(weight > 0.0 ? 1 : (weight < 0.0 ? -1 : 0),
                                      std::log(std::fabs(weight)) - measure.phi()(t * gnorm));
        };
        const bool rough = piecewise(M) || piecewise(L);
        quadrature::PeriodicOptions popts;
        popts.tolerance = opts.rel_tolerance > 0.0 ? opts.rel_tolerance : (rough ? 1e-8 : 1e-9);
        popts.min_nodes = peak_min_nodes(t);
        popts.max_nodes = rough ? (1 << 17) : (1 << 16);
        const quadrature::QuadResult q = quadrature::periodic_integrate(integrand, popts);
        out.value = q.value.log_scaled(std::log(measure.c0()));
        out.nodes_used = q.nodes_used;
        out.error_estimate = q.error_estimate;
        return out;
    }

    if (K.is_polygon()) {
        // Per-edge boundary representation: sum over edges of
        // h_M(n_e) Int_{t e} e^{-phi(||y||_L)} dH^1(y).
        const std::vector<Vec2>& verts = K.polygon_vertices();
        const size_t n = verts.size();
        LogValue total = LogValue::zero();
        long nodes = 0;
        double err = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const Vec2 v0 = verts[i], v1 = verts[(i + 1) % n];
            const Vec2 edge = v1 - v0;
            const double len = norm(edge);
            const Vec2 tangent = (1.0 / len) * edge;
            const Vec2 nrm{edge.y / len, -edge.x / len};
            const double h_m = M.support(std::atan2(nrm.y, nrm.x));
            auto kernel = [&](double s) {
                const Vec2 y = v0 + s * tangent;
                return std::exp(-measure.phi()(t * measure.gauge_norm(y)));
            };
            const quadrature::QuadResult q =
                quadrature::line_integrate(kernel, 0.0, len, {1e-10, 0.0});
            total = total + q.value.log_scaled(std::log(h_m * t));
            nodes += q.nodes_used;
            err = std::max(err, q.error_estimate);
        }
        out.value = total.log_scaled(std::log(measure.c0()));
        out.nodes_used = nodes;
        out.error_estimate = err;
        return out;
    }

    fail(ErrorKind::Unsupported, "mixed_first: first body must be C2+ or a polygon");
}

MixedValue surface_content(const SupportBody2D& K, const MeasureSpec& measure, double t,
                           const MixedOptions& opts) {
    return mixed_first(K, SupportBody2D::disk(1.0), measure, t, opts);
}

LogValue mixed_second_integrand(const SupportBody2D& A, const SupportBody2D& B,
                                const SupportBody2D& C, const MeasureSpec& measure, double t,
                                double theta) {
    const BoundaryPoint bp = A.boundary_point(theta);
    const double gnorm = measure.gauge_norm(bp.x);
    const Vec2 grad = measure.gauge_body().gauge_gradient(bp.x);
    const double grad_u = dot(grad, unit_vector(theta));
    const SupportDerivs dB = B.support_eval(theta);
    const SupportDerivs dC = C.support_eval(theta);
    const double bracket =
        dB.h * dC.h * (1.0 - measure.phi().prime(t * gnorm) * t * bp.curvature_f * grad_u) -
        dB.dh * dC.dh;
    if (bracket == 0.0) return LogValue::zero();
    return LogValue::from_log(bracket > 0.0 ? 1 : -1,
                              std::log(std::fabs(bracket)) - measure.phi()(t * gnorm));
}

namespace {

/// ln of the largest magnitude among the bracket's constituent terms; the
/// signed integral cannot be resolved below rounding residue of this scale.
double second_parts_scale(const SupportBody2D& A, const SupportBody2D& B, const SupportBody2D& C,
                          const MeasureSpec& measure, double t) {
    double scale = -std::numeric_limits<double>::infinity();
    const int n = 256;
    for (int j = 0; j < n; ++j) {
        const double theta = two_pi * j / n + 1e-7;
        const BoundaryPoint bp = A.boundary_point(theta);
        const double gnorm = measure.gauge_norm(bp.x);
        const Vec2 grad = measure.gauge_body().gauge_gradient(bp.x);
        const SupportDerivs dB = B.support_eval(theta);
        const SupportDerivs dC = C.support_eval(theta);
        const double parts =
            std::fabs(dB.h * dC.h) *
                (1.0 + std::fabs(measure.phi().prime(t * gnorm) * t * bp.curvature_f *
                                 dot(grad, unit_vector(theta)))) +
            std::fabs(dB.dh * dC.dh);
        scale = std::max(scale, std::log(parts) - measure.phi()(t * gnorm));
    }
    return scale;
}

double gaussian_parts_scale(const SupportBody2D& A, const SupportBody2D& B,
                            const SupportBody2D& C, double t) {
    double scale = -std::numeric_limits<double>::infinity();
    const int n = 256;
    for (int j = 0; j < n; ++j) {
        const double theta = two_pi * j / n + 1e-7;
        const SupportDerivs dA = A.support_eval(theta);
        const SupportDerivs dB = B.support_eval(theta);
        const SupportDerivs dC = C.support_eval(theta);
        const double parts =
            std::fabs(dB.h * dC.h) * (1.0 + t * t * std::fabs(dA.h * (dA.d2h + dA.h))) +
            std::fabs(dB.dh * dC.dh);
        scale = std::max(scale,
                         std::log(parts) - 0.5 * t * t * (dA.h * dA.h + dA.dh * dA.dh));
    }
    return scale;
}

}  // namespace

MixedValue mixed_second(const SupportBody2D& A, const SupportBody2D& B, const SupportBody2D& C,
                        const MeasureSpec& measure, double t, const MixedOptions& opts) {
    if (!(t > 0.0)) fail(ErrorKind::Precondition, "mixed_second: t must be > 0");
    if (A.smoothness() != Smoothness::C2Plus)
        fail(ErrorKind::Unsupported, "mixed_second: A must be C2+");
    if (measure.gauge_body().smoothness() != Smoothness::C2Plus)
        fail(ErrorKind::Unsupported, "mixed_second: the gauge body L must be C2+");
    const bool rough = piecewise(B) || piecewise(C);

    auto integrand = [&](double theta) {
        return mixed_second_integrand(A, B, C, measure, t, theta);
    };
    quadrature::PeriodicOptions popts;
    popts.tolerance = opts.rel_tolerance > 0.0 ? opts.rel_tolerance : (rough ? 1e-6 : 1e-10);
    popts.min_nodes = peak_min_nodes(t);
    popts.max_nodes = rough ? (1 << 17) : (1 << 16);
    // h_B' h_C' is only defined a.e. for polygons; keep nodes off switch angles.
    popts.node_offset = rough ? 1e-9 : 0.0;
    popts.zero_scale_log = second_parts_scale(A, B, C, measure, t);
    const quadrature::QuadResult q = quadrature::periodic_integrate(integrand, popts);

    MixedValue out;
    out.t = t;
    out.value = q.value.log_scaled(std::log(measure.c0()));
    out.nodes_used = q.nodes_used;
    out.error_estimate = q.error_estimate;
    out.beyond_smooth_hypotheses = rough;
    return out;
}

LogValue gaussian_second_integrand(const SupportBody2D& A, const SupportBody2D& B,
                                   const SupportBody2D& C, double t, double theta) {
    const SupportDerivs dA = A.support_eval(theta);
    const SupportDerivs dB = B.support_eval(theta);
    const SupportDerivs dC = C.support_eval(theta);
    const double fA = dA.d2h + dA.h;
    const double bracket = dB.h * dC.h * (1.0 - t * t * dA.h * fA) - dB.dh * dC.dh;
    const double exponent = 0.5 * t * t * (dA.h * dA.h + dA.dh * dA.dh);
    if (bracket == 0.0) return LogValue::zero();
    return LogValue::from_log(bracket > 0.0 ? 1 : -1, std::log(std::fabs(bracket)) - exponent);
}

MixedValue gaussian_second(const SupportBody2D& A, const SupportBody2D& B, const SupportBody2D& C,
                           double t, const MixedOptions& opts) {
    if (!(t > 0.0)) fail(ErrorKind::Precondition, "gaussian_second: t must be > 0");
    if (A.smoothness() != Smoothness::C2Plus)
        fail(ErrorKind::Unsupported, "gaussian_second: A must be C2+");
    const bool rough = piecewise(B) || piecewise(C);

    auto integrand = [&](double theta) { return gaussian_second_integrand(A, B, C, t, theta); };
    quadrature::PeriodicOptions popts;
    popts.tolerance = opts.rel_tolerance > 0.0 ? opts.rel_tolerance : (rough ? 1e-6 : 1e-10);
    popts.min_nodes = peak_min_nodes(t);
    popts.max_nodes = rough ? (1 << 17) : (1 << 16);
    popts.node_offset = rough ? 1e-9 : 0.0;
    popts.zero_scale_log = gaussian_parts_scale(A, B, C, t);
    const quadrature::QuadResult q = quadrature::periodic_integrate(integrand, popts);

    MixedValue out;
    out.t = t;
    out.value = q.value.log_scaled(std::log(1.0 / two_pi));
    out.nodes_used = q.nodes_used;
    out.error_estimate = q.error_estimate;
    out.beyond_smooth_hypotheses = rough;
    return out;
}

double second_sign_change(const SupportBody2D& A, const SupportBody2D& B, const SupportBody2D& C,
                          const MeasureSpec& measure, double t_lo, double t_hi, double t_tol) {
    if (!(t_lo > 0.0 && t_hi > t_lo))
        fail(ErrorKind::Precondition, "second_sign_change: requires 0 < t_lo < t_hi");
    auto sign_at = [&](double t) { return mixed_second(A, B, C, measure, t).value.sign; };
    int s_lo = sign_at(t_lo), s_hi = sign_at(t_hi);
    if (s_lo == 0) return t_lo;
    if (s_hi == 0) return t_hi;
    if (s_lo == s_hi)
        fail(ErrorKind::Range, "second_sign_change: no sign change inside the bracket");
    while (t_hi - t_lo > t_tol) {
        const double mid = 0.5 * (t_lo + t_hi);
        const int s_mid = sign_at(mid);
        if (s_mid == 0) return mid;
        if (s_mid == s_lo)
            t_lo = mid;
        else
            t_hi = mid;
    }
    return 0.5 * (t_lo + t_hi);
}

double lebesgue_mixed_area(const SupportBody2D& K, const SupportBody2D& M) {
    if (K.is_polygon()) {
        const std::vector<Vec2>& verts = K.polygon_vertices();
        const size_t n = verts.size();
        double total = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const Vec2 edge = verts[(i + 1) % n] - verts[i];
            const double len = norm(edge);
            const Vec2 nrm{edge.y / len, -edge.x / len};
            total += M.support(std::atan2(nrm.y, nrm.x)) * len;
        }
        return 0.5 * total;
    }
    if (K.smoothness() != Smoothness::C2Plus)
        fail(ErrorKind::Unsupported, "lebesgue_mixed_area: first body must be C2+ or a polygon");
    auto integrand = [&](double theta) {
        const SupportDerivs dK = K.support_eval(theta);
        return LogValue::from_double(M.support(theta) * (dK.d2h + dK.h));
    };
    quadrature::PeriodicOptions popts;
    popts.tolerance = piecewise(M) ? 1e-9 : 1e-11;
    popts.max_nodes = 1 << 17;
    return 0.5 * quadrature::periodic_integrate(integrand, popts).value.to_double();
}

double steiner_max_deviation(const SupportBody2D& K, const SupportBody2D& M,
                             const std::vector<double>& t_grid) {
    const MeasureSpec lebesgue = MeasureSpec::lebesgue_debug(SupportBody2D::disk(1.0));
    const double area_k = oracles::body_mass(K, lebesgue, 1.0).to_double();
    const double area_m = oracles::body_mass(M, lebesgue, 1.0).to_double();
    const double v_km = lebesgue_mixed_area(K, M);
    double worst = 0.0;
    for (double t : t_grid) {
        if (!(t >= 0.0)) fail(ErrorKind::Precondition, "steiner: grid must be >= 0");
        const SupportBody2D sum = SupportBody2D::combine({{1.0, K}, {t, M}});
        const double area_sum = oracles::body_mass(sum, lebesgue, 1.0).to_double();
        worst = std::max(worst,
                         std::fabs(area_sum - (area_k + 2.0 * t * v_km + t * t * area_m)));
    }
    return worst;
}

}  // namespace mixmeas
