#include "bodies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace mixmeas {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double reduce_angle(double th) {
    th = std::fmod(th, two_pi);
    if (th < 0.0) th += two_pi;
    if (th >= two_pi) th = 0.0;
    return th;
}

double circular_distance(double a, double b) {
    double d = std::fabs(reduce_angle(a) - reduce_angle(b));
    return std::min(d, two_pi - d);
}

}  // namespace

struct PolygonData {
    std::vector<Vec2> verts;
    std::vector<Vec2> edge_normal;     // outward normal of edge i: verts[i] -> verts[i+1]
    std::vector<double> edge_h;        // support value at the edge normal
    std::vector<double> vertex_angle;  // direction of each vertex from the origin
};

struct SupportBody2D::Impl {
    enum class Kind { Disk, Ellipse, Fourier, Polygon, Combination };
    Kind kind = Kind::Disk;

    double radius = 0.0;      // disk
    double a = 0.0, b = 0.0;  // ellipse
    double a0 = 0.0;          // fourier
    std::vector<double> cosc, sinc;
    PolygonData poly;

    // combination: support = sum over components (coefficients already folded in)
    std::vector<SupportBody2D> components;
    bool poly_plus_disk = false;
    size_t poly_idx = 0, disk_idx = 0;

    Smoothness smooth = Smoothness::C2Plus;
};

namespace {

using Kind = SupportBody2D::Impl::Kind;

SupportBody2D make_body(std::shared_ptr<SupportBody2D::Impl> impl) {
    return SupportBody2D(std::shared_ptr<const SupportBody2D::Impl>(std::move(impl)));
}

SupportDerivs eval_impl(const SupportBody2D::Impl& body, double theta);

SupportDerivs eval_polygon(const PolygonData& poly, double theta) {
    const Vec2 u = unit_vector(theta), ut = unit_tangent(theta);
    double best = -kInf;
    for (const Vec2& v : poly.verts) best = std::max(best, dot(v, u));
    // At a switch angle several vertices tie; the left derivative is the
    // smallest <v, u'> among them.
    const double tie_tol = 1e-12 * (1.0 + std::fabs(best));
    double dh = kInf;
    for (const Vec2& v : poly.verts)
        if (dot(v, u) >= best - tie_tol) dh = std::min(dh, dot(v, ut));
    return {best, dh, kNaN, false};
}

SupportDerivs eval_impl(const SupportBody2D::Impl& body, double theta) {
    switch (body.kind) {
        case Kind::Disk:
            return {body.radius, 0.0, 0.0, true};
        case Kind::Ellipse: {
            const double c = std::cos(theta), s = std::sin(theta);
            const double a2 = body.a * body.a, b2 = body.b * body.b;
            const double g = a2 * c * c + b2 * s * s;
            const double h = std::sqrt(g);
            const double gp = (b2 - a2) * std::sin(2.0 * theta);
            const double gpp = 2.0 * (b2 - a2) * std::cos(2.0 * theta);
            const double dh = gp / (2.0 * h);
            const double d2h = (2.0 * g * gpp - gp * gp) / (4.0 * g * h);
            return {h, dh, d2h, true};
        }
        case Kind::Fourier: {
            double h = body.a0, dh = 0.0, d2h = 0.0;
            for (size_t k = 1; k <= std::max(body.cosc.size(), body.sinc.size()); ++k) {
                const double ck = k <= body.cosc.size() ? body.cosc[k - 1] : 0.0;
                const double sk = k <= body.sinc.size() ? body.sinc[k - 1] : 0.0;
                const double cth = std::cos(k * theta), sth = std::sin(k * theta);
                h += ck * cth + sk * sth;
                dh += k * (-ck * sth + sk * cth);
                d2h -= double(k) * double(k) * (ck * cth + sk * sth);
            }
            return {h, dh, d2h, true};
        }
        case Kind::Polygon:
            return eval_polygon(body.poly, theta);
        case Kind::Combination: {
            SupportDerivs out{0.0, 0.0, 0.0, true};
            for (const SupportBody2D& part : body.components) {
                const SupportDerivs d = eval_impl(part.impl(), theta);
                out.h += d.h;
                out.dh += d.dh;
                out.has_d2h = out.has_d2h && d.has_d2h;
                out.d2h = out.has_d2h ? out.d2h + d.d2h : kNaN;
            }
            return out;
        }
    }
    fail(ErrorKind::InvalidArgument, "unknown body kind");
}

// ---- generic gauge: sup over directions of <x,u>/h(u) -------------------

struct GaugeScan {
    double value = 0.0;
    double theta = 0.0;
    std::vector<std::pair<double, double>> basins;  // (theta, value) of refined local maxima
};

GaugeScan gauge_scan(const SupportBody2D::Impl& body, Vec2 x) {
    auto q = [&](double psi) {
        return dot(x, unit_vector(psi)) / eval_impl(body, psi).h;
    };
    const int n = 512;
    std::vector<double> vals(n);
    double best = -kInf;
    for (int j = 0; j < n; ++j) {
        vals[static_cast<size_t>(j)] = q(two_pi * j / n);
        best = std::max(best, vals[static_cast<size_t>(j)]);
    }
    const double threshold = best - 1e-3 * std::fabs(best);
    auto neg_q = [&](double psi) { return -q(psi); };

    GaugeScan out;
    out.value = -kInf;
    for (int j = 0; j < n; ++j) {
        const double v = vals[static_cast<size_t>(j)];
        const double vl = vals[static_cast<size_t>((j + n - 1) % n)];
        const double vr = vals[static_cast<size_t>((j + 1) % n)];
        if (v < threshold || v < vl || v < vr) continue;
        const double lo = two_pi * (j - 1) / n, hi = two_pi * (j + 1) / n;
        const double theta = reduce_angle(quadrature::golden_min(neg_q, lo, hi, 1e-12));
        const double val = q(theta);
        out.basins.emplace_back(theta, val);
        if (val > out.value) {
            out.value = val;
            out.theta = theta;
        }
    }
    return out;
}

// ---- exact radial for a polygon + disk combination ------------------------
//
// The boundary of P + rB consists of the offset edges of P and circular arcs
// of radius r around its vertices. Every candidate below is a genuine
// supporting halfplane value, and the binding one is always among them, so
// the minimum is the exact radial function.

double radial_poly_disk(const PolygonData& poly, double r, double theta) {
    const Vec2 u = unit_vector(theta);
    double best = kInf;
    const size_t n = poly.verts.size();
    for (size_t i = 0; i < n; ++i) {
        const double d = dot(u, poly.edge_normal[i]);
        if (d > 1e-14) best = std::min(best, (poly.edge_h[i] + r) / d);
    }
    for (size_t i = 0; i < n; ++i) {
        const Vec2 w = poly.verts[i];
        const double proj = dot(u, w);
        const double disc = proj * proj - dot(w, w) + r * r;
        if (disc < 0.0) continue;
        const double rho = proj + std::sqrt(disc);
        if (rho <= 0.0) continue;
        const Vec2 contact = (1.0 / r) * (rho * u - w);
        const Vec2& n_prev = poly.edge_normal[(i + n - 1) % n];
        const Vec2& n_next = poly.edge_normal[i];
        if (cross(n_prev, contact) >= -1e-12 && cross(contact, n_next) >= -1e-12)
            best = std::min(best, rho);
    }
    return best;
}

}  // namespace

// ---- constructors ----------------------------------------------------------

SupportBody2D SupportBody2D::disk(double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        fail(ErrorKind::Validation, "disk: radius must be strictly positive");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Disk;
    impl->radius = radius;
    return make_body(std::move(impl));
}

SupportBody2D SupportBody2D::ellipse(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        fail(ErrorKind::Validation, "ellipse: semiaxes must be strictly positive");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Ellipse;
    impl->a = a;
    impl->b = b;
    return make_body(std::move(impl));
}

SupportBody2D SupportBody2D::fourier(double a0, std::vector<double> cos_coeffs,
                                     std::vector<double> sin_coeffs) {
    if (cos_coeffs.size() > 64 || sin_coeffs.size() > 64)
        fail(ErrorKind::InvalidArgument, "fourier: at most 64 harmonics");
    if (!std::isfinite(a0))
        fail(ErrorKind::InvalidArgument, "fourier: a0 must be finite");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Fourier;
    impl->a0 = a0;
    impl->cosc = std::move(cos_coeffs);
    impl->sinc = std::move(sin_coeffs);

    const int grid = 4096;
    const double margin = 1e-10;
    for (int j = 0; j < grid; ++j) {
        const SupportDerivs d = eval_impl(*impl, two_pi * j / grid);
        if (!(d.h > margin))
            fail(ErrorKind::Validation, "fourier: origin not strictly interior (h <= 0 on grid)");
        if (!(d.d2h + d.h > margin))
            fail(ErrorKind::Validation, "fourier: not convex (h'' + h <= 0 on grid)");
    }
    return make_body(std::move(impl));
}

SupportBody2D SupportBody2D::polygon(std::vector<Vec2> vertices) {
    const size_t n = vertices.size();
    if (n < 3) fail(ErrorKind::Validation, "polygon: needs at least 3 vertices");
    for (const Vec2& v : vertices)
        if (!std::isfinite(v.x) || !std::isfinite(v.y))
            fail(ErrorKind::InvalidArgument, "polygon: vertices must be finite");

    double signed_area = 0.0;
    for (size_t i = 0; i < n; ++i) signed_area += cross(vertices[i], vertices[(i + 1) % n]);
    if (signed_area < 0.0)
        fail(ErrorKind::Validation, "polygon: vertices are in clockwise orientation");

    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Polygon;
    impl->smooth = Smoothness::Piecewise;
    PolygonData& poly = impl->poly;
    poly.verts = std::move(vertices);
    for (size_t i = 0; i < n; ++i) {
        const Vec2 v0 = poly.verts[i], v1 = poly.verts[(i + 1) % n];
        const Vec2 e = v1 - v0;
        const double len = norm(e);
        if (!(len > 0.0)) fail(ErrorKind::Validation, "polygon: duplicate vertices");
        const Vec2 e_next = poly.verts[(i + 2) % n] - v1;
        if (!(cross(e, e_next) > 1e-12 * len * norm(e_next)))
            fail(ErrorKind::Validation, "polygon: turning is not strictly convex");
        const Vec2 nrm{e.y / len, -e.x / len};
        const double h = dot(v0, nrm);
        if (!(h > 1e-12 * (1.0 + norm(v0))))
            fail(ErrorKind::Validation, "polygon: origin not strictly interior");
        poly.edge_normal.push_back(nrm);
        poly.edge_h.push_back(h);
        poly.vertex_angle.push_back(reduce_angle(std::atan2(v0.y, v0.x)));
    }
    return make_body(std::move(impl));
}

namespace {

SupportBody2D scaled_body(double c, const SupportBody2D& body) {
    const SupportBody2D::Impl& impl = body.impl();
    switch (impl.kind) {
        case Kind::Disk:
            return SupportBody2D::disk(c * impl.radius);
        case Kind::Ellipse:
            return SupportBody2D::ellipse(c * impl.a, c * impl.b);
        case Kind::Fourier: {
            std::vector<double> cs = impl.cosc, ss = impl.sinc;
            for (double& v : cs) v *= c;
            for (double& v : ss) v *= c;
            return SupportBody2D::fourier(c * impl.a0, std::move(cs), std::move(ss));
        }
        case Kind::Polygon: {
            std::vector<Vec2> verts = impl.poly.verts;
            for (Vec2& v : verts) v = c * v;
            return SupportBody2D::polygon(std::move(verts));
        }
        case Kind::Combination:
            fail(ErrorKind::InvalidArgument, "scaled_body: combinations are flattened first");
    }
    fail(ErrorKind::InvalidArgument, "unknown body kind");
}

}  // namespace

SupportBody2D SupportBody2D::combine(const std::vector<std::pair<double, SupportBody2D>>& terms) {
    std::vector<std::pair<double, SupportBody2D>> flat;
    for (const auto& [coeff, body] : terms) {
        if (!(coeff >= 0.0) || !std::isfinite(coeff))
            fail(ErrorKind::InvalidArgument, "combine: coefficients must be finite and >= 0");
        if (coeff == 0.0) continue;
        if (body.impl().kind == Kind::Combination)
            for (const SupportBody2D& part : body.impl().components) flat.emplace_back(coeff, part);
        else
            flat.emplace_back(coeff, body);
    }
    if (flat.empty())
        fail(ErrorKind::Validation, "combine: degenerate body (all coefficients zero)");

    // Disks merge by radius; repeated polygons merge by coefficient.
    double disk_radius = 0.0;
    std::map<const Impl*, double> poly_coeff;
    std::vector<const SupportBody2D*> poly_order;
    std::vector<std::pair<double, SupportBody2D>> rest;
    for (const auto& [coeff, body] : flat) {
        switch (body.impl().kind) {
            case Kind::Disk:
                disk_radius += coeff * body.impl().radius;
                break;
            case Kind::Polygon: {
                auto [it, inserted] = poly_coeff.try_emplace(&body.impl(), 0.0);
                it->second += coeff;
                if (inserted) poly_order.push_back(&body);
                break;
            }
            default:
                rest.emplace_back(coeff, body);
        }
    }

    std::vector<SupportBody2D> pieces;
    for (const SupportBody2D* poly : poly_order)
        pieces.push_back(scaled_body(poly_coeff.at(&poly->impl()), *poly));
    if (disk_radius > 0.0) pieces.push_back(SupportBody2D::disk(disk_radius));
    for (const auto& [coeff, body] : rest) pieces.push_back(scaled_body(coeff, body));

    if (pieces.size() == 1) return pieces.front();

    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Combination;
    impl->components = std::move(pieces);
    impl->smooth = Smoothness::C2Plus;
    for (const SupportBody2D& part : impl->components)
        if (part.smoothness() == Smoothness::Piecewise) impl->smooth = Smoothness::Piecewise;

    if (impl->components.size() == 2) {
        for (size_t i = 0; i < 2; ++i) {
            if (impl->components[i].impl().kind == Kind::Polygon &&
                impl->components[1 - i].impl().kind == Kind::Disk) {
                impl->poly_plus_disk = true;
                impl->poly_idx = i;
                impl->disk_idx = 1 - i;
            }
        }
    }
    return make_body(std::move(impl));
}

// ---- operations ------------------------------------------------------------

SupportDerivs SupportBody2D::support_eval(double theta) const { return eval_impl(*impl_, theta); }

BoundaryPoint SupportBody2D::boundary_point(double theta) const {
    if (smoothness() != Smoothness::C2Plus)
        fail(ErrorKind::Unsupported, "boundary_point: body is not C2+");
    const SupportDerivs d = support_eval(theta);
    BoundaryPoint bp;
    bp.theta = theta;
    bp.h = d.h;
    bp.dh = d.dh;
    bp.curvature_f = d.d2h + d.h;
    bp.x = d.h * unit_vector(theta) + d.dh * unit_tangent(theta);
    return bp;
}

double SupportBody2D::gauge(Vec2 x) const {
    if (x.x == 0.0 && x.y == 0.0) return 0.0;
    const Impl& b = *impl_;
    switch (b.kind) {
        case Kind::Disk:
            return norm(x) / b.radius;
        case Kind::Ellipse:
            return std::hypot(x.x / b.a, x.y / b.b);
        case Kind::Polygon: {
            double best = -kInf;
            for (size_t i = 0; i < b.poly.verts.size(); ++i)
                best = std::max(best, dot(x, b.poly.edge_normal[i]) / b.poly.edge_h[i]);
            return best;
        }
        case Kind::Fourier:
            return gauge_scan(b, x).value;
        case Kind::Combination:
            if (b.poly_plus_disk) {
                const double theta = std::atan2(x.y, x.x);
                return norm(x) / radial_poly_disk(b.components[b.poly_idx].impl().poly,
                                                  b.components[b.disk_idx].impl().radius, theta);
            }
            return gauge_scan(b, x).value;
    }
    fail(ErrorKind::InvalidArgument, "unknown body kind");
}

double SupportBody2D::gauge_maximizer(Vec2 x) const {
    if (x.x == 0.0 && x.y == 0.0)
        fail(ErrorKind::Precondition, "gauge_maximizer: x must be nonzero");
    if (smoothness() != Smoothness::C2Plus)
        fail(ErrorKind::Unsupported, "gauge_maximizer: body is not C2+");
    const Impl& b = *impl_;
    switch (b.kind) {
        case Kind::Disk:
            return reduce_angle(std::atan2(x.y, x.x));
        case Kind::Ellipse:
            return reduce_angle(std::atan2(x.y / (b.b * b.b), x.x / (b.a * b.a)));
        default: {
            const GaugeScan scan = gauge_scan(b, x);
            int distinct = 0;
            for (const auto& [theta, val] : scan.basins)
                if (val >= scan.value * (1.0 - 1e-9) && circular_distance(theta, scan.theta) > 1e-6)
                    ++distinct;
            if (distinct > 0)
                fail(ErrorKind::Ambiguous, "gauge_maximizer: maximizer not unique within tolerance");
            return scan.theta;
        }
    }
}

Vec2 SupportBody2D::gauge_gradient(Vec2 x) const {
    if (x.x == 0.0 && x.y == 0.0)
        fail(ErrorKind::Precondition, "gauge_gradient: x must be nonzero");
    if (smoothness() != Smoothness::C2Plus)
        fail(ErrorKind::Unsupported, "gauge_gradient: body is not C2+");
    const Impl& b = *impl_;
    switch (b.kind) {
        case Kind::Disk: {
            const double n = norm(x);
            return {x.x / (b.radius * n), x.y / (b.radius * n)};
        }
        case Kind::Ellipse: {
            const double g = std::hypot(x.x / b.a, x.y / b.b);
            return {x.x / (b.a * b.a * g), x.y / (b.b * b.b * g)};
        }
        default: {
            const double theta = gauge_maximizer(x);
            const double h = support(theta);
            const Vec2 u = unit_vector(theta);
            return {u.x / h, u.y / h};
        }
    }
}

double SupportBody2D::radial(double theta) const {
    const Impl& b = *impl_;
    switch (b.kind) {
        case Kind::Disk:
            return b.radius;
        case Kind::Ellipse: {
            const double c = std::cos(theta), s = std::sin(theta);
            return 1.0 / std::hypot(c / b.a, s / b.b);
        }
        case Kind::Polygon: {
            double best = -kInf;
            const Vec2 u = unit_vector(theta);
            for (size_t i = 0; i < b.poly.verts.size(); ++i)
                best = std::max(best, dot(u, b.poly.edge_normal[i]) / b.poly.edge_h[i]);
            return 1.0 / best;
        }
        case Kind::Fourier:
            return 1.0 / gauge(unit_vector(theta));
        case Kind::Combination:
            if (b.poly_plus_disk)
                return radial_poly_disk(b.components[b.poly_idx].impl().poly,
                                        b.components[b.disk_idx].impl().radius, theta);
            return 1.0 / gauge(unit_vector(theta));
    }
    fail(ErrorKind::InvalidArgument, "unknown body kind");
}

Smoothness SupportBody2D::smoothness() const { return impl_->smooth; }

ValidationReport SupportBody2D::validate() const {
    const int grid = 4096;
    ValidationReport report;
    report.min_support = kInf;
    report.min_curvature_f = smoothness() == Smoothness::C2Plus ? kInf : kNaN;
    for (int j = 0; j < grid; ++j) {
        const SupportDerivs d = support_eval(two_pi * j / grid);
        report.min_support = std::min(report.min_support, d.h);
        if (d.has_d2h) report.min_curvature_f = std::min(report.min_curvature_f, d.d2h + d.h);
    }
    report.c2plus = smoothness() == Smoothness::C2Plus && report.min_curvature_f > 0.0;
    return report;
}

std::vector<double> SupportBody2D::radial_kink_angles() const {
    const Impl& b = *impl_;
    std::vector<double> kinks;
    if (b.kind == Kind::Polygon) {
        kinks = b.poly.vertex_angle;
    } else if (b.kind == Kind::Combination && b.poly_plus_disk) {
        const PolygonData& poly = b.components[b.poly_idx].impl().poly;
        const double r = b.components[b.disk_idx].impl().radius;
        const size_t n = poly.verts.size();
        for (size_t i = 0; i < n; ++i) {
            const Vec2 w = poly.verts[i];
            const Vec2 p0 = w + r * poly.edge_normal[(i + n - 1) % n];
            const Vec2 p1 = w + r * poly.edge_normal[i];
            kinks.push_back(reduce_angle(std::atan2(p0.y, p0.x)));
            kinks.push_back(reduce_angle(std::atan2(p1.y, p1.x)));
        }
    }
    std::sort(kinks.begin(), kinks.end());
    return kinks;
}

bool SupportBody2D::radial_kinks_known() const {
    const Impl& b = *impl_;
    if (b.kind != Kind::Combination) return true;
    return b.poly_plus_disk || b.smooth == Smoothness::C2Plus;
}

bool SupportBody2D::is_disk() const { return impl_->kind == Kind::Disk; }

double SupportBody2D::disk_radius() const {
    if (!is_disk()) fail(ErrorKind::InvalidArgument, "disk_radius: not a disk");
    return impl_->radius;
}

bool SupportBody2D::is_polygon() const { return impl_->kind == Kind::Polygon; }

const std::vector<Vec2>& SupportBody2D::polygon_vertices() const {
    if (!is_polygon()) fail(ErrorKind::InvalidArgument, "polygon_vertices: not a polygon");
    return impl_->poly.verts;
}

// ---- derived quantities ----------------------------------------------------

InradiusResult inradius(const SupportBody2D& K, const SupportBody2D& L, bool with_profile) {
    auto ratio = [&](double theta) { return K.support(theta) / L.support(theta); };
    const auto base = quadrature::circle_minimize(ratio, 4096);
    const auto coarse = quadrature::circle_minimize(ratio, 8192);
    const auto fine = quadrature::circle_minimize(ratio, 16384);
    if (std::fabs(coarse.min_value - base.min_value) >= 1e-9 ||
        std::fabs(fine.min_value - coarse.min_value) >= 1e-9)
        fail(ErrorKind::Numerical, "inradius: grid refinement did not settle below 1e-9");

    InradiusResult out;
    out.r = fine.min_value;
    out.tangency_angles = fine.argmin_set;
    if (with_profile) {
        const int samples = 256;
        out.ratio_profile.reserve(samples);
        for (int j = 0; j < samples; ++j) {
            const double theta = two_pi * j / samples;
            out.ratio_profile.emplace_back(theta, ratio(theta));
        }
    }
    return out;
}

double body_area(const SupportBody2D& body) {
    auto half_rho2 = [&](double theta) {
        const double rho = body.radial(theta);
        return 0.5 * rho * rho;
    };
    if (body.radial_kinks_known() && !body.radial_kink_angles().empty()) {
        const std::vector<double> kinks = body.radial_kink_angles();
        double total = 0.0;
        for (size_t i = 0; i < kinks.size(); ++i) {
            const double lo = kinks[i];
            const double hi = i + 1 < kinks.size() ? kinks[i + 1] : kinks.front() + two_pi;
            if (hi - lo < 1e-15) continue;
            total += quadrature::line_integrate(half_rho2, lo, hi, {1e-12, 0.0}).value.to_double();
        }
        return total;
    }
    quadrature::PeriodicOptions opts;
    opts.tolerance = body.radial_kinks_known() ? 1e-12 : 1e-8;
    opts.max_nodes = 1 << 17;
    auto f = [&](double theta) { return LogValue::from_double(half_rho2(theta)); };
    return quadrature::periodic_integrate(f, opts).value.to_double();
}

}  // namespace mixmeas
