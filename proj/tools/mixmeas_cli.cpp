// Command-line front end over the mixmeas C API: config parsing, command
// dispatch, CSV/JSON output. Exit codes: 0 success, 2 configuration or
// validation error, 3 numerical failure, 4 verify/compare assertion failure.

#include <mixmeas.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

// ---- error plumbing ---------------------------------------------------------

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void config_error(const std::string& path, const std::string& msg) {
    throw CliError{2, "config error at " + path + ": " + msg};
}

int exit_code_for(mm_status status) {
    switch (status) {
        case MM_OK: return 0;
        case MM_ERR_NUMERICAL:
        case MM_ERR_RANGE: return 3;
        case MM_ERR_ASSERTION: return 4;
        default: return 2;
    }
}

void check(mm_status status, const std::string& context) {
    if (status != MM_OK)
        throw CliError{exit_code_for(status),
                       context + ": " + mm_status_name(status) + " (" + mm_last_error() + ")"};
}

// ---- typed configuration ----------------------------------------------------

struct PhiCfg {
    std::string kind;  // power | linear | expm1
    double c = 0.0, p = 0.0, a = 0.0;
};

struct BodyCfg {
    std::string kind;  // disk | ellipse | fourier | polygon
    double radius = 0.0, a = 0.0, b = 0.0, a0 = 0.0;
    std::vector<double> cos_coeffs, sin_coeffs;
    std::vector<std::array<double, 2>> vertices;
};

struct MeasureCfg {
    PhiCfg phi;
    std::string gauge;
    std::optional<double> c0;
    bool normalized = false;
};

struct Params {
    std::optional<double> t, t_min, t_max, R, tolerance;
    std::optional<int> points;
    std::optional<std::string> out;
};

struct RunConfig {
    std::map<std::string, BodyCfg> bodies;
    MeasureCfg measure;
    std::map<std::string, std::string> roles;
    Params params;
};

double require_number(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        config_error(path + "." + key, "expected a number");
    return j[key].get<double>();
}

std::vector<double> optional_number_list(const json& j, const std::string& path, const char* key) {
    std::vector<double> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) config_error(path + "." + key, "expected an array of numbers");
    for (const auto& v : j[key]) {
        if (!v.is_number()) config_error(path + "." + key, "expected an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

BodyCfg parse_body(const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        config_error(path, "expected an object with a \"kind\" string");
    BodyCfg body;
    body.kind = j["kind"].get<std::string>();
    if (body.kind == "disk") {
        body.radius = require_number(j, path, "radius");
    } else if (body.kind == "ellipse") {
        body.a = require_number(j, path, "a");
        body.b = require_number(j, path, "b");
    } else if (body.kind == "fourier") {
        body.a0 = require_number(j, path, "a0");
        body.cos_coeffs = optional_number_list(j, path, "cos");
        body.sin_coeffs = optional_number_list(j, path, "sin");
    } else if (body.kind == "polygon") {
        if (!j.contains("vertices") || !j["vertices"].is_array())
            config_error(path + ".vertices", "expected an array of [x, y] pairs");
        for (const auto& v : j["vertices"]) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                config_error(path + ".vertices", "expected [x, y] pairs");
            body.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
        }
    } else {
        config_error(path + ".kind", "unknown body kind \"" + body.kind + "\"");
    }
    return body;
}

PhiCfg parse_phi(const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        config_error(path, "expected an object with a \"kind\" string");
    PhiCfg phi;
    phi.kind = j["kind"].get<std::string>();
    if (phi.kind == "power") {
        phi.c = require_number(j, path, "c");
        phi.p = require_number(j, path, "p");
    } else if (phi.kind == "linear") {
        phi.c = require_number(j, path, "c");
    } else if (phi.kind == "expm1") {
        phi.a = require_number(j, path, "a");
    } else {
        config_error(path + ".kind", "unknown phi kind \"" + phi.kind + "\"");
    }
    return phi;
}

RunConfig parse_config(const json& root) {
    if (!root.is_object()) config_error("$", "top level must be an object");
    RunConfig cfg;

    if (!root.contains("bodies") || !root["bodies"].is_object())
        config_error("bodies", "expected an object of named body descriptors");
    for (const auto& [name, body] : root["bodies"].items())
        cfg.bodies.emplace(name, parse_body(body, "bodies." + name));

    if (!root.contains("measure") || !root["measure"].is_object())
        config_error("measure", "expected an object");
    const json& m = root["measure"];
    if (!m.contains("phi")) config_error("measure.phi", "missing");
    cfg.measure.phi = parse_phi(m["phi"], "measure.phi");
    if (!m.contains("gauge") || !m["gauge"].is_string())
        config_error("measure.gauge", "expected the name of a body");
    cfg.measure.gauge = m["gauge"].get<std::string>();
    if (!cfg.bodies.count(cfg.measure.gauge))
        config_error("measure.gauge", "references unknown body \"" + cfg.measure.gauge + "\"");
    if (m.contains("c0")) {
        if (!m["c0"].is_number()) config_error("measure.c0", "expected a number");
        cfg.measure.c0 = m["c0"].get<double>();
    }
    if (m.contains("normalized")) {
        if (!m["normalized"].is_boolean()) config_error("measure.normalized", "expected a bool");
        cfg.measure.normalized = m["normalized"].get<bool>();
    }

    if (root.contains("roles")) {
        if (!root["roles"].is_object()) config_error("roles", "expected an object");
        for (const auto& [role, name] : root["roles"].items()) {
            if (!name.is_string()) config_error("roles." + role, "expected a body name");
            const std::string body_name = name.get<std::string>();
            if (!cfg.bodies.count(body_name))
                config_error("roles." + role, "references unknown body \"" + body_name + "\"");
            cfg.roles[role] = body_name;
        }
    }

    if (root.contains("params")) {
        if (!root["params"].is_object()) config_error("params", "expected an object");
        const json& p = root["params"];
        auto num = [&](const char* key) -> std::optional<double> {
            if (!p.contains(key)) return std::nullopt;
            if (!p[key].is_number()) config_error(std::string("params.") + key, "expected a number");
            return p[key].get<double>();
        };
        cfg.params.t = num("t");
        cfg.params.t_min = num("t_min");
        cfg.params.t_max = num("t_max");
        cfg.params.R = num("R");
        cfg.params.tolerance = num("tolerance");
        if (p.contains("points")) {
            if (!p["points"].is_number_integer()) config_error("params.points", "expected an integer");
            cfg.params.points = p["points"].get<int>();
        }
        if (p.contains("out")) {
            if (!p["out"].is_string()) config_error("params.out", "expected a string");
            cfg.params.out = p["out"].get<std::string>();
        }
    }
    return cfg;
}

json serialize_config(const RunConfig& cfg) {
    json root;
    for (const auto& [name, body] : cfg.bodies) {
        json j{{"kind", body.kind}};
        if (body.kind == "disk") j["radius"] = body.radius;
        if (body.kind == "ellipse") {
            j["a"] = body.a;
            j["b"] = body.b;
        }
        if (body.kind == "fourier") {
            j["a0"] = body.a0;
            j["cos"] = body.cos_coeffs;
            j["sin"] = body.sin_coeffs;
        }
        if (body.kind == "polygon") {
            json verts = json::array();
            for (const auto& v : body.vertices) verts.push_back({v[0], v[1]});
            j["vertices"] = verts;
        }
        root["bodies"][name] = j;
    }
    json phi{{"kind", cfg.measure.phi.kind}};
    if (cfg.measure.phi.kind == "power") {
        phi["c"] = cfg.measure.phi.c;
        phi["p"] = cfg.measure.phi.p;
    } else if (cfg.measure.phi.kind == "linear") {
        phi["c"] = cfg.measure.phi.c;
    } else {
        phi["a"] = cfg.measure.phi.a;
    }
    root["measure"]["phi"] = phi;
    root["measure"]["gauge"] = cfg.measure.gauge;
    if (cfg.measure.c0) root["measure"]["c0"] = *cfg.measure.c0;
    root["measure"]["normalized"] = cfg.measure.normalized;
    if (!cfg.roles.empty()) {
        for (const auto& [role, name] : cfg.roles) root["roles"][role] = name;
    }
    json params = json::object();
    if (cfg.params.t) params["t"] = *cfg.params.t;
    if (cfg.params.t_min) params["t_min"] = *cfg.params.t_min;
    if (cfg.params.t_max) params["t_max"] = *cfg.params.t_max;
    if (cfg.params.points) params["points"] = *cfg.params.points;
    if (cfg.params.R) params["R"] = *cfg.params.R;
    if (cfg.params.tolerance) params["tolerance"] = *cfg.params.tolerance;
    if (cfg.params.out) params["out"] = *cfg.params.out;
    if (!params.empty()) root["params"] = params;
    return root;
}

// ---- handle construction ------------------------------------------------------

struct BodyDeleter {
    void operator()(mm_body* b) const { mm_body_free(b); }
};
struct PhiDeleter {
    void operator()(mm_phi* p) const { mm_phi_free(p); }
};
struct MeasureDeleter {
    void operator()(mm_measure* m) const { mm_measure_free(m); }
};
using BodyPtr = std::unique_ptr<mm_body, BodyDeleter>;
using PhiPtr = std::unique_ptr<mm_phi, PhiDeleter>;
using MeasurePtr = std::unique_ptr<mm_measure, MeasureDeleter>;

struct Workspace {
    RunConfig cfg;
    std::map<std::string, BodyPtr> bodies;
    PhiPtr phi;
    MeasurePtr measure;

    const mm_body* body(const std::string& name) const { return bodies.at(name).get(); }

    /// Resolve a role to a body: explicit roles table first, then a body of
    /// the same name.
    const mm_body* role(const std::string& role_name) const {
        auto r = cfg.roles.find(role_name);
        const std::string name = r != cfg.roles.end() ? r->second : role_name;
        auto b = bodies.find(name);
        if (b == bodies.end())
            throw CliError{2, "role \"" + role_name + "\": no body named \"" + name +
                                  "\" (add it to bodies or map it in roles)"};
        return b->second.get();
    }

    const mm_body* gauge_body() const { return bodies.at(cfg.measure.gauge).get(); }
};

Workspace build_workspace(const RunConfig& cfg) {
    Workspace ws;
    ws.cfg = cfg;
    for (const auto& [name, body] : cfg.bodies) {
        mm_body* handle = nullptr;
        mm_status st = MM_OK;
        if (body.kind == "disk") {
            st = mm_body_disk(body.radius, &handle);
        } else if (body.kind == "ellipse") {
            st = mm_body_ellipse(body.a, body.b, &handle);
        } else if (body.kind == "fourier") {
            st = mm_body_fourier(body.a0, body.cos_coeffs.data(),
                                 static_cast<int>(body.cos_coeffs.size()),
                                 body.sin_coeffs.data(),
                                 static_cast<int>(body.sin_coeffs.size()), &handle);
        } else {
            std::vector<double> xy;
            for (const auto& v : body.vertices) {
                xy.push_back(v[0]);
                xy.push_back(v[1]);
            }
            st = mm_body_polygon(xy.data(), static_cast<int>(body.vertices.size()), &handle);
        }
        if (st != MM_OK)
            throw CliError{2, "bodies." + name + ": " + std::string(mm_last_error())};
        ws.bodies[name] = BodyPtr(handle);
    }

    mm_phi* phi = nullptr;
    const PhiCfg& p = cfg.measure.phi;
    mm_status st = p.kind == "power"    ? mm_phi_power(p.c, p.p, &phi)
                   : p.kind == "linear" ? mm_phi_linear(p.c, &phi)
                                        : mm_phi_expm1(p.a, &phi);
    if (st != MM_OK) throw CliError{2, "measure.phi: " + std::string(mm_last_error())};
    ws.phi = PhiPtr(phi);

    mm_measure* measure = nullptr;
    const mm_body* gauge = ws.bodies.at(cfg.measure.gauge).get();
    if (!cfg.measure.c0 && cfg.measure.normalized)
        st = mm_measure_create_normalized(phi, gauge, &measure);
    else
        st = mm_measure_create(phi, gauge, cfg.measure.c0.value_or(1.0),
                               cfg.measure.normalized ? 1 : 0, &measure);
    if (st != MM_OK) throw CliError{2, "measure: " + std::string(mm_last_error())};
    ws.measure = MeasurePtr(measure);
    return ws;
}

// ---- output helpers -------------------------------------------------------------

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text(const std::optional<std::string>& out_path, const std::string& text) {
    if (out_path) {
        std::ofstream f(*out_path);
        if (!f) throw CliError{2, "cannot open output file " + *out_path};
        f << text;
    } else {
        std::cout << text;
    }
}

std::string sweep_csv(const std::vector<mm_sweep_entry>& entries) {
    std::ostringstream csv;
    csv << "t,sign,log_abs,ratio,phi_rt,nodes\n";
    for (const mm_sweep_entry& e : entries) {
        csv << fmt17(e.t) << ',' << e.sign << ',' << fmt17(e.log_abs) << ','
            << (e.defined ? fmt17(e.ratio) : "nan") << ',' << fmt17(e.phi_rt) << ',' << e.nodes
            << '\n';
    }
    return csv.str();
}

void print_logvalue(const mm_logvalue& v, const mm_quad_info& info) {
    std::cout << "sign = " << v.sign << "\n";
    std::cout << "log_abs = " << fmt17(v.log_abs) << "\n";
    if (v.sign == 0)
        std::cout << "value = 0\n";
    else if (std::fabs(v.log_abs) < 700.0)
        std::cout << "value = " << fmt17(v.sign * std::exp(v.log_abs)) << "\n";
    else
        std::cout << "value = (not representable as a double)\n";
    std::cout << "nodes = " << info.nodes << "\n";
}

std::vector<double> resolve_grid(const Workspace& ws, std::optional<double> t_min,
                                 std::optional<double> t_max, std::optional<int> points) {
    const double lo = t_min.value_or(ws.cfg.params.t_min.value_or(0.0));
    const double hi = t_max.value_or(ws.cfg.params.t_max.value_or(0.0));
    const int n = points.value_or(ws.cfg.params.points.value_or(0));
    if (lo > 0.0 && hi > lo && n >= 2) {
        std::vector<double> grid(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) grid[static_cast<size_t>(i)] = lo * std::pow(hi / lo, double(i) / (n - 1));
        return grid;
    }
    std::vector<double> grid(16);
    int got = 0;
    check(mm_default_t_grid(ws.phi.get(), grid.data(), &got), "default grid");
    grid.resize(static_cast<size_t>(got));
    return grid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixed measures of planar convex bodies under gauge-type log-concave densities"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::string> out_path;
    std::optional<double> flag_t, flag_tmin, flag_tmax, flag_R, flag_tol;
    std::optional<int> flag_points;
    std::string sweep_kind = "first";

    auto add_common = [&](CLI::App* cmd, bool needs_config = true) {
        auto* opt = cmd->add_option("-c,--config", config_path, "JSON configuration file");
        if (needs_config) opt->required();
        cmd->add_option("-o,--out", out_path, "output file (default stdout)");
        cmd->add_option("--tolerance", flag_tol, "relative quadrature tolerance override");
    };

    CLI::App* cmd_first = app.add_subcommand("first", "first-order mixed measure mu(tK; M)");
    CLI::App* cmd_second = app.add_subcommand("second", "second-order mixed measure mu(tA; B, C)");
    CLI::App* cmd_gauss =
        app.add_subcommand("gauss", "Gaussian second-order mixed measure gamma2(tA; B, C)");
    for (CLI::App* cmd : {cmd_first, cmd_second, cmd_gauss}) {
        add_common(cmd);
        cmd->add_option("--t", flag_t, "dilation parameter t");
    }

    CLI::App* cmd_sweep = app.add_subcommand("sweep", "rate-function sweep over a t grid (CSV)");
    add_common(cmd_sweep);
    cmd_sweep->add_option("--kind", sweep_kind, "first | second | gaussian-second")
        ->check(CLI::IsMember({"first", "second", "gaussian-second"}));
    cmd_sweep->add_option("--t-min", flag_tmin, "grid start");
    cmd_sweep->add_option("--t-max", flag_tmax, "grid end");
    cmd_sweep->add_option("--points", flag_points, "grid size");

    CLI::App* cmd_tail = app.add_subcommand("tail", "tail rate sweep ln mu((tK)^c)/phi(rt) (CSV)");
    add_common(cmd_tail);
    cmd_tail->add_option("--t-min", flag_tmin, "grid start");
    cmd_tail->add_option("--t-max", flag_tmax, "grid end");
    cmd_tail->add_option("--points", flag_points, "grid size");

    CLI::App* cmd_inradius = app.add_subcommand("inradius", "maximal L-inradius r(K, L)");
    add_common(cmd_inradius);

    CLI::App* cmd_compare =
        app.add_subcommand("compare", "comparison-theorem harness for mu(tRL;M) >= mu(tK;M)");
    add_common(cmd_compare);
    cmd_compare->add_option("--R", flag_R, "candidate inradius R");
    cmd_compare->add_option("--t-min", flag_tmin, "grid start");
    cmd_compare->add_option("--t-max", flag_tmax, "grid end");
    cmd_compare->add_option("--points", flag_points, "grid size");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the built-in oracle cross-check suite");
    add_common(cmd_verify, false);

    CLI::App* cmd_normalize = app.add_subcommand("normalize", "print the normalization constant Z");
    add_common(cmd_normalize);

    CLI::App* cmd_echo =
        app.add_subcommand("config-echo", "parse the config and re-emit it canonically");
    add_common(cmd_echo);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_verify->parsed()) {
            std::vector<char> report(1 << 16);
            const mm_status st = mm_verify(report.data(), report.size());
            std::cout << report.data();
            if (st != MM_OK) {
                std::cerr << "verify: " << mm_status_name(st) << "\n";
                return 4;
            }
            return 0;
        }

        std::ifstream config_file(config_path);
        if (!config_file) throw CliError{2, "cannot read config file " + config_path};
        json root;
        try {
            root = json::parse(config_file);
        } catch (const json::parse_error& e) {
            throw CliError{2, std::string("config syntax error: ") + e.what()};
        }
        const RunConfig cfg = parse_config(root);

        if (cmd_echo->parsed()) {
            build_workspace(cfg);  // full validation before echoing
            write_text(out_path, serialize_config(cfg).dump(2) + "\n");
            return 0;
        }

        Workspace ws = build_workspace(cfg);
        if (!out_path) out_path = ws.cfg.params.out;
        const double rel_tol = flag_tol.value_or(ws.cfg.params.tolerance.value_or(0.0));

        if (cmd_first->parsed() || cmd_second->parsed() || cmd_gauss->parsed()) {
            const double t = flag_t.value_or(ws.cfg.params.t.value_or(0.0));
            if (!(t > 0.0)) throw CliError{2, "needs --t > 0 (or params.t in the config)"};
            mm_logvalue v{};
            mm_quad_info info{};
            if (cmd_first->parsed()) {
                check(mm_mixed_first(ws.role("K"), ws.role("M"), ws.measure.get(), t, rel_tol, &v,
                                     &info),
                      "first");
            } else if (cmd_second->parsed()) {
                check(mm_mixed_second(ws.role("A"), ws.role("B"), ws.role("C"), ws.measure.get(),
                                      t, rel_tol, &v, &info),
                      "second");
            } else {
                check(mm_gaussian_second(ws.role("A"), ws.role("B"), ws.role("C"), t, rel_tol, &v,
                                         &info),
                      "gauss");
            }
            print_logvalue(v, info);
            if (info.beyond_smooth_hypotheses)
                std::cerr << "note: a piecewise-smooth second body puts this value outside the "
                             "literal C^2 hypotheses of the planar representation\n";
            return 0;
        }

        if (cmd_sweep->parsed() || cmd_tail->parsed()) {
            const std::vector<double> grid = resolve_grid(ws, flag_tmin, flag_tmax, flag_points);
            std::vector<mm_sweep_entry> entries(grid.size());
            double rate_r = 0.0;
            int trend = 0;
            const int n = static_cast<int>(grid.size());
            if (cmd_tail->parsed()) {
                check(mm_tail_rate(ws.role("K"), ws.measure.get(), grid.data(), n, entries.data(),
                                   &rate_r, &trend),
                      "tail");
            } else if (sweep_kind == "first") {
                check(mm_rate_sweep_first(ws.role("K"), ws.role("M"), ws.measure.get(),
                                          grid.data(), n, entries.data(), &rate_r, &trend),
                      "sweep first");
            } else if (sweep_kind == "second") {
                check(mm_rate_sweep_second(ws.role("A"), ws.role("B"), ws.role("C"),
                                           ws.measure.get(), grid.data(), n, entries.data(),
                                           &rate_r, &trend),
                      "sweep second");
            } else {
                check(mm_rate_sweep_gaussian_second(ws.role("A"), ws.role("B"), ws.role("C"),
                                                    grid.data(), n, entries.data(), &rate_r,
                                                    &trend),
                      "sweep gaussian-second");
            }
            write_text(out_path, sweep_csv(entries));
            std::cerr << "rate_r = " << fmt17(rate_r) << ", trend_toward_-1 = " << trend << "\n";
            return 0;
        }

        if (cmd_inradius->parsed()) {
            const mm_body* K = ws.role("K");
            const mm_body* L =
                ws.cfg.roles.count("L") || ws.cfg.bodies.count("L") ? ws.role("L") : ws.gauge_body();
            double r = 0.0;
            std::vector<double> angles(64);
            int n_angles = 0;
            const mm_status st =
                mm_inradius(K, L, &r, angles.data(), static_cast<int>(angles.size()), &n_angles);
            if (st != MM_OK && st != MM_ERR_BUFFER_TOO_SMALL) check(st, "inradius");
            std::cout << "r = " << fmt17(r) << "\n";
            std::cout << "tangency_angles = [";
            const int shown = std::min<int>(n_angles, static_cast<int>(angles.size()));
            for (int i = 0; i < shown; ++i) std::cout << (i ? ", " : "") << fmt17(angles[i]);
            if (n_angles > shown) std::cout << ", ... (" << n_angles << " total)";
            std::cout << "]\n";
            return 0;
        }

        if (cmd_compare->parsed()) {
            const double R = flag_R.value_or(ws.cfg.params.R.value_or(0.0));
            if (!(R > 0.0)) throw CliError{2, "needs --R > 0 (or params.R in the config)"};
            const std::vector<double> grid = resolve_grid(ws, flag_tmin, flag_tmax, flag_points);
            mm_comparison_report rep{};
            check(mm_comparison_check(ws.role("K"), ws.gauge_body(), R, ws.role("M"),
                                      ws.measure.get(), grid.data(),
                                      static_cast<int>(grid.size()), &rep),
                  "compare");
            json out{{"R", rep.R},
                     {"inradius", rep.inradius},
                     {"holds_on_grid", rep.holds_on_grid != 0},
                     {"inclusion_holds", rep.inclusion_holds != 0},
                     {"verdict", rep.verdict == MM_COMPARISON_HOLDS      ? "holds"
                                 : rep.verdict == MM_COMPARISON_VIOLATED ? "violated"
                                                                         : "inconclusive"},
                     {"max_t_tested", rep.max_t_tested}};
            if (rep.has_violation) out["first_violation_t"] = rep.first_violation_t;
            write_text(out_path, out.dump(2) + "\n");
            return 0;
        }

        if (cmd_normalize->parsed()) {
            double z = 0.0;
            check(mm_measure_normalization(ws.measure.get(), &z), "normalize");
            std::cout << "Z = " << fmt17(z) << "\n";
            return 0;
        }

        throw CliError{2, "no command selected"};
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
