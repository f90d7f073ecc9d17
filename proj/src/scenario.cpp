#include "leipnik/scenario.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "leipnik/expr.hpp"

namespace leipnik {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const char* where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) {
                known = true;
                break;
            }
        if (!known)
            fail("unknown key '" + it.key() + "' in " + where);
    }
}

const json& require(const json& obj, const char* key, const char* where) {
    const auto it = obj.find(key);
    if (it == obj.end())
        fail(std::string("missing key '") + key + "' in " + where);
    return *it;
}

double as_number(const json& v, const char* what) {
    if (!v.is_number())
        fail(std::string(what) + " must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x))
        fail(std::string(what) + " must be finite");
    return x;
}

std::string as_string(const json& v, const char* what) {
    if (!v.is_string())
        fail(std::string(what) + " must be a string");
    return v.get<std::string>();
}

GridSpec as_grid(const json& v, const char* name) {
    GridSpec g;
    if (v.is_number()) {
        g = GridSpec::fixed(as_number(v, name));
    } else if (v.is_object()) {
        check_keys(v, {"start", "stop", "count"}, name);
        g.start = as_number(require(v, "start", name), name);
        g.stop = as_number(require(v, "stop", name), name);
        const json& c = require(v, "count", name);
        if (!c.is_number_integer())
            fail(std::string(name) + ".count must be an integer");
        g.count = c.get<int>();
    } else {
        fail(std::string(name) + " must be a number or a {start, stop, count} object");
    }
    g.validate(name);
    return g;
}

complex as_complex_pair(const json& v, const char* what) {
    if (!v.is_array() || v.size() != 2)
        fail(std::string(what) + " must be a [re, im] pair");
    return {as_number(v[0], what), as_number(v[1], what)};
}

ModelSpec parse_model(const json& v) {
    if (!v.is_object()) fail("model must be an object");
    ModelSpec spec;
    const std::string kind = as_string(require(v, "kind", "model"), "model.kind");
    if (kind == "free_particle") {
        spec.kind = ModelKind::FreeParticle;
        check_keys(v, {"kind", "m0"}, "model");
    } else if (kind == "oscillator") {
        spec.kind = ModelKind::Oscillator;
        check_keys(v, {"kind", "m0", "omega0"}, "model");
        spec.omega0 = as_number(require(v, "omega0", "model"), "model.omega0");
    } else if (kind == "caldirola_kanai") {
        spec.kind = ModelKind::CaldirolaKanai;
        check_keys(v, {"kind", "m0", "omega0", "gamma"}, "model");
        spec.omega0 = as_number(require(v, "omega0", "model"), "model.omega0");
        spec.gamma = as_number(require(v, "gamma", "model"), "model.gamma");
    } else if (kind == "custom") {
        spec.kind = ModelKind::Custom;
        check_keys(v, {"kind", "mass", "omega_sq", "force", "params"}, "model");
        spec.mass_expr = as_string(require(v, "mass", "model"), "model.mass");
        spec.omega_sq_expr =
            as_string(require(v, "omega_sq", "model"), "model.omega_sq");
        spec.force_expr = as_string(require(v, "force", "model"), "model.force");
        if (const auto it = v.find("params"); it != v.end()) {
            if (!it->is_object()) fail("model.params must be an object");
            for (auto p = it->begin(); p != it->end(); ++p)
                spec.params[p.key()] = as_number(p.value(), "model.params value");
        }
    } else {
        fail("model.kind must be one of free_particle, oscillator, "
             "caldirola_kanai, custom; got '" + kind + "'");
    }
    if (spec.kind != ModelKind::Custom) {
        if (const auto it = v.find("m0"); it != v.end())
            spec.m0 = as_number(*it, "model.m0");
    }
    return spec;
}

}  // namespace

std::vector<double> GridSpec::points() const {
    std::vector<double> p;
    p.reserve(static_cast<size_t>(count));
    if (count == 1) {
        p.push_back(start);
        return p;
    }
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i)
        p.push_back(i == count - 1 ? stop : start + step * static_cast<double>(i));
    return p;
}

void GridSpec::validate(const char* name) const {
    if (!std::isfinite(start) || !std::isfinite(stop))
        fail(std::string(name) + " endpoints must be finite");
    if (count < 1)
        fail(std::string(name) + ".count must be >= 1");
    if (count > 10'000'000)
        fail(std::string(name) + ".count is implausibly large");
    if (count == 1 && start != stop)
        fail(std::string(name) + " with count 1 needs start == stop");
    if (count > 1 && !(start < stop))
        fail(std::string(name) + " needs start < stop");
}

QuadraticModel ModelSpec::build() const {
    switch (kind) {
        case ModelKind::FreeParticle:
            return QuadraticModel::free_particle(m0);
        case ModelKind::Oscillator:
            return QuadraticModel::oscillator(m0, omega0);
        case ModelKind::CaldirolaKanai:
            return QuadraticModel::caldirola_kanai(m0, omega0, gamma);
        default:
            return model_from_expressions(mass_expr, omega_sq_expr, force_expr,
                                          params);
    }
}

Scenario Scenario::from_json_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) fail("config root must be an object");
    check_keys(root,
               {"model", "squeeze", "time", "hbar", "outputs", "integrator", "init"},
               "config");

    Scenario sc;
    sc.model = parse_model(require(root, "model", "config"));

    const json& squeeze = require(root, "squeeze", "config");
    if (!squeeze.is_object()) fail("squeeze must be an object");
    check_keys(squeeze, {"r", "theta"}, "squeeze");
    sc.r_grid = as_grid(require(squeeze, "r", "squeeze"), "squeeze.r");
    sc.theta_grid = as_grid(require(squeeze, "theta", "squeeze"), "squeeze.theta");
    if (sc.r_grid.start < 0.0 || sc.r_grid.stop > 50.0)
        fail("squeeze.r must lie within [0, 50]");

    sc.time_grid = as_grid(require(root, "time", "config"), "time");

    if (const auto it = root.find("hbar"); it != root.end()) {
        sc.hbar = as_number(*it, "hbar");
        if (sc.hbar <= 0.0) fail("hbar must be positive");
    }

    if (const auto it = root.find("outputs"); it != root.end()) {
        if (!it->is_array()) fail("outputs must be an array of strings");
        for (const json& o : *it) {
            const std::string name = as_string(o, "outputs entry");
            if (name == "S_bar")
                sc.want_s_bar = true;
            else if (name == "bounds")
                sc.want_bounds = true;
            else if (name != "dx" && name != "dp" && name != "S" &&
                     name != "S_minus_floor")
                fail("unknown output '" + name + "'");
        }
    }

    if (const auto it = root.find("integrator"); it != root.end()) {
        if (!it->is_object()) fail("integrator must be an object");
        check_keys(*it, {"rel_tol", "abs_tol", "max_step", "wronskian_alarm"},
                   "integrator");
        if (const auto f = it->find("rel_tol"); f != it->end())
            sc.integrator.rel_tol = as_number(*f, "integrator.rel_tol");
        if (const auto f = it->find("abs_tol"); f != it->end())
            sc.integrator.abs_tol = as_number(*f, "integrator.abs_tol");
        if (const auto f = it->find("max_step"); f != it->end())
            sc.integrator.max_step = as_number(*f, "integrator.max_step");
        if (const auto f = it->find("wronskian_alarm"); f != it->end())
            sc.integrator.wronskian_alarm = as_number(*f, "integrator.wronskian_alarm");
        if (sc.integrator.rel_tol <= 0.0 || sc.integrator.abs_tol <= 0.0 ||
            sc.integrator.max_step < 0.0 || sc.integrator.wronskian_alarm <= 0.0)
            fail("integrator tolerances must be positive (max_step may be 0)");
    }

    if (const auto it = root.find("init"); it != root.end()) {
        if (sc.model.kind != ModelKind::Custom)
            fail("init is accepted for custom models only");
        if (!it->is_object()) fail("init must be an object");
        check_keys(*it, {"u", "du"}, "init");
        ModeState ms;
        ms.t = sc.time_grid.start;
        ms.u = as_complex_pair(require(*it, "u", "init"), "init.u");
        ms.du = as_complex_pair(require(*it, "du", "init"), "init.du");
        sc.init = ms;
    }

    return sc;
}

Scenario Scenario::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

Scenario figure_preset(int which) {
    Scenario sc;
    switch (which) {
        case 1:
            sc.model.kind = ModelKind::FreeParticle;
            sc.r_grid = {0.0, 1.0, 60};
            sc.theta_grid = {0.0, two_pi * 119.0 / 120.0, 120};
            sc.time_grid = GridSpec::fixed(0.0);
            break;
        case 2:
            sc.model.kind = ModelKind::FreeParticle;
            sc.r_grid = {0.0, 1.0, 21};
            sc.theta_grid = GridSpec::fixed(std::numbers::pi / 2.0);
            sc.time_grid = {0.0, 5.0, 501};
            break;
        case 3:
            sc.model.kind = ModelKind::FreeParticle;
            sc.r_grid = {0.0, 1.0, 21};
            sc.theta_grid = GridSpec::fixed(3.0 * std::numbers::pi / 2.0);
            sc.time_grid = {0.0, 5.0, 501};
            break;
        case 4:
            sc.model.kind = ModelKind::Oscillator;
            sc.model.omega0 = 1.0;
            sc.r_grid = {0.0, 1.0, 21};
            sc.theta_grid = GridSpec::fixed(0.0);
            sc.time_grid = {0.0, two_pi, 801};
            break;
        default:
            fail("figure preset must be 1, 2, 3 or 4");
    }
    return sc;
}

}  // namespace leipnik
