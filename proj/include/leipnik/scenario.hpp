#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leipnik/core.hpp"
#include "leipnik/dynamics.hpp"
#include "leipnik/model.hpp"

namespace leipnik {

// Inclusive uniform grid; count == 1 collapses to the single start point.
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    static GridSpec fixed(double v) { return {v, v, 1}; }
    std::vector<double> points() const;
    void validate(const char* name) const;  // ConfigError on violation
};

// Model description as read from a config; build() materializes it.
struct ModelSpec {
    ModelKind kind = ModelKind::FreeParticle;
    double m0 = 1.0;
    double omega0 = 1.0;
    double gamma = 0.0;
    std::string mass_expr;      // custom kind only
    std::string omega_sq_expr;
    std::string force_expr;
    std::map<std::string, double> params;

    QuadraticModel build() const;
};

// One scan/validate/tstar request. JSON layout:
//
// {
//   "model":   {"kind": "oscillator", "m0": 1.0, "omega0": 1.0},
//   "squeeze": {"r": {"start": 0, "stop": 1, "count": 21}, "theta": 0.0},
//   "time":    {"start": 0, "stop": 6.283185307179586, "count": 801},
//   "hbar":    1.0,
//   "outputs": ["S_bar", "bounds"],
//   "integrator": {"rel_tol": 1e-10, "abs_tol": 1e-12},
//   "init":    {"u": [re, im], "du": [re, im]}
// }
//
// Unknown keys anywhere are a ConfigError. "init" is accepted only for
// custom models (named models start from their closed-form mode); when
// absent a custom model starts from the instantaneous vacuum at t_start.
struct Scenario {
    ModelSpec model;
    GridSpec r_grid;
    GridSpec theta_grid;
    GridSpec time_grid;
    double hbar = 1.0;
    bool want_s_bar = false;
    bool want_bounds = false;
    IntegratorConfig integrator;
    std::optional<ModeState> init;  // custom models; t is forced to t_start

    static Scenario from_json_text(const std::string& text);
    static Scenario from_file(const std::string& path);
};

// Built-in survey configurations 1..4:
//  1: free particle, t = 0, r in [0,1] x60, theta in [0,2pi) x120
//  2: free particle, theta = pi/2, r in [0,1] x21, t in [0,5] x501
//  3: free particle, theta = 3pi/2, r in [0,1] x21, t in [0,5] x501
//  4: oscillator (m0 = omega0 = 1), theta = 0, r in [0,1] x21,
//     t in [0,2pi] x801 (grid step pi/400, so t and t + pi share nodes)
Scenario figure_preset(int which);

}  // namespace leipnik
