#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "leipnik/scenario.hpp"

namespace leipnik {

struct RunOptions {
    int jobs = 1;          // worker threads for the (r, theta) sweep
    int quad_nodes = 512;  // theta-average quadrature resolution
};

// One (r, theta, t) grid point. theta is the requested grid value; the
// computation uses the angle reduced to [0, 2pi).
struct ScanRow {
    double r = 0.0;
    double theta = 0.0;
    double t = 0.0;
    double dx = 0.0;
    double dp = 0.0;
    double s = 0.0;
    double s_minus_floor = 0.0;
    double s_bar = 0.0;  // valid when the result carries S_bar
    double lower = 0.0;  // valid when the result carries bounds
    double upper = 0.0;
};

struct ScanResult {
    bool with_s_bar = false;
    bool with_bounds = false;
    std::vector<ScanRow> rows;  // lexicographic in (r, theta, t)

    void write_csv(std::ostream& out) const;
    std::string csv() const;
};

// Closed-form route for named models; single reference integration plus
// pointwise squeezing for custom ones. Any error aborts the scan (a CSV is
// never emitted with holes).
ScanResult run_scan(const Scenario& sc, const RunOptions& opts = {});

struct ValidationCheck {
    std::string name;
    bool passed = true;
    bool informational = false;  // reported but never fails the run
    std::string detail;
};

struct ValidationReport {
    std::string model_label;
    std::vector<ValidationCheck> checks;

    bool passed() const;
    std::string text() const;
};

// Cross-checks closed forms, the ODE pipeline, quadratures, identities and
// the drift alarm on samples drawn from the scenario grids.
ValidationReport run_validate(const Scenario& sc, const RunOptions& opts = {});

struct TStarRow {
    double r = 0.0;
    double theta = 0.0;
    std::optional<double> t_star;       // absent outside pi < theta < 2pi or r = 0
    std::optional<double> s_at_t_star;
    double t_grid_min = 0.0;            // argmin over the scenario time grid
    double s_grid_min = 0.0;
};

struct TStarResult {
    std::vector<TStarRow> rows;

    void write_csv(std::ostream& out) const;
    std::string csv() const;
};

// Free-particle entropy-dip survey over the (r, theta) grid. The only CSV
// in the tool with permitted blanks (absent t_star).
TStarResult run_tstar(const Scenario& sc, const RunOptions& opts = {});

// Instantaneous-vacuum start for custom models when the scenario gives no
// explicit init: omega_sq > 0 -> u = 1/sqrt(2 m Omega), du = -i Omega u;
// omega_sq = 0 -> the free-particle start; omega_sq < 0 -> ConfigError.
ModeState default_custom_init(const QuadraticModel& model, double t0);

}  // namespace leipnik
