#pragma once

#include <cstddef>
#include <vector>

#include "leipnik/core.hpp"
#include "leipnik/model.hpp"

namespace leipnik {

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0.0;           // 0 disables the cap
    double wronskian_alarm = 1e-8;   // drift threshold |W - i|
};

// Mode states sampled on the requested grid, plus diagnostics. The stepper
// works in the canonical pair (u, m du): no dm/dt anywhere, and the
// normalization m (u du* - du u*) = i stays algebraic in the state.
struct Trajectory {
    std::vector<ModeState> states;
    std::vector<double> mass;           // m(t_k) alongside each state
    double max_wronskian_drift = 0.0;   // largest |W - i| seen
    std::size_t n_steps = 0;
    std::size_t n_rejected = 0;
};

struct CentroidState {
    double t = 0.0;
    double x = 0.0;
    double p = 0.0;
    double action = 0.0;  // classical action along the trajectory
};

struct CentroidTrajectory {
    std::vector<CentroidState> states;
    std::size_t n_steps = 0;
    std::size_t n_rejected = 0;
};

// Adaptive fifth-order pair with fourth-order dense output; init.t must
// equal t_grid.front() and the grid must be strictly increasing. The
// Wronskian is monitored at every accepted step and every output, and is
// never renormalized: drift beyond cfg.wronskian_alarm throws
// WronskianDriftExceeded.
Trajectory integrate_mode(const QuadraticModel& model, const ModeState& init,
                          const std::vector<double>& t_grid,
                          const IntegratorConfig& cfg = {});

// x' = p/m, p' = -m w^2 x + f, action' = p^2/2m - m w^2 x^2/2 + f x.
CentroidTrajectory integrate_centroid(const QuadraticModel& model,
                                      const CentroidState& init,
                                      const std::vector<double>& t_grid,
                                      const IntegratorConfig& cfg = {});

enum class DensityKind { Position, Momentum };

// Marginal |psi|^2 sampled on a uniform grid.
struct DensityGrid {
    DensityKind kind = DensityKind::Position;
    std::vector<double> axis;
    std::vector<double> values;

    double integral() const;                    // trapezoid
    double second_moment(double center) const;  // trapezoid of (x-c)^2 rho
};

// Gaussian marginal of the packet; the grid spans center +- width sigmas.
// Defaults keep the trapezoid normalization error under 1e-9.
DensityGrid evaluate_density(const GaussianPacket& packet, double m,
                             DensityKind kind, std::size_t n_points = 512,
                             double width = 8.0,
                             const PhysicalConstants& consts = {});

}  // namespace leipnik
