#pragma once

#include <optional>

#include "leipnik/core.hpp"
#include "leipnik/dynamics.hpp"

namespace leipnik {

// ln(e/2) = 1 - ln 2, the exact floor of the joint entropy.
inline constexpr double entropy_floor = 1.0 - std::numbers::ln2;

// S = ln(e/2) + ln(2 dx dp / hbar).
double joint_entropy(const VariancePair& v, const PhysicalConstants& consts = {});

// Differential position entropy + momentum entropy - ln(2 pi hbar), from
// sampled marginals. UnnormalizedDensity if either integral strays from 1
// by more than 1e-8.
double leipnik_numeric(const DensityGrid& position, const DensityGrid& momentum,
                       const PhysicalConstants& consts = {});

// Free particle in terms of T = t/m0:
// ln(e/2) + (1/2) ln(cos^2(th/2) + e^{4r} sin^2(th/2))
//         + (1/2) ln((cos(th/2) + T sin(th/2))^2 + e^{-4r}(sin(th/2) - T cos(th/2))^2).
double free_entropy_closed(const SqueezeParams& sq, double T);

// t = 0 for every model: ln(e/2) + (1/2) ln(1 + sin^2 th sinh^2 2r).
double initial_entropy(const SqueezeParams& sq);

// Free particle: the entropy dips to the floor at
//   t* = -m0 (1 - e^{-4r}) sin th / (2 (sin^2(th/2) + e^{-4r} cos^2(th/2))),
// which is positive only for pi < th < 2pi and r > 0; absent otherwise,
// and then the entropy is monotone nondecreasing from t = 0.
std::optional<double> entropy_minimum_time(const SqueezeParams& sq, double m0);

// Oscillator: ln(e/2) + (1/2) ln(1 + sinh^2 2r sin^2(2 omega0 t - th)),
// periodic in t with period pi/omega0.
double oscillator_entropy_closed(const SqueezeParams& sq, double omega0, double t);

// ln(e/2) + (1/2) ln(1 + sinh^2 2r).
double oscillator_entropy_max(double r);

}  // namespace leipnik
