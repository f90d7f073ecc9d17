#pragma once

#include <cstddef>

#include "leipnik/core.hpp"
#include "leipnik/model.hpp"

namespace leipnik {

// Joint entropy averaged over the squeeze angle at fixed r, in closed form:
// ln(e/2) + ln((cosh 2r + 1)/2) + ln(2 m |u0 du0|).
double random_phase_closed(double r, const ModeState& ref, double m);

// Uniform trapezoid average over theta in [0, 2pi); spectrally accurate in
// n for this periodic integrand. n must be even and >= 64.
double random_phase_quadrature(double r, const ModeState& ref, double m,
                               std::size_t n = 512);

// int_0^{2pi} ln(a + b cos x + c sin x) dx = 2 pi ln((a + sqrt(a^2-b^2-c^2))/2)
// for a > sqrt(b^2 + c^2); DomainError otherwise.
double log_integral_identity(double a, double b, double c);

// (1/2) ln(1 + (m d|u|^2/dt)^2) with the derivative taken algebraically as
// 2 m Re(u du*); equals ln(2 m |u du|) for a normalized mode.
// WronskianViolation if 2 m Im(u du*) strays from 1 by more than 1e-6.
double minimal_uncertainty_identity(const ModeState& ref, double m);

// <H> = (hbar m / 2)(|du0|^2 + w^2 |u0|^2) for the centered packet built on
// ref; ref.t must equal t.
double energy_expectation(const ModeState& ref, const QuadraticModel& model,
                          double t, const PhysicalConstants& consts = {});

// Model-independent part of the bounds: ln(e/2) + ln((cosh 2r + 1)/2).
double random_phase_lower_bound(double r);

// Tight bounds on the phase-averaged entropy, plus the looser variants that
// drop the /2 normalization inside the logarithm (kept for side-by-side
// reporting; the oscillator violates the loose lower variant by exactly ln 2).
struct RandomPhaseBounds {
    double lower;      // ln(e/2) + ln((cosh 2r + 1)/2)
    double upper;      // lower + ln(<H>/(hbar omega / 2))
    double lower_alt;  // ln(e/2) + ln(cosh 2r + 1)
    double upper_alt;  // lower_alt + (1/2) ln(<H>/(hbar omega / 2))
};

// FrequencyZero unless omega_sq(t) > 0.
RandomPhaseBounds random_phase_bounds(double r, const ModeState& ref,
                                      const QuadraticModel& model, double t,
                                      const PhysicalConstants& consts = {});

}  // namespace leipnik
