#pragma once

#include <functional>
#include <string>

#include "leipnik/errors.hpp"

namespace leipnik {

enum class ModelKind { FreeParticle, Oscillator, CaldirolaKanai, Custom };

using ScalarFn = std::function<double(double)>;

// Time-dependent quadratic Hamiltonian
//     H(t) = p^2 / 2m(t) + m(t) w^2(t) x^2 / 2 - f(t) x.
// Named kinds evaluate their coefficients in closed form; Custom wraps three
// user callables. Coefficient evaluation never needs dm/dt.
class QuadraticModel {
public:
    static QuadraticModel free_particle(double m0);
    static QuadraticModel oscillator(double m0, double omega0);
    static QuadraticModel caldirola_kanai(double m0, double omega0, double gamma);
    static QuadraticModel custom(ScalarFn mass, ScalarFn omega_sq, ScalarFn force,
                                 std::string label = "custom");

    ModelKind kind() const noexcept { return kind_; }
    const std::string& label() const noexcept { return label_; }

    double mass(double t) const;      // > 0 or ModelEvaluationError
    double omega_sq(double t) const;  // finite or ModelEvaluationError
    double force(double t) const;

    // Named-kind parameters; ValidationError when kind() == Custom.
    double m0() const;
    double omega0() const;
    double gamma() const;

    // sqrt(omega0^2 - gamma^2/4); omega0 itself for the plain oscillator.
    double effective_omega() const;

    // Free: m0. Oscillator / damped: one period. Custom: 1.
    double characteristic_time() const;

    // Same model with a drive attached. The force moves only the centroid;
    // spreads and entropy never see it.
    QuadraticModel with_force(ScalarFn force) const;

private:
    QuadraticModel() = default;
    void require_named(const char* what) const;

    ModelKind kind_ = ModelKind::Custom;
    std::string label_;
    double m0_ = 0.0;
    double omega0_ = 0.0;
    double gamma_ = 0.0;
    ScalarFn mass_fn_;
    ScalarFn omega_sq_fn_;
    ScalarFn force_fn_;
};

}  // namespace leipnik
