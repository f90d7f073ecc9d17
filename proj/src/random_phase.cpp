#include "leipnik/random_phase.hpp"

#include <cmath>
#include <string>

#include "leipnik/entropy.hpp"

namespace leipnik {

namespace {

void check_r(double r) {
    if (!std::isfinite(r) || r < 0.0 || r > 50.0)
        throw ValidationError("squeeze amplitude r must lie in [0, 50]");
}

void check_mode(const ModeState& ref, double m) {
    if (!std::isfinite(m) || m <= 0.0)
        throw ValidationError("mass must be finite and positive");
    if (std::norm(ref.u) == 0.0 || std::norm(ref.du) == 0.0)
        throw ZeroAmplitude("reference mode has a zero amplitude or velocity");
}

}  // namespace

double random_phase_closed(double r, const ModeState& ref, double m) {
    check_r(r);
    check_mode(ref, m);
    const double ch = std::cosh(2.0 * r);
    return entropy_floor + std::log((ch + 1.0) / 2.0) +
           std::log(2.0 * m * std::abs(ref.u) * std::abs(ref.du));
}

double random_phase_quadrature(double r, const ModeState& ref, double m,
                               std::size_t n) {
    check_r(r);
    check_mode(ref, m);
    if (n < 64 || n % 2 != 0)
        throw ValidationError("quadrature node count must be even and >= 64");
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double theta = two_pi * static_cast<double>(k) / static_cast<double>(n);
        const ModeState sqz = squeeze_mode(ref, SqueezeParams(r, theta));
        acc += joint_entropy(variances(sqz, m));
    }
    return acc / static_cast<double>(n);
}

double log_integral_identity(double a, double b, double c) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
        throw ValidationError("arguments must be finite");
    if (!(a > std::hypot(b, c)))
        throw DomainError("identity needs a > sqrt(b^2 + c^2): the integrand "
                          "must stay positive");
    return two_pi * std::log((a + std::sqrt(a * a - b * b - c * c)) / 2.0);
}

double minimal_uncertainty_identity(const ModeState& ref, double m) {
    check_mode(ref, m);
    const complex cross = ref.u * std::conj(ref.du);
    const double w = 2.0 * m * cross.imag();
    if (std::abs(w - 1.0) > 1e-6)
        throw WronskianViolation("mode is not normalized: 2 m Im(u du*) = " +
                                 std::to_string(w));
    const double deriv = 2.0 * m * cross.real();  // m d|u|^2/dt
    return 0.5 * std::log1p(deriv * deriv);
}

double energy_expectation(const ModeState& ref, const QuadraticModel& model,
                          double t, const PhysicalConstants& consts) {
    if (ref.t != t)
        throw ValidationError("mode state and energy evaluation time disagree");
    const double m = model.mass(t);
    const double w2 = model.omega_sq(t);
    return 0.5 * consts.hbar() * m * (std::norm(ref.du) + w2 * std::norm(ref.u));
}

double random_phase_lower_bound(double r) {
    check_r(r);
    return entropy_floor + std::log((std::cosh(2.0 * r) + 1.0) / 2.0);
}

RandomPhaseBounds random_phase_bounds(double r, const ModeState& ref,
                                      const QuadraticModel& model, double t,
                                      const PhysicalConstants& consts) {
    check_r(r);
    check_mode(ref, model.mass(t));
    const double w2 = model.omega_sq(t);
    if (!(w2 > 0.0))
        throw FrequencyZero("energy bound needs omega(t)^2 > 0, got omega_sq = " +
                            std::to_string(w2));
    const double omega = std::sqrt(w2);
    const double energy = energy_expectation(ref, model, t, consts);
    const double ratio = energy / (consts.hbar() * omega / 2.0);
    const double base = entropy_floor + std::log((std::cosh(2.0 * r) + 1.0) / 2.0);
    const double base_alt = entropy_floor + std::log(std::cosh(2.0 * r) + 1.0);
    return {base, base + std::log(ratio), base_alt, base_alt + 0.5 * std::log(ratio)};
}

}  // namespace leipnik
