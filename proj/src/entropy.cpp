#include "leipnik/entropy.hpp"

#include <cmath>
#include <string>

namespace leipnik {

namespace {

// trapezoid of -rho ln rho with 0 ln 0 = 0
double differential_entropy(const DensityGrid& g) {
    auto f = [](double v) { return v > 0.0 ? v * std::log(v) : 0.0; };
    double s = 0.0;
    for (size_t i = 0; i + 1 < g.axis.size(); ++i)
        s += (g.axis[i + 1] - g.axis[i]) * (f(g.values[i]) + f(g.values[i + 1])) / 2.0;
    return -s;
}

void check_r(double r) {
    if (!std::isfinite(r) || r < 0.0 || r > 50.0)
        throw ValidationError("squeeze amplitude r must lie in [0, 50]");
}

}  // namespace

double joint_entropy(const VariancePair& v, const PhysicalConstants& consts) {
    if (!std::isfinite(v.dx) || !std::isfinite(v.dp) || v.dx <= 0.0 || v.dp <= 0.0)
        throw ValidationError("variances must be finite and positive");
    return entropy_floor + std::log(2.0 * v.dx * v.dp / consts.hbar());
}

double leipnik_numeric(const DensityGrid& position, const DensityGrid& momentum,
                       const PhysicalConstants& consts) {
    if (position.kind != DensityKind::Position || momentum.kind != DensityKind::Momentum)
        throw ValidationError("leipnik_numeric needs a position and a momentum grid");
    for (const DensityGrid* g : {&position, &momentum}) {
        if (g->axis.size() != g->values.size() || g->axis.size() < 2)
            throw ValidationError("density grid is malformed");
        const double total = g->integral();
        if (std::abs(total - 1.0) > 1e-8)
            throw UnnormalizedDensity(
                "density integrates to " + std::to_string(total) +
                "; grid too coarse or truncated");
    }
    return differential_entropy(position) + differential_entropy(momentum) -
           std::log(two_pi * consts.hbar());
}

double free_entropy_closed(const SqueezeParams& sq, double T) {
    if (!std::isfinite(T)) throw ValidationError("T must be finite");
    const double c = std::cos(sq.theta() / 2.0);
    const double s = std::sin(sq.theta() / 2.0);
    const double grow = c * c + std::exp(4.0 * sq.r()) * s * s;
    const double a = c + T * s;
    const double b = s - T * c;
    const double decay = a * a + std::exp(-4.0 * sq.r()) * b * b;
    return entropy_floor + 0.5 * std::log(grow) + 0.5 * std::log(decay);
}

double initial_entropy(const SqueezeParams& sq) {
    const double s = std::sin(sq.theta());
    const double sh = std::sinh(2.0 * sq.r());
    return entropy_floor + 0.5 * std::log1p(s * s * sh * sh);
}

std::optional<double> entropy_minimum_time(const SqueezeParams& sq, double m0) {
    if (!std::isfinite(m0) || m0 <= 0.0)
        throw ValidationError("m0 must be finite and positive");
    if (sq.r() == 0.0) return std::nullopt;
    const double th = sq.theta();
    if (th <= std::numbers::pi) return std::nullopt;
    const double e4 = std::exp(-4.0 * sq.r());
    const double s = std::sin(th / 2.0);
    const double c = std::cos(th / 2.0);
    return -m0 * (1.0 - e4) * std::sin(th) / (2.0 * (s * s + e4 * c * c));
}

double oscillator_entropy_closed(const SqueezeParams& sq, double omega0, double t) {
    if (!std::isfinite(omega0) || omega0 <= 0.0)
        throw ValidationError("omega0 must be finite and positive");
    if (!std::isfinite(t)) throw ValidationError("t must be finite");
    const double sh = std::sinh(2.0 * sq.r());
    const double sn = std::sin(2.0 * omega0 * t - sq.theta());
    return entropy_floor + 0.5 * std::log1p(sh * sh * sn * sn);
}

double oscillator_entropy_max(double r) {
    check_r(r);
    const double sh = std::sinh(2.0 * r);
    return entropy_floor + 0.5 * std::log1p(sh * sh);
}

}  // namespace leipnik
