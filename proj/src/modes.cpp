#include "leipnik/modes.hpp"

#include <cmath>

namespace leipnik {

namespace {

void check_positive(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0)
        throw ValidationError(std::string(name) + " must be finite and positive, got " +
                              std::to_string(v));
}

}  // namespace

ModeState free_mode(double m0, double t) {
    check_positive(m0, "m0");
    const double s = 1.0 / std::sqrt(2.0);
    return {t, complex(s, -s * t / m0), complex(0.0, -s / m0)};
}

ModeState oscillator_mode(double m0, double omega0, double t) {
    check_positive(m0, "m0");
    check_positive(omega0, "omega0");
    const double a = 1.0 / std::sqrt(2.0 * m0 * omega0);
    const complex u = std::polar(a, -omega0 * t);
    return {t, u, complex(0.0, -omega0) * u};
}

ModeState caldirola_kanai_mode(double m0, double omega0, double gamma, double t) {
    check_positive(m0, "m0");
    check_positive(omega0, "omega0");
    if (!std::isfinite(gamma) || gamma < 0.0)
        throw ValidationError("gamma must be finite and >= 0");
    if (omega0 <= gamma / 2.0)
        throw OverdampedUnsupported("caldirola_kanai_mode needs omega0 > gamma/2");
    const double omega = std::sqrt(omega0 * omega0 - gamma * gamma / 4.0);
    const double a = std::exp(-gamma * t / 2.0) / std::sqrt(2.0 * m0 * omega);
    const complex u = std::polar(a, -omega * t);
    return {t, u, complex(-gamma / 2.0, -omega) * u};
}

ClosedFormMode::ClosedFormMode(QuadraticModel model) : model_(std::move(model)) {
    if (model_.kind() == ModelKind::Custom)
        throw ValidationError(
            "no closed-form mode for custom models; integrate instead");
}

ModeState ClosedFormMode::at(double t) const {
    switch (model_.kind()) {
        case ModelKind::FreeParticle:
            return free_mode(model_.m0(), t);
        case ModelKind::Oscillator:
            return oscillator_mode(model_.m0(), model_.omega0(), t);
        default:
            return caldirola_kanai_mode(model_.m0(), model_.omega0(),
                                        model_.gamma(), t);
    }
}

}  // namespace leipnik
