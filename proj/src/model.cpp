#include "leipnik/model.hpp"

#include <cmath>

#include "leipnik/core.hpp"

namespace leipnik {

namespace {

void check_positive(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0)
        throw ValidationError(std::string(name) + " must be finite and positive, got " +
                              std::to_string(v));
}

double call_checked(const ScalarFn& fn, double t, const char* what) {
    double v;
    try {
        v = fn(t);
    } catch (const std::exception& e) {
        throw ModelEvaluationError(std::string(what) + "(t) failed at t = " +
                                   std::to_string(t) + ": " + e.what());
    }
    if (!std::isfinite(v))
        throw ModelEvaluationError(std::string(what) + "(t) is not finite at t = " +
                                   std::to_string(t));
    return v;
}

}  // namespace

QuadraticModel QuadraticModel::free_particle(double m0) {
    check_positive(m0, "m0");
    QuadraticModel m;
    m.kind_ = ModelKind::FreeParticle;
    m.label_ = "free_particle";
    m.m0_ = m0;
    return m;
}

QuadraticModel QuadraticModel::oscillator(double m0, double omega0) {
    check_positive(m0, "m0");
    check_positive(omega0, "omega0");
    QuadraticModel m;
    m.kind_ = ModelKind::Oscillator;
    m.label_ = "oscillator";
    m.m0_ = m0;
    m.omega0_ = omega0;
    return m;
}

QuadraticModel QuadraticModel::caldirola_kanai(double m0, double omega0,
                                               double gamma) {
    check_positive(m0, "m0");
    check_positive(omega0, "omega0");
    if (!std::isfinite(gamma) || gamma < 0.0)
        throw ValidationError("gamma must be finite and >= 0, got " +
                              std::to_string(gamma));
    if (omega0 <= gamma / 2.0)
        throw OverdampedUnsupported(
            "damped oscillator needs omega0 > gamma/2 (got omega0 = " +
            std::to_string(omega0) + ", gamma = " + std::to_string(gamma) +
            "); critically damped and overdamped regimes have no oscillatory mode");
    QuadraticModel m;
    m.kind_ = ModelKind::CaldirolaKanai;
    m.label_ = "caldirola_kanai";
    m.m0_ = m0;
    m.omega0_ = omega0;
    m.gamma_ = gamma;
    return m;
}

QuadraticModel QuadraticModel::custom(ScalarFn mass, ScalarFn omega_sq,
                                      ScalarFn force, std::string label) {
    if (!mass || !omega_sq || !force)
        throw ValidationError("custom model needs all three coefficient callables");
    QuadraticModel m;
    m.kind_ = ModelKind::Custom;
    m.label_ = std::move(label);
    m.mass_fn_ = std::move(mass);
    m.omega_sq_fn_ = std::move(omega_sq);
    m.force_fn_ = std::move(force);
    return m;
}

double QuadraticModel::mass(double t) const {
    double v;
    switch (kind_) {
        case ModelKind::FreeParticle:
        case ModelKind::Oscillator:
            return m0_;
        case ModelKind::CaldirolaKanai:
            v = m0_ * std::exp(gamma_ * t);
            break;
        default:
            v = call_checked(mass_fn_, t, "mass");
            break;
    }
    if (!std::isfinite(v) || v <= 0.0)
        throw ModelEvaluationError("mass(t) must stay finite and positive; got " +
                                   std::to_string(v) + " at t = " + std::to_string(t));
    return v;
}

double QuadraticModel::omega_sq(double t) const {
    switch (kind_) {
        case ModelKind::FreeParticle:
            return 0.0;
        case ModelKind::Oscillator:
        case ModelKind::CaldirolaKanai:
            return omega0_ * omega0_;
        default:
            return call_checked(omega_sq_fn_, t, "omega_sq");
    }
}

double QuadraticModel::force(double t) const {
    if (force_fn_) return call_checked(force_fn_, t, "force");
    return 0.0;
}

void QuadraticModel::require_named(const char* what) const {
    if (kind_ == ModelKind::Custom)
        throw ValidationError(std::string(what) + " is defined for named models only");
}

double QuadraticModel::m0() const {
    require_named("m0");
    return m0_;
}

double QuadraticModel::omega0() const {
    require_named("omega0");
    if (kind_ == ModelKind::FreeParticle)
        throw ValidationError("free particle has no omega0");
    return omega0_;
}

double QuadraticModel::gamma() const {
    require_named("gamma");
    if (kind_ != ModelKind::CaldirolaKanai)
        throw ValidationError("gamma is defined for the damped oscillator only");
    return gamma_;
}

double QuadraticModel::effective_omega() const {
    require_named("effective_omega");
    switch (kind_) {
        case ModelKind::Oscillator:
            return omega0_;
        case ModelKind::CaldirolaKanai:
            return std::sqrt(omega0_ * omega0_ - gamma_ * gamma_ / 4.0);
        default:
            throw ValidationError("free particle has no oscillation frequency");
    }
}

double QuadraticModel::characteristic_time() const {
    switch (kind_) {
        case ModelKind::FreeParticle:
            return m0_;
        case ModelKind::Oscillator:
        case ModelKind::CaldirolaKanai:
            return two_pi / effective_omega();
        default:
            return 1.0;
    }
}

QuadraticModel QuadraticModel::with_force(ScalarFn force) const {
    if (!force) throw ValidationError("with_force needs a callable");
    QuadraticModel m = *this;
    m.force_fn_ = std::move(force);
    return m;
}

}  // namespace leipnik
