#pragma once

#include "leipnik/core.hpp"
#include "leipnik/model.hpp"

namespace leipnik {

// Closed-form reference modes, Wronskian-normalized exactly.

// u = (1 - i t/m0)/sqrt(2), du = -i/(sqrt(2) m0).
ModeState free_mode(double m0, double t);

// u = e^{-i omega0 t} / sqrt(2 m0 omega0).
ModeState oscillator_mode(double m0, double omega0, double t);

// m(t) = m0 e^{gamma t}: u = e^{-gamma t/2} e^{-i omega t} / sqrt(2 m0 omega)
// with omega = sqrt(omega0^2 - gamma^2/4). Underdamped only.
ModeState caldirola_kanai_mode(double m0, double omega0, double gamma, double t);

// Uniform closed-form access for any named model.
class ClosedFormMode {
public:
    explicit ClosedFormMode(QuadraticModel model);  // ValidationError for Custom
    ModeState at(double t) const;
    const QuadraticModel& model() const noexcept { return model_; }

private:
    QuadraticModel model_;
};

}  // namespace leipnik
