#include "leipnik/core.hpp"

#include <cmath>

namespace leipnik {

PhysicalConstants::PhysicalConstants(double hbar) : hbar_(hbar) {
    if (!std::isfinite(hbar) || hbar <= 0.0)
        throw ValidationError("hbar must be finite and positive, got " +
                              std::to_string(hbar));
}

double reduce_angle(double theta) {
    double x = std::fmod(theta, two_pi);
    if (x < 0.0) x += two_pi;
    if (x >= two_pi) x = 0.0;  // rounding of fmod(-eps) + 2pi
    return x;
}

SqueezeParams::SqueezeParams(double r, double theta) : r_(r) {
    if (!std::isfinite(r) || r < 0.0)
        throw ValidationError("squeeze amplitude r must be finite and >= 0");
    if (r > 50.0)
        throw ValidationError(
            "squeeze amplitude r = " + std::to_string(r) +
            " exceeds 50; cosh/sinh scales would lose all precision");
    if (!std::isfinite(theta))
        throw ValidationError("squeeze angle must be finite");
    theta_ = reduce_angle(theta);
}

complex wronskian(const ModeState& mode, double m) {
    if (!std::isfinite(m) || m <= 0.0)
        throw ValidationError("mass must be finite and positive");
    return m * (mode.u * std::conj(mode.du) - mode.du * std::conj(mode.u));
}

VariancePair variances(const ModeState& mode, double m,
                       const PhysicalConstants& consts) {
    if (!std::isfinite(m) || m <= 0.0)
        throw ValidationError("mass must be finite and positive");
    const double nu = std::norm(mode.u);
    const double ndu = std::norm(mode.du);
    if (nu == 0.0)
        throw ZeroAmplitude("mode amplitude |u| is zero at t = " +
                            std::to_string(mode.t));
    if (ndu == 0.0)
        throw ZeroAmplitude("mode velocity |du| is zero at t = " +
                            std::to_string(mode.t));
    const double hbar = consts.hbar();
    return {std::sqrt(hbar * nu), m * std::sqrt(hbar * ndu)};
}

ModeState squeeze_mode(const ModeState& ref, const SqueezeParams& sq) {
    const double ch = std::cosh(sq.r());
    const double sh = std::sinh(sq.r());
    const complex ph = std::polar(1.0, -sq.theta());
    return {ref.t, ch * ref.u + ph * sh * std::conj(ref.u),
            ch * ref.du + ph * sh * std::conj(ref.du)};
}

BogoliubovCoeffs bogoliubov_coeffs(const SqueezeParams& sq) {
    return {complex(std::cosh(sq.r()), 0.0),
            std::polar(std::sinh(sq.r()), sq.theta())};
}

}  // namespace leipnik
