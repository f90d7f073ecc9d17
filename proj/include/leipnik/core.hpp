#pragma once

#include <complex>
#include <numbers>

#include "leipnik/errors.hpp"

namespace leipnik {

using complex = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// hbar is explicit everywhere a formula needs it; natural units by default.
class PhysicalConstants {
public:
    constexpr PhysicalConstants() = default;
    explicit PhysicalConstants(double hbar);
    double hbar() const noexcept { return hbar_; }

private:
    double hbar_ = 1.0;
};

// Complex mode amplitude and its time derivative at one instant.
// A physical mode satisfies m (u du* - du u*) = i.
struct ModeState {
    double t = 0.0;
    complex u{0.0, 0.0};
    complex du{0.0, 0.0};
};

// Position/momentum spreads; strictly positive by construction.
struct VariancePair {
    double dx;
    double dp;
    double product() const noexcept { return dx * dp; }
};

// Squeeze amplitude r in [0, 50] and angle reduced to [0, 2pi).
class SqueezeParams {
public:
    SqueezeParams(double r, double theta);
    double r() const noexcept { return r_; }
    double theta() const noexcept { return theta_; }

private:
    double r_;
    double theta_;
};

struct BogoliubovCoeffs {
    complex alpha;  // cosh r
    complex beta;   // e^{i theta} sinh r, |alpha|^2 - |beta|^2 = 1
};

// Centroid-carrying Gaussian packet: the mode fixes the spreads, (x_c, p_c)
// the center, s_c the accumulated classical action.
struct GaussianPacket {
    ModeState mode;
    double x_c = 0.0;
    double p_c = 0.0;
    double s_c = 0.0;
};

// Angle into [0, 2pi).
double reduce_angle(double theta);

// m (u du* - du u*); exactly i for a normalized mode.
complex wronskian(const ModeState& mode, double m);

// dx = sqrt(hbar |u|^2), dp = m sqrt(hbar |du|^2).
VariancePair variances(const ModeState& mode, double m,
                       const PhysicalConstants& consts = {});

// u -> cosh(r) u + e^{-i theta} sinh(r) u*; preserves the normalization.
ModeState squeeze_mode(const ModeState& ref, const SqueezeParams& sq);

BogoliubovCoeffs bogoliubov_coeffs(const SqueezeParams& sq);

}  // namespace leipnik
