#include "leipnik/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace leipnik {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
// embedded 4th-order error weights
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// dense-output weights
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

void check_config(const IntegratorConfig& cfg) {
    if (!std::isfinite(cfg.rel_tol) || cfg.rel_tol <= 0.0)
        throw ValidationError("rel_tol must be finite and positive");
    if (!std::isfinite(cfg.abs_tol) || cfg.abs_tol <= 0.0)
        throw ValidationError("abs_tol must be finite and positive");
    if (!std::isfinite(cfg.max_step) || cfg.max_step < 0.0)
        throw ValidationError("max_step must be >= 0 (0 disables the cap)");
    if (!std::isfinite(cfg.wronskian_alarm) || cfg.wronskian_alarm <= 0.0)
        throw ValidationError("wronskian_alarm must be finite and positive");
}

void check_grid(const std::vector<double>& t_grid) {
    if (t_grid.empty()) throw ValidationError("time grid is empty");
    for (size_t i = 0; i < t_grid.size(); ++i) {
        if (!std::isfinite(t_grid[i]))
            throw ValidationError("time grid contains a non-finite value");
        if (i > 0 && t_grid[i] <= t_grid[i - 1])
            throw ValidationError("time grid must be strictly increasing");
    }
}

template <std::size_t N>
using State = std::array<double, N>;

// rhs(t, y, dy); emit(t, y) for every grid point in order; on_step(t, y)
// after every accepted step.
template <std::size_t N, typename Rhs, typename Emit, typename OnStep>
void dopri5(Rhs&& rhs, State<N> y, const std::vector<double>& t_grid,
            const IntegratorConfig& cfg, Emit&& emit, OnStep&& on_step,
            std::size_t& n_steps, std::size_t& n_rejected) {
    const double t_end = t_grid.back();
    double t = t_grid.front();

    std::size_t next = 0;
    emit(t, y);
    ++next;
    if (next == t_grid.size()) return;

    const double hmax0 = cfg.max_step > 0.0
                             ? cfg.max_step
                             : std::numeric_limits<double>::infinity();

    State<N> k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;
    rhs(t, y, k1);

    auto scale = [&](std::size_t i, const State<N>& a, const State<N>& b) {
        return cfg.abs_tol + cfg.rel_tol * std::max(std::abs(a[i]), std::abs(b[i]));
    };

    // conventional tolerance-scaled guess, refined by one Euler probe
    double h;
    {
        double d0 = 0.0, d1n = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double sc = scale(i, y, y);
            d0 += (y[i] / sc) * (y[i] / sc);
            d1n += (k1[i] / sc) * (k1[i] / sc);
        }
        d0 = std::sqrt(d0 / N);
        d1n = std::sqrt(d1n / N);
        double h0 = (d0 < 1e-5 || d1n < 1e-5) ? 1e-6 : 0.01 * d0 / d1n;
        h0 = std::min({h0, t_end - t, hmax0});
        for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + h0 * k1[i];
        rhs(t + h0, ytmp, k2);
        double d2 = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double sc = scale(i, y, y);
            d2 += ((k2[i] - k1[i]) / sc) * ((k2[i] - k1[i]) / sc);
        }
        d2 = std::sqrt(d2 / N) / h0;
        const double dm = std::max(d1n, d2);
        const double h1 = dm > 1e-15 ? std::pow(0.01 / dm, 0.2) : std::max(1e-6, h0 * 1e-3);
        h = std::min({100.0 * h0, h1, t_end - t, hmax0});
    }

    while (t < t_end) {
        if (h < 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(t), 1.0))
            throw IntegrationError("step size underflow at t = " + num(t));
        bool last = false;
        if (h >= t_end - t) {
            h = t_end - t;
            last = true;
        }

        for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
        rhs(t + c2 * h, ytmp, k2);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, ytmp, k3);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, ytmp, k4);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, ytmp, k5);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                  a64 * k4[i] + a65 * k5[i]);
        rhs(t + h, ytmp, k6);
        for (std::size_t i = 0; i < N; ++i)
            ynew[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] +
                                  a75 * k5[i] + a76 * k6[i]);
        rhs(t + h, ynew, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                   e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc = scale(i, y, ynew);
            err += (ei / sc) * (ei / sc);
        }
        err = std::sqrt(err / N);

        if (err > 1.0) {
            ++n_rejected;
            h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
            continue;
        }

        ++n_steps;
        const double t_new = last ? t_end : t + h;

        if (next < t_grid.size() && t_grid[next] <= t_new) {
            // quartic interpolant over the accepted step
            State<N> r1, r2, r3, r4, r5;
            for (std::size_t i = 0; i < N; ++i) {
                r1[i] = y[i];
                r2[i] = ynew[i] - y[i];
                r3[i] = h * k1[i] - r2[i];
                r4[i] = r2[i] - h * k7[i] - r3[i];
                r5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                             d6 * k6[i] + d7 * k7[i]);
            }
            while (next < t_grid.size() && t_grid[next] <= t_new) {
                const double tq = t_grid[next];
                if (tq == t_new) {
                    emit(tq, ynew);
                } else {
                    const double th = (tq - t) / h;
                    const double th1 = 1.0 - th;
                    State<N> yq;
                    for (std::size_t i = 0; i < N; ++i)
                        yq[i] = r1[i] +
                                th * (r2[i] + th1 * (r3[i] + th * (r4[i] + th1 * r5[i])));
                    emit(tq, yq);
                }
                ++next;
            }
        }

        on_step(t_new, ynew);
        t = t_new;
        y = ynew;
        k1 = k7;

        double fac = 0.9 * std::pow(std::max(err, 1e-16), -0.2);
        h *= std::clamp(fac, 0.2, 5.0);
        h = std::min(h, hmax0);
    }
}

double wronskian_drift(const State<4>& y) {
    // W = u pi* - pi u* = 2 i Im(u pi*); deviation from i
    return std::abs(2.0 * (y[1] * y[2] - y[0] * y[3]) - 1.0);
}

}  // namespace

Trajectory integrate_mode(const QuadraticModel& model, const ModeState& init,
                          const std::vector<double>& t_grid,
                          const IntegratorConfig& cfg) {
    check_config(cfg);
    check_grid(t_grid);
    if (init.t != t_grid.front())
        throw ValidationError("initial state time must equal the first grid point");

    const double m_init = model.mass(init.t);
    State<4> y0{init.u.real(), init.u.imag(), m_init * init.du.real(),
                m_init * init.du.imag()};
    if (wronskian_drift(y0) > cfg.wronskian_alarm)
        throw WronskianDriftExceeded(
            "initial state is not Wronskian-normalized: |W - i| = " +
            num(wronskian_drift(y0)));

    Trajectory out;
    out.states.reserve(t_grid.size());
    out.mass.reserve(t_grid.size());

    auto rhs = [&model](double t, const State<4>& y, State<4>& dy) {
        const double m = model.mass(t);
        const double w2 = model.omega_sq(t);
        dy[0] = y[2] / m;
        dy[1] = y[3] / m;
        dy[2] = -m * w2 * y[0];
        dy[3] = -m * w2 * y[1];
    };

    auto check = [&out, &cfg](double t, const State<4>& y) {
        const double d = wronskian_drift(y);
        if (d > out.max_wronskian_drift) out.max_wronskian_drift = d;
        if (d > cfg.wronskian_alarm)
            throw WronskianDriftExceeded("Wronskian drift " + num(d) +
                                         " exceeds alarm threshold at t = " +
                                         num(t));
    };

    auto emit = [&](double t, const State<4>& y) {
        check(t, y);
        const double m = model.mass(t);
        out.states.push_back({t, complex(y[0], y[1]), complex(y[2] / m, y[3] / m)});
        out.mass.push_back(m);
    };

    dopri5<4>(rhs, y0, t_grid, cfg, emit, check, out.n_steps, out.n_rejected);
    return out;
}

CentroidTrajectory integrate_centroid(const QuadraticModel& model,
                                      const CentroidState& init,
                                      const std::vector<double>& t_grid,
                                      const IntegratorConfig& cfg) {
    check_config(cfg);
    check_grid(t_grid);
    if (init.t != t_grid.front())
        throw ValidationError("initial state time must equal the first grid point");
    if (!std::isfinite(init.x) || !std::isfinite(init.p) || !std::isfinite(init.action))
        throw ValidationError("centroid initial state must be finite");

    CentroidTrajectory out;
    out.states.reserve(t_grid.size());

    auto rhs = [&model](double t, const State<3>& y, State<3>& dy) {
        const double m = model.mass(t);
        const double w2 = model.omega_sq(t);
        const double f = model.force(t);
        dy[0] = y[1] / m;
        dy[1] = -m * w2 * y[0] + f;
        dy[2] = y[1] * y[1] / (2.0 * m) - m * w2 * y[0] * y[0] / 2.0 + f * y[0];
    };

    auto emit = [&out](double t, const State<3>& y) {
        out.states.push_back({t, y[0], y[1], y[2]});
    };

    State<3> y0{init.x, init.p, init.action};
    dopri5<3>(rhs, y0, t_grid, cfg, emit, [](double, const State<3>&) {},
              out.n_steps, out.n_rejected);
    return out;
}

double DensityGrid::integral() const {
    double s = 0.0;
    for (size_t i = 0; i + 1 < axis.size(); ++i)
        s += (axis[i + 1] - axis[i]) * (values[i] + values[i + 1]) / 2.0;
    return s;
}

double DensityGrid::second_moment(double center) const {
    double s = 0.0;
    for (size_t i = 0; i + 1 < axis.size(); ++i) {
        const double fa = (axis[i] - center) * (axis[i] - center) * values[i];
        const double fb = (axis[i + 1] - center) * (axis[i + 1] - center) * values[i + 1];
        s += (axis[i + 1] - axis[i]) * (fa + fb) / 2.0;
    }
    return s;
}

DensityGrid evaluate_density(const GaussianPacket& packet, double m,
                             DensityKind kind, std::size_t n_points,
                             double width, const PhysicalConstants& consts) {
    if (n_points < 4) throw ValidationError("density grid needs at least 4 points");
    if (!std::isfinite(width) || width <= 0.0)
        throw ValidationError("density width (in sigmas) must be positive");

    const VariancePair v = variances(packet.mode, m, consts);
    const double sigma = kind == DensityKind::Position ? v.dx : v.dp;
    const double center = kind == DensityKind::Position ? packet.x_c : packet.p_c;

    DensityGrid g;
    g.kind = kind;
    g.axis.resize(n_points);
    g.values.resize(n_points);
    const double lo = center - width * sigma;
    const double hi = center + width * sigma;
    const double dx = (hi - lo) / static_cast<double>(n_points - 1);
    const double norm = 1.0 / (sigma * std::sqrt(two_pi));
    for (std::size_t i = 0; i < n_points; ++i) {
        const double x = lo + dx * static_cast<double>(i);
        const double z = (x - center) / sigma;
        g.axis[i] = x;
        g.values[i] = norm * std::exp(-0.5 * z * z);
    }
    return g;
}

}  // namespace leipnik
