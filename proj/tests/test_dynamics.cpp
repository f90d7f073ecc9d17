#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "leipnik/dynamics.hpp"
#include "leipnik/entropy.hpp"
#include "leipnik/modes.hpp"

using namespace leipnik;

namespace {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = a + (b - a) * static_cast<double>(i) / (n - 1);
    return v;
}

const double pi = std::numbers::pi;

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("free mode integration tracks the exact solution") {
    const QuadraticModel model = QuadraticModel::free_particle(1.0);
    const Trajectory tr =
        integrate_mode(model, free_mode(1.0, 0.0), linspace(0.0, 10.0, 21));
    REQUIRE(tr.states.size() == 21);
    for (const ModeState& s : tr.states) {
        const ModeState exact = free_mode(1.0, s.t);
        CHECK(std::abs(s.u - exact.u) < 1e-7);
        CHECK(std::abs(s.du - exact.du) < 1e-9);
    }
    CHECK(tr.max_wronskian_drift < 1e-8);
    CHECK(tr.n_steps > 0);
}

TEST_CASE("oscillator integration tracks the closed form over one period") {
    const QuadraticModel model = QuadraticModel::oscillator(1.0, 1.0);
    const ClosedFormMode cf(model);
    const Trajectory tr =
        integrate_mode(model, cf.at(0.0), linspace(0.0, two_pi, 33));
    for (const ModeState& s : tr.states) {
        const ModeState exact = cf.at(s.t);
        CHECK(std::abs(s.u - exact.u) < 1e-8);
        CHECK(std::abs(s.du - exact.du) < 1e-8);
    }
}

TEST_CASE("damped mode integration tracks the closed form") {
    const QuadraticModel model = QuadraticModel::caldirola_kanai(1.0, 1.0, 0.6);
    const ClosedFormMode cf(model);
    const Trajectory tr =
        integrate_mode(model, cf.at(0.0), linspace(0.0, 10.0, 41));
    REQUIRE(tr.mass.size() == 41);
    for (size_t i = 0; i < tr.states.size(); ++i) {
        const ModeState exact = cf.at(tr.states[i].t);
        CHECK(std::abs(tr.states[i].u - exact.u) < 1e-8);
        CHECK(tr.mass[i] == doctest::Approx(model.mass(tr.states[i].t)));
    }
}

TEST_CASE("tighter tolerances buy a tighter solution") {
    const QuadraticModel model = QuadraticModel::oscillator(1.0, 1.0);
    const ClosedFormMode cf(model);
    const auto grid = linspace(0.0, 10.0, 11);

    IntegratorConfig loose;
    loose.rel_tol = 1e-6;
    loose.abs_tol = 1e-9;
    loose.wronskian_alarm = 1e-3;  // sloppy run drifts past the default alarm
    IntegratorConfig tight;
    tight.rel_tol = 1e-12;
    tight.abs_tol = 1e-14;

    const ModeState end = cf.at(10.0);
    const Trajectory a = integrate_mode(model, cf.at(0.0), grid, loose);
    const Trajectory b = integrate_mode(model, cf.at(0.0), grid, tight);
    const double err_a = std::abs(a.states.back().u - end.u);
    const double err_b = std::abs(b.states.back().u - end.u);
    CHECK(err_b < err_a);
    CHECK(err_b < 1e-10);
    CHECK(b.n_steps > a.n_steps);
}

TEST_CASE("dense output satisfies the equation of motion") {
    // central difference of the canonical momentum pi = m du against
    // d(pi)/dt = -m w^2 u, on integrator output alone
    const QuadraticModel model = QuadraticModel::caldirola_kanai(1.0, 1.0, 0.6);
    const ClosedFormMode cf(model);
    const int n = 2001;
    const auto grid = linspace(0.0, 2.0, n);
    const double h = grid[1] - grid[0];
    const Trajectory tr = integrate_mode(model, cf.at(0.0), grid);
    double worst = 0.0;
    for (int i = 1; i + 1 < n; ++i) {
        const complex pi_prev = tr.mass[i - 1] * tr.states[i - 1].du;
        const complex pi_next = tr.mass[i + 1] * tr.states[i + 1].du;
        const complex lhs = (pi_next - pi_prev) / (2.0 * h);
        const complex rhs = -tr.mass[i] * model.omega_sq(grid[i]) * tr.states[i].u;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    // O(h^2) truncation of the central difference dominates
    CHECK(worst < 5e-6);
}

TEST_CASE("grid and start-state contracts are enforced") {
    const QuadraticModel model = QuadraticModel::free_particle(1.0);
    const ModeState init = free_mode(1.0, 0.0);
    CHECK_THROWS_AS(integrate_mode(model, init, {}), ValidationError);
    CHECK_THROWS_AS(integrate_mode(model, init, {0.0, 0.0}), ValidationError);
    CHECK_THROWS_AS(integrate_mode(model, init, {0.0, 2.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(integrate_mode(model, init, {1.0, 2.0}), ValidationError);
    ModeState wrong = init;
    wrong.t = 1.0;
    CHECK_NOTHROW(integrate_mode(model, wrong, {1.0, 2.0}));
}

TEST_CASE("a denormalized start trips the Wronskian alarm immediately") {
    const QuadraticModel model = QuadraticModel::oscillator(1.0, 1.0);
    ModeState bad = oscillator_mode(1.0, 1.0, 0.0);
    bad.u *= 1.05;
    CHECK_THROWS_AS(integrate_mode(model, bad, linspace(0.0, 1.0, 5)),
                    WronskianDriftExceeded);
}

TEST_CASE("max_step caps the step size") {
    const QuadraticModel model = QuadraticModel::free_particle(1.0);
    IntegratorConfig capped;
    capped.max_step = 0.01;
    const Trajectory tr =
        integrate_mode(model, free_mode(1.0, 0.0), linspace(0.0, 1.0, 3), capped);
    CHECK(tr.n_steps >= 100);
}

TEST_CASE("driven centroid follows the two-frequency closed form") {
    // x'' + x = cos(2t), x(0) = p(0) = 0  =>  x = (cos t - cos 2t)/3
    const QuadraticModel model =
        QuadraticModel::oscillator(1.0, 1.0).with_force([](double t) {
            return std::cos(2.0 * t);
        });
    CentroidState init;
    const auto grid = linspace(0.0, pi, 9);
    const CentroidTrajectory tr = integrate_centroid(model, init, grid);
    for (const CentroidState& s : tr.states) {
        const double x = (std::cos(s.t) - std::cos(2.0 * s.t)) / 3.0;
        const double p = (-std::sin(s.t) + 2.0 * std::sin(2.0 * s.t)) / 3.0;
        CHECK(s.x == doctest::Approx(x).epsilon(1e-8));
        CHECK(s.p == doctest::Approx(p).epsilon(1e-8));
    }
}

TEST_CASE("free centroid accumulates the exact kinetic action") {
    const QuadraticModel model = QuadraticModel::free_particle(2.0);
    CentroidState init;
    init.x = 1.0;
    init.p = 3.0;
    const CentroidTrajectory tr =
        integrate_centroid(model, init, linspace(0.0, 4.0, 5));
    const CentroidState& end = tr.states.back();
    CHECK(end.x == doctest::Approx(1.0 + 3.0 * 4.0 / 2.0).epsilon(1e-12));
    CHECK(end.p == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(end.action == doctest::Approx(3.0 * 3.0 / (2.0 * 2.0) * 4.0).epsilon(1e-10));
}

TEST_CASE("oscillator action matches its closed form") {
    // x = cos t: action(t) = -sin(2t)/4
    const QuadraticModel model = QuadraticModel::oscillator(1.0, 1.0);
    CentroidState init;
    init.x = 1.0;
    const CentroidTrajectory tr =
        integrate_centroid(model, init, linspace(0.0, 1.3, 3));
    CHECK(tr.states.back().action ==
          doctest::Approx(-std::sin(2.6) / 4.0).epsilon(1e-8));
}

TEST_CASE("density grids integrate to one with correct second moments") {
    GaussianPacket packet;
    packet.mode = squeeze_mode(free_mode(1.0, 0.7), SqueezeParams(2.0, 1.1));
    packet.x_c = 0.4;
    packet.p_c = -1.2;
    const VariancePair v = variances(packet.mode, 1.0);
    for (DensityKind kind : {DensityKind::Position, DensityKind::Momentum}) {
        const DensityGrid g = evaluate_density(packet, 1.0, kind);
        const double sigma = kind == DensityKind::Position ? v.dx : v.dp;
        const double center = kind == DensityKind::Position ? packet.x_c : packet.p_c;
        CHECK(std::abs(g.integral() - 1.0) < 1e-9);
        CHECK(g.second_moment(center) ==
              doctest::Approx(sigma * sigma).epsilon(1e-9));
    }
}

TEST_CASE("truncated density grids are rejected downstream") {
    GaussianPacket packet;
    packet.mode = free_mode(1.0, 0.0);
    const DensityGrid pos =
        evaluate_density(packet, 1.0, DensityKind::Position, 512, 3.0);
    const DensityGrid mom = evaluate_density(packet, 1.0, DensityKind::Momentum);
    CHECK_THROWS_AS(leipnik_numeric(pos, mom), UnnormalizedDensity);
    CHECK_THROWS_AS(leipnik_numeric(mom, pos), ValidationError);  // kinds swapped
    CHECK_THROWS_AS(evaluate_density(packet, 1.0, DensityKind::Position, 2),
                    ValidationError);
    CHECK_THROWS_AS(evaluate_density(packet, 1.0, DensityKind::Position, 512, -1.0),
                    ValidationError);
}

}  // TEST_SUITE
