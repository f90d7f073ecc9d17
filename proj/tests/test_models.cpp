#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "leipnik/model.hpp"
#include "leipnik/modes.hpp"

using namespace leipnik;

TEST_SUITE("models") {

TEST_CASE("free particle has constant mass and no potential") {
    const QuadraticModel m = QuadraticModel::free_particle(2.5);
    CHECK(m.kind() == ModelKind::FreeParticle);
    CHECK(m.mass(0.0) == 2.5);
    CHECK(m.mass(17.0) == 2.5);
    CHECK(m.omega_sq(3.0) == 0.0);
    CHECK(m.force(3.0) == 0.0);
    CHECK(m.m0() == 2.5);
    CHECK(m.characteristic_time() == 2.5);
}

TEST_CASE("oscillator exposes omega0 and its period") {
    const QuadraticModel m = QuadraticModel::oscillator(1.0, 2.0);
    CHECK(m.kind() == ModelKind::Oscillator);
    CHECK(m.omega_sq(1.23) == 4.0);
    CHECK(m.omega0() == 2.0);
    CHECK(m.effective_omega() == 2.0);
    CHECK(m.characteristic_time() == doctest::Approx(std::numbers::pi));
}

TEST_CASE("damped model grows its mass exponentially") {
    const QuadraticModel m = QuadraticModel::caldirola_kanai(1.0, 1.0, 0.6);
    CHECK(m.kind() == ModelKind::CaldirolaKanai);
    // mpmath: exp(0.6)
    CHECK(m.mass(1.0) == doctest::Approx(1.8221188003905089749).epsilon(1e-15));
    CHECK(m.omega_sq(5.0) == 1.0);
    CHECK(m.gamma() == 0.6);
    // mpmath: sqrt(1 - 0.09)
    CHECK(m.effective_omega() ==
          doctest::Approx(0.95393920141694564915).epsilon(1e-15));
}

TEST_CASE("overdamped and critically damped models are rejected") {
    CHECK_THROWS_AS(QuadraticModel::caldirola_kanai(1.0, 1.0, 2.0),
                    OverdampedUnsupported);
    CHECK_THROWS_AS(QuadraticModel::caldirola_kanai(1.0, 1.0, 2.5),
                    OverdampedUnsupported);
    CHECK_THROWS_AS(QuadraticModel::caldirola_kanai(1.0, 1.0, -0.1),
                    ValidationError);
}

TEST_CASE("nonpositive constructor parameters are rejected") {
    CHECK_THROWS_AS(QuadraticModel::free_particle(0.0), ValidationError);
    CHECK_THROWS_AS(QuadraticModel::free_particle(-1.0), ValidationError);
    CHECK_THROWS_AS(QuadraticModel::oscillator(1.0, 0.0), ValidationError);
    CHECK_THROWS_AS(QuadraticModel::oscillator(0.0, 1.0), ValidationError);
}

TEST_CASE("custom model wraps the supplied callables") {
    const QuadraticModel m = QuadraticModel::custom(
        [](double t) { return 1.0 + t * t; }, [](double) { return 2.0; },
        [](double t) { return 3.0 * t; }, "poly");
    CHECK(m.kind() == ModelKind::Custom);
    CHECK(m.label() == "poly");
    CHECK(m.mass(2.0) == 5.0);
    CHECK(m.omega_sq(0.0) == 2.0);
    CHECK(m.force(2.0) == 6.0);
    CHECK(m.characteristic_time() == 1.0);
    CHECK_THROWS_AS(m.m0(), ValidationError);
    CHECK_THROWS_AS(m.omega0(), ValidationError);
}

TEST_CASE("custom coefficients must stay finite and mass positive") {
    const QuadraticModel bad_mass = QuadraticModel::custom(
        [](double t) { return 1.0 - t; }, [](double) { return 0.0; },
        [](double) { return 0.0; }, "shrinking");
    CHECK(bad_mass.mass(0.0) == 1.0);
    CHECK_THROWS_AS(bad_mass.mass(1.0), ModelEvaluationError);
    CHECK_THROWS_AS(bad_mass.mass(2.0), ModelEvaluationError);

    const QuadraticModel bad_w2 = QuadraticModel::custom(
        [](double) { return 1.0; },
        [](double) { return std::numeric_limits<double>::infinity(); },
        [](double) { return 0.0; }, "blowup");
    CHECK_THROWS_AS(bad_w2.omega_sq(0.0), ModelEvaluationError);

    const QuadraticModel throwing = QuadraticModel::custom(
        [](double) -> double { throw std::runtime_error("boom"); },
        [](double) { return 0.0; }, [](double) { return 0.0; }, "throwing");
    CHECK_THROWS_AS(throwing.mass(0.0), ModelEvaluationError);
}

TEST_CASE("with_force leaves the original model alone") {
    const QuadraticModel base = QuadraticModel::oscillator(1.0, 1.0);
    const QuadraticModel driven =
        base.with_force([](double t) { return 4.0 * std::sin(t); });
    CHECK(base.force(1.0) == 0.0);
    CHECK(driven.force(std::numbers::pi / 2) == doctest::Approx(4.0));
    CHECK(driven.omega_sq(0.0) == base.omega_sq(0.0));
    CHECK(driven.kind() == base.kind());
}

TEST_CASE("closed-form modes satisfy the Wronskian for every named kind") {
    const QuadraticModel models[] = {
        QuadraticModel::free_particle(1.5),
        QuadraticModel::oscillator(2.0, 0.7),
        QuadraticModel::caldirola_kanai(1.0, 1.0, 0.6),
    };
    for (const QuadraticModel& m : models) {
        const ClosedFormMode cf(m);
        for (double t : {0.0, 0.9, 4.2, 11.0}) {
            const ModeState s = cf.at(t);
            CHECK(std::abs(wronskian(s, m.mass(t)) - complex(0.0, 1.0)) < 5e-15);
        }
    }
}

TEST_CASE("closed-form modes refuse custom models") {
    const QuadraticModel m = QuadraticModel::custom(
        [](double) { return 1.0; }, [](double) { return 1.0; },
        [](double) { return 0.0; }, "custom");
    CHECK_THROWS_AS(ClosedFormMode{m}, ValidationError);
}

TEST_CASE("damped mode decays at half the damping rate") {
    const double g = 0.6;
    const ModeState a = caldirola_kanai_mode(1.0, 1.0, g, 0.0);
    const ModeState b = caldirola_kanai_mode(1.0, 1.0, g, 2.0);
    CHECK(std::abs(b.u) ==
          doctest::Approx(std::abs(a.u) * std::exp(-g)).epsilon(1e-14));
}

TEST_CASE("oscillator mode has constant amplitude 1/sqrt(2 m w)") {
    for (double t : {0.0, 1.1, 6.0}) {
        const ModeState s = oscillator_mode(2.0, 0.5, t);
        CHECK(std::abs(s.u) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
        CHECK(std::abs(s.du) == doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(1e-14));
    }
}

}  // TEST_SUITE
