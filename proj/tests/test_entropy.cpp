#include <doctest.h>

#include <cmath>
#include <numbers>

#include "leipnik/entropy.hpp"
#include "leipnik/modes.hpp"

using namespace leipnik;

namespace {

const double pi = std::numbers::pi;

// ternary search for the minimum of a unimodal function
double argmin(double lo, double hi, const auto& f) {
    for (int i = 0; i < 200; ++i) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (f(m1) < f(m2))
            hi = m2;
        else
            lo = m1;
    }
    return (lo + hi) / 2.0;
}

double free_pipeline_entropy(const SqueezeParams& sq, double m0, double t) {
    const ModeState mode = squeeze_mode(free_mode(m0, t), sq);
    return joint_entropy(variances(mode, m0));
}

}  // namespace

TEST_SUITE("entropy") {

TEST_CASE("the entropy floor is ln(e/2)") {
    // mpmath: 1 - log(2)
    CHECK(entropy_floor == doctest::Approx(0.30685281944005469058).epsilon(1e-16));
    const VariancePair minimal{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
    CHECK(joint_entropy(minimal) == doctest::Approx(entropy_floor).epsilon(1e-15));
}

TEST_CASE("joint entropy validates its inputs") {
    CHECK_THROWS_AS(joint_entropy({0.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(joint_entropy({1.0, -1.0}), ValidationError);
    CHECK_THROWS_AS(joint_entropy({std::nan(""), 1.0}), ValidationError);
}

TEST_CASE("initial entropy peaks at theta = pi/2 with the frozen value") {
    // mpmath: 1 - log(2) + log(sqrt(1 + sinh(2)^2)), r = 1, theta = pi/2
    const double expected = 1.6318555667979191215;
    CHECK(initial_entropy(SqueezeParams(1.0, pi / 2)) ==
          doctest::Approx(expected).epsilon(1e-15));
    // mpmath: log(sqrt(1 + sinh(2)^2))
    CHECK(initial_entropy(SqueezeParams(1.0, pi / 2)) - entropy_floor ==
          doctest::Approx(1.3250027473578644309).epsilon(1e-14));
}

TEST_CASE("initial entropy is the floor when r = 0 or theta in {0, pi}") {
    CHECK(initial_entropy(SqueezeParams(0.0, 2.2)) ==
          doctest::Approx(entropy_floor));
    CHECK(initial_entropy(SqueezeParams(1.7, 0.0)) ==
          doctest::Approx(entropy_floor));
    CHECK(initial_entropy(SqueezeParams(1.7, pi)) ==
          doctest::Approx(entropy_floor).epsilon(1e-13));
}

TEST_CASE("free-particle closed form equals the squeeze pipeline") {
    for (double r : {0.0, 0.3, 1.0, 2.0}) {
        for (double th : {0.0, pi / 2, 2.5, 3 * pi / 2, 5.9}) {
            const SqueezeParams sq(r, th);
            for (double t : {0.0, 0.4, 1.7, 5.0}) {
                CHECK(free_entropy_closed(sq, t) ==
                      doctest::Approx(free_pipeline_entropy(sq, 1.0, t))
                          .epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("free-particle closed form starts at the initial-entropy value") {
    for (double r : {0.0, 0.6, 1.4}) {
        for (double th : {0.1, 1.9, 4.4}) {
            const SqueezeParams sq(r, th);
            CHECK(free_entropy_closed(sq, 0.0) ==
                  doctest::Approx(initial_entropy(sq)).epsilon(1e-13));
        }
    }
}

TEST_CASE("mass enters the free closed form only through T = t/m0") {
    const SqueezeParams sq(0.8, 4.0);
    const double m0 = 3.0, t = 2.1;
    CHECK(free_pipeline_entropy(sq, m0, t) ==
          doctest::Approx(free_entropy_closed(sq, t / m0)).epsilon(1e-12));
}

TEST_CASE("entropy grows monotonically for theta = pi/2") {
    for (double r : {0.0, 0.5, 1.0}) {
        const SqueezeParams sq(r, pi / 2);
        double prev = free_entropy_closed(sq, 0.0);
        for (int i = 1; i <= 500; ++i) {
            const double cur = free_entropy_closed(sq, 5.0 * i / 500.0);
            CHECK(cur - prev >= -1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("the entropy dip time matches the frozen tanh value") {
    // mpmath: tanh(1); r = 0.5, theta = 3pi/2, m0 = 1
    const auto ts = entropy_minimum_time(SqueezeParams(0.5, 3 * pi / 2), 1.0);
    REQUIRE(ts.has_value());
    CHECK(*ts == doctest::Approx(0.76159415595576488812).epsilon(1e-14));
    // m0 scales the dip time linearly
    const auto ts3 = entropy_minimum_time(SqueezeParams(0.5, 3 * pi / 2), 3.0);
    CHECK(*ts3 == doctest::Approx(3.0 * *ts).epsilon(1e-14));
}

TEST_CASE("no dip without squeezing or for the growing half of angles") {
    CHECK_FALSE(entropy_minimum_time(SqueezeParams(0.0, 3 * pi / 2), 1.0));
    CHECK_FALSE(entropy_minimum_time(SqueezeParams(1.0, pi / 2), 1.0));
    CHECK_FALSE(entropy_minimum_time(SqueezeParams(1.0, pi), 1.0));
    CHECK_FALSE(entropy_minimum_time(SqueezeParams(1.0, 0.0), 1.0));
}

TEST_CASE("the dip reaches the floor exactly and a blind search agrees") {
    for (double r : {0.25, 0.8, 1.5}) {
        for (double th : {3.5, 3 * pi / 2, 5.8}) {
            const SqueezeParams sq(r, th);
            const auto ts = entropy_minimum_time(sq, 1.0);
            REQUIRE(ts.has_value());
            CHECK(free_entropy_closed(sq, *ts) ==
                  doctest::Approx(entropy_floor).epsilon(1e-12));
            const double blind = argmin(
                0.0, 10.0, [&](double t) { return free_entropy_closed(sq, t); });
            CHECK(blind == doctest::Approx(*ts).epsilon(1e-6));
        }
    }
}

TEST_CASE("the entropy falls before the dip and rises after it") {
    const SqueezeParams sq(1.0, 3 * pi / 2);
    const auto ts = entropy_minimum_time(sq, 1.0);
    REQUIRE(ts.has_value());
    const double h = *ts / 100.0;
    for (int i = 1; i < 100; ++i) {
        CHECK(free_entropy_closed(sq, i * h) <
              free_entropy_closed(sq, (i - 1) * h) + 1e-12);
    }
    for (int i = 0; i < 100; ++i) {
        CHECK(free_entropy_closed(sq, *ts + (i + 1) * h) >
              free_entropy_closed(sq, *ts + i * h) - 1e-12);
    }
}

TEST_CASE("oscillator entropy matches its frozen quarter-period value") {
    // mpmath: 1 - log(2) + log(cosh(1)); r = 0.5, theta = 0, t = pi/4
    const double expected = 0.74063364992308187761;
    CHECK(oscillator_entropy_closed(SqueezeParams(0.5, 0.0), 1.0, pi / 4) ==
          doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("oscillator entropy equals the squeeze pipeline") {
    const double w0 = 1.3, m0 = 0.7;
    for (double r : {0.0, 0.5, 1.2}) {
        for (double th : {0.0, 2.0, 4.9}) {
            const SqueezeParams sq(r, th);
            for (double t : {0.0, 0.8, 3.1}) {
                const ModeState mode = squeeze_mode(oscillator_mode(m0, w0, t), sq);
                CHECK(joint_entropy(variances(mode, m0)) ==
                      doctest::Approx(oscillator_entropy_closed(sq, w0, t))
                          .epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("oscillator entropy is pi/omega0 periodic with the frozen peak") {
    const SqueezeParams sq(1.0, 0.0);
    const double w0 = 2.0;
    for (double t : {0.0, 0.3, 1.1}) {
        CHECK(oscillator_entropy_closed(sq, w0, t) ==
              doctest::Approx(oscillator_entropy_closed(sq, w0, t + pi / w0))
                  .epsilon(1e-13));
    }
    // mpmath: 1 - log(2) + log(sqrt(1 + sinh(2)^2))
    CHECK(oscillator_entropy_max(1.0) ==
          doctest::Approx(1.6318555667979191215).epsilon(1e-15));
    // the peak sits a quarter period after a minimum: sin = 1 at 2 w0 t = pi/2
    CHECK(oscillator_entropy_closed(sq, w0, pi / (4.0 * w0)) ==
          doctest::Approx(oscillator_entropy_max(1.0)).epsilon(1e-14));
}

TEST_CASE("closed forms validate their scalar arguments") {
    const SqueezeParams sq(0.5, 0.0);
    CHECK_THROWS_AS(free_entropy_closed(sq, std::nan("")), ValidationError);
    CHECK_THROWS_AS(oscillator_entropy_closed(sq, 0.0, 1.0), ValidationError);
    CHECK_THROWS_AS(oscillator_entropy_closed(sq, -1.0, 1.0), ValidationError);
    CHECK_THROWS_AS(entropy_minimum_time(sq, 0.0), ValidationError);
    CHECK_THROWS_AS(oscillator_entropy_max(-0.5), ValidationError);
}

}  // TEST_SUITE
