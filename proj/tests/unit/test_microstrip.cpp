#include "dacad/errors.hpp"
#include "dacad/microstrip.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace dacad;

namespace {

const Substrate kFr4{4.4, 1.6, 0.035};

} // namespace

TEST_CASE("width_for on FR4")
{
    CHECK(width_for(50, kFr4) == doctest::Approx(2.94927250874).epsilon(1e-10));
    CHECK_THROWS_AS(width_for(500, kFr4), UnrealizableGeometry);
    CHECK_THROWS_AS(width_for(0, kFr4), InvalidInput);

    const Substrate bare{4.4, 1.6, 0.0};
    CHECK(width_for(0.0 + 1e-300, bare) == doctest::Approx(7.475 * 1.6).epsilon(1e-12));
}

TEST_CASE("z0_of on FR4")
{
    auto r = z0_of(2.94927250874, kFr4);
    CHECK(r.z0 == doctest::Approx(50.0).epsilon(1e-10));
    CHECK(r.in_validity_window);

    const double boundary = (5.98 * 1.6 - 0.035) / 0.8;
    CHECK(std::abs(z0_of(boundary, kFr4).z0) < 1e-12);

    auto narrow = z0_of(0.05, kFr4);
    CHECK_FALSE(narrow.in_validity_window);
    CHECK(narrow.z0 > 0);
    CHECK_FALSE(z0_of(5.0, kFr4).in_validity_window);

    CHECK_THROWS_AS(z0_of(boundary * 1.01, kFr4), UnrealizableGeometry);
    CHECK_THROWS_AS(z0_of(0, kFr4), InvalidInput);
    CHECK_THROWS_AS(z0_of(1, Substrate{0.5, 1.6, 0}), InvalidInput);
}

TEST_CASE("line_constants")
{
    auto k = line_constants(50, 4.4);
    CHECK(k.l_per_cm == doctest::Approx(2.770567998).epsilon(1e-9));
    CHECK(k.c_per_cm == doctest::Approx(1.108227199).epsilon(1e-9));
    CHECK(k.c_per_cm * 50 * 50 == doctest::Approx(1000 * k.l_per_cm).epsilon(1e-14));
    const double rounded = 23 * std::sqrt(5.81) / 50;
    CHECK(std::abs(rounded - k.c_per_cm) / k.c_per_cm < 0.005);
    CHECK_THROWS_AS(line_constants(0, 4.4), InvalidInput);
    CHECK_THROWS_AS(line_constants(50, 0.9), InvalidInput);
}

TEST_CASE("segment_length")
{
    CHECK(segment_length(4.475e-9, 2.771) == doctest::Approx(1.61494045).epsilon(1e-8));
    CHECK(segment_length(3e-9, 3.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(segment_length(3e-9, 1.5) == doctest::Approx(2 * segment_length(3e-9, 3.0)).epsilon(1e-15));
    CHECK_THROWS_AS(segment_length(0, 1), InvalidInput);
    CHECK_THROWS_AS(segment_length(1e-9, -1), InvalidInput);
}

TEST_CASE("phase_shift")
{
    CHECK(phase_shift(1.615, 1e9, 2.771, 1.108) == doctest::Approx(0.5622643).epsilon(1e-6));
    const double lambda = 1.0 / std::sqrt(2.771e-9 * 1.108e-12) / 1e9;
    CHECK(phase_shift(lambda, 1e9, 2.771, 1.108) == doctest::Approx(2 * std::numbers::pi).epsilon(1e-12));
    CHECK(phase_shift(1.0, 2e9, 2.771, 1.108) == doctest::Approx(2 * phase_shift(1.0, 1e9, 2.771, 1.108)));
    CHECK_THROWS_AS(phase_shift(1.0, 0, 2.771, 1.108), InvalidInput);
}

TEST_CASE("synthesize_line")
{
    auto line = synthesize_line(50, 4.475e-9, kFr4);
    CHECK(line.width == doctest::Approx(2.94927250874).epsilon(1e-10));
    CHECK(line.length == doctest::Approx(1.615192).epsilon(1e-6));
    CHECK(line.z0 == 50);
    CHECK(line.substrate == kFr4);
    CHECK(line.l_per_cm / (line.z0 * line.z0) * 1000 == doctest::Approx(line.c_per_cm).epsilon(1e-9));
}

TEST_CASE("width and impedance round trip over the stackup ranges")
{
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> uz(30, 90), ue(2.2, 10.2), uh(0.2, 1.6), ut(0, 0.07);
    int realized = 0;
    for (int i = 0; i < 5000; ++i) {
        const double z0 = uz(rng);
        const Substrate s{ue(rng), uh(rng), ut(rng)};
        double w = 0;
        try {
            w = width_for(z0, s);
        } catch (const UnrealizableGeometry&) {
            continue;
        }
        ++realized;
        CHECK(std::abs(z0_of(w, s).z0 - z0) <= 1e-6 * z0);

        const double lm11 = 2 * std::log(5.98 * s.h / (0.8 * w + s.t));
        const double lm12 = line_constants(z0, s.er).l_per_cm;
        CHECK(std::abs(lm11 - lm12) <= 1e-9 * lm12);

        const double cm_rounded = 0.264 * (s.er + 1.41) / std::log(5.98 * s.h / (0.8 * w + s.t));
        const double cm = line_constants(z0, s.er).c_per_cm;
        CHECK(std::abs(cm_rounded - cm) <= 0.005 * cm);
    }
    CHECK(realized > 4000);
}

TEST_CASE("velocity depends only on the dielectric")
{
    for (double er : {2.2, 4.4, 10.2}) {
        auto ref = line_constants(50, er);
        const double v0 = 1 / std::sqrt(ref.l_per_cm * ref.c_per_cm);
        for (double z0 = 10; z0 < 200; z0 += 7.3) {
            auto k = line_constants(z0, er);
            CHECK(1 / std::sqrt(k.l_per_cm * k.c_per_cm) == doctest::Approx(v0).epsilon(1e-13));
        }
    }
}
