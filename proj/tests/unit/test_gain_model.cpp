#include "dacad/errors.hpp"
#include "dacad/gain_model.hpp"
#include "dacad/ladder_line.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace dacad;

TEST_CASE("voltage_gain")
{
    CHECK(voltage_gain(0.05, 50, 4) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(20 * std::log10(voltage_gain(0.05, 50, 4)) == doctest::Approx(13.9794).epsilon(1e-5));
    CHECK(voltage_gain(0.03, 60, 1) == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(voltage_gain(0.03, 60, 6) == doctest::Approx(6 * voltage_gain(0.03, 60, 1)).epsilon(1e-15));
    CHECK_THROWS_AS(voltage_gain(0, 50, 4), InvalidInput);
    CHECK_THROWS_AS(voltage_gain(0.05, 50, 0.5), InvalidInput);
}

TEST_CASE("power_gain_lossless")
{
    CHECK(power_gain_lossless(0.05, 50, 50, 4) == doctest::Approx(25.0).epsilon(1e-15));
    CHECK(power_gain_lossless(0.05, 50, 50, 4) == doctest::Approx(std::pow(voltage_gain(0.05, 50, 4), 2)).epsilon(1e-15));
    CHECK(power_gain_lossless(0.1, 40, 60, 1) == doctest::Approx(0.01 * 40 * 60 / 4).epsilon(1e-15));
    CHECK_THROWS_AS(power_gain_lossless(0.05, -50, 50, 4), InvalidInput);
}

TEST_CASE("power_gain_lossy")
{
    CHECK(power_gain_lossy(0.05, 50, 50, 0.2, 0.05, 4) == doctest::Approx(12.14492864).epsilon(1e-8));
    CHECK(10 * std::log10(power_gain_lossy(0.05, 50, 50, 0.2, 0.05, 4)) == doctest::Approx(10.84395).epsilon(1e-5));
    CHECK(power_gain_lossy(0.05, 50, 50, 0.3, 0.01, 1) == doctest::Approx(power_gain_lossless(0.05, 50, 50, 1)).epsilon(1e-14));
    CHECK(power_gain_lossy(0.05, 50, 50, 0, 0, 4) == power_gain_lossless(0.05, 50, 50, 4));
    const double equal = power_gain_lossy(0.05, 50, 50, 0.1, 0.1, 4);
    CHECK(equal == doctest::Approx(1.5625 * std::pow(4 * std::exp(-0.3), 2)).epsilon(1e-14));
    CHECK(power_gain_lossy(0.05, 50, 50, 0.1, 0.1 + 1e-7, 4) == doctest::Approx(equal).epsilon(1e-6));
    CHECK_THROWS_AS(power_gain_lossy(0.05, 50, 50, -0.1, 0.1, 4), InvalidInput);
}

TEST_CASE("n_opt_from_losses")
{
    CHECK(n_opt_from_losses(0.2, 0.05) == doctest::Approx(9.24196240747).epsilon(1e-10));
    CHECK(n_opt_from_losses(0.1, 0.1) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(n_opt_from_losses(0.05, 0.2) == doctest::Approx(n_opt_from_losses(0.2, 0.05)).epsilon(1e-14));
    CHECK_THROWS_AS(n_opt_from_losses(0, 0.1), InvalidInput);
}

TEST_CASE("n_opt_from_params")
{
    CHECK(n_opt_from_params(2e9, 1, 1.79e-12, 200, 50) == doctest::Approx(20.388952143616).epsilon(1e-10));
    const double ag = gate_loss_per_cell(2e9, 1, 1.79e-12, 50);
    const double ad = drain_loss_per_cell(50, 200);
    CHECK(n_opt_from_losses(ag, ad) == doctest::Approx(20.388952143616).epsilon(1e-10));

    // pick f so that w^2 ri cgs^2 rds = 1
    const double f = 1.0 / (2 * std::numbers::pi * 1e-12 * std::sqrt(100.0));
    CHECK(n_opt_from_params(f, 1, 1e-12, 100, 50) == doctest::Approx(4.0).epsilon(1e-8));
    CHECK_THROWS_AS(n_opt_from_params(2e9, 0, 1e-12, 100, 50), InvalidInput);
    CHECK_THROWS_AS(n_opt_from_params(2e9, 1, 1e-12, std::numeric_limits<double>::infinity(), 50), InvalidInput);
}

TEST_CASE("recommended_n")
{
    CHECK(recommended_n(9.242) == 6);
    CHECK(recommended_n(2.1) == 3);
    CHECK(recommended_n(4.5) == 5);
    CHECK(recommended_n(4.49) == 4);
    CHECK(recommended_n(0.2) == 3);
    CHECK(recommended_n(std::numeric_limits<double>::infinity()) == 6);
}

TEST_CASE("the two optimum forms agree over random parameters")
{
    std::mt19937_64 rng(27);
    std::uniform_real_distribution<double> uf(0.1e9, 20e9), uri(0.1, 5), ucgs(0.05e-12, 2e-12),
        urds(50, 1000), uz(25, 75);
    for (int i = 0; i < 1000; ++i) {
        const double f = uf(rng), ri = uri(rng), cgs = ucgs(rng), rds = urds(rng), z0 = uz(rng);
        const double a = n_opt_from_params(f, ri, cgs, rds, z0);
        const double b = n_opt_from_losses(gate_loss_per_cell(f, ri, cgs, z0), drain_loss_per_cell(z0, rds));
        CHECK(std::abs(a - b) <= 1e-9 * std::abs(b));
    }
}

TEST_CASE("lossy gain properties over random losses")
{
    std::mt19937_64 rng(28);
    std::uniform_real_distribution<double> uf(0.1e9, 20e9), uri(0.1, 5), ucgs(0.05e-12, 2e-12),
        urds(50, 1000), uz(25, 75), un(1, 12);
    int probed = 0;
    for (int i = 0; i < 1000; ++i) {
        const double z0 = uz(rng);
        const double ag = gate_loss_per_cell(uf(rng), uri(rng), ucgs(rng), z0);
        const double ad = drain_loss_per_cell(z0, urds(rng));
        const double n = std::round(un(rng));

        const double lossless = power_gain_lossless(0.05, z0, z0, n);
        const double tiny = power_gain_lossy(0.05, z0, z0, ag * 1e-6, ad * 1e-6, n);
        CHECK(tiny / lossless >= 1 - 1e-3);
        CHECK(tiny / lossless <= 1 + 1e-12);
        CHECK(power_gain_lossy(0.05, z0, z0, ag, ad, n) <= lossless * (1 + 1e-9));

        const double nopt = n_opt_from_losses(ag, ad);
        if (std::abs(ag - ad) > 1e-12 && nopt - 0.01 >= 1) {
            ++probed;
            const double peak = power_gain_lossy(0.05, z0, z0, ag, ad, nopt);
            CHECK(power_gain_lossy(0.05, z0, z0, ag, ad, nopt - 0.01) <= peak);
            CHECK(power_gain_lossy(0.05, z0, z0, ag, ad, nopt + 0.01) <= peak);
        }

        if (n > 1) {
            const double base = power_gain_lossy(0.05, z0, z0, ag, ad, n);
            CHECK(power_gain_lossy(0.05, z0, z0, ag * 1.1 + 1e-6, ad, n) < base);
            CHECK(power_gain_lossy(0.05, z0, z0, ag, ad * 1.1 + 1e-6, n) < base);
        }
    }
    CHECK(probed > 500);
}
