#include "dacad/gain_model.hpp"

#include "dacad/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dacad {

namespace {

constexpr double kEqualLossTol = 1e-12;
constexpr double kUnitRatioTol = 1e-9;

void require_positive(double v, const char* what)
{
    if (!(v > 0) || !std::isfinite(v))
        throw InvalidInput(std::string(what) + " must be positive and finite");
}

void require_stages(double n)
{
    if (!(n >= 1) || !std::isfinite(n))
        throw InvalidInput("stage count must be >= 1");
}

} // namespace

double voltage_gain(double gm, double z0d, double n)
{
    require_positive(gm, "voltage_gain: gm");
    require_positive(z0d, "voltage_gain: z0d");
    require_stages(n);
    return gm * z0d / 2.0 * n;
}

double power_gain_lossless(double gm, double z0g, double z0d, double n)
{
    require_positive(gm, "power_gain_lossless: gm");
    require_positive(z0g, "power_gain_lossless: z0g");
    require_positive(z0d, "power_gain_lossless: z0d");
    require_stages(n);
    return gm * gm * z0g * z0d / 4.0 * n * n;
}

double power_gain_lossy(double gm, double z0g, double z0d, double ag, double ad, double n)
{
    require_positive(gm, "power_gain_lossy: gm");
    require_positive(z0g, "power_gain_lossy: z0g");
    require_positive(z0d, "power_gain_lossy: z0d");
    if (!(ag >= 0) || !(ad >= 0) || !std::isfinite(ag) || !std::isfinite(ad))
        throw InvalidInput("power_gain_lossy: losses must be non-negative");
    require_stages(n);

    double factor;
    if (std::abs(ag - ad) < kEqualLossTol) {
        // limit of the ratio as ad -> ag
        factor = n * std::exp(-(n - 1.0) * ag);
    } else {
        factor = (std::exp(-n * ag) - std::exp(-n * ad)) / (std::exp(-ag) - std::exp(-ad));
    }
    return gm * gm * z0g * z0d / 4.0 * factor * factor;
}

double n_opt_from_losses(double ag, double ad)
{
    require_positive(ag, "n_opt_from_losses: ag");
    require_positive(ad, "n_opt_from_losses: ad");
    if (std::abs(ag - ad) < kEqualLossTol)
        return 1.0 / ag;
    return std::log(ag / ad) / (ag - ad);
}

double n_opt_from_params(double f, double ri, double cgs, double rds, double z0)
{
    require_positive(f, "n_opt_from_params: f");
    require_positive(ri, "n_opt_from_params: ri");
    require_positive(cgs, "n_opt_from_params: cgs");
    require_positive(rds, "n_opt_from_params: rds");
    require_positive(z0, "n_opt_from_params: z0");

    const double w = 2.0 * std::numbers::pi * f;
    const double x = w * w * ri * cgs * cgs * rds;
    if (std::abs(x - 1.0) < kUnitRatioTol)
        return 2.0 * rds / z0;
    return 2.0 * rds * std::log(x) / (z0 * (x - 1.0));
}

int recommended_n(double n_opt)
{
    if (!(n_opt > 0))
        throw InvalidInput("recommended_n: n_opt must be positive");
    if (n_opt >= kMaxPracticalStages)
        return kMaxPracticalStages;
    const int rounded = static_cast<int>(std::floor(n_opt + 0.5));
    return std::clamp(rounded, kMinPracticalStages, kMaxPracticalStages);
}

} // namespace dacad
