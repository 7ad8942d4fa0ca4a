#pragma once

#include <optional>

namespace dacad {

/// Gain summary of a design. Gains are linear ratios, not dB.
struct GainFigures {
    double av = 0.0;
    double gp_lossless = 0.0;
    double gp_lossy = 0.0;
    /// Continuous optimum stage count; empty when the line is lossless.
    std::optional<double> n_opt_continuous;
    int n_recommended = 0;
    int n = 0; ///< stage count actually used
};

inline constexpr int kMinPracticalStages = 3;
inline constexpr int kMaxPracticalStages = 6;

double voltage_gain(double gm, double z0d, double n);
double power_gain_lossless(double gm, double z0g, double z0d, double n);

/// Power gain with per-cell gate/drain attenuation ag, ad [Np]. n may be
/// fractional so the optimum can be probed continuously.
double power_gain_lossy(double gm, double z0g, double z0d, double ag, double ad, double n);

/// Stage count maximizing power_gain_lossy.
double n_opt_from_losses(double ag, double ad);

/// Same optimum written in device parameters at frequency f.
double n_opt_from_params(double f, double ri, double cgs, double rds, double z0);

/// Round half up, then clamp to the practical 3..6 band.
int recommended_n(double n_opt);

} // namespace dacad
