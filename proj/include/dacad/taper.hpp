#pragma once

#include "dacad/ladder_line.hpp"

#include <vector>

namespace dacad {

enum class LineSide { gate, drain };

/// Stepped-impedance line. Gate sections run from the source towards the
/// last stage; drain sections from the first stage towards the load.
struct TaperProfile {
    LineSide side = LineSide::gate;
    std::vector<double> sections; ///< [ohm]
    double terminal_impedance = 50.0; ///< source (gate) or load (drain)

    void validate() const;

    bool operator==(const TaperProfile&) const = default;
};

struct TaperReport {
    double gamma_overall_gate = 0.0;
    double gamma_overall_drain = 0.0;
    double z_overall_gate = 0.0;
    double z_overall_drain = 0.0;
    double fc_gate = 0.0;
    double fc_drain = 0.0;
    double fc_total = 0.0;
};

struct TaperPair {
    TaperProfile gate;
    TaperProfile drain;
};

/// Reflection coefficient at every junction, the terminal one included.
/// The gate list starts at the source junction; the drain list ends at the
/// load junction.
std::vector<double> junction_gammas(const TaperProfile& profile);

/// First-order multi-reflection sum with equal section electrical length theta.
Complex overall_gamma(const std::vector<double>& gammas, double theta);

/// overall_gamma at theta = pi/2, i.e. the alternating sum.
double overall_gamma_quarterwave(const std::vector<double>& gammas);

/// Classical tapering pattern: gate z0/k for k = 1..n+1, drain n*z0/k for k = 1..n.
TaperPair ginzton_profiles(int n, double z0);

/// Impedance seen through an overall reflection coefficient. The gate
/// convention is referenced from the source, the drain one from the load.
double equivalent_impedance(double gamma, LineSide side, double reference = 50.0);

TaperReport analyze_taper(const TaperProfile& gate, const TaperProfile& drain, double cgs,
                          double cds);

} // namespace dacad
