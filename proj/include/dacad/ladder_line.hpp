#pragma once

#include <complex>

namespace dacad {

using Complex = std::complex<double>;

/// One constant-k unit cell of an artificial transmission line.
/// Values are per cell, not per unit length.
struct LineCell {
    double inductance = 0.0;  ///< [H]
    double capacitance = 0.0; ///< [F]
    double z0 = 0.0;          ///< sqrt(L/C) [ohm]
    double fc = 0.0;          ///< 1/(pi sqrt(LC)) [Hz]

    /// Builds a cell from L and C, filling z0 and fc.
    static LineCell from_lc(double inductance, double capacitance);

    bool operator==(const LineCell&) const = default;
};

/// Series impedance and shunt admittance per unit length of a loaded line.
struct LineSection {
    Complex z_series;
    Complex y_shunt;
};

double char_impedance(double l, double c);

/// Cell whose inductance gives impedance z0 with shunt capacitance c (L = z0^2 C).
LineCell cell_for_impedance(double z0, double c);

/// Cut-off of a line loaded by c at impedance z0: 1/(pi z0 c).
double cutoff_frequency(double z0, double c);

/// 1/sqrt(LC), in cells per second.
double phase_velocity(double l, double c);

// Per-cell attenuation (alpha times cell length), in nepers.
double gate_loss_per_cell(double f, double ri, double cgs, double z0);
double drain_loss_per_cell(double z0, double rds);

/// Gate line immittances. Line R and G are not modelled.
LineSection gate_section(double f, const LineCell& cell, double length, double ri, double cgs,
                         bool include_line_capacitance = false);

/// Drain line immittances. An infinite rds contributes no conductance.
LineSection drain_section(double f, const LineCell& cell, double length, double rds, double cds,
                          bool include_line_capacitance = false);

/// sqrt(Z Y) on the branch with non-negative real part.
Complex propagation_constant(const LineSection& section);

} // namespace dacad
