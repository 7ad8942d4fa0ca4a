#include "dacad/ladder_line.hpp"

#include "dacad/errors.hpp"

#include <cmath>
#include <numbers>

namespace dacad {

namespace {

void require_positive(double v, const char* what)
{
    if (!(v > 0) || !std::isfinite(v))
        throw InvalidInput(std::string(what) + " must be positive and finite");
}

} // namespace

LineCell LineCell::from_lc(double inductance, double capacitance)
{
    require_positive(inductance, "cell inductance");
    require_positive(capacitance, "cell capacitance");
    return {inductance, capacitance, std::sqrt(inductance / capacitance),
            1.0 / (std::numbers::pi * std::sqrt(inductance * capacitance))};
}

double char_impedance(double l, double c)
{
    require_positive(l, "char_impedance: l");
    require_positive(c, "char_impedance: c");
    return std::sqrt(l / c);
}

LineCell cell_for_impedance(double z0, double c)
{
    require_positive(z0, "cell_for_impedance: z0");
    require_positive(c, "cell_for_impedance: c");
    return LineCell::from_lc(z0 * z0 * c, c);
}

double cutoff_frequency(double z0, double c)
{
    require_positive(z0, "cutoff_frequency: z0");
    require_positive(c, "cutoff_frequency: c");
    return 1.0 / (std::numbers::pi * z0 * c);
}

double phase_velocity(double l, double c)
{
    require_positive(l, "phase_velocity: l");
    require_positive(c, "phase_velocity: c");
    return 1.0 / std::sqrt(l * c);
}

double gate_loss_per_cell(double f, double ri, double cgs, double z0)
{
    if (!(f >= 0))
        throw InvalidInput("gate_loss_per_cell: f must be non-negative");
    if (!(ri >= 0) || !std::isfinite(ri))
        throw InvalidInput("gate_loss_per_cell: ri must be non-negative");
    require_positive(cgs, "gate_loss_per_cell: cgs");
    require_positive(z0, "gate_loss_per_cell: z0");
    const double w = 2.0 * std::numbers::pi * f;
    return w * w * ri * cgs * cgs * z0 / 2.0;
}

double drain_loss_per_cell(double z0, double rds)
{
    require_positive(z0, "drain_loss_per_cell: z0");
    if (!(rds > 0))
        throw InvalidInput("drain_loss_per_cell: rds must be positive");
    return z0 / (2.0 * rds);
}

LineSection gate_section(double f, const LineCell& cell, double length, double ri, double cgs,
                         bool include_line_capacitance)
{
    require_positive(f, "gate_section: f");
    require_positive(length, "gate_section: length");
    if (!(ri >= 0))
        throw InvalidInput("gate_section: ri must be non-negative");
    require_positive(cgs, "gate_section: cgs");

    const double w = 2.0 * std::numbers::pi * f;
    const Complex j(0.0, 1.0);
    LineSection s;
    s.z_series = j * w * cell.inductance / length;
    s.y_shunt = j * w * cgs / (length * (1.0 + j * w * ri * cgs));
    if (include_line_capacitance)
        s.y_shunt += j * w * cell.capacitance;
    return s;
}

LineSection drain_section(double f, const LineCell& cell, double length, double rds, double cds,
                          bool include_line_capacitance)
{
    require_positive(f, "drain_section: f");
    require_positive(length, "drain_section: length");
    if (!(rds > 0))
        throw InvalidInput("drain_section: rds must be positive");
    require_positive(cds, "drain_section: cds");

    const double w = 2.0 * std::numbers::pi * f;
    const Complex j(0.0, 1.0);
    LineSection s;
    s.z_series = j * w * cell.inductance / length;
    s.y_shunt = Complex(1.0 / (rds * length), w * cds / length);
    if (include_line_capacitance)
        s.y_shunt += j * w * cell.capacitance;
    return s;
}

Complex propagation_constant(const LineSection& section)
{
    Complex g = std::sqrt(section.z_series * section.y_shunt);
    if (g.real() < 0 || (g.real() == 0 && g.imag() < 0))
        g = -g;
    return g;
}

} // namespace dacad
