#include "dacad/microstrip.hpp"

#include "dacad/errors.hpp"

#include <cmath>
#include <numbers>

#include <fmt/core.h>

namespace dacad {

namespace {

// Coefficients of the closed-form microstrip impedance.
constexpr double kZ0Scale = 87.0;
constexpr double kErOffset = 1.41;
constexpr double kHeightFactor = 5.98;
constexpr double kWidthFactor = 0.8;

void require_positive(double v, const char* what)
{
    if (!(v > 0) || !std::isfinite(v))
        throw InvalidInput(std::string(what) + " must be positive and finite");
}

} // namespace

ImpedanceResult z0_of(double width, const Substrate& substrate)
{
    require_positive(width, "z0_of: width");
    substrate.validate();

    const double denom = kWidthFactor * width + substrate.t;
    const double arg = kHeightFactor * substrate.h / denom;
    if (arg < 1.0)
        throw UnrealizableGeometry(fmt::format(
            "z0_of: width {} mm is too wide for h = {} mm (negative impedance)", width, substrate.h));

    ImpedanceResult r;
    r.z0 = kZ0Scale / std::sqrt(substrate.er + kErOffset) * std::log(arg);
    const double ratio = width / substrate.h;
    r.in_validity_window = ratio >= kMinWidthRatio && ratio <= kMaxWidthRatio;
    return r;
}

double width_for(double z0, const Substrate& substrate)
{
    require_positive(z0, "width_for: z0");
    substrate.validate();

    // Exact inverse of z0_of: 5.98/0.8 = 7.475 and 1/0.8 = 1.25.
    const double e = std::exp(-z0 * std::sqrt(substrate.er + kErOffset) / kZ0Scale);
    const double w = (kHeightFactor * substrate.h * e - substrate.t) / kWidthFactor;
    if (!(w > 0))
        throw UnrealizableGeometry(fmt::format(
            "width_for: {} ohm is not realizable on er={} h={} mm t={} mm (width {} mm)", z0,
            substrate.er, substrate.h, substrate.t, w));
    return w;
}

LineConstants line_constants(double z0, double er)
{
    require_positive(z0, "line_constants: z0");
    if (!(er >= 1))
        throw InvalidInput("line_constants: er must be >= 1");
    LineConstants k;
    k.l_per_cm = 2.0 * z0 * std::sqrt(er + kErOffset) / kZ0Scale;
    k.c_per_cm = 1000.0 * k.l_per_cm / (z0 * z0);
    return k;
}

double segment_length(double cell_inductance, double l_per_cm)
{
    require_positive(cell_inductance, "segment_length: inductance");
    require_positive(l_per_cm, "segment_length: l_per_cm");
    return cell_inductance * 1e9 / l_per_cm;
}

double phase_shift(double length, double f, double l_per_cm, double c_per_cm)
{
    require_positive(length, "phase_shift: length");
    require_positive(f, "phase_shift: f");
    require_positive(l_per_cm, "phase_shift: l_per_cm");
    require_positive(c_per_cm, "phase_shift: c_per_cm");
    const double velocity = 1.0 / std::sqrt(l_per_cm * 1e-9 * c_per_cm * 1e-12); // cm/s
    const double wavelength = velocity / f;
    return 2.0 * std::numbers::pi * length / wavelength;
}

MicrostripLine synthesize_line(double z0, double cell_inductance, const Substrate& substrate)
{
    MicrostripLine line;
    line.substrate = substrate;
    line.z0 = z0;
    line.width = width_for(z0, substrate);
    const auto k = line_constants(z0, substrate.er);
    line.l_per_cm = k.l_per_cm;
    line.c_per_cm = k.c_per_cm;
    line.length = segment_length(cell_inductance, k.l_per_cm);
    return line;
}

} // namespace dacad
