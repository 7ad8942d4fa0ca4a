#pragma once

#include "dacad/device_model.hpp"

namespace dacad {

// Closed-form microstrip relations. Widths/heights/thickness in mm, lengths
// in cm, per-length inductance in nH/cm and capacitance in pF/cm.

struct MicrostripLine {
    double width = 0.0;    ///< [mm]
    double length = 0.0;   ///< [cm]
    Substrate substrate;
    double z0 = 0.0;       ///< [ohm]
    double l_per_cm = 0.0; ///< [nH/cm]
    double c_per_cm = 0.0; ///< [pF/cm]
};

struct ImpedanceResult {
    double z0 = 0.0;
    bool in_validity_window = true; ///< 0.1 <= W/H <= 3.0
};

struct LineConstants {
    double l_per_cm = 0.0;
    double c_per_cm = 0.0;
};

inline constexpr double kMinWidthRatio = 0.1;
inline constexpr double kMaxWidthRatio = 3.0;

ImpedanceResult z0_of(double width, const Substrate& substrate);

/// Width giving impedance z0. Throws UnrealizableGeometry when the width
/// comes out non-positive.
double width_for(double z0, const Substrate& substrate);

LineConstants line_constants(double z0, double er);

/// Length [cm] realizing cell_inductance [H] at l_per_cm [nH/cm].
double segment_length(double cell_inductance, double l_per_cm);

/// Electrical phase 2*pi*length/lambda in radians.
double phase_shift(double length, double f, double l_per_cm, double c_per_cm);

/// Synthesizes a line of impedance z0 carrying cell_inductance.
MicrostripLine synthesize_line(double z0, double cell_inductance, const Substrate& substrate);

} // namespace dacad
