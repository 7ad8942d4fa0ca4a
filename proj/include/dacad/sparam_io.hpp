#pragma once

#include "dacad/mna_sim.hpp"

#include <iosfwd>
#include <string>

namespace dacad {

/// Touchstone v1 two-port, real/imaginary, frequencies in Hz.
void write_touchstone(const TwoPortSweep& sweep, std::ostream& out);
void write_touchstone(const TwoPortSweep& sweep, const std::string& path);

/// Reads the subset of Touchstone v1 that write_touchstone emits.
TwoPortSweep read_touchstone(std::istream& in);

void write_csv(const TwoPortSweep& sweep, std::ostream& out);
void write_csv(const TwoPortSweep& sweep, const std::string& path);

} // namespace dacad
