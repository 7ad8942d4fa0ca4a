#pragma once

#include "dacad/design_engine.hpp"

#include <string>
#include <string_view>

namespace dacad {

inline constexpr const char* kReportFormat = "design_report_v1";

/// DesignReport as a design_report_v1 JSON document.
std::string report_to_json(const DesignReport& report);

/// Parses a design_report_v1 document back into a report.
DesignReport report_from_json(std::string_view text);

} // namespace dacad
