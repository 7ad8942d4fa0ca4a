#pragma once

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dacad {

// Drain-source resistance used when a catalog entry does not give one.
// Operations that need a finite value reject it explicitly.
inline constexpr double kLosslessRds = std::numeric_limits<double>::infinity();

/// Small-signal FET model. All fields are SI base units.
struct TransistorModel {
    std::string name;
    double gm = 0.0;   ///< transconductance [S]
    double cgs = 0.0;  ///< gate-source capacitance [F]
    double cds = 0.0;  ///< drain-source capacitance [F]
    double ri = 0.0;   ///< intrinsic gate resistance [ohm]
    double rds = kLosslessRds; ///< drain-source resistance [ohm]
    std::string reference;

    bool has_finite_rds() const { return rds < kLosslessRds; }

    /// Throws SchemaError if any field is out of range.
    void validate() const;

    bool operator==(const TransistorModel&) const = default;
};

/// Microstrip stackup. Geometry is in millimeters.
struct Substrate {
    double er = 1.0;
    double h = 0.0;  ///< substrate height [mm]
    double t = 0.0;  ///< metal thickness [mm]

    void validate() const;

    bool operator==(const Substrate&) const = default;
};

struct Catalog {
    std::vector<TransistorModel> transistors;
    std::string source_path;

    const TransistorModel* find(std::string_view name) const;

    bool operator==(const Catalog&) const = default;
};

/// One row of the published-design verification table. Only the effective
/// capacitance and the estimated limit take part in computation.
struct VerificationRow {
    std::string reference_tag;
    double effective_capacitance = 0.0; ///< [F]
    double claimed_limit = 0.0;         ///< [Hz]
    std::string pout_w;
    std::string pae_pct;
    std::string gain_db;
    std::string achieved_band;
};

/// Parses the JSON catalog format. Unknown keys, missing required fields and
/// duplicate names are rejected.
Catalog load_catalog(std::string_view text, std::string source_path = {});
Catalog load_catalog_file(const std::string& path);

/// Inverse of load_catalog. Infinite rds is written by omitting the key.
std::string serialize_catalog(const Catalog& catalog);

/// Series combination of cgs with an optional gate series capacitor.
double effective_gate_capacitance(double cgs, std::optional<double> cseries = std::nullopt);

/// Oxide-capacitance estimate Cox * W * L.
double estimate_cgs(double cox_per_area, double gate_width, double gate_length);

/// The nine published designs with their effective capacitances.
std::vector<VerificationRow> builtin_table1();

} // namespace dacad
