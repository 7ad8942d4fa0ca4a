#pragma once

#include "dacad/device_model.hpp"
#include "dacad/gain_model.hpp"
#include "dacad/ladder_line.hpp"
#include "dacad/microstrip.hpp"
#include "dacad/taper.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dacad {

inline constexpr int kDefaultStages = 4;

enum class TaperKind { none, ginzton, custom };

struct SeriesCapPolicy {
    enum class Kind { none, fixed, match_drain };
    Kind kind = Kind::none;
    double value = 0.0; ///< [F], only for Kind::fixed

    static SeriesCapPolicy none() { return {}; }
    static SeriesCapPolicy fixed(double c) { return {Kind::fixed, c}; }
    static SeriesCapPolicy match_drain() { return {Kind::match_drain, 0.0}; }
};

struct DesignOptions {
    double system_impedance = 50.0;
    std::optional<int> stages;
    /// Demand a loss-based stage count; fails if ri or rds are unavailable.
    bool optimize_stages = false;
    TaperKind taper = TaperKind::none;
    std::optional<TaperPair> custom_taper;
    SeriesCapPolicy series_cap;
    bool include_microstrip_parasitics = false;
    /// Frequency for loss evaluation; defaults to half the uniform gate cutoff.
    std::optional<double> design_frequency_for_losses;

    void validate() const;
};

/// Cell and its microstrip realization for one stage of one line.
struct LineStage {
    LineCell cell;
    MicrostripLine line;
};

struct DesignReport {
    TransistorModel transistor;
    double system_impedance = 50.0;
    double effective_cgs = 0.0;
    std::optional<double> series_capacitor;
    double gain_penalty_factor = 1.0;
    // First-stage cells and lines; identical to every stage when uniform.
    LineCell gate_cell;
    LineCell drain_cell;
    MicrostripLine gate_line;
    MicrostripLine drain_line;
    std::vector<LineStage> gate_stages;
    std::vector<LineStage> drain_stages;
    double velocity_mismatch = 0.0;
    double design_frequency = 0.0;
    double phase_per_cell_gate = 0.0;
    double phase_per_cell_drain = 0.0;
    GainFigures gains;
    std::optional<TaperReport> taper;
    double predicted_fc = 0.0;

    int stages() const { return gains.n; }
};

struct ScreeningResult {
    std::string name;
    bool direct_pass = false;
    bool reaches_target = false;
    std::optional<double> required_series_cap;
    double resulting_fc = 0.0;
    double gain_penalty_factor = 1.0;
    std::string reason; ///< set when the target is not reached
};

struct SeriesCapSolution {
    double cseries = 0.0;
    double gain_penalty = 1.0;
};

struct Table1Check {
    VerificationRow row;
    double computed_fc = 0.0;
    double relative_error = 0.0;
};

/// Largest line capacitance that still reaches f_target at impedance z0.
double max_capacitance_for_bandwidth(double f_target, double z0);

/// Series capacitor bringing cgs down to c_eff_target, and the resulting
/// capacitive-divider ratio seen by the gate.
SeriesCapSolution series_cap_for_target(double cgs, double c_eff_target);

std::vector<ScreeningResult> screen_catalog(const Catalog& catalog, double f_target, double z0,
                                            bool allow_series);

double predict_bandwidth(const TransistorModel& t, const DesignOptions& opts);

DesignReport synthesize_design(const TransistorModel& t, const Substrate& s, const DesignOptions& opts);

std::vector<Table1Check> verify_table1(double z0 = 50.0);

} // namespace dacad
