#include "dacad/design_engine.hpp"

#include "dacad/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/core.h>

namespace dacad {

namespace {

struct GateLoading {
    double effective_cgs = 0.0;
    std::optional<double> cseries;
    double penalty = 1.0;
};

GateLoading resolve_gate_loading(const TransistorModel& t, const SeriesCapPolicy& policy)
{
    GateLoading g;
    switch (policy.kind) {
    case SeriesCapPolicy::Kind::none:
        g.effective_cgs = t.cgs;
        break;
    case SeriesCapPolicy::Kind::fixed:
        g.effective_cgs = effective_gate_capacitance(t.cgs, policy.value);
        g.cseries = policy.value;
        g.penalty = g.effective_cgs / t.cgs;
        break;
    case SeriesCapPolicy::Kind::match_drain: {
        auto sol = series_cap_for_target(t.cgs, t.cds);
        // The target is taken verbatim so both lines share identical L*C.
        g.effective_cgs = t.cds;
        g.cseries = sol.cseries;
        g.penalty = sol.gain_penalty;
        break;
    }
    }
    return g;
}

bool losses_available(const TransistorModel& t)
{
    return t.ri > 0 && t.has_finite_rds();
}

double loss_frequency(const DesignOptions& opts, double effective_cgs)
{
    if (opts.design_frequency_for_losses)
        return *opts.design_frequency_for_losses;
    return 0.5 * cutoff_frequency(opts.system_impedance, effective_cgs);
}

int resolve_stages(const TransistorModel& t, const DesignOptions& opts, double effective_cgs, double f_design)
{
    if (opts.taper == TaperKind::custom) {
        const int n = static_cast<int>(opts.custom_taper->drain.sections.size());
        if (opts.stages && *opts.stages != n)
            throw InvalidInput(fmt::format("custom taper has {} drain sections but {} stages were requested", n,
                                           *opts.stages));
        return n;
    }
    if (opts.stages)
        return *opts.stages;
    if (losses_available(t))
        return recommended_n(n_opt_from_params(f_design, t.ri, effective_cgs, t.rds, opts.system_impedance));
    if (opts.optimize_stages)
        throw InvalidInput(fmt::format(
            "transistor '{}': loss-based stage optimization needs ri > 0 and a finite rds", t.name));
    return kDefaultStages;
}

std::optional<TaperPair> resolve_taper(const DesignOptions& opts, int n)
{
    switch (opts.taper) {
    case TaperKind::none:
        return std::nullopt;
    case TaperKind::ginzton:
        return ginzton_profiles(n, opts.system_impedance);
    case TaperKind::custom:
        break;
    }
    const TaperPair& p = *opts.custom_taper;
    const auto gate_count = p.gate.sections.size();
    if (gate_count != static_cast<std::size_t>(n) && gate_count != static_cast<std::size_t>(n) + 1)
        throw InvalidInput(fmt::format("custom gate taper needs {} or {} sections, got {}", n, n + 1, gate_count));
    return p;
}

LineStage build_stage(double z, double capacitance, const Substrate& s, bool parasitics)
{
    LineStage st;
    st.cell = cell_for_impedance(z, capacitance);
    st.line = synthesize_line(z, st.cell.inductance, s);
    if (parasitics) {
        // single correction pass with the line's own shunt capacitance
        const double c_line = st.line.c_per_cm * 1e-12 * st.line.length;
        st.cell = cell_for_impedance(z, capacitance + c_line);
        st.line = synthesize_line(z, st.cell.inductance, s);
    }
    return st;
}

double mismatch(const LineCell& g, const LineCell& d)
{
    const double a = std::sqrt(g.inductance * g.capacitance);
    const double b = std::sqrt(d.inductance * d.capacitance);
    return 1.0 - std::min(a, b) / std::max(a, b);
}

} // namespace

void DesignOptions::validate() const
{
    if (!(system_impedance > 0) || !std::isfinite(system_impedance))
        throw InvalidInput("system impedance must be positive");
    if (stages && *stages < 1)
        throw InvalidInput("stage count must be >= 1");
    if (taper == TaperKind::custom) {
        if (!custom_taper)
            throw InvalidInput("custom taper selected without profiles");
        if (custom_taper->gate.side != LineSide::gate || custom_taper->drain.side != LineSide::drain)
            throw InvalidInput("custom taper profiles are on the wrong sides");
        custom_taper->gate.validate();
        custom_taper->drain.validate();
    }
    if (series_cap.kind == SeriesCapPolicy::Kind::fixed && !(series_cap.value > 0))
        throw InvalidInput("series capacitor must be positive");
    if (design_frequency_for_losses && !(*design_frequency_for_losses > 0))
        throw InvalidInput("design frequency must be positive");
}

double max_capacitance_for_bandwidth(double f_target, double z0)
{
    if (!(f_target > 0) || !(z0 > 0))
        throw InvalidInput("max_capacitance_for_bandwidth: inputs must be positive");
    return 1.0 / (std::numbers::pi * z0 * f_target);
}

SeriesCapSolution series_cap_for_target(double cgs, double c_eff_target)
{
    if (!(cgs > 0) || !(c_eff_target > 0))
        throw InvalidInput("series_cap_for_target: capacitances must be positive");
    if (c_eff_target >= cgs)
        throw InfeasibleSeriesCap(fmt::format(
            "a series capacitor cannot raise the gate capacitance from {:.6g} F to {:.6g} F", cgs, c_eff_target));
    SeriesCapSolution s;
    s.cseries = c_eff_target * cgs / (cgs - c_eff_target);
    s.gain_penalty = c_eff_target / cgs;
    return s;
}

std::vector<ScreeningResult> screen_catalog(const Catalog& catalog, double f_target, double z0, bool allow_series)
{
    if (catalog.transistors.empty())
        throw InvalidInput("screen_catalog: catalog is empty");
    if (!(f_target > 0) || !(z0 > 0))
        throw InvalidInput("screen_catalog: target and impedance must be positive");

    std::vector<ScreeningResult> out;
    out.reserve(catalog.transistors.size());
    for (const auto& t : catalog.transistors) {
        ScreeningResult r;
        r.name = t.name;
        const double fc = cutoff_frequency(z0, t.cgs);
        r.resulting_fc = fc;
        if (fc >= f_target) {
            r.direct_pass = true;
            r.reaches_target = true;
        } else if (allow_series) {
            const double c_max = max_capacitance_for_bandwidth(f_target, z0);
            const auto sol = series_cap_for_target(t.cgs, c_max);
            r.reaches_target = true;
            r.required_series_cap = sol.cseries;
            r.gain_penalty_factor = sol.gain_penalty;
            r.resulting_fc = cutoff_frequency(z0, effective_gate_capacitance(t.cgs, sol.cseries));
        } else {
            r.reason = fmt::format("gate cutoff {:.4g} Hz is below the {:.4g} Hz target", fc, f_target);
        }
        out.push_back(std::move(r));
    }
    std::stable_sort(out.begin(), out.end(), [](const ScreeningResult& a, const ScreeningResult& b) {
        if (a.resulting_fc != b.resulting_fc)
            return a.resulting_fc > b.resulting_fc;
        return a.name < b.name;
    });
    return out;
}

double predict_bandwidth(const TransistorModel& t, const DesignOptions& opts)
{
    t.validate();
    opts.validate();
    const auto gate = resolve_gate_loading(t, opts.series_cap);
    const double z0 = opts.system_impedance;
    if (opts.taper == TaperKind::none)
        return std::min(cutoff_frequency(z0, gate.effective_cgs), cutoff_frequency(z0, t.cds));

    const int n = resolve_stages(t, opts, gate.effective_cgs, loss_frequency(opts, gate.effective_cgs));
    const auto profiles = resolve_taper(opts, n);
    return analyze_taper(profiles->gate, profiles->drain, gate.effective_cgs, t.cds).fc_total;
}

DesignReport synthesize_design(const TransistorModel& t, const Substrate& s, const DesignOptions& opts)
{
    t.validate();
    s.validate();
    opts.validate();

    DesignReport r;
    r.transistor = t;
    r.system_impedance = opts.system_impedance;
    const double z0 = opts.system_impedance;

    const auto gate = resolve_gate_loading(t, opts.series_cap);
    r.effective_cgs = gate.effective_cgs;
    r.series_capacitor = gate.cseries;
    r.gain_penalty_factor = gate.penalty;

    r.design_frequency = loss_frequency(opts, gate.effective_cgs);
    const int n = resolve_stages(t, opts, gate.effective_cgs, r.design_frequency);
    const auto profiles = resolve_taper(opts, n);

    for (int k = 0; k < n; ++k) {
        const double zg = profiles ? profiles->gate.sections[k] : z0;
        const double zd = profiles ? profiles->drain.sections[k] : z0;
        r.gate_stages.push_back(build_stage(zg, gate.effective_cgs, s, opts.include_microstrip_parasitics));
        r.drain_stages.push_back(build_stage(zd, t.cds, s, opts.include_microstrip_parasitics));
    }
    r.gate_cell = r.gate_stages.front().cell;
    r.drain_cell = r.drain_stages.front().cell;
    r.gate_line = r.gate_stages.front().line;
    r.drain_line = r.drain_stages.front().line;

    for (int k = 0; k < n; ++k)
        r.velocity_mismatch = std::max(r.velocity_mismatch, mismatch(r.gate_stages[k].cell, r.drain_stages[k].cell));

    r.phase_per_cell_gate = phase_shift(r.gate_line.length, r.design_frequency, r.gate_line.l_per_cm, r.gate_line.c_per_cm);
    r.phase_per_cell_drain =
        phase_shift(r.drain_line.length, r.design_frequency, r.drain_line.l_per_cm, r.drain_line.c_per_cm);

    // Gains use the divider-reduced transconductance.
    const double gm = t.gm * gate.penalty;
    auto& g = r.gains;
    g.n = n;
    g.av = voltage_gain(gm, z0, n);
    g.gp_lossless = power_gain_lossless(gm, z0, z0, n);
    const double ag = gate_loss_per_cell(r.design_frequency, t.ri, gate.effective_cgs, z0);
    const double ad = t.has_finite_rds() ? drain_loss_per_cell(z0, t.rds) : 0.0;
    g.gp_lossy = power_gain_lossy(gm, z0, z0, ag, ad, n);
    if (losses_available(t))
        g.n_opt_continuous = n_opt_from_params(r.design_frequency, t.ri, gate.effective_cgs, t.rds, z0);
    g.n_recommended = g.n_opt_continuous ? recommended_n(*g.n_opt_continuous) : kMaxPracticalStages;

    if (profiles) {
        r.taper = analyze_taper(profiles->gate, profiles->drain, gate.effective_cgs, t.cds);
        r.predicted_fc = r.taper->fc_total;
    } else {
        r.predicted_fc = std::min(cutoff_frequency(z0, r.gate_cell.capacitance),
                                  cutoff_frequency(z0, r.drain_cell.capacitance));
    }
    return r;
}

std::vector<Table1Check> verify_table1(double z0)
{
    std::vector<Table1Check> out;
    for (auto& row : builtin_table1()) {
        Table1Check c;
        c.computed_fc = cutoff_frequency(z0, row.effective_capacitance);
        c.relative_error = std::abs(c.computed_fc - row.claimed_limit) / row.claimed_limit;
        c.row = std::move(row);
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace dacad
