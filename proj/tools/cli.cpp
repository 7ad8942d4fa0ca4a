#include "cli.hpp"

#include "dacad/design_engine.hpp"
#include "dacad/errors.hpp"
#include "dacad/format.hpp"
#include "dacad/mna_sim.hpp"
#include "dacad/report_io.hpp"
#include "dacad/sparam_io.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <fmt/ostream.h>
#include <json.hpp>

namespace dacad::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr double kDefaultTaperCgs = 1.79e-12;
constexpr double kTable1Tolerance = 0.02;

json optional_json(std::optional<double> v)
{
    return v ? json(*v) : json(nullptr);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(fmt::format("cannot open '{}'", path));
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Parses --series: "match-drain", "none" or a capacitance in farads.
SeriesCapPolicy parse_series(const std::string& text)
{
    if (text == "match-drain")
        return SeriesCapPolicy::match_drain();
    if (text == "none")
        return SeriesCapPolicy::none();
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || !(value > 0))
        throw UsageError(fmt::format("--series: expected 'match-drain', 'none' or a positive capacitance, got '{}'", text));
    return SeriesCapPolicy::fixed(value);
}

TaperKind parse_taper(const std::string& text)
{
    if (text.empty() || text == "none")
        return TaperKind::none;
    if (text == "ginzton")
        return TaperKind::ginzton;
    throw UsageError(fmt::format("--taper: expected 'ginzton' or 'none', got '{}'", text));
}

struct BandwidthArgs {
    double cgs = 0.0;
    std::optional<double> cds;
    double z0 = 50.0;
    std::optional<double> cseries;
    std::string taper;
    int n = kDefaultStages;
    bool json = false;
};

int cmd_bandwidth(const BandwidthArgs& a, std::ostream& out)
{
    TransistorModel t;
    t.name = "cli";
    t.gm = 1.0; // unused for bandwidth
    t.cgs = a.cgs;
    const bool cds_assumed = !a.cds;
    t.cds = a.cds ? *a.cds : a.cgs / 6.0;

    DesignOptions opts;
    opts.system_impedance = a.z0;
    opts.taper = parse_taper(a.taper);
    opts.stages = a.n;
    if (a.cseries)
        opts.series_cap = SeriesCapPolicy::fixed(*a.cseries);

    const double c_eff = effective_gate_capacitance(t.cgs, a.cseries);
    double fc_gate = cutoff_frequency(a.z0, c_eff);
    double fc_drain = cutoff_frequency(a.z0, t.cds);
    std::optional<TaperReport> taper;
    if (opts.taper == TaperKind::ginzton) {
        auto p = ginzton_profiles(a.n, a.z0);
        taper = analyze_taper(p.gate, p.drain, c_eff, t.cds);
        fc_gate = taper->fc_gate;
        fc_drain = taper->fc_drain;
    }
    const double predicted = predict_bandwidth(t, opts);

    if (a.json) {
        json j = {{"cgs_F", t.cgs},         {"cds_F", t.cds},           {"cds_assumed", cds_assumed},
                  {"effective_cgs_F", c_eff}, {"z0_ohm", a.z0},         {"fc_gate_Hz", fc_gate},
                  {"fc_drain_Hz", fc_drain}, {"predicted_fc_Hz", predicted}, {"taper", taper ? "ginzton" : "none"}};
        if (taper) {
            j["n"] = a.n;
            j["z_g_ohm"] = taper->z_overall_gate;
            j["z_d_ohm"] = taper->z_overall_drain;
        }
        fmt::print(out, "{}\n", j.dump(2));
        return kExitOk;
    }

    fmt::print(out, "effective gate capacitance: {}\n", format_eng(c_eff, "F"));
    fmt::print(out, "drain capacitance:          {}{}\n", format_eng(t.cds, "F"), cds_assumed ? " (assumed cgs/6)" : "");
    if (taper)
        fmt::print(out, "taper:                      ginzton, n = {}\n", a.n);
    fmt::print(out, "gate line cutoff:           {}\n", format_eng(fc_gate, "Hz"));
    fmt::print(out, "drain line cutoff:          {}\n", format_eng(fc_drain, "Hz"));
    fmt::print(out, "predicted bandwidth:        {}\n", format_eng(predicted, "Hz"));
    return kExitOk;
}

int cmd_screen(const std::string& catalog_path, double target, double z0, bool allow_series, bool as_json,
               std::ostream& out)
{
    const auto catalog = load_catalog_file(catalog_path);
    const auto results = screen_catalog(catalog, target, z0, allow_series);

    if (as_json) {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back({{"name", r.name},
                           {"direct_pass", r.direct_pass},
                           {"reaches_target", r.reaches_target},
                           {"required_series_cap_F", optional_json(r.required_series_cap)},
                           {"resulting_fc_Hz", r.resulting_fc},
                           {"gain_penalty", r.gain_penalty_factor},
                           {"reason", r.reason}});
        }
        fmt::print(out, "{}\n", json{{"target_fc_Hz", target}, {"z0_ohm", z0}, {"results", arr}}.dump(2));
        return kExitOk;
    }

    fmt::print(out, "target {} at {} ohm\n", format_eng(target, "Hz"), z0);
    fmt::print(out, "{:<24} {:<8} {:>12} {:>12} {:>8}\n", "transistor", "status", "fc", "cseries", "penalty");
    for (const auto& r : results) {
        const char* status = r.direct_pass ? "direct" : r.reaches_target ? "series" : "fail";
        const std::string cs = r.required_series_cap ? format_eng(*r.required_series_cap, "F") : "-";
        fmt::print(out, "{:<24} {:<8} {:>12} {:>12} {:>8.4f}", r.name, status, format_eng(r.resulting_fc, "Hz"), cs,
                   r.gain_penalty_factor);
        if (!r.reason.empty())
            fmt::print(out, "  ({})", r.reason);
        fmt::print(out, "\n");
    }
    return kExitOk;
}

struct DesignArgs {
    std::string catalog;
    std::string transistor;
    double er = 0.0, h = 0.0, t = 0.0;
    std::optional<int> n;
    std::string taper;
    std::string series = "none";
    double z0 = 50.0;
    std::optional<double> f_design;
    bool parasitics = false;
    std::string out_path;
    bool json = false;
};

int cmd_design(const DesignArgs& a, std::ostream& out)
{
    DesignOptions opts;
    opts.system_impedance = a.z0;
    opts.stages = a.n;
    opts.taper = parse_taper(a.taper);
    opts.series_cap = parse_series(a.series);
    opts.include_microstrip_parasitics = a.parasitics;
    opts.design_frequency_for_losses = a.f_design;

    const auto catalog = load_catalog_file(a.catalog);
    const auto* t = catalog.find(a.transistor);
    if (!t)
        throw Error(fmt::format("transistor '{}' not found in {}", a.transistor, a.catalog));

    const auto report = synthesize_design(*t, Substrate{a.er, a.h, a.t}, opts);
    const auto doc = report_to_json(report);
    if (!a.out_path.empty()) {
        std::ofstream f(a.out_path);
        if (!f || !(f << doc))
            throw Error(fmt::format("cannot write '{}'", a.out_path));
    }
    if (a.json) {
        out << doc;
        return kExitOk;
    }

    const auto& g = report.gains;
    fmt::print(out, "transistor:          {}\n", t->name);
    fmt::print(out, "stages:              {}\n", g.n);
    fmt::print(out, "effective cgs:       {}\n", format_eng(report.effective_cgs, "F"));
    if (report.series_capacitor)
        fmt::print(out, "series capacitor:    {} (gain penalty {:.4f})\n", format_eng(*report.series_capacitor, "F"),
                   report.gain_penalty_factor);
    fmt::print(out, "gate cell:           L = {}, C = {}, fc = {}\n", format_eng(report.gate_cell.inductance, "H"),
               format_eng(report.gate_cell.capacitance, "F"), format_eng(report.gate_cell.fc, "Hz"));
    fmt::print(out, "drain cell:          L = {}, C = {}, fc = {}\n", format_eng(report.drain_cell.inductance, "H"),
               format_eng(report.drain_cell.capacitance, "F"), format_eng(report.drain_cell.fc, "Hz"));
    fmt::print(out, "gate line:           W = {:.4f} mm, l = {:.4f} cm\n", report.gate_line.width, report.gate_line.length);
    fmt::print(out, "drain line:          W = {:.4f} mm, l = {:.4f} cm\n", report.drain_line.width,
               report.drain_line.length);
    fmt::print(out, "velocity mismatch:   {:.4f}{}\n", report.velocity_mismatch,
               report.velocity_mismatch > 0 ? "  (gate/drain phase velocities differ)" : "");
    fmt::print(out, "gain:                Av = {:.4f}, Gp = {:.4f} lossless, {:.4f} lossy\n", g.av, g.gp_lossless,
               g.gp_lossy);
    if (g.n_opt_continuous)
        fmt::print(out, "optimum stages:      {:.4f} (recommended {})\n", *g.n_opt_continuous, g.n_recommended);
    if (report.taper)
        fmt::print(out, "taper:               Zg = {:.4f} ohm, Zd = {:.4f} ohm\n", report.taper->z_overall_gate,
                   report.taper->z_overall_drain);
    fmt::print(out, "predicted bandwidth: {}\n", format_eng(report.predicted_fc, "Hz"));
    return kExitOk;
}

int cmd_taper(int n, double z0, double cgs, std::optional<double> cds_opt, bool as_json, std::ostream& out)
{
    const double cds = cds_opt ? *cds_opt : cgs / 6.0;
    const auto p = ginzton_profiles(n, z0);
    const auto gate_gammas = junction_gammas(p.gate);
    const auto drain_gammas = junction_gammas(p.drain);
    const auto r = analyze_taper(p.gate, p.drain, cgs, cds);

    if (as_json) {
        json j = {{"n", n},
                  {"z0_ohm", z0},
                  {"cgs_F", cgs},
                  {"cds_F", cds},
                  {"gate_sections_ohm", p.gate.sections},
                  {"drain_sections_ohm", p.drain.sections},
                  {"gate_gammas", gate_gammas},
                  {"drain_gammas", drain_gammas},
                  {"gamma_g", r.gamma_overall_gate},
                  {"gamma_d", r.gamma_overall_drain},
                  {"z_g_ohm", r.z_overall_gate},
                  {"z_d_ohm", r.z_overall_drain},
                  {"fc_g_Hz", r.fc_gate},
                  {"fc_d_Hz", r.fc_drain},
                  {"fc_total_Hz", r.fc_total}};
        fmt::print(out, "{}\n", j.dump(2));
        return kExitOk;
    }

    auto list = [](const std::vector<double>& v) {
        std::string s;
        for (double x : v)
            s += fmt::format("{}{:.4f}", s.empty() ? "" : " ", x);
        return s;
    };
    fmt::print(out, "ginzton taper, n = {}, z0 = {} ohm\n", n, z0);
    fmt::print(out, "gate sections [ohm]:   {}\n", list(p.gate.sections));
    fmt::print(out, "drain sections [ohm]:  {}\n", list(p.drain.sections));
    fmt::print(out, "gate junctions:        {}\n", list(gate_gammas));
    fmt::print(out, "drain junctions:       {}\n", list(drain_gammas));
    fmt::print(out, "gamma gate:            {:.5f}\n", r.gamma_overall_gate);
    fmt::print(out, "gamma drain:           {:.5f}\n", r.gamma_overall_drain);
    fmt::print(out, "Z gate:                {:.2f} ohm\n", r.z_overall_gate);
    fmt::print(out, "Z drain:               {:.2f} ohm\n", r.z_overall_drain);
    fmt::print(out, "fc gate:               {}  (cgs = {})\n", format_eng(r.fc_gate, "Hz"), format_eng(cgs, "F"));
    fmt::print(out, "fc drain:              {}  (cds = {})\n", format_eng(r.fc_drain, "Hz"), format_eng(cds, "F"));
    fmt::print(out, "fc total:              {}\n", format_eng(r.fc_total, "Hz"));
    return kExitOk;
}

struct SimulateArgs {
    std::string design;
    double fstart = 0.0, fstop = 0.0;
    int points = 0;
    std::string spacing = "linear";
    std::string s2p;
    std::string csv;
    bool json = false;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out)
{
    Spacing spacing;
    if (a.spacing == "linear")
        spacing = Spacing::linear;
    else if (a.spacing == "log")
        spacing = Spacing::logarithmic;
    else
        throw UsageError(fmt::format("--spacing: expected 'linear' or 'log', got '{}'", a.spacing));

    const auto report = report_from_json(read_file(a.design));
    const auto net = build_network(report, report.transistor);
    const auto sw = sweep(net, a.fstart, a.fstop, a.points, spacing);
    const auto m = extract_metrics(sw);

    if (!a.s2p.empty())
        write_touchstone(sw, a.s2p);
    if (!a.csv.empty())
        write_csv(sw, a.csv);

    if (a.json) {
        json j = {{"points", a.points},
                  {"low_freq_gain_db", m.low_freq_gain_db},
                  {"cutoff_minus3db_Hz", optional_json(m.cutoff_minus3db)},
                  {"worst_s11_db_below_cutoff", m.worst_s11_db_below_cutoff},
                  {"predicted_fc_Hz", report.predicted_fc}};
        fmt::print(out, "{}\n", j.dump(2));
        return kExitOk;
    }
    fmt::print(out, "simulated {} points, {} to {}\n", a.points, format_eng(a.fstart, "Hz"), format_eng(a.fstop, "Hz"));
    fmt::print(out, "low-frequency gain:    {:.3f} dB\n", m.low_freq_gain_db);
    if (m.cutoff_minus3db)
        fmt::print(out, "-3 dB cutoff:          {}\n", format_eng(*m.cutoff_minus3db, "Hz"));
    else
        fmt::print(out, "-3 dB cutoff:          not reached in sweep\n");
    fmt::print(out, "worst S11 below cutoff: {:.3f} dB\n", m.worst_s11_db_below_cutoff);
    fmt::print(out, "analytic prediction:   {}\n", format_eng(report.predicted_fc, "Hz"));
    return kExitOk;
}

int cmd_verify(bool as_json, std::ostream& out)
{
    const auto rows = verify_table1();
    bool ok = true;
    json arr = json::array();
    if (!as_json)
        fmt::print(out, "{:<6} {:>10} {:>12} {:>12} {:>8}\n", "ref", "C_eff", "claimed", "computed", "error");
    for (const auto& r : rows) {
        const bool pass = r.relative_error <= kTable1Tolerance;
        ok = ok && pass;
        if (as_json) {
            arr.push_back({{"reference", r.row.reference_tag},
                           {"effective_capacitance_F", r.row.effective_capacitance},
                           {"claimed_limit_Hz", r.row.claimed_limit},
                           {"computed_fc_Hz", r.computed_fc},
                           {"relative_error", r.relative_error},
                           {"pass", pass}});
        } else {
            fmt::print(out, "{:<6} {:>10} {:>12} {:>12} {:>7.3f}%  {}\n", r.row.reference_tag,
                       format_eng(r.row.effective_capacitance, "F"), format_eng(r.row.claimed_limit, "Hz"),
                       format_eng(r.computed_fc, "Hz"), 100.0 * r.relative_error, pass ? "ok" : "FAIL");
        }
    }
    if (as_json)
        fmt::print(out, "{}\n", json{{"tolerance", kTable1Tolerance}, {"rows", arr}, {"pass", ok}}.dump(2));
    else
        fmt::print(out, "{} of {} rows within {:.0f}%\n", ok ? rows.size() : 0, rows.size(), 100 * kTable1Tolerance);
    return ok ? kExitOk : kExitDomainError;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Distributed amplifier design toolkit"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    BandwidthArgs bw;
    auto* bandwidth = app.add_subcommand("bandwidth", "Predict line cutoffs for a transistor");
    bandwidth->add_option("--cgs", bw.cgs, "Gate-source capacitance [F]")->required()->check(CLI::PositiveNumber);
    bandwidth->add_option("--cds", bw.cds, "Drain-source capacitance [F] (default cgs/6)")->check(CLI::PositiveNumber);
    bandwidth->add_option("--z0", bw.z0, "System impedance [ohm]")->check(CLI::PositiveNumber);
    bandwidth->add_option("--cseries", bw.cseries, "Gate series capacitor [F]")->check(CLI::PositiveNumber);
    bandwidth->add_option("--taper", bw.taper, "Taper pattern (ginzton)");
    bandwidth->add_option("--n", bw.n, "Stage count for tapering")->check(CLI::Range(1, 1000));
    bandwidth->add_flag("--json", bw.json, "Machine-readable output");

    std::string catalog_path;
    double target = 0.0, screen_z0 = 50.0;
    bool allow_series = false, screen_json = false;
    auto* screen = app.add_subcommand("screen", "Screen a catalog against a target bandwidth");
    screen->add_option("--catalog", catalog_path, "Catalog JSON file")->required();
    screen->add_option("--target-fc", target, "Target bandwidth [Hz]")->required()->check(CLI::PositiveNumber);
    screen->add_option("--z0", screen_z0, "System impedance [ohm]")->check(CLI::PositiveNumber);
    screen->add_flag("--allow-series", allow_series, "Allow gate series capacitors");
    screen->add_flag("--json", screen_json, "Machine-readable output");

    DesignArgs da;
    auto* design = app.add_subcommand("design", "Synthesize a complete design");
    design->add_option("--catalog", da.catalog, "Catalog JSON file")->required();
    design->add_option("--transistor", da.transistor, "Transistor name")->required();
    design->add_option("--er", da.er, "Relative permittivity")->required()->check(CLI::Range(1.0, 1e6));
    design->add_option("--h", da.h, "Substrate height [mm]")->required()->check(CLI::PositiveNumber);
    design->add_option("--t", da.t, "Metal thickness [mm]")->required()->check(CLI::NonNegativeNumber);
    design->add_option("--n", da.n, "Stage count")->check(CLI::Range(1, 1000));
    design->add_option("--taper", da.taper, "Taper pattern (ginzton)");
    design->add_option("--series", da.series, "Series capacitor: match-drain, none, or value [F]");
    design->add_option("--z0", da.z0, "System impedance [ohm]")->check(CLI::PositiveNumber);
    design->add_option("--f-design", da.f_design, "Loss evaluation frequency [Hz]")->check(CLI::PositiveNumber);
    design->add_flag("--parasitics", da.parasitics, "Include microstrip capacitance (one pass)");
    design->add_option("--out", da.out_path, "Write design_report_v1 JSON");
    design->add_flag("--json", da.json, "Print the report JSON");

    int taper_n = 0;
    double taper_z0 = 50.0, taper_cgs = kDefaultTaperCgs;
    std::optional<double> taper_cds;
    bool taper_json = false;
    auto* taper = app.add_subcommand("taper", "Analyze the Ginzton tapering pattern");
    taper->add_option("--n", taper_n, "Stage count")->required()->check(CLI::Range(1, 1000));
    taper->add_option("--z0", taper_z0, "System impedance [ohm]")->check(CLI::PositiveNumber);
    taper->add_option("--cgs", taper_cgs, "Gate capacitance [F]")->check(CLI::PositiveNumber);
    taper->add_option("--cds", taper_cds, "Drain capacitance [F] (default cgs/6)")->check(CLI::PositiveNumber);
    taper->add_flag("--json", taper_json, "Machine-readable output");

    SimulateArgs sa;
    auto* simulate = app.add_subcommand("simulate", "Run the nodal S-parameter simulation of a design");
    simulate->add_option("--design", sa.design, "design_report_v1 JSON file")->required();
    simulate->add_option("--fstart", sa.fstart, "Start frequency [Hz]")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--fstop", sa.fstop, "Stop frequency [Hz]")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--points", sa.points, "Number of points")->required()->check(CLI::Range(2, 10000000));
    simulate->add_option("--spacing", sa.spacing, "linear or log");
    simulate->add_option("--out", sa.s2p, "Touchstone output (.s2p)");
    simulate->add_option("--csv", sa.csv, "CSV output");
    simulate->add_flag("--json", sa.json, "Machine-readable output");

    bool table1 = false, verify_json = false;
    auto* verify = app.add_subcommand("verify", "Self-check against published designs");
    verify->add_flag("--table1", table1, "Recompute the published frequency limits");
    verify->add_flag("--json", verify_json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        fmt::print(err, "usage error: {}\n", e.what());
        return kExitUsage;
    }

    try {
        if (bandwidth->parsed())
            return cmd_bandwidth(bw, out);
        if (screen->parsed())
            return cmd_screen(catalog_path, target, screen_z0, allow_series, screen_json, out);
        if (design->parsed())
            return cmd_design(da, out);
        if (taper->parsed())
            return cmd_taper(taper_n, taper_z0, taper_cgs, taper_cds, taper_json, out);
        if (simulate->parsed()) {
            if (!(sa.fstop > sa.fstart))
                throw UsageError("--fstop must exceed --fstart");
            return cmd_simulate(sa, out);
        }
        if (verify->parsed()) {
            if (!table1)
                throw UsageError("verify: nothing to check (use --table1)");
            return cmd_verify(verify_json, out);
        }
    } catch (const UsageError& e) {
        fmt::print(err, "usage error: {}\n", e.what());
        return kExitUsage;
    } catch (const Error& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kExitDomainError;
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("dacad");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace dacad::cli
