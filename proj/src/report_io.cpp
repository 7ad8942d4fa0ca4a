#include "dacad/report_io.hpp"

#include "dacad/errors.hpp"

#include <fmt/core.h>
#include <json.hpp>

namespace dacad {

using nlohmann::json;

namespace {

json number_or_null(std::optional<double> v)
{
    return v ? json(*v) : json(nullptr);
}

json cell_json(const LineCell& c)
{
    return {{"l_H", c.inductance}, {"c_F", c.capacitance}, {"z0_ohm", c.z0}, {"fc_Hz", c.fc}};
}

json line_json(const MicrostripLine& l)
{
    return {{"w_mm", l.width},
            {"len_cm", l.length},
            {"z0_ohm", l.z0},
            {"l_per_cm_nH", l.l_per_cm},
            {"c_per_cm_pF", l.c_per_cm}};
}

json stages_json(const std::vector<LineStage>& stages)
{
    json arr = json::array();
    for (const auto& s : stages)
        arr.push_back({{"cell", cell_json(s.cell)}, {"line", line_json(s.line)}});
    return arr;
}

LineCell cell_from(const json& j)
{
    return {j.at("l_H").get<double>(), j.at("c_F").get<double>(), j.at("z0_ohm").get<double>(),
            j.at("fc_Hz").get<double>()};
}

MicrostripLine line_from(const json& j, const Substrate& s)
{
    MicrostripLine l;
    l.width = j.at("w_mm").get<double>();
    l.length = j.at("len_cm").get<double>();
    l.substrate = s;
    l.z0 = j.at("z0_ohm").get<double>();
    l.l_per_cm = j.at("l_per_cm_nH").get<double>();
    l.c_per_cm = j.at("c_per_cm_pF").get<double>();
    return l;
}

std::vector<LineStage> stages_from(const json& j, const Substrate& s)
{
    std::vector<LineStage> out;
    for (const auto& e : j)
        out.push_back({cell_from(e.at("cell")), line_from(e.at("line"), s)});
    return out;
}

std::optional<double> optional_number(const json& j, const char* key)
{
    const auto& v = j.at(key);
    if (v.is_null())
        return std::nullopt;
    return v.get<double>();
}

} // namespace

std::string report_to_json(const DesignReport& r)
{
    const auto& t = r.transistor;
    json transistor = {
        {"name", t.name},
        {"gm_S", t.gm},
        {"cgs_F", t.cgs},
        {"cds_F", t.cds},
        {"ri_ohm", t.ri},
        {"rds_ohm", t.has_finite_rds() ? json(t.rds) : json(nullptr)},
        {"reference", t.reference},
    };
    const auto& s = r.gate_line.substrate;

    json doc = {
        {"format", kReportFormat},
        {"transistor", transistor},
        {"system_impedance_ohm", r.system_impedance},
        {"substrate", {{"er", s.er}, {"h_mm", s.h}, {"t_mm", s.t}}},
        {"effective_cgs_F", r.effective_cgs},
        {"series_capacitor_F", number_or_null(r.series_capacitor)},
        {"gain_penalty", r.gain_penalty_factor},
        {"gate_cell", cell_json(r.gate_cell)},
        {"drain_cell", cell_json(r.drain_cell)},
        {"gate_line", line_json(r.gate_line)},
        {"drain_line", line_json(r.drain_line)},
        {"gate_sections", stages_json(r.gate_stages)},
        {"drain_sections", stages_json(r.drain_stages)},
        {"velocity_mismatch", r.velocity_mismatch},
        {"design_frequency_Hz", r.design_frequency},
        {"phase_per_cell_gate_rad", r.phase_per_cell_gate},
        {"phase_per_cell_drain_rad", r.phase_per_cell_drain},
        {"gains",
         {{"av", r.gains.av},
          {"gp_lossless", r.gains.gp_lossless},
          {"gp_lossy", r.gains.gp_lossy},
          {"n_opt", number_or_null(r.gains.n_opt_continuous)},
          {"n_recommended", r.gains.n_recommended},
          {"n", r.gains.n}}},
        {"taper", nullptr},
        {"predicted_fc_Hz", r.predicted_fc},
    };
    if (r.taper) {
        doc["taper"] = {{"gamma_g", r.taper->gamma_overall_gate}, {"gamma_d", r.taper->gamma_overall_drain},
                        {"z_g_ohm", r.taper->z_overall_gate},     {"z_d_ohm", r.taper->z_overall_drain},
                        {"fc_g_Hz", r.taper->fc_gate},            {"fc_d_Hz", r.taper->fc_drain},
                        {"fc_total_Hz", r.taper->fc_total}};
    }
    return doc.dump(2) + "\n";
}

DesignReport report_from_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(fmt::format("design report parse error: {}", e.what()));
    }

    try {
        if (doc.at("format").get<std::string>() != kReportFormat)
            throw SchemaError(fmt::format("design report: unsupported format '{}'", doc.at("format").dump()));

        DesignReport r;
        const auto& jt = doc.at("transistor");
        auto& t = r.transistor;
        t.name = jt.at("name").get<std::string>();
        t.gm = jt.at("gm_S").get<double>();
        t.cgs = jt.at("cgs_F").get<double>();
        t.cds = jt.at("cds_F").get<double>();
        t.ri = jt.at("ri_ohm").get<double>();
        t.rds = jt.at("rds_ohm").is_null() ? kLosslessRds : jt.at("rds_ohm").get<double>();
        t.reference = jt.value("reference", "");
        t.validate();

        const auto& js = doc.at("substrate");
        Substrate s{js.at("er").get<double>(), js.at("h_mm").get<double>(), js.at("t_mm").get<double>()};

        r.system_impedance = doc.at("system_impedance_ohm").get<double>();
        r.effective_cgs = doc.at("effective_cgs_F").get<double>();
        r.series_capacitor = optional_number(doc, "series_capacitor_F");
        r.gain_penalty_factor = doc.at("gain_penalty").get<double>();
        r.gate_cell = cell_from(doc.at("gate_cell"));
        r.drain_cell = cell_from(doc.at("drain_cell"));
        r.gate_line = line_from(doc.at("gate_line"), s);
        r.drain_line = line_from(doc.at("drain_line"), s);
        r.gate_stages = stages_from(doc.at("gate_sections"), s);
        r.drain_stages = stages_from(doc.at("drain_sections"), s);
        r.velocity_mismatch = doc.at("velocity_mismatch").get<double>();
        r.design_frequency = doc.at("design_frequency_Hz").get<double>();
        r.phase_per_cell_gate = doc.at("phase_per_cell_gate_rad").get<double>();
        r.phase_per_cell_drain = doc.at("phase_per_cell_drain_rad").get<double>();

        const auto& jg = doc.at("gains");
        r.gains.av = jg.at("av").get<double>();
        r.gains.gp_lossless = jg.at("gp_lossless").get<double>();
        r.gains.gp_lossy = jg.at("gp_lossy").get<double>();
        r.gains.n_opt_continuous = optional_number(jg, "n_opt");
        r.gains.n_recommended = jg.at("n_recommended").get<int>();
        r.gains.n = jg.at("n").get<int>();

        const auto& jtap = doc.at("taper");
        if (!jtap.is_null()) {
            TaperReport tr;
            tr.gamma_overall_gate = jtap.at("gamma_g").get<double>();
            tr.gamma_overall_drain = jtap.at("gamma_d").get<double>();
            tr.z_overall_gate = jtap.at("z_g_ohm").get<double>();
            tr.z_overall_drain = jtap.at("z_d_ohm").get<double>();
            tr.fc_gate = jtap.at("fc_g_Hz").get<double>();
            tr.fc_drain = jtap.at("fc_d_Hz").get<double>();
            tr.fc_total = jtap.at("fc_total_Hz").get<double>();
            r.taper = tr;
        }
        r.predicted_fc = doc.at("predicted_fc_Hz").get<double>();
        return r;
    } catch (const json::exception& e) {
        throw SchemaError(fmt::format("design report: {}", e.what()));
    }
}

} // namespace dacad
