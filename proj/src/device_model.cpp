#include "dacad/device_model.hpp"

#include "dacad/errors.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/core.h>
#include <json.hpp>

namespace dacad {

using nlohmann::json;

namespace {

const std::set<std::string> kEntryKeys = {"name", "gm_S", "cgs_F", "cds_F", "ri_ohm", "rds_ohm", "reference"};

double number_field(const json& entry, const char* key, const std::string& who)
{
    auto it = entry.find(key);
    if (it == entry.end())
        throw SchemaError(fmt::format("{}: missing field '{}'", who, key));
    if (!it->is_number())
        throw SchemaError(fmt::format("{}: field '{}' must be a number", who, key));
    return it->get<double>();
}

TransistorModel parse_entry(const json& entry, std::size_t index)
{
    if (!entry.is_object())
        throw SchemaError(fmt::format("transistors[{}]: expected an object", index));

    std::string who = fmt::format("transistors[{}]", index);
    for (const auto& item : entry.items()) {
        if (!kEntryKeys.count(item.key()))
            throw SchemaError(fmt::format("{}: unknown key '{}'", who, item.key()));
    }

    auto name = entry.find("name");
    if (name == entry.end() || !name->is_string())
        throw SchemaError(fmt::format("{}: missing string field 'name'", who));

    TransistorModel t;
    t.name = name->get<std::string>();
    who = fmt::format("transistor '{}'", t.name);
    t.gm = number_field(entry, "gm_S", who);
    t.cgs = number_field(entry, "cgs_F", who);
    t.cds = number_field(entry, "cds_F", who);
    if (entry.contains("ri_ohm"))
        t.ri = number_field(entry, "ri_ohm", who);
    if (entry.contains("rds_ohm"))
        t.rds = number_field(entry, "rds_ohm", who);
    if (entry.contains("reference")) {
        if (!entry["reference"].is_string())
            throw SchemaError(fmt::format("{}: field 'reference' must be a string", who));
        t.reference = entry["reference"].get<std::string>();
    }
    t.validate();
    return t;
}

} // namespace

void TransistorModel::validate() const
{
    auto fail = [&](const char* what) {
        throw SchemaError(fmt::format("transistor '{}': {}", name, what));
    };
    if (name.empty())
        throw SchemaError("transistor name must not be empty");
    if (!(gm > 0) || !std::isfinite(gm))
        fail("gm must be positive");
    if (!(cgs > 0) || !std::isfinite(cgs))
        fail("cgs must be positive");
    if (!(cds > 0) || !std::isfinite(cds))
        fail("cds must be positive");
    if (!(ri >= 0) || !std::isfinite(ri))
        fail("ri must be non-negative");
    if (!(rds > 0))
        fail("rds must be positive");
}

void Substrate::validate() const
{
    if (!(er >= 1) || !std::isfinite(er))
        throw InvalidInput("substrate: er must be >= 1");
    if (!(h > 0) || !std::isfinite(h))
        throw InvalidInput("substrate: h must be positive");
    if (!(t >= 0) || !std::isfinite(t))
        throw InvalidInput("substrate: t must be non-negative");
}

const TransistorModel* Catalog::find(std::string_view name) const
{
    for (const auto& t : transistors) {
        if (t.name == name)
            return &t;
    }
    return nullptr;
}

Catalog load_catalog(std::string_view text, std::string source_path)
{
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(fmt::format("catalog parse error: {}", e.what()));
    }

    if (!root.is_object())
        throw SchemaError("catalog: top level must be an object");
    for (const auto& item : root.items()) {
        if (item.key() != "transistors")
            throw SchemaError(fmt::format("catalog: unknown key '{}'", item.key()));
    }
    auto list = root.find("transistors");
    if (list == root.end() || !list->is_array())
        throw SchemaError("catalog: missing array 'transistors'");

    Catalog catalog;
    catalog.source_path = std::move(source_path);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < list->size(); ++i) {
        auto t = parse_entry((*list)[i], i);
        if (!seen.insert(t.name).second)
            throw DuplicateNameError(fmt::format("catalog: duplicate transistor name '{}'", t.name));
        catalog.transistors.push_back(std::move(t));
    }
    return catalog;
}

Catalog load_catalog_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(fmt::format("cannot open catalog '{}'", path));
    std::stringstream buf;
    buf << in.rdbuf();
    return load_catalog(buf.str(), path);
}

std::string serialize_catalog(const Catalog& catalog)
{
    json list = json::array();
    for (const auto& t : catalog.transistors) {
        json entry = {
            {"name", t.name},
            {"gm_S", t.gm},
            {"cgs_F", t.cgs},
            {"cds_F", t.cds},
            {"ri_ohm", t.ri},
        };
        if (t.has_finite_rds())
            entry["rds_ohm"] = t.rds;
        if (!t.reference.empty())
            entry["reference"] = t.reference;
        list.push_back(std::move(entry));
    }
    return json{{"transistors", list}}.dump(2) + "\n";
}

double effective_gate_capacitance(double cgs, std::optional<double> cseries)
{
    if (!(cgs > 0))
        throw InvalidInput("effective_gate_capacitance: cgs must be positive");
    if (!cseries)
        return cgs;
    if (!(*cseries > 0))
        throw InvalidInput("effective_gate_capacitance: series capacitor must be positive");
    return *cseries * cgs / (*cseries + cgs);
}

double estimate_cgs(double cox_per_area, double gate_width, double gate_length)
{
    if (cox_per_area < 0 || gate_width < 0 || gate_length < 0)
        throw InvalidInput("estimate_cgs: inputs must be non-negative");
    return cox_per_area * gate_width * gate_length;
}

std::vector<VerificationRow> builtin_table1()
{
    // Effective capacitance and estimated upper frequency limit per design.
    return {
        {"[4]", 20e-15, 318e9, "0.06", "12.5", "10.5", "1-160"},
        {"[5]", 97e-15, 65.6e9, "0.12", "14.5", "18.3", "12-46"},
        {"[9]", 0.28e-12, 22.7e9, "0.02", "5-22", "7-13", "1-10"},
        {"[10]", 0.3e-12, 21.2e9, "10.6-24.3", "15.5-26.6", "15.3-23.2", "6-18"},
        {"[13]", 0.3e-12, 21.2e9, "14.5-26.3", "13.2-23.7", "17-21", "6-18"},
        {"[14]", 0.14e-12, 45e9, "0.015", "4-10.6", "9.8", "1-15.2"},
        {"[15]", 1.79e-12, 3.55e9, "13", "27", "22", "DC-3.4"},
        {"[16]", 124e-15, 51e9, "1.26-2.19", "9.4-16.8", "3-5.5", "5-38"},
        {"[17]", 138e-15, 46e9, "0.088", "6", "22", "14-34"},
    };
}

} // namespace dacad
