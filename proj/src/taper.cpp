#include "dacad/taper.hpp"

#include "dacad/errors.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

namespace dacad {

namespace {

double reflection(double from, double to)
{
    return (to - from) / (to + from);
}

} // namespace

void TaperProfile::validate() const
{
    if (sections.empty())
        throw InvalidInput("taper profile has no sections");
    for (double z : sections) {
        if (!(z > 0) || !std::isfinite(z))
            throw InvalidInput(fmt::format("taper section impedance {} must be positive", z));
    }
    if (!(terminal_impedance > 0) || !std::isfinite(terminal_impedance))
        throw InvalidInput("taper terminal impedance must be positive");
}

std::vector<double> junction_gammas(const TaperProfile& profile)
{
    profile.validate();
    const auto& z = profile.sections;
    std::vector<double> g;
    g.reserve(z.size());
    if (profile.side == LineSide::gate) {
        g.push_back(reflection(profile.terminal_impedance, z.front()));
        for (std::size_t k = 0; k + 1 < z.size(); ++k)
            g.push_back(reflection(z[k], z[k + 1]));
    } else {
        for (std::size_t k = 0; k + 1 < z.size(); ++k)
            g.push_back(reflection(z[k], z[k + 1]));
        g.push_back(reflection(z.back(), profile.terminal_impedance));
    }
    return g;
}

Complex overall_gamma(const std::vector<double>& gammas, double theta)
{
    if (gammas.empty())
        throw InvalidInput("overall_gamma: empty reflection list");
    Complex sum = 0.0;
    for (std::size_t k = 0; k < gammas.size(); ++k)
        sum += gammas[k] * std::polar(1.0, -2.0 * static_cast<double>(k) * theta);
    return sum;
}

double overall_gamma_quarterwave(const std::vector<double>& gammas)
{
    if (gammas.empty())
        throw InvalidInput("overall_gamma_quarterwave: empty reflection list");
    double sum = 0.0;
    for (std::size_t k = 0; k < gammas.size(); ++k)
        sum += (k % 2 == 0) ? gammas[k] : -gammas[k];
    return sum;
}

TaperPair ginzton_profiles(int n, double z0)
{
    if (n < 1)
        throw InvalidInput("ginzton_profiles: n must be >= 1");
    if (!(z0 > 0))
        throw InvalidInput("ginzton_profiles: z0 must be positive");

    TaperPair p;
    p.gate.side = LineSide::gate;
    p.gate.terminal_impedance = z0;
    for (int k = 1; k <= n + 1; ++k)
        p.gate.sections.push_back(z0 / k);

    p.drain.side = LineSide::drain;
    p.drain.terminal_impedance = z0;
    for (int k = 1; k <= n; ++k)
        p.drain.sections.push_back(n * z0 / k);
    return p;
}

double equivalent_impedance(double gamma, LineSide side, double reference)
{
    if (!(std::abs(gamma) < 1.0))
        throw InvalidInput(fmt::format("equivalent_impedance: |gamma| = {} must be < 1", std::abs(gamma)));
    if (side == LineSide::gate)
        return reference * (1.0 + gamma) / (1.0 - gamma);
    return reference * (1.0 - gamma) / (1.0 + gamma);
}

TaperReport analyze_taper(const TaperProfile& gate, const TaperProfile& drain, double cgs, double cds)
{
    if (gate.side != LineSide::gate || drain.side != LineSide::drain)
        throw InvalidInput("analyze_taper: profiles passed on the wrong sides");
    if (!(cgs > 0) || !(cds > 0))
        throw InvalidInput("analyze_taper: capacitances must be positive");

    TaperReport r;
    r.gamma_overall_gate = overall_gamma_quarterwave(junction_gammas(gate));
    r.gamma_overall_drain = overall_gamma_quarterwave(junction_gammas(drain));
    r.z_overall_gate = equivalent_impedance(r.gamma_overall_gate, LineSide::gate, gate.terminal_impedance);
    r.z_overall_drain = equivalent_impedance(r.gamma_overall_drain, LineSide::drain, drain.terminal_impedance);
    r.fc_gate = cutoff_frequency(r.z_overall_gate, cgs);
    r.fc_drain = cutoff_frequency(r.z_overall_drain, cds);
    r.fc_total = std::min(r.fc_gate, r.fc_drain);
    return r;
}

} // namespace dacad
