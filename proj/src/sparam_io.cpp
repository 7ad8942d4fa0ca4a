#include "dacad/sparam_io.hpp"

#include "dacad/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <fmt/core.h>
#include <fmt/ostream.h>

namespace dacad {

namespace {

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw Error(fmt::format("cannot open '{}' for writing", path));
    return out;
}

void finish(std::ostream& out, const std::string& path)
{
    out.flush();
    if (!out)
        throw Error(fmt::format("write to '{}' failed", path));
}

std::string upper(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    return s;
}

} // namespace

void write_touchstone(const TwoPortSweep& sweep, std::ostream& out)
{
    sweep.validate();
    fmt::print(out, "! two-port S-parameters, {} points\n", sweep.frequencies.size());
    fmt::print(out, "! f S11re S11im S21re S21im S12re S12im S22re S22im\n");
    fmt::print(out, "# HZ S RI R {:.15g}\n", sweep.reference_impedance);
    for (std::size_t i = 0; i < sweep.frequencies.size(); ++i) {
        const auto& s = sweep.s_matrices[i];
        fmt::print(out, "{:.15g} {:.15g} {:.15g} {:.15g} {:.15g} {:.15g} {:.15g} {:.15g} {:.15g}\n",
                   sweep.frequencies[i], s.s11.real(), s.s11.imag(), s.s21.real(), s.s21.imag(), s.s12.real(),
                   s.s12.imag(), s.s22.real(), s.s22.imag());
    }
}

void write_touchstone(const TwoPortSweep& sweep, const std::string& path)
{
    auto out = open_output(path);
    write_touchstone(sweep, out);
    finish(out, path);
}

TwoPortSweep read_touchstone(std::istream& in)
{
    TwoPortSweep sw;
    double unit = 1.0;
    std::string format = "MA";
    bool have_options = false;
    std::string line;
    int line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (auto bang = line.find('!'); bang != std::string::npos)
            line.erase(bang);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first))
            continue;

        if (first[0] == '#') {
            have_options = true;
            std::vector<std::string> tokens;
            if (first.size() > 1)
                tokens.push_back(upper(first.substr(1)));
            for (std::string tok; ls >> tok;)
                tokens.push_back(upper(tok));
            for (std::size_t k = 0; k < tokens.size(); ++k) {
                const auto& tok = tokens[k];
                if (tok == "HZ")
                    unit = 1.0;
                else if (tok == "KHZ")
                    unit = 1e3;
                else if (tok == "MHZ")
                    unit = 1e6;
                else if (tok == "GHZ")
                    unit = 1e9;
                else if (tok == "RI" || tok == "MA" || tok == "DB")
                    format = tok;
                else if (tok == "R" && k + 1 < tokens.size())
                    sw.reference_impedance = std::stod(tokens[++k]);
                else if (tok != "S")
                    throw ParseError(fmt::format("touchstone line {}: unsupported option '{}'", line_no, tok));
            }
            continue;
        }

        std::vector<double> v;
        try {
            v.push_back(std::stod(first));
            for (std::string tok; ls >> tok;)
                v.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ParseError(fmt::format("touchstone line {}: non-numeric value", line_no));
        }
        if (v.size() != 9)
            throw ParseError(fmt::format("touchstone line {}: expected 9 values, got {}", line_no, v.size()));

        auto pair = [&](int idx) {
            const double a = v[idx], b = v[idx + 1];
            if (format == "RI")
                return Complex(a, b);
            const double mag = format == "DB" ? std::pow(10.0, a / 20.0) : a;
            return std::polar(mag, b * std::numbers::pi / 180.0);
        };
        sw.frequencies.push_back(v[0] * unit);
        sw.s_matrices.push_back({pair(1), pair(5), pair(3), pair(7)});
    }
    if (!have_options)
        throw ParseError("touchstone: missing option line");
    sw.validate();
    return sw;
}

void write_csv(const TwoPortSweep& sweep, std::ostream& out)
{
    sweep.validate();
    fmt::print(out, "freq_hz,s11_db,s21_db,s12_db,s22_db,s21_phase_deg\n");
    for (std::size_t i = 0; i < sweep.frequencies.size(); ++i) {
        const auto& s = sweep.s_matrices[i];
        fmt::print(out, "{:.15g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g}\n", sweep.frequencies[i],
                   magnitude_db(s.s11), magnitude_db(s.s21), magnitude_db(s.s12), magnitude_db(s.s22),
                   std::arg(s.s21) * 180.0 / std::numbers::pi);
    }
}

void write_csv(const TwoPortSweep& sweep, const std::string& path)
{
    auto out = open_output(path);
    write_csv(sweep, out);
    finish(out, path);
}

} // namespace dacad
