#pragma once

#include "dacad/design_engine.hpp"
#include "dacad/ladder_line.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace dacad {

struct Element {
    enum class Kind { resistor, capacitor, inductor, vccs };
    Kind kind = Kind::resistor;
    int a = 0; ///< first terminal (output + for a vccs)
    int b = 0; ///< second terminal (output - for a vccs)
    int ctrl_plus = 0;
    int ctrl_minus = 0;
    double value = 0.0; ///< ohm, F, H or S
};

struct Port {
    int node = 0;
    double reference_impedance = 50.0;
};

/// Small-signal linear network. Node 0 is ground.
class Network {
public:
    Network() = default;

    int add_node() { return node_count_++; }
    int node_count() const { return node_count_; }

    void add_resistor(int a, int b, double ohms);
    void add_capacitor(int a, int b, double farads);
    void add_inductor(int a, int b, double henries);
    /// Current gm * (V(ctrl_plus) - V(ctrl_minus)) flows from out_plus to
    /// out_minus through the source.
    void add_vccs(int out_plus, int out_minus, int ctrl_plus, int ctrl_minus, double gm);
    void set_ports(Port port1, Port port2);

    const std::vector<Element>& elements() const { return elements_; }
    const Port& port1() const { return port1_; }
    const Port& port2() const { return port2_; }
    std::size_t count(Element::Kind kind) const;

    /// Throws InvalidInput when node indices, ports or grounding are wrong.
    void validate() const;

private:
    void check_node(int n) const;

    int node_count_ = 1;
    std::vector<Element> elements_;
    Port port1_;
    Port port2_;
};

struct SMatrix {
    Complex s11, s12, s21, s22;
};

struct TwoPortSweep {
    std::vector<double> frequencies;
    std::vector<SMatrix> s_matrices;
    double reference_impedance = 50.0;

    void validate() const;
};

enum class Spacing { linear, logarithmic };

struct SweepMetrics {
    double low_freq_gain_db = 0.0;
    std::optional<double> cutoff_minus3db; ///< empty when |S21| never drops 3 dB
    double worst_s11_db_below_cutoff = 0.0;
};

/// Gate and drain ladders with device models and internal terminations.
Network build_network(const DesignReport& report, const TransistorModel& t);

/// Bare ladder of T-sections (L/2 - C - L/2) with a port at each end.
Network build_passive_ladder(std::span<const LineCell> cells, double reference_impedance);

SMatrix s_parameters_at(const Network& net, double f);

std::vector<double> frequency_grid(double f_start, double f_stop, int points, Spacing spacing);

TwoPortSweep sweep(const Network& net, double f_start, double f_stop, int points,
                   Spacing spacing = Spacing::linear);

SweepMetrics extract_metrics(const TwoPortSweep& sweep);

double magnitude_db(Complex s);

} // namespace dacad
