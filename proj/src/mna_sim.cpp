#include "dacad/mna_sim.hpp"

#include "dacad/errors.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Dense>
#include <fmt/core.h>

namespace dacad {

namespace {

constexpr double kShuntTolerance = 1e-9;

void require_element_value(double v, const char* what)
{
    if (!(v > 0) || !std::isfinite(v))
        throw InvalidInput(fmt::format("{} value must be positive and finite, got {}", what, v));
}

// Union-find over node indices.
struct Components {
    std::vector<int> parent;
    explicit Components(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

void Network::check_node(int n) const
{
    if (n < 0 || n >= node_count_)
        throw InvalidInput(fmt::format("node {} out of range [0, {})", n, node_count_));
}

void Network::add_resistor(int a, int b, double ohms)
{
    check_node(a);
    check_node(b);
    require_element_value(ohms, "resistor");
    elements_.push_back({Element::Kind::resistor, a, b, 0, 0, ohms});
}

void Network::add_capacitor(int a, int b, double farads)
{
    check_node(a);
    check_node(b);
    require_element_value(farads, "capacitor");
    elements_.push_back({Element::Kind::capacitor, a, b, 0, 0, farads});
}

void Network::add_inductor(int a, int b, double henries)
{
    check_node(a);
    check_node(b);
    require_element_value(henries, "inductor");
    elements_.push_back({Element::Kind::inductor, a, b, 0, 0, henries});
}

void Network::add_vccs(int out_plus, int out_minus, int ctrl_plus, int ctrl_minus, double gm)
{
    check_node(out_plus);
    check_node(out_minus);
    check_node(ctrl_plus);
    check_node(ctrl_minus);
    if (!std::isfinite(gm))
        throw InvalidInput("vccs transconductance must be finite");
    elements_.push_back({Element::Kind::vccs, out_plus, out_minus, ctrl_plus, ctrl_minus, gm});
}

void Network::set_ports(Port port1, Port port2)
{
    port1_ = port1;
    port2_ = port2;
}

std::size_t Network::count(Element::Kind kind) const
{
    std::size_t n = 0;
    for (const auto& e : elements_)
        n += e.kind == kind;
    return n;
}

void Network::validate() const
{
    for (const Port* p : {&port1_, &port2_}) {
        check_node(p->node);
        if (p->node == 0)
            throw InvalidInput("port placed on the ground node");
        if (!(p->reference_impedance > 0))
            throw InvalidInput("port reference impedance must be positive");
    }
    if (port1_.node == port2_.node)
        throw InvalidInput("both ports share one node");

    Components cc(node_count_);
    for (const auto& e : elements_) {
        if (e.kind != Element::Kind::vccs)
            cc.join(e.a, e.b);
    }
    for (const Port* p : {&port1_, &port2_}) {
        if (cc.find(p->node) != cc.find(0))
            throw InvalidInput(fmt::format("port node {} has no path to ground", p->node));
    }
}

void TwoPortSweep::validate() const
{
    if (frequencies.size() != s_matrices.size())
        throw InvalidInput("sweep: frequency and S-matrix counts differ");
    for (std::size_t i = 0; i < frequencies.size(); ++i) {
        if (!(frequencies[i] > 0))
            throw InvalidInput("sweep: frequencies must be positive");
        if (i > 0 && !(frequencies[i] > frequencies[i - 1]))
            throw InvalidInput("sweep: frequencies must be strictly ascending");
    }
    if (!(reference_impedance > 0))
        throw InvalidInput("sweep: reference impedance must be positive");
}

Network build_network(const DesignReport& report, const TransistorModel& t)
{
    const int n = report.stages();
    if (n < 1)
        throw InconsistentReport("report has no stages");
    if (report.gate_stages.size() != static_cast<std::size_t>(n) ||
        report.drain_stages.size() != static_cast<std::size_t>(n))
        throw InconsistentReport(fmt::format("report has {} stages but {} gate / {} drain sections", n,
                                             report.gate_stages.size(), report.drain_stages.size()));

    const double z0 = report.system_impedance;
    Network net;

    const int p1 = net.add_node();
    std::vector<int> g(n), d(n);
    for (auto& node : g)
        node = net.add_node();
    const int g_term = net.add_node();
    const int d_term = net.add_node();
    for (auto& node : d)
        node = net.add_node();
    const int p2 = net.add_node();

    auto lg = [&](int k) { return report.gate_stages[k].cell.inductance; };
    auto ld = [&](int k) { return report.drain_stages[k].cell.inductance; };

    // Half inductors of neighbouring T-sections are merged.
    net.add_inductor(p1, g[0], lg(0) / 2);
    net.add_inductor(d_term, d[0], ld(0) / 2);
    for (int k = 0; k + 1 < n; ++k) {
        net.add_inductor(g[k], g[k + 1], lg(k) / 2 + lg(k + 1) / 2);
        net.add_inductor(d[k], d[k + 1], ld(k) / 2 + ld(k + 1) / 2);
    }
    net.add_inductor(g[n - 1], g_term, lg(n - 1) / 2);
    net.add_inductor(d[n - 1], p2, ld(n - 1) / 2);
    net.add_resistor(g_term, 0, z0);
    net.add_resistor(d_term, 0, z0);

    for (int k = 0; k < n; ++k) {
        int node = g[k];
        if (report.series_capacitor) {
            const int mid = net.add_node();
            net.add_capacitor(node, mid, *report.series_capacitor);
            node = mid;
        }
        int ctrl = node;
        if (t.ri > 0) {
            ctrl = net.add_node();
            net.add_resistor(node, ctrl, t.ri);
        }
        net.add_capacitor(ctrl, 0, t.cgs);

        const double extra_gate = report.gate_stages[k].cell.capacitance - report.effective_cgs;
        if (extra_gate > kShuntTolerance * report.effective_cgs)
            net.add_capacitor(g[k], 0, extra_gate);

        net.add_capacitor(d[k], 0, t.cds);
        if (t.has_finite_rds())
            net.add_resistor(d[k], 0, t.rds);
        const double extra_drain = report.drain_stages[k].cell.capacitance - t.cds;
        if (extra_drain > kShuntTolerance * t.cds)
            net.add_capacitor(d[k], 0, extra_drain);

        if (t.gm != 0)
            net.add_vccs(d[k], 0, ctrl, 0, t.gm);
    }

    net.set_ports({p1, z0}, {p2, z0});
    return net;
}

Network build_passive_ladder(std::span<const LineCell> cells, double reference_impedance)
{
    if (cells.empty())
        throw InvalidInput("build_passive_ladder: no cells");
    Network net;
    int prev = net.add_node();
    const int first = prev;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const int mid = net.add_node();
        const double l_in = cells[k].inductance / 2 + (k > 0 ? cells[k - 1].inductance / 2 : 0.0);
        net.add_inductor(prev, mid, l_in);
        net.add_capacitor(mid, 0, cells[k].capacitance);
        prev = mid;
    }
    const int last = net.add_node();
    net.add_inductor(prev, last, cells.back().inductance / 2);
    net.set_ports({first, reference_impedance}, {last, reference_impedance});
    return net;
}

SMatrix s_parameters_at(const Network& net, double f)
{
    if (!(f > 0) || !std::isfinite(f))
        throw InvalidInput(fmt::format("s_parameters_at: frequency {} must be positive", f));
    net.validate();

    using Eigen::MatrixXcd;
    const double w = 2.0 * std::numbers::pi * f;
    const Complex j(0.0, 1.0);
    const int dim = net.node_count() - 1; // ground eliminated
    MatrixXcd y = MatrixXcd::Zero(dim, dim);

    auto add = [&](int r, int c, Complex v) {
        if (r > 0 && c > 0)
            y(r - 1, c - 1) += v;
    };
    auto stamp = [&](int a, int b, Complex v) {
        add(a, a, v);
        add(b, b, v);
        add(a, b, -v);
        add(b, a, -v);
    };

    for (const auto& e : net.elements()) {
        switch (e.kind) {
        case Element::Kind::resistor:
            stamp(e.a, e.b, 1.0 / e.value);
            break;
        case Element::Kind::capacitor:
            stamp(e.a, e.b, j * w * e.value);
            break;
        case Element::Kind::inductor:
            stamp(e.a, e.b, 1.0 / (j * w * e.value));
            break;
        case Element::Kind::vccs:
            add(e.a, e.ctrl_plus, e.value);
            add(e.a, e.ctrl_minus, -e.value);
            add(e.b, e.ctrl_plus, -e.value);
            add(e.b, e.ctrl_minus, e.value);
            break;
        }
    }

    // Partition unknowns into the two port nodes and the internal nodes.
    const int port_idx[2] = {net.port1().node - 1, net.port2().node - 1};
    std::vector<int> internal;
    internal.reserve(dim);
    for (int i = 0; i < dim; ++i) {
        if (i != port_idx[0] && i != port_idx[1])
            internal.push_back(i);
    }
    const int m = static_cast<int>(internal.size());

    Eigen::Matrix2cd y_port;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            y_port(r, c) = y(port_idx[r], port_idx[c]);

    if (m > 0) {
        MatrixXcd yii(m, m), yip(m, 2), ypi(2, m);
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < m; ++c)
                yii(r, c) = y(internal[r], internal[c]);
            for (int c = 0; c < 2; ++c) {
                yip(r, c) = y(internal[r], port_idx[c]);
                ypi(c, r) = y(port_idx[c], internal[r]);
            }
        }
        Eigen::PartialPivLU<MatrixXcd> lu(yii);
        const double rcond = lu.rcond();
        if (!(rcond > 1e-15))
            throw SingularSystem(fmt::format("singular nodal system at {} Hz", f), f);
        // Column k: internal voltages with unit voltage on port k, other port shorted.
        const MatrixXcd v = lu.solve(-yip);
        if (!v.allFinite())
            throw SingularSystem(fmt::format("singular nodal system at {} Hz", f), f);
        y_port += ypi * v;
    }

    // Normalize to the port references and convert: S = (I - y)(I + y)^-1.
    const double r1 = std::sqrt(net.port1().reference_impedance);
    const double r2 = std::sqrt(net.port2().reference_impedance);
    const Complex y11 = y_port(0, 0) * r1 * r1;
    const Complex y12 = y_port(0, 1) * r1 * r2;
    const Complex y21 = y_port(1, 0) * r2 * r1;
    const Complex y22 = y_port(1, 1) * r2 * r2;

    const Complex a11 = 1.0 + y11, a12 = y12, a21 = y21, a22 = 1.0 + y22;
    const Complex det = a11 * a22 - a12 * a21;
    if (det == Complex(0.0))
        throw SingularSystem(fmt::format("port conversion singular at {} Hz", f), f);
    const Complex i11 = a22 / det, i12 = -a12 / det, i21 = -a21 / det, i22 = a11 / det;

    const Complex b11 = 1.0 - y11, b12 = -y12, b21 = -y21, b22 = 1.0 - y22;
    SMatrix s;
    s.s11 = b11 * i11 + b12 * i21;
    s.s12 = b11 * i12 + b12 * i22;
    s.s21 = b21 * i11 + b22 * i21;
    s.s22 = b21 * i12 + b22 * i22;
    return s;
}

std::vector<double> frequency_grid(double f_start, double f_stop, int points, Spacing spacing)
{
    if (!(f_start > 0) || !(f_stop > f_start) || !std::isfinite(f_stop))
        throw InvalidInput("frequency grid needs 0 < f_start < f_stop");
    if (points < 2)
        throw InvalidInput("frequency grid needs at least 2 points");

    std::vector<double> f(points);
    const double last = points - 1;
    if (spacing == Spacing::linear) {
        const double step = (f_stop - f_start) / last;
        for (int i = 0; i < points; ++i)
            f[i] = f_start + step * i;
    } else {
        const double log_start = std::log(f_start);
        const double log_step = (std::log(f_stop) - log_start) / last;
        for (int i = 0; i < points; ++i)
            f[i] = std::exp(log_start + log_step * i);
    }
    f.front() = f_start;
    f.back() = f_stop;
    return f;
}

TwoPortSweep sweep(const Network& net, double f_start, double f_stop, int points, Spacing spacing)
{
    TwoPortSweep out;
    out.frequencies = frequency_grid(f_start, f_stop, points, spacing);
    out.reference_impedance = net.port1().reference_impedance;
    out.s_matrices.reserve(out.frequencies.size());
    for (double f : out.frequencies)
        out.s_matrices.push_back(s_parameters_at(net, f));
    return out;
}

double magnitude_db(Complex s)
{
    return 20.0 * std::log10(std::abs(s));
}

SweepMetrics extract_metrics(const TwoPortSweep& sw)
{
    if (sw.frequencies.empty())
        throw InvalidInput("extract_metrics: empty sweep");
    sw.validate();

    const auto& f = sw.frequencies;
    SweepMetrics m;
    m.low_freq_gain_db = magnitude_db(sw.s_matrices.front().s21);

    if (std::isfinite(m.low_freq_gain_db)) {
        const double target = m.low_freq_gain_db - 3.0;
        for (std::size_t i = 1; i < f.size(); ++i) {
            const double cur = magnitude_db(sw.s_matrices[i].s21);
            if (cur > target)
                continue;
            if (cur == target) {
                m.cutoff_minus3db = f[i];
            } else {
                const double prev = magnitude_db(sw.s_matrices[i - 1].s21);
                const double frac = std::isfinite(cur) ? (prev - target) / (prev - cur) : 1.0;
                m.cutoff_minus3db = f[i - 1] + frac * (f[i] - f[i - 1]);
            }
            break;
        }
    }

    m.worst_s11_db_below_cutoff = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (m.cutoff_minus3db && f[i] > *m.cutoff_minus3db)
            break;
        m.worst_s11_db_below_cutoff = std::max(m.worst_s11_db_below_cutoff, magnitude_db(sw.s_matrices[i].s11));
    }
    return m;
}

} // namespace dacad
