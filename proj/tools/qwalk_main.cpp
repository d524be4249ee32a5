// qwalk CLI: simulate the coined barrier walk, evaluate its closed-form
// momentum-space solution, track ballistic peaks, run the continuous-time
// rescaling check, and emit the classical baseline.
//
// Data tables go to --output (stdout when omitted), analysis summaries are
// printed to stdout as JSON, diagnostics go to stderr. Exit codes: 0 ok,
// 2 bad flags or inconsistent configuration, 3 runtime failure, 4 compare
// tolerance exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "qwalk/qwalk.hpp"

namespace {

using nlohmann::json;
using namespace qwalk;

constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitTolerance = 4;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Writes either to --output or stdout.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void write_distribution(std::ostream& os, const std::map<int, double>& dist,
                        const std::string& format) {
    if (format == "json") {
        json rows = json::array();
        for (const auto& [n, p] : dist) rows.push_back({{"position", n}, {"probability", p}});
        os << rows.dump() << "\n";
        return;
    }
    os << "position,probability\n";
    for (const auto& [n, p] : dist) os << n << "," << fmt17(p) << "\n";
}

struct WalkOptions {
    int steps = 0;
    double phi = 0.0;
    double alpha = 1.0;
    bool alpha_given = false;
    std::string shift = "flipflop";
    std::string initial = "left";
    std::string output;
    std::string format = "csv";
};

BarrierParams barriers_of(const WalkOptions& o) {
    return o.alpha_given ? BarrierParams::from_alpha(o.alpha) : BarrierParams(o.phi);
}

ShiftKind shift_of(const WalkOptions& o) {
    return o.shift == "moving" ? ShiftKind::Moving : ShiftKind::FlipFlop;
}

InitialState initial_of(const WalkOptions& o) {
    return o.initial == "unbiased" ? InitialState::Unbiased : InitialState::LeftLocalized;
}

void add_barrier_flags(CLI::App* cmd, WalkOptions& o) {
    auto* phi = cmd->add_option("--phi", o.phi, "barrier angle in [0, pi/2]; 0 = no barriers");
    auto* alpha =
        cmd->add_option("--alpha", o.alpha, "tunneling amplitude in [0, 1]; 1 = no barriers");
    phi->excludes(alpha);
    alpha->excludes(phi);
    cmd->callback([&o, alpha] { o.alpha_given = alpha->count() > 0; });
}

int cmd_simulate(const WalkOptions& o) {
    SpinorField field = new_field(o.steps, initial_of(o));
    field = evolve(field, shift_of(o), barriers_of(o), o.steps);
    if (!field.norm_preserving()) {
        std::cerr << "note: moving shift with barriers is not unitary; norm = " << field.norm()
                  << "\n";
    }
    Sink sink(o.output);
    write_distribution(sink.stream(), probabilities(field), o.format);
    return 0;
}

struct AnalyticOptions : WalkOptions {
    int nodes = 0;  // 0 = pick from steps
    bool compare = false;
    double tol = 1e-6;
};

int cmd_analytic(const AnalyticOptions& o) {
    const BarrierParams bp = barriers_of(o);
    if (std::abs(bp.phi() - kPi / 4) < 1e-9) {
        std::cerr << "error: phi = pi/4 makes the closed-form integrand factors singular at "
                     "k = +-pi/2; use `simulate` for this angle\n";
        return kExitUsage;
    }
    const QuadratureSpec quad =
        o.nodes > 0 ? QuadratureSpec(o.nodes) : QuadratureSpec::default_for(o.steps);
    const std::map<int, double> analytic = closed_form_distribution(o.steps, bp, quad);

    if (!o.compare) {
        Sink sink(o.output);
        write_distribution(sink.stream(), analytic, o.format);
        return 0;
    }

    SpinorField field = new_field(o.steps, InitialState::LeftLocalized);
    field = evolve(field, ShiftKind::FlipFlop, bp, o.steps);
    const std::map<int, double> simulated = probabilities(field);

    double max_diff = 0.0;
    Sink sink(o.output);
    std::ostream& os = sink.stream();
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& [n, p] : analytic) {
            const double s = simulated.at(n);
            max_diff = std::max(max_diff, std::abs(p - s));
            rows.push_back({{"position", n},
                            {"analytic", p},
                            {"simulated", s},
                            {"abs_diff", std::abs(p - s)}});
        }
        os << rows.dump() << "\n";
    } else {
        os << "position,analytic,simulated,abs_diff\n";
        for (const auto& [n, p] : analytic) {
            const double s = simulated.at(n);
            max_diff = std::max(max_diff, std::abs(p - s));
            os << n << "," << fmt17(p) << "," << fmt17(s) << "," << fmt17(std::abs(p - s))
               << "\n";
        }
    }
    if (max_diff > o.tol) {
        std::cerr << "error: max |analytic - simulated| = " << fmt17(max_diff) << " exceeds --tol "
                  << fmt17(o.tol) << "\n";
        return kExitTolerance;
    }
    return 0;
}

struct PeaksOptions : WalkOptions {
    int t_min = 50;
    std::string side = "right";
};

int cmd_peaks(const PeaksOptions& o) {
    Side side = Side::Right;
    if (o.side == "left") side = Side::Left;
    if (o.side == "either") side = Side::Either;

    PeakTrace trace = track_peaks(shift_of(o), barriers_of(o), o.steps, side);
    const SlopeFit fit = fit_slope(trace, o.t_min);
    const BarrierParams est = estimate_alpha(fit.slope);

    Sink sink(o.output);
    std::ostream& os = sink.stream();
    if (o.format == "json") {
        json rows = json::array();
        for (const PeakEntry& e : trace.entries) {
            rows.push_back({{"t", e.t}, {"n_peak", e.n_peak}, {"p_peak", e.p_peak}});
        }
        os << rows.dump() << "\n";
    } else {
        os << "t,n_peak,p_peak\n";
        for (const PeakEntry& e : trace.entries) {
            os << e.t << "," << e.n_peak << "," << fmt17(e.p_peak) << "\n";
        }
    }
    std::cout << json{{"slope", fit.slope}, {"alpha", est.alpha()}, {"phi", est.phi()}}.dump()
              << "\n";
    return 0;
}

struct CtqwOptions {
    std::string graph = "cycle";
    int vertices = 8;
    double gamma = 1.0;
    double eps = 0.25;
    double time = 4.0;
};

int cmd_ctqw(const CtqwOptions& o) {
    const Graph graph =
        o.graph == "complete" ? Graph::complete(o.vertices) : Graph::cycle(o.vertices);
    const CtqwConfig cfg{graph, o.gamma, o.eps};
    cfg.validate();

    const CtqwState psi0 = CtqwState::localized(graph.vertices());
    const CtqwState with_barriers = ctqw_evolve(cfg, psi0, o.time, true);
    const CtqwState rescaled = ctqw_evolve(cfg, psi0, (1.0 - o.eps) * o.time, false);

    const double distance = global_phase_distance(with_barriers, rescaled);
    const cplx phase = extract_global_phase(with_barriers, rescaled);
    const cplx expected = std::polar(1.0, cfg.gamma * graph.degree * cfg.epsilon * o.time);
    const double phase_check = std::abs(phase - expected);

    std::cout << json{{"distance", distance}, {"phase_check", phase_check}}.dump() << "\n";
    return 0;
}

struct ClassicalOptions {
    int steps = 0;
    std::string output;
    std::string format = "csv";
};

int cmd_classical(const ClassicalOptions& o) {
    const ClassicalDistribution dist = classical_distribution(o.steps);
    const double sigma = spread(dist.prob);
    Sink sink(o.output);
    std::ostream& os = sink.stream();
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& [n, p] : dist.prob) rows.push_back({{"position", n}, {"probability", p}});
        os << json{{"rows", rows}, {"spread", sigma}}.dump() << "\n";
    } else {
        os << "position,probability\n";
        for (const auto& [n, p] : dist.prob) os << n << "," << fmt17(p) << "\n";
        os << "# spread," << fmt17(sigma) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete-time coined quantum walk on the 1D line with tunneling barriers"};
    app.require_subcommand(1);

    WalkOptions sim_opts;
    auto* sim = app.add_subcommand("simulate", "evolve the walk and write P(n) at time t");
    sim->add_option("--steps", sim_opts.steps, "number of walk steps")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sim->add_option("--shift", sim_opts.shift, "shift operator")
        ->check(CLI::IsMember({"flipflop", "moving"}));
    sim->add_option("--initial", sim_opts.initial, "initial coin state at the origin")
        ->check(CLI::IsMember({"left", "unbiased"}));
    sim->add_option("--output", sim_opts.output, "write the table here instead of stdout");
    sim->add_option("--format", sim_opts.format, "table format")
        ->check(CLI::IsMember({"csv", "json"}));
    add_barrier_flags(sim, sim_opts);

    AnalyticOptions an_opts;
    auto* an = app.add_subcommand(
        "analytic", "evaluate P(n) from the momentum-space closed form by quadrature");
    an->add_option("--steps", an_opts.steps, "time t")->required()->check(CLI::NonNegativeNumber);
    an->add_option("--nodes", an_opts.nodes, "quadrature node count (multiple of 4)")
        ->check(CLI::PositiveNumber);
    an->add_flag("--compare", an_opts.compare, "also simulate and report per-row |difference|");
    an->add_option("--tol", an_opts.tol, "max allowed |analytic - simulated| with --compare");
    an->add_option("--output", an_opts.output, "write the table here instead of stdout");
    an->add_option("--format", an_opts.format, "table format")
        ->check(CLI::IsMember({"csv", "json"}));
    add_barrier_flags(an, an_opts);

    PeaksOptions pk_opts;
    auto* pk = app.add_subcommand("peaks",
                                  "track the probability peak, fit its speed, estimate alpha");
    pk->add_option("--steps", pk_opts.steps, "trace length t_max")
        ->required()
        ->check(CLI::PositiveNumber);
    pk->add_option("--t-min", pk_opts.t_min, "first step included in the regression");
    pk->add_option("--side", pk_opts.side, "lattice side to search for the peak")
        ->check(CLI::IsMember({"right", "left", "either"}));
    pk->add_option("--shift", pk_opts.shift, "shift operator")
        ->check(CLI::IsMember({"flipflop", "moving"}));
    pk->add_option("--output", pk_opts.output, "write the trace here instead of stdout");
    pk->add_option("--format", pk_opts.format, "table format")
        ->check(CLI::IsMember({"csv", "json"}));
    add_barrier_flags(pk, pk_opts);

    CtqwOptions ct_opts;
    auto* ct = app.add_subcommand(
        "ctqw", "continuous-time barrier walk vs time-rescaled free walk on a regular graph");
    ct->add_option("--graph", ct_opts.graph, "graph family")
        ->check(CLI::IsMember({"cycle", "complete"}));
    ct->add_option("--vertices", ct_opts.vertices, "vertex count")->check(CLI::PositiveNumber);
    ct->add_option("--gamma", ct_opts.gamma, "jumping rate");
    ct->add_option("--eps", ct_opts.eps, "barrier leakage in [0, 1)");
    ct->add_option("--time", ct_opts.time, "evolution time of the barrier walk");

    ClassicalOptions cl_opts;
    auto* cl = app.add_subcommand("classical", "exact classical random-walk distribution");
    cl->add_option("--steps", cl_opts.steps, "number of steps")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cl->add_option("--output", cl_opts.output, "write the table here instead of stdout");
    cl->add_option("--format", cl_opts.format, "table format")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (sim->parsed()) return cmd_simulate(sim_opts);
        if (an->parsed()) return cmd_analytic(an_opts);
        if (pk->parsed()) return cmd_peaks(pk_opts);
        if (ct->parsed()) return cmd_ctqw(ct_opts);
        if (cl->parsed()) return cmd_classical(cl_opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InsufficientData& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const QuadratureNodeSingular& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
