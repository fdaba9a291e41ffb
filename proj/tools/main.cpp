#include "gica/checks.hpp"
#include "gica/render.hpp"
#include "gica/scenario.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

gica::Scenario load(const std::string& path, int steps_override, bool have_seed, uint64_t seed) {
    gica::Scenario scenario = gica::parse_scenario(slurp(path));
    if (steps_override >= 0) scenario.steps = steps_override;
    if (have_seed) scenario.seed = seed;
    return scenario;
}

/// Per-step norm and occupation expectations of a quantum run.
std::string quantum_trace_text(const gica::Scenario& scenario) {
    using namespace gica;
    QuantumState psi = QuantumState::basis(scenario_initial_basis(scenario));
    if (scenario.schedule == GaugeSchedule::Start || scenario.schedule == GaugeSchedule::Both)
        psi = gauge_transform_q(scenario_phase_profile(scenario), psi);

    const bool ring = scenario.topology.is_ring();
    std::string out = "# quantum trace: t, norm, per-site <left>,<right> occupation\n";
    char buf[64];
    for (int t = 0; t <= scenario.steps; ++t) {
        int lo = ring ? 0 : 0, hi = ring ? scenario.topology.ring_size() : 0;
        if (!ring) {
            bool first = true;
            for (const auto& [state, amp] : psi.terms()) {
                if (first || state.window_begin() < lo) lo = state.window_begin();
                if (first || state.window_end() > hi) hi = state.window_end();
                first = false;
            }
            if (hi <= lo) hi = lo + 1;
        }
        std::snprintf(buf, sizeof(buf), "t=%d norm=%.12f", t, psi.norm());
        out += buf;
        for (int x = lo; x < hi; ++x) {
            double left = 0.0, right = 0.0;
            for (const auto& [state, amp] : psi.terms()) {
                const double w = std::norm(amp);
                left += w * state.left_bit(x);
                right += w * state.right_bit(x);
            }
            std::snprintf(buf, sizeof(buf), " %d:%.6f,%.6f", x, left, right);
            out += buf;
        }
        out += "\n";
        if (t < scenario.steps) psi = qca_step(scenario.params, psi);
    }
    if (scenario.schedule == GaugeSchedule::End || scenario.schedule == GaugeSchedule::Both) {
        const auto phi = scenario.schedule == GaugeSchedule::Both
                             ? scenario_phase_profile(scenario).negated()
                             : scenario_phase_profile(scenario);
        psi = gauge_transform_q(phi, psi);
        std::snprintf(buf, sizeof(buf), "t=%d* norm=%.12f\n", scenario.steps, psi.norm());
        out += buf;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gauge-invariant cellular automata: simulate scenarios, render space-time "
                 "diagrams, run invariance and equivalence checks"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "text";
    std::string out_path;
    int steps_override = -1;
    uint64_t seed = 0;
    bool have_seed = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "scenario file")->required();
        cmd->add_option("--steps", steps_override, "override the scenario's step count");
        cmd->add_option("--seed", seed, "override the scenario's seed")
            ->each([&](const std::string&) { have_seed = true; });
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "run a scenario and render its trace");
    add_common(simulate);
    simulate->add_option("--format", format, "text or svg")
        ->check(CLI::IsMember({"text", "svg"}));

    CLI::App* check = app.add_subcommand("check", "run a scenario's checks and report");
    add_common(check);

    CLI11_PARSE(app, argc, argv);

    try {
        const gica::Scenario scenario = load(file, steps_override, have_seed, seed);

        if (simulate->parsed()) {
            if (scenario.model == gica::ModelKind::Quantum) {
                if (format == "svg") {
                    std::cerr << "error: svg output applies to classical scenarios\n";
                    return kExitError;
                }
                emit(quantum_trace_text(scenario), out_path);
            } else {
                const auto trace = gica::scenario_trace(scenario);
                const auto fmt = format == "svg" ? gica::DiagramFormat::Svg
                                                 : gica::DiagramFormat::Text;
                emit(gica::render_spacetime(trace, fmt), out_path);
            }
            return kExitOk;
        }

        const gica::ChecksReport report = gica::run_checks(scenario);
        emit(report.to_text(), out_path);
        return report.all_pass() ? kExitOk : kExitCheckFailed;
    } catch (const gica::ParseError& err) {
        std::cerr << "parse error: " << err.what() << "\n";
        return kExitError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitError;
    }
}
