#include "gica/checks.hpp"

#include "gica/equivalence.hpp"
#include "gica/invariance.hpp"

#include <cmath>
#include <cstdio>
#include <random>

namespace gica {

namespace {

constexpr long kExhaustiveBudget = 400'000;
constexpr int kSampledTrials = 500;
constexpr int kQuantumTrials = 20;
constexpr double kQuantumTolerance = 1e-10;

std::string cell_str(const Cell& c) {
    return "(" + std::to_string(c.left) + "," + std::to_string(c.right) + ")";
}

std::string local_witness_str(const LocalWitness& w) {
    std::string out = "witness=cl" + cell_str(w.cell_left) + ",A=" + w.field.cycle_string() +
                      ",cr" + cell_str(w.cell_right) + ",g=" + w.g_left.cycle_string() +
                      ",g'=" + w.g_right.cycle_string();
    switch (w.slot) {
        case MismatchSlot::LeftOutput: out += ",slot=left"; break;
        case MismatchSlot::RightOutput: out += ",slot=right"; break;
        case MismatchSlot::FieldOutput: out += ",slot=field"; break;
    }
    return out;
}

std::string global_witness_str(const GlobalWitness& w) {
    std::string gamma;
    for (int x : w.gamma.support()) {
        if (!gamma.empty()) gamma += ";";
        gamma += std::to_string(x) + ":" + w.gamma.at(x).cycle_string();
    }
    if (gamma.empty()) gamma = "id";
    std::string out = "witness=t=" + std::to_string(w.steps) + ",gamma=" + gamma + ",pos=" +
                      std::to_string(w.position) + (w.on_link ? "(link)" : "");
    if (w.no_compensation) out += ",no-compensation";
    return out;
}

CheckOutcome check_local(const Scenario& s) {
    const auto report = check_local_invariance(scenario_group(s), scenario_rule(s));
    CheckOutcome out{kCheckLocalInvariance, report.verdict == InvarianceVerdict::Invariant,
                     report.cases_checked, ""};
    if (report.local_witness) out.detail = local_witness_str(*report.local_witness);
    return out;
}

CheckOutcome check_global(const Scenario& s) {
    const GaugeGroup group = scenario_group(s);
    const LinkRule rule = scenario_rule(s);
    const int steps = std::max(1, std::min(s.steps, 3));
    CheckOutcome out{kCheckGlobalInvariance, false, 0, ""};

    bool exhaustive = s.topology.is_ring();
    if (exhaustive) {
        // |configs| * |transformations| = (N^2 |G|)^n * |G|^n.
        double cases = 1.0;
        for (int x = 0; x < s.topology.ring_size(); ++x)
            cases *= static_cast<double>(group.alphabet_size()) *
                     static_cast<double>(group.alphabet_size()) *
                     static_cast<double>(group.size()) * static_cast<double>(group.size());
        exhaustive = cases * steps <= static_cast<double>(kExhaustiveBudget);
    }

    InvarianceReport report;
    if (exhaustive) {
        report = check_global_invariance(group, rule, s.topology, steps, kExhaustiveBudget);
    } else {
        report = check_global_invariance_sampled(group, rule, s.topology, steps, kSampledTrials,
                                                 s.seed.value_or(0));
        out.detail = "coverage=sampled";
    }
    out.pass = report.verdict == InvarianceVerdict::Invariant;
    out.cases = report.cases_checked;
    if (report.global_witness) {
        if (!out.detail.empty()) out.detail += " ";
        out.detail += global_witness_str(*report.global_witness);
    }
    return out;
}

CheckOutcome check_equiv(const Scenario& s) {
    const GaugeGroup group = scenario_group(s);
    if (!s.topology.is_ring())
        throw std::invalid_argument("the equivalence check needs a ring topology");
    if (s.topology.ring_size() > 3)
        throw std::invalid_argument("the equivalence check enumerates rings of size <= 3");

    const LinkRule rule = scenario_rule(s);
    const GaugeTransformation identity =
        GaugeTransformation::all_identity(s.topology, s.alphabet_size);
    // The comparison rule applies the scenario's transformation after each
    // step; without one, black and white are swapped everywhere.
    GaugeTransformation post = scenario_transformation(s);
    if (post.is_all_identity()) {
        const Permutation swap = Permutation::transposition(s.alphabet_size, 0, 1);
        for (int x = 0; x < s.topology.ring_size(); ++x) post = post.with(x, swap);
    }
    const RuleVariant T{rule, identity};
    const RuleVariant T2{rule, post};
    const auto report = check_equivalence(T, T2, group, s.topology);
    CheckOutcome out{kCheckEquivalence, report.verdict == EquivalenceVerdict::Equivalent,
                     report.cases_checked, ""};
    if (report.failing_config) {
        std::string cells;
        for (int x = 0; x < s.topology.ring_size(); ++x)
            cells += cell_str(report.failing_config->cell(x));
        out.detail = "witness=c=" + cells;
    }
    return out;
}

CheckOutcome check_quantum(const Scenario& s) {
    const uint64_t seed = s.seed.value_or(0);
    std::mt19937_64 rng(seed);
    const int cut = s.params.field_cut;
    if (cut < 1) throw std::invalid_argument("quantum_invariance needs lmax >= 1");
    std::uniform_int_distribution<int> bits(0, 3);
    std::uniform_int_distribution<int> field(-(cut - 1), cut - 1);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

    const bool ring = s.topology.is_ring();
    const int lo = ring ? 0 : -2;
    const int hi = ring ? s.topology.ring_size() : 3;

    CheckOutcome out{kCheckQuantumInvariance, true, 0, ""};
    double worst = 0.0;

    auto run_trial = [&](const QuantumState& psi, const PhaseProfile& phi) {
        ++out.cases;
        const double deviation = check_q_invariance(s.params, psi, phi);
        worst = std::max(worst, deviation);
    };

    // The scenario's own state and profile first, when it gives one.
    if (!s.gauge_phases.empty())
        run_trial(QuantumState::basis(scenario_initial_basis(s)), scenario_phase_profile(s));

    for (int trial = 0; trial < kQuantumTrials; ++trial) {
        std::vector<QuantumState::Term> terms;
        for (int k = 0; k < 4; ++k) {
            std::vector<std::pair<int, Cell>> occ;
            std::vector<std::pair<int, int>> links;
            for (int x = lo; x < hi; ++x) {
                const int b = bits(rng);
                occ.emplace_back(x, Cell{b & 1, (b >> 1) & 1});
                links.emplace_back(x, field(rng));
            }
            terms.emplace_back(QcaBasisState::make(s.topology, occ, links),
                               Complex{amp(rng), amp(rng)});
        }
        std::vector<std::pair<int, double>> phis;
        for (int x = lo; x < hi; ++x) phis.emplace_back(x, angle(rng));
        run_trial(QuantumState::from_terms(std::move(terms)).normalized(),
                  PhaseProfile::make(s.topology, phis));
    }

    out.pass = worst <= kQuantumTolerance;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "max-deviation=%.3e", worst);
    out.detail = buf;
    return out;
}

}  // namespace

bool ChecksReport::all_pass() const {
    for (const auto& outcome : outcomes)
        if (!outcome.pass) return false;
    return true;
}

std::string ChecksReport::to_text() const {
    std::string out;
    for (const auto& outcome : outcomes) {
        out += outcome.pass ? "PASS " : "FAIL ";
        out += outcome.name;
        out += " cases=" + std::to_string(outcome.cases);
        if (!outcome.detail.empty()) out += " " + outcome.detail;
        out += "\n";
    }
    return out;
}

ChecksReport run_checks(const Scenario& scenario) {
    ChecksReport report;
    for (const std::string& name : scenario.checks) {
        if (name == kCheckLocalInvariance)
            report.outcomes.push_back(check_local(scenario));
        else if (name == kCheckGlobalInvariance)
            report.outcomes.push_back(check_global(scenario));
        else if (name == kCheckEquivalence)
            report.outcomes.push_back(check_equiv(scenario));
        else if (name == kCheckQuantumInvariance)
            report.outcomes.push_back(check_quantum(scenario));
        else
            throw std::invalid_argument("unknown check '" + name + "'");
    }
    return report;
}

}  // namespace gica
