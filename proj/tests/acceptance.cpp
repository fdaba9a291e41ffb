// Acceptance suite: one pass/fail line per criterion, exit status 0 only
// when every criterion holds at its stated tolerance.

#include "gica/checks.hpp"
#include "gica/equivalence.hpp"
#include "gica/invariance.hpp"
#include "gica/qca.hpp"
#include "gica/render.hpp"
#include "gica/scenario.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace gica;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s %2d %s%s%s\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("missing " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string data_path(const std::string& name) {
    return std::string(GICA_TEST_DATA_DIR) + "/" + name;
}

Scenario load(const std::string& name) { return parse_scenario(slurp(data_path(name))); }

char buffer[256];

// 1. Exhaustive local invariance for the two-element group, under one
//    second, zero counterexamples.
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    const auto report1 =
        check_local_invariance(GaugeGroup::flip_group(), LinkRule{2, RuleKind::Gauged});
    const double elapsed = seconds_since(start);
    const bool pass = report1.verdict == InvarianceVerdict::Invariant &&
                      report1.cases_checked == 128 && !report1.partial && elapsed < 1.0;
    std::snprintf(buffer, sizeof(buffer), "cases=%ld time=%.3fs", report1.cases_checked, elapsed);
    report(1, "local invariance, two-element group, exhaustive", pass, buffer);
}

// 2. Exhaustive local invariance over all of S(3): 17496 cases, under
//    five seconds, zero counterexamples.
void criterion_2() {
    const auto start = std::chrono::steady_clock::now();
    const auto report2 =
        check_local_invariance(GaugeGroup::symmetric_group(3), LinkRule{3, RuleKind::Gauged});
    const double elapsed = seconds_since(start);
    const bool pass = report2.verdict == InvarianceVerdict::Invariant &&
                      report2.cases_checked == 17496 && elapsed < 5.0;
    std::snprintf(buffer, sizeof(buffer), "cases=%ld time=%.3fs", report2.cases_checked, elapsed);
    report(2, "local invariance, all of S(3), exhaustive", pass, buffer);
}

// 3. The field-blind rule is not invariant: the checker must produce a
//    witness that no transformation can compensate, and it must replay.
void criterion_3() {
    const GaugeGroup group = GaugeGroup::flip_group();
    const LinkRule bare{2, RuleKind::Bare};
    const auto local = check_local_invariance(group, bare);
    const auto global = check_global_invariance(group, bare, Topology::ring(3), 1);
    bool pass = local.verdict == InvarianceVerdict::CounterexampleFound &&
                local.local_witness && replay(*local.local_witness, bare) &&
                global.verdict == InvarianceVerdict::CounterexampleFound &&
                global.global_witness && global.global_witness->no_compensation &&
                replay(*global.global_witness, bare, group);
    report(3, "bare rule counterexample, uncompensatable and replayable", pass,
           global.global_witness
               ? "witness at t=1, no compensating transformation over the ring"
               : "no witness");
}

// 4. Exhaustive global invariance, rings of 2 and 3, t in {1,2,3},
//    under thirty seconds.
void criterion_4() {
    const auto start = std::chrono::steady_clock::now();
    const GaugeGroup group = GaugeGroup::flip_group();
    const LinkRule rule{2, RuleKind::Gauged};
    const auto ring2 = check_global_invariance(group, rule, Topology::ring(2), 3);
    const auto ring3 = check_global_invariance(group, rule, Topology::ring(3), 3);
    const double elapsed = seconds_since(start);
    const bool pass = ring2.verdict == InvarianceVerdict::Invariant && !ring2.partial &&
                      ring2.cases_checked == 64L * 4L * 3L &&
                      ring3.verdict == InvarianceVerdict::Invariant && !ring3.partial &&
                      ring3.cases_checked == 512L * 8L * 3L && elapsed < 30.0;
    std::snprintf(buffer, sizeof(buffer), "cases=%ld+%ld time=%.3fs", ring2.cases_checked,
                  ring3.cases_checked, elapsed);
    report(4, "global invariance, rings 2 and 3, t=1..3, exhaustive", pass, buffer);
}

// 5. The three characterization statements agree when the hypotheses
//    hold, and the report records a hypothesis violation otherwise.
void criterion_5() {
    const GaugeGroup group = GaugeGroup::flip_group();
    const Topology ring2 = Topology::ring(2);
    const LinkRule gauged{2, RuleKind::Gauged};
    const Permutation tau = Permutation::transposition(2, 0, 1);

    auto swap_all = GaugeTransformation::all_identity(ring2, 2);
    for (int x = 0; x < 2; ++x) swap_all = swap_all.with(x, tau);
    const RuleVariant T{gauged, GaugeTransformation::all_identity(ring2, 2)};
    const RuleVariant T2{gauged, swap_all};
    const auto good = check_proposition_statements(T, T2, group, ring2);

    const RuleVariant broken{LinkRule{2, RuleKind::Bare},
                             GaugeTransformation::all_identity(ring2, 2)};
    const auto bad = check_proposition_statements(T, broken, group, ring2);

    const bool pass = good.hypotheses_hold && good.statements[0] && good.statements[1] &&
                      good.statements[2] && !bad.hypotheses_hold &&
                      !bad.hypothesis_second_invariant;
    std::snprintf(buffer, sizeof(buffer),
                  "statements=%d%d%d hypotheses_hold=%d; violated pair recorded=%d",
                  static_cast<int>(good.statements[0]), static_cast<int>(good.statements[1]),
                  static_cast<int>(good.statements[2]), static_cast<int>(good.hypotheses_hold),
                  static_cast<int>(!bad.hypotheses_hold));
    report(5, "characterization statements agree by brute force", pass, buffer);
}

// 6. Golden space-time diagrams, and the dressed run compensated at the
//    end reproduces the reference final configuration exactly.
void criterion_6() {
    bool golden_ok = true;
    std::string first_bad;
    for (const char* name : {"fig6a", "fig6b", "fig6c"}) {
        const Scenario s = load(std::string("scenarios/") + name + ".scn");
        const std::string text = render_spacetime(scenario_trace(s), DiagramFormat::Text);
        if (text != slurp(data_path(std::string("golden/") + name + ".txt"))) {
            golden_ok = false;
            if (first_bad.empty()) first_bad = name;
        }
    }
    const Scenario a = load("scenarios/fig6a.scn");
    const Scenario b = load("scenarios/fig6b.scn");
    const GaugedConfiguration reference = scenario_final(a);
    const GaugedConfiguration dressed = scenario_final(b);
    const GaugedConfiguration compensated =
        apply_global(scenario_transformation(b).inverse(), dressed);
    const bool final_ok = compensated == reference && dressed != reference;
    report(6, "diagram goldens and end-compensated preparation", golden_ok && final_ok,
           golden_ok ? (final_ok ? "three goldens match, finals equal exactly"
                                 : "golden ok, final mismatch")
                     : "golden mismatch: " + first_bad);
}

// 7. Simulation both ways between the rule and its swapped variant.
void criterion_7() {
    const GaugeGroup group = GaugeGroup::flip_group();
    const Topology ring2 = Topology::ring(2);
    const LinkRule gauged{2, RuleKind::Gauged};
    const Permutation tau = Permutation::transposition(2, 0, 1);
    auto swap_all = GaugeTransformation::all_identity(ring2, 2);
    for (int x = 0; x < 2; ++x) swap_all = swap_all.with(x, tau);
    const RuleVariant T{gauged, GaugeTransformation::all_identity(ring2, 2)};
    const RuleVariant T2{gauged, swap_all};

    const auto forward = check_simulation(T, T2, group, ring2);
    const auto backward = check_simulation(T2, T, group, ring2);
    const auto both = check_equivalence(T, T2, group, ring2);
    const bool pass = forward.verdict == EquivalenceVerdict::Simulates &&
                      backward.verdict == EquivalenceVerdict::Simulates &&
                      both.verdict == EquivalenceVerdict::Equivalent;
    std::snprintf(buffer, sizeof(buffer), "forward=%s backward=%s",
                  forward.verdict == EquivalenceVerdict::Simulates ? "simulates" : "no",
                  backward.verdict == EquivalenceVerdict::Simulates ? "simulates" : "no");
    report(7, "swapped rule equivalent in both directions", pass, buffer);
}

// 8. Scattering-gate unitarity on the truncated sector for five
//    parameter sets, max deviation 1e-12.
void criterion_8() {
    const double eps = 0.1;
    const std::vector<ScatteringParams> sets{
        {0.0, eps, 0.0, 4},
        {M_PI / (2.0 * eps), eps, 0.0, 4},
        {0.5, eps, 1.0, 4},
        {1.3, 0.05, 2.0, 4},
        {2.0, 0.2, 0.7, 4},
    };
    double worst = 0.0;
    for (const auto& params : sets) {
        std::vector<GateInput> in_basis, out_basis;
        for (int m = 0; m <= 1; ++m)
            for (int l = -(params.field_cut - 1); l <= params.field_cut - 1; ++l)
                for (int n = 0; n <= 1; ++n) in_basis.push_back({m, l, n});
        for (int m = 0; m <= 1; ++m)
            for (int l = -params.field_cut; l <= params.field_cut; ++l)
                for (int n = 0; n <= 1; ++n) out_basis.push_back({m, l, n});
        std::vector<std::vector<Complex>> columns;
        for (const GateInput& input : in_basis) {
            GateAmplitudes unit;
            unit[input] = Complex{1.0, 0.0};
            const GateAmplitudes image = scattering_gate(params, unit);
            std::vector<Complex> column(out_basis.size());
            for (size_t row = 0; row < out_basis.size(); ++row) {
                const auto it = image.find(out_basis[row]);
                if (it != image.end()) column[row] = it->second;
            }
            columns.push_back(std::move(column));
        }
        for (size_t a = 0; a < columns.size(); ++a)
            for (size_t b = 0; b < columns.size(); ++b) {
                Complex dot{};
                for (size_t row = 0; row < out_basis.size(); ++row)
                    dot += std::conj(columns[a][row]) * columns[b][row];
                const Complex expected = a == b ? Complex{1.0, 0.0} : Complex{};
                worst = std::max(worst, std::abs(dot - expected));
            }
    }
    std::snprintf(buffer, sizeof(buffer), "max deviation=%.3e over 5 parameter sets", worst);
    report(8, "scattering gate unitary on the truncated sector", worst <= 1e-12, buffer);
}

// 9. The (m - l, n + l) scattering invariant, exactly, on every basis
//    input.
void criterion_9() {
    const ScatteringParams params{0.7, 0.1, 1.3, 4};
    bool pass = true;
    long cases = 0;
    for (int m = 0; m <= 1 && pass; ++m)
        for (int l = -(params.field_cut - 1); l <= params.field_cut - 1 && pass; ++l)
            for (int n = 0; n <= 1 && pass; ++n) {
                GateAmplitudes unit;
                unit[GateInput{m, l, n}] = Complex{1.0, 0.0};
                for (const auto& [out, amp] : scattering_gate(params, unit)) {
                    ++cases;
                    if (out.m - out.l != m - l || out.n + out.l != n + l) pass = false;
                }
            }
    std::snprintf(buffer, sizeof(buffer), "branches=%ld, conserved exactly", cases);
    report(9, "scattering invariant (m-l, n+l)", pass, buffer);
}

// 10. Gauge invariance of the step: 100 seeded random (state, profile)
//     trials on a 4-cell ring with L_max = 4, commutator norm 1e-10,
//     under a minute.
void criterion_10() {
    const auto start = std::chrono::steady_clock::now();
    const ScatteringParams params{0.5, 0.1, 1.0, 4};
    const Topology ring = Topology::ring(4);
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> bits(0, 3);
    std::uniform_int_distribution<int> field(-3, 3);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<QuantumState::Term> terms;
        for (int k = 0; k < 6; ++k) {
            std::vector<std::pair<int, Cell>> occ;
            std::vector<std::pair<int, int>> links;
            for (int x = 0; x < 4; ++x) {
                const int b = bits(rng);
                occ.emplace_back(x, Cell{b & 1, (b >> 1) & 1});
                links.emplace_back(x, field(rng));
            }
            terms.emplace_back(QcaBasisState::make(ring, occ, links),
                               Complex{amp(rng), amp(rng)});
        }
        const QuantumState psi = QuantumState::from_terms(std::move(terms)).normalized();
        std::vector<std::pair<int, double>> phis;
        for (int x = 0; x < 4; ++x) phis.emplace_back(x, angle(rng));
        worst = std::max(worst, check_q_invariance(params, psi, PhaseProfile::make(ring, phis)));
    }
    const double elapsed = seconds_since(start);
    std::snprintf(buffer, sizeof(buffer), "max commutator=%.3e over 100 trials, time=%.3fs",
                  worst, elapsed);
    report(10, "quantum gauge invariance, seeded random trials", worst <= 1e-10 && elapsed < 60.0,
           buffer);
}

// 11. Norm conservation over 100 steps of a two-particle state.
void criterion_11() {
    const ScatteringParams params{0.5, 0.1, 1.0, 102};
    const Topology ring = Topology::ring(4);
    QuantumState psi = QuantumState::basis(
        QcaBasisState::make(ring, {{0, Cell{0, 1}}, {2, Cell{1, 0}}}));
    for (int t = 0; t < 100; ++t) psi = qca_step(params, psi);
    const double drift = std::abs(psi.norm() - 1.0);
    std::snprintf(buffer, sizeof(buffer), "|norm-1|=%.3e terms=%zu", drift, psi.size());
    report(11, "norm conserved over 100 interacting steps", drift <= 1e-9, buffer);
}

// 12. Observable gauge constraint: identity and total number commute,
//     a raising operator does not.
void criterion_12() {
    const Topology ring = Topology::ring(2);
    const TruncatedSpace space = TruncatedSpace::enumerate(ring, 1);
    const PhaseProfile phi = PhaseProfile::make(ring, {{0, 0.7}, {1, -0.3}});
    const double id_norm =
        check_observable_gauge_constraint(space, SparseOperator::identity(space), phi);
    const double number_norm =
        check_observable_gauge_constraint(space, SparseOperator::total_number(space), phi);
    const double raise_norm = check_observable_gauge_constraint(
        space, SparseOperator::raising(space, 0, SparseOperator::Component::Right), phi);
    const bool pass = id_norm <= 1e-12 && number_norm <= 1e-12 && raise_norm > 0.1;
    std::snprintf(buffer, sizeof(buffer), "identity=%.1e number=%.1e raising=%.3f", id_norm,
                  number_norm, raise_norm);
    report(12, "observable gauge constraint on the truncated space", pass, buffer);
}

// 13. Parser: ten-file round-trip corpus plus five malformed files with
//     line-numbered errors.
void criterion_13() {
    const char* corpus[] = {
        "scenarios/fig6a.scn", "scenarios/fig6b.scn", "scenarios/fig6c.scn",
        "scenarios/fig7a.scn", "scenarios/fig7b.scn", "scenarios/fig9a.scn",
        "scenarios/fig9b.scn", "scenarios/quantum_ring.scn", "scenarios/line_walk.scn",
        "scenarios/checks_all.scn",
    };
    int round_trips = 0;
    for (const char* name : corpus) {
        const Scenario first = load(name);
        if (parse_scenario(render_scenario(first)) == first) ++round_trips;
    }
    const std::pair<const char*, int> malformed[] = {
        {"scenarios/bad/bad_unknown_key.scn", 3}, {"scenarios/bad/bad_cell_bound.scn", 9},
        {"scenarios/bad/bad_perm.scn", 8},        {"scenarios/bad/bad_section.scn", 4},
        {"scenarios/bad/bad_steps.scn", 8},
    };
    int rejected = 0;
    for (const auto& [name, line] : malformed) {
        try {
            load(name);
        } catch (const ParseError& err) {
            if (err.line() == line) ++rejected;
        }
    }
    std::snprintf(buffer, sizeof(buffer), "round-trips=%d/10 line-numbered rejections=%d/5",
                  round_trips, rejected);
    report(13, "scenario parser corpus", round_trips == 10 && rejected == 5, buffer);
}

}  // namespace

int main() {
    const std::function<void()> criteria[] = {
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
        criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
        criterion_11, criterion_12, criterion_13,
    };
    for (const auto& criterion : criteria) {
        try {
            criterion();
        } catch (const std::exception& err) {
            std::printf("FAIL -- exception: %s\n", err.what());
            ++failures;
        }
    }
    if (failures == 0) {
        std::printf("acceptance: all 13 criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
