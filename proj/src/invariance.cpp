#include "gica/invariance.hpp"

#include <random>
#include <stdexcept>

namespace gica {

namespace {

/// Link re-framing induced by local transformations at both ends,
/// matching apply_local: g_left o A o g_right^-1.
Permutation transform_link(const Permutation& g_left, const Permutation& A,
                           const Permutation& g_right) {
    return g_left.compose(A).compose(g_right.inverse());
}

struct GateTriple {
    int left;
    Permutation field;
    int right;
    bool operator==(const GateTriple&) const = default;
};

GateTriple fire(const LinkRule& rule, Cell cl, const Permutation& A, Cell cr) {
    const auto out = link_gate(rule, cl, A, cr);
    return GateTriple{out.left_at_x, A, out.right_at_x1};
}

GaugedConfiguration evolve(const LinkRule& rule, GaugedConfiguration c, int t) {
    for (int i = 0; i < t; ++i) c = step(rule, c);
    return c;
}

/// First mismatching site or link between two ring configurations.
std::optional<std::pair<int, bool>> first_mismatch(const GaugedConfiguration& a,
                                                   const GaugedConfiguration& b) {
    const int n = a.topology().ring_size();
    for (int x = 0; x < n; ++x)
        if (a.cell(x) != b.cell(x)) return std::make_pair(x, false);
    for (int x = 0; x < n; ++x)
        if (a.link(x) != b.link(x)) return std::make_pair(x, true);
    return std::nullopt;
}

bool compensable(const GaugeGroup& group, const GaugedConfiguration& lhs,
                 const GaugedConfiguration& evolved_untransformed) {
    for (const auto& gp : enumerate_transformations(group, lhs.topology()))
        if (apply_global(gp, evolved_untransformed) == lhs) return true;
    return false;
}

}  // namespace

Permutation z_local(const Permutation& g) { return g; }

GaugeTransformation z_automaton(const GaugeTransformation& gamma) { return gamma; }

InvarianceReport check_local_invariance(const GaugeGroup& group, const LinkRule& rule,
                                        const ZLocal& z) {
    if (group.alphabet_size() != rule.alphabet_size)
        throw std::invalid_argument("group and rule disagree on alphabet size");
    const auto cells = all_cells(group.alphabet_size());

    InvarianceReport report;
    std::optional<LocalWitness> best;
    for (const Cell cl : cells) {
        for (const Permutation& A : group.elements()) {
            for (const Cell cr : cells) {
                for (const Permutation& gl : group.elements()) {
                    for (const Permutation& gr : group.elements()) {
                        ++report.cases_checked;

                        const Cell tcl{gl.apply(cl.left), gl.apply(cl.right)};
                        const Cell tcr{gr.apply(cr.left), gr.apply(cr.right)};
                        const GateTriple lhs = fire(rule, tcl, transform_link(gl, A, gr), tcr);

                        const GateTriple raw = fire(rule, cl, A, cr);
                        const Permutation zl = z(gl);
                        const Permutation zr = z(gr);
                        const GateTriple rhs{zl.apply(raw.left),
                                             transform_link(zl, raw.field, zr),
                                             zr.apply(raw.right)};

                        if (lhs == rhs) continue;
                        MismatchSlot slot = MismatchSlot::LeftOutput;
                        if (lhs.left == rhs.left)
                            slot = lhs.right != rhs.right ? MismatchSlot::RightOutput
                                                          : MismatchSlot::FieldOutput;
                        LocalWitness w{cl, A, cr, gl, gr, slot};
                        if (!best || w < *best) best = std::move(w);
                    }
                }
            }
        }
    }
    if (best) {
        report.verdict = InvarianceVerdict::CounterexampleFound;
        report.local_witness = std::move(best);
    }
    return report;
}

namespace {

InvarianceReport run_global_cases(
    const GaugeGroup& group, const LinkRule& rule, int steps, long budget, const ZAutomaton& z,
    const std::vector<GaugedConfiguration>& configs,
    const std::vector<GaugeTransformation>& gammas, bool exhaustive) {
    InvarianceReport report;
    std::optional<GlobalWitness> best;
    bool stopped = false;

    for (const auto& c : configs) {
        for (const auto& gamma : gammas) {
            GaugedConfiguration lhs = apply_global(gamma, c);   // evolves below
            GaugedConfiguration rhs_base = c;
            GaugeTransformation post = gamma;
            for (int t = 1; t <= steps; ++t) {
                if (report.cases_checked >= budget) {
                    stopped = true;
                    break;
                }
                ++report.cases_checked;
                lhs = step(rule, lhs);
                rhs_base = step(rule, rhs_base);
                post = z(post);
                const GaugedConfiguration rhs = apply_global(post, rhs_base);
                if (lhs == rhs) continue;
                if (!best) {
                    const auto mismatch = first_mismatch(lhs, rhs);
                    GlobalWitness w{c, gamma, t, mismatch->first, mismatch->second, false};
                    w.no_compensation = !compensable(group, lhs, rhs_base);
                    best = std::move(w);
                }
            }
            if (stopped) break;
        }
        if (stopped) break;
    }

    report.partial = stopped || !exhaustive;
    if (best) {
        report.verdict = InvarianceVerdict::CounterexampleFound;
        report.global_witness = std::move(best);
    }
    return report;
}

}  // namespace

InvarianceReport check_global_invariance(const GaugeGroup& group, const LinkRule& rule,
                                         const Topology& ring, int steps, long budget,
                                         const ZAutomaton& z) {
    if (!ring.is_ring()) throw std::invalid_argument("exhaustive global check needs a ring");
    if (steps < 1) throw std::invalid_argument("steps must be at least 1");
    const auto configs = all_gauged_configurations(ring, group);
    const auto gammas = enumerate_transformations(group, ring);
    return run_global_cases(group, rule, steps, budget, z, configs, gammas, true);
}

InvarianceReport check_global_invariance_sampled(const GaugeGroup& group, const LinkRule& rule,
                                                 const Topology& topology, int steps, int trials,
                                                 uint64_t seed, const ZAutomaton& z) {
    if (steps < 1) throw std::invalid_argument("steps must be at least 1");
    std::mt19937_64 rng(seed);
    const int n_elems = group.size();
    std::uniform_int_distribution<int> pick_elem(0, n_elems - 1);
    std::uniform_int_distribution<int> pick_comp(0, group.alphabet_size() - 1);

    InvarianceReport report;
    report.partial = true;
    std::optional<GlobalWitness> best;

    const bool ring = topology.is_ring();
    const int lo = ring ? 0 : -4;
    const int hi = ring ? topology.ring_size() : 5;  // half-open

    for (int trial = 0; trial < trials; ++trial) {
        std::vector<std::pair<int, Cell>> matter;
        std::vector<std::pair<int, Permutation>> field;
        std::vector<std::pair<int, Permutation>> assign;
        for (int x = lo; x < hi; ++x) {
            matter.emplace_back(x, Cell{pick_comp(rng), pick_comp(rng)});
            field.emplace_back(x, group.element(pick_elem(rng)));
            assign.emplace_back(x, group.element(pick_elem(rng)));
        }
        const GaugedConfiguration c = GaugedConfiguration::make(
            MatterConfiguration::make(topology, group.alphabet_size(), matter), field);
        const GaugeTransformation gamma =
            GaugeTransformation::make(topology, group.alphabet_size(), assign);

        ++report.cases_checked;
        GaugedConfiguration lhs = evolve(rule, apply_global(gamma, c), steps);
        GaugeTransformation post = gamma;
        for (int t = 0; t < steps; ++t) post = z(post);
        const GaugedConfiguration rhs = apply_global(post, evolve(rule, c, steps));
        if (lhs == rhs) continue;
        if (!best) {
            int position = 0;
            bool on_link = false;
            if (ring) {
                const auto mismatch = first_mismatch(lhs, rhs);
                position = mismatch->first;
                on_link = mismatch->second;
            } else {
                for (int x = lo - steps; x < hi + steps && best == std::nullopt; ++x) {
                    if (lhs.cell(x) != rhs.cell(x)) {
                        position = x;
                        break;
                    }
                    if (lhs.link(x) != rhs.link(x)) {
                        position = x;
                        on_link = true;
                        break;
                    }
                }
            }
            best = GlobalWitness{c, gamma, steps, position, on_link, false};
        }
    }
    if (best) {
        report.verdict = InvarianceVerdict::CounterexampleFound;
        report.global_witness = std::move(best);
    }
    return report;
}

bool replay(const LocalWitness& witness, const LinkRule& rule, const ZLocal& z) {
    const Cell tcl{witness.g_left.apply(witness.cell_left.left),
                   witness.g_left.apply(witness.cell_left.right)};
    const Cell tcr{witness.g_right.apply(witness.cell_right.left),
                   witness.g_right.apply(witness.cell_right.right)};
    const GateTriple lhs =
        fire(rule, tcl, transform_link(witness.g_left, witness.field, witness.g_right), tcr);

    const GateTriple raw = fire(rule, witness.cell_left, witness.field, witness.cell_right);
    const Permutation zl = z(witness.g_left);
    const Permutation zr = z(witness.g_right);
    const GateTriple rhs{zl.apply(raw.left), transform_link(zl, raw.field, zr),
                         zr.apply(raw.right)};

    switch (witness.slot) {
        case MismatchSlot::LeftOutput: return lhs.left != rhs.left;
        case MismatchSlot::RightOutput: return lhs.right != rhs.right;
        case MismatchSlot::FieldOutput: return lhs.field != rhs.field;
    }
    return false;
}

bool replay(const GlobalWitness& witness, const LinkRule& rule, const GaugeGroup& group,
            const ZAutomaton& z) {
    GaugedConfiguration lhs = evolve(rule, apply_global(witness.gamma, witness.input), witness.steps);
    GaugedConfiguration rhs_base = evolve(rule, witness.input, witness.steps);
    GaugeTransformation post = witness.gamma;
    for (int t = 0; t < witness.steps; ++t) post = z(post);
    const GaugedConfiguration rhs = apply_global(post, rhs_base);

    const bool mismatch = witness.on_link ? lhs.link(witness.position) != rhs.link(witness.position)
                                          : lhs.cell(witness.position) != rhs.cell(witness.position);
    if (!mismatch) return false;
    if (witness.no_compensation && witness.input.topology().is_ring())
        return !compensable(group, lhs, rhs_base);
    return true;
}

}  // namespace gica
