#pragma once

#include "gica/automaton.hpp"
#include "gica/gauge_group.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace gica {

enum class InvarianceVerdict { Invariant, CounterexampleFound };

enum class MismatchSlot { LeftOutput, RightOutput, FieldOutput };

/// Counterexample to the one-gate relation: transforming the gate inputs
/// (including the link) and then firing differs from firing and then
/// transforming the outputs.
struct LocalWitness {
    Cell cell_left;
    Permutation field;
    Cell cell_right;
    Permutation g_left;
    Permutation g_right;
    MismatchSlot slot = MismatchSlot::LeftOutput;
    auto operator<=>(const LocalWitness&) const = default;
};

/// Counterexample to F^t(gamma(c)) = Z^t(gamma)(F^t(c)).
struct GlobalWitness {
    GaugedConfiguration input;
    GaugeTransformation gamma;
    int steps = 1;
    int position = 0;        // first mismatching cell, or link when on_link
    bool on_link = false;
    /// True when no transformation in Gamma applied after the evolution
    /// matches the two sides (scanned exhaustively over the ring).
    bool no_compensation = false;
};

struct InvarianceReport {
    InvarianceVerdict verdict = InvarianceVerdict::Invariant;
    long cases_checked = 0;
    bool partial = false;    // enumeration stopped at the budget, or sampled
    std::optional<LocalWitness> local_witness;
    std::optional<GlobalWitness> global_witness;
};

/// Local evolution of the gauge transformations. The identity throughout
/// this artifact; the hooks keep non-identity choices representable.
Permutation z_local(const Permutation& g);
GaugeTransformation z_automaton(const GaugeTransformation& gamma);

using ZLocal = std::function<Permutation(const Permutation&)>;
using ZAutomaton = std::function<GaugeTransformation(const GaugeTransformation&)>;

/// Exhaustive check of the one-gate invariance relation over
/// Sigma x Lambda x Sigma x G^2 with Lambda = G. Scans every case and
/// keeps the lexicographically least witness, so the result does not
/// depend on enumeration order.
InvarianceReport check_local_invariance(const GaugeGroup& group, const LinkRule& rule,
                                        const ZLocal& z = z_local);

/// Exhaustive check of F^t(gamma(c)) = Z^t(gamma)(F^t(c)) over all gauged
/// configurations and all transformations of a ring, t = 1..steps. Counts
/// one case per (c, gamma, t). Stops at `budget` cases with the partial
/// flag set. A witness records whether any compensating transformation
/// exists at all.
InvarianceReport check_global_invariance(const GaugeGroup& group, const LinkRule& rule,
                                         const Topology& ring, int steps,
                                         long budget = 2'000'000,
                                         const ZAutomaton& z = z_automaton);

/// Randomized variant for lattices too large to enumerate: `trials` seeded
/// random (configuration, transformation) pairs. Works on rings of any
/// size and on the line (finite random support). Always partial.
InvarianceReport check_global_invariance_sampled(const GaugeGroup& group, const LinkRule& rule,
                                                 const Topology& topology, int steps, int trials,
                                                 uint64_t seed,
                                                 const ZAutomaton& z = z_automaton);

/// Re-evaluate a witness from scratch; true when it still exhibits the
/// recorded inequality.
bool replay(const LocalWitness& witness, const LinkRule& rule, const ZLocal& z = z_local);
bool replay(const GlobalWitness& witness, const LinkRule& rule, const GaugeGroup& group,
            const ZAutomaton& z = z_automaton);

}  // namespace gica
