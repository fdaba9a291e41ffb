#pragma once

#include "gica/automaton.hpp"
#include "gica/gauge_group.hpp"
#include "gica/invariance.hpp"

#include <array>
#include <optional>
#include <vector>

namespace gica {

/// A rule together with a gauge transformation applied after each step.
/// With an all-identity post the variant coincides with the base rule.
struct RuleVariant {
    LinkRule rule;
    GaugeTransformation post;

    GaugedConfiguration apply(const GaugedConfiguration& config) const {
        return apply_global(post, step(rule, config));
    }
};

enum class EquivalenceVerdict { Simulates, Equivalent, NotSimulated };

/// Witness pair for one configuration: (gamma o T)(c) = (T2 o gamma2)(c).
struct SimulationWitness {
    GaugedConfiguration config;
    GaugeTransformation gamma;
    GaugeTransformation gamma2;
};

struct EquivalenceReport {
    EquivalenceVerdict verdict = EquivalenceVerdict::NotSimulated;
    std::vector<SimulationWitness> witnesses;          // one per configuration when simulated
    std::optional<GaugedConfiguration> failing_config; // first c without witnesses
    long cases_checked = 0;
    bool partial = false;

    /// Proposition bookkeeping (check_proposition_statements only):
    /// (1) simulation, (2) exists gamma with T(c) = T2(gamma(c)),
    /// (3) for all gamma exists gamma2.
    bool statements_evaluated = false;
    std::array<bool, 3> statements{false, false, false};
    bool hypothesis_first_invariant = false;   // T gauge-invariant on this ring
    bool hypothesis_second_invariant = false;  // T2 gauge-invariant on this ring
    bool hypotheses_hold = false;
};

/// Brute-force test of "T is simulated by T2": for every configuration of
/// the ring, search all (gamma, gamma2) pairs. One direction only.
EquivalenceReport check_simulation(const RuleVariant& T, const RuleVariant& T2,
                                   const GaugeGroup& group, const Topology& ring,
                                   long budget = 2'000'000);

/// Both directions; verdict Equivalent when each simulates the other.
EquivalenceReport check_equivalence(const RuleVariant& T, const RuleVariant& T2,
                                    const GaugeGroup& group, const Topology& ring,
                                    long budget = 2'000'000);

/// Evaluate the three characterization statements independently by brute
/// force, and record whether the hypotheses (both rules gauge-invariant,
/// Z identity hence reversible) hold on this ring. When they do not, the
/// statements may disagree; the report records them without asserting
/// their equivalence.
EquivalenceReport check_proposition_statements(const RuleVariant& T, const RuleVariant& T2,
                                               const GaugeGroup& group, const Topology& ring);

/// Canonical representative of a family of pairwise gauge-equivalent
/// variants: the one with the all-identity post when present, otherwise
/// the lexicographically least post-assignment. Throws
/// std::invalid_argument naming the first non-equivalent pair.
RuleVariant gauge_fix(const std::vector<RuleVariant>& variants, const GaugeGroup& group,
                      const Topology& ring);

}  // namespace gica
